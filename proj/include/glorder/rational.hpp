#ifndef GLORDER_RATIONAL_HPP
#define GLORDER_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace glorder {

// Exact rational number on a 64-bit numerator/denominator pair.
// Always kept normalized: gcd(num, den) = 1 and den > 0. All arithmetic runs
// through 128-bit intermediates and throws std::overflow_error if a result
// does not fit back into 64 bits, so a value is either exact or loudly absent.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;
    // Accepts "p" or "p/q"; throws input_error on anything else.
    static Rational parse(const std::string& s);

private:
    long long num_ = 0;
    long long den_ = 1;

    static Rational make(__int128 n, __int128 d);
};

// Floor/ceil division with the quotient rounded toward -inf / +inf.
long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);

// Binomial coefficient C(n, k), exact; 0 outside 0 <= k <= n.
// Throws std::overflow_error if the value exceeds the 64-bit range.
long long binomial(long long n, long long k);

} // namespace glorder

#endif
