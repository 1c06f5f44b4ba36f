#include "glorder/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "glorder/errors.hpp"

namespace glorder {

namespace {

__int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

long long narrow(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational arithmetic exceeded 64-bit range");
    return static_cast<long long>(v);
}

} // namespace

Rational Rational::make(__int128 n, __int128 d)
{
    if (d == 0)
        throw input_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational Rational::operator-() const
{
    Rational r;
    r.num_ = narrow(-static_cast<__int128>(num_));
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    *this = make(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                 static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    *this = make(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                 static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    *this = make(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.num_ == 0)
        throw input_error("division by zero rational");
    *this = make(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    return *this;
}

bool operator<(const Rational& a, const Rational& b)
{
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s)
{
    auto parse_ll = [](const std::string& part) {
        if (part.empty())
            throw input_error("empty rational literal");
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            throw input_error("bad rational literal: " + part);
        }
        if (pos != part.size())
            throw input_error("bad rational literal: " + part);
        return v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_ll(s));
    return Rational(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
}

long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

long long ceil_div(long long a, long long b)
{
    return -floor_div(-a, b);
}

long long binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        r /= i; // exact: r is C(n-k+i, i) after this step
        if (r > INT64_MAX)
            throw std::overflow_error("binomial exceeded 64-bit range");
    }
    return static_cast<long long>(r);
}

} // namespace glorder
