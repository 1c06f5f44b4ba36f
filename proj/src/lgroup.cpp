#include "glorder/lgroup.hpp"

#include <algorithm>
#include <numeric>

#include "glorder/errors.hpp"

namespace glorder {

LElement l_zero(const GLType& t)
{
    return LElement{std::vector<int>(t.n(), 0), 0};
}

LElement l_gen(int i, const GLType& t)
{
    if (i < 0 || i >= t.n())
        throw input_error("generator index out of range");
    std::vector<long long> raw(t.n() + 1, 0);
    raw[i] = 1;
    return normal_form(raw, t);
}

LElement l_c(const GLType& t, long long k)
{
    return LElement{std::vector<int>(t.n(), 0), k};
}

LElement normal_form(const std::vector<long long>& raw, const GLType& t)
{
    if (static_cast<int>(raw.size()) != t.n() + 1)
        throw input_error("raw word must have n+1 entries");
    LElement x;
    x.a.resize(t.n());
    x.ell = raw[t.n()];
    for (int i = 0; i < t.n(); ++i) {
        long long p = t.weights[i];
        long long q = floor_div(raw[i], p);
        x.a[i] = static_cast<int>(raw[i] - q * p);
        x.ell += q;
    }
    return x;
}

LElement group_op(const LElement& x, const LElement& y, int sign, const GLType& t)
{
    if (sign != 1 && sign != -1)
        throw input_error("sign must be +1 or -1");
    if (static_cast<int>(x.a.size()) != t.n() || static_cast<int>(y.a.size()) != t.n())
        throw input_error("element size does not match type");
    std::vector<long long> raw(t.n() + 1);
    for (int i = 0; i < t.n(); ++i)
        raw[i] = static_cast<long long>(x.a[i]) + sign * static_cast<long long>(y.a[i]);
    raw[t.n()] = x.ell + sign * y.ell;
    return normal_form(raw, t);
}

LElement l_add(const LElement& x, const LElement& y, const GLType& t) { return group_op(x, y, +1, t); }
LElement l_sub(const LElement& x, const LElement& y, const GLType& t) { return group_op(x, y, -1, t); }

LElement l_neg(const LElement& x, const GLType& t)
{
    return l_sub(l_zero(t), x, t);
}

bool is_effective(const LElement& x)
{
    return x.ell >= 0;
}

bool l_leq(const LElement& x, const LElement& y, const GLType& t)
{
    return is_effective(l_sub(y, x, t));
}

bool in_interval(const LElement& x, const GLType& t)
{
    if (x.ell < 0)
        return false;
    long long nz = std::count_if(x.a.begin(), x.a.end(), [](int v) { return v > 0; });
    return x.ell + nz <= t.d;
}

bool interval_less(const LElement& u, const LElement& v)
{
    if (u.ell != v.ell)
        return u.ell < v.ell;
    long long su = std::accumulate(u.a.begin(), u.a.end(), 0LL);
    long long sv = std::accumulate(v.a.begin(), v.a.end(), 0LL);
    if (su != sv)
        return su < sv;
    // x_1 before x_2: the lexicographically larger torsion vector comes first
    return std::lexicographical_compare(v.a.begin(), v.a.end(), u.a.begin(), u.a.end());
}

std::vector<LElement> interval(const GLType& t)
{
    std::vector<LElement> out;
    // enumerate torsion parts with at most d nonzero entries, then attach
    // every admissible c-coefficient
    std::vector<int> a(t.n(), 0);
    auto emit = [&](int nonzeros) {
        for (long long ell = 0; ell + nonzeros <= t.d; ++ell)
            out.push_back(LElement{a, ell});
    };
    auto rec = [&](auto&& self, int i, int nonzeros) -> void {
        if (nonzeros > t.d)
            return;
        if (i == t.n()) {
            emit(nonzeros);
            return;
        }
        a[i] = 0;
        self(self, i + 1, nonzeros);
        for (int v = 1; v < t.weights[i]; ++v) {
            a[i] = v;
            self(self, i + 1, nonzeros + 1);
        }
        a[i] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), interval_less);
    return out;
}

std::string to_string(const LElement& x)
{
    std::string s;
    auto append = [&s](long long coef, const std::string& sym) {
        if (coef == 0)
            return;
        if (!s.empty())
            s += coef < 0 ? "-" : "+";
        else if (coef < 0)
            s += "-";
        s += std::to_string(coef < 0 ? -coef : coef) + "*" + sym;
    };
    for (std::size_t i = 0; i < x.a.size(); ++i)
        append(x.a[i], "x" + std::to_string(i + 1));
    append(x.ell, "c");
    return s.empty() ? "0" : s;
}

} // namespace glorder
