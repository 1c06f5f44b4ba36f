#include "glorder/glring.hpp"

#include <algorithm>
#include <numeric>

#include "glorder/errors.hpp"

namespace glorder {

namespace {

void check_shape(const FormalMonomial& m, const GLType& t)
{
    if (static_cast<int>(m.xexp.size()) != t.n() || static_cast<int>(m.texp.size()) != t.d + 1)
        throw input_error("formal monomial shape does not match type");
    for (long long e : m.xexp)
        if (e < 0)
            throw input_error("negative X exponent");
    for (long long e : m.texp)
        if (e < 0)
            throw input_error("negative T exponent");
}

void add_term(RingElement& f, const ReducedMonomial& m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = f.terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            f.terms.erase(it);
    }
}

// Reduce one formal term, accumulating into out. Eliminates X_i^{p_i}
// factors one at a time; each substitution lowers the total X-degree.
void reduce_term(const FormalMonomial& mono, const Rational& coef, const GLType& t, RingElement& out)
{
    if (coef.is_zero())
        return;
    for (int i = 0; i < t.n(); ++i) {
        if (mono.xexp[i] >= t.weights[i]) {
            FormalMonomial rest = mono;
            rest.xexp[i] -= t.weights[i];
            for (int j = 0; j <= t.d; ++j) {
                const Rational& lambda = t.hyperplanes[i][j];
                if (lambda.is_zero())
                    continue;
                FormalMonomial next = rest;
                ++next.texp[j];
                reduce_term(next, coef * lambda, t, out);
            }
            return;
        }
    }
    ReducedMonomial m;
    m.xexp.assign(mono.xexp.begin(), mono.xexp.end());
    m.texp.assign(mono.texp.begin(), mono.texp.end());
    add_term(out, m, coef);
}

} // namespace

RingElement reduce(const FormalPoly& poly, const GLType& t)
{
    RingElement out;
    for (const auto& [mono, coef] : poly) {
        check_shape(mono, t);
        reduce_term(mono, coef, t, out);
    }
    return out;
}

RingElement ring_add(const RingElement& f, const RingElement& g)
{
    RingElement out = f;
    for (const auto& [m, c] : g.terms)
        add_term(out, m, c);
    return out;
}

RingElement ring_scale(const Rational& c, const RingElement& f)
{
    RingElement out;
    if (c.is_zero())
        return out;
    for (const auto& [m, v] : f.terms)
        out.terms.emplace(m, c * v);
    return out;
}

RingElement multiply(const RingElement& f, const RingElement& g, const GLType& t)
{
    FormalPoly prod;
    prod.reserve(f.terms.size() * g.terms.size());
    for (const auto& [mf, cf] : f.terms) {
        for (const auto& [mg, cg] : g.terms) {
            FormalMonomial m;
            m.xexp.resize(t.n());
            m.texp.resize(t.d + 1);
            for (int i = 0; i < t.n(); ++i)
                m.xexp[i] = static_cast<long long>(mf.xexp[i]) + mg.xexp[i];
            for (int j = 0; j <= t.d; ++j)
                m.texp[j] = static_cast<long long>(mf.texp[j]) + mg.texp[j];
            prod.emplace_back(std::move(m), cf * cg);
        }
    }
    return reduce(prod, t);
}

RingElement ring_one(const GLType& t)
{
    RingElement f;
    f.terms.emplace(ReducedMonomial{std::vector<int>(t.n(), 0), std::vector<int>(t.d + 1, 0)},
                    Rational(1));
    return f;
}

RingElement ring_x(int i, const GLType& t)
{
    if (i < 0 || i >= t.n())
        throw input_error("X index out of range");
    FormalMonomial m{std::vector<long long>(t.n(), 0), std::vector<long long>(t.d + 1, 0)};
    m.xexp[i] = 1;
    return reduce({{m, Rational(1)}}, t);
}

RingElement ring_t(int j, const GLType& t)
{
    if (j < 0 || j > t.d)
        throw input_error("T index out of range");
    RingElement f;
    ReducedMonomial m{std::vector<int>(t.n(), 0), std::vector<int>(t.d + 1, 0)};
    m.texp[j] = 1;
    f.terms.emplace(std::move(m), Rational(1));
    return f;
}

LElement degree(const ReducedMonomial& m, const GLType& t)
{
    LElement g;
    g.a = m.xexp;
    g.ell = std::accumulate(m.texp.begin(), m.texp.end(), 0LL);
    return g;
}

std::optional<LElement> degree(const RingElement& f, const GLType& t)
{
    std::optional<LElement> deg;
    for (const auto& [m, c] : f.terms) {
        LElement d = degree(m, t);
        if (!deg)
            deg = d;
        else if (!(*deg == d))
            return std::nullopt;
    }
    return deg;
}

std::vector<ReducedMonomial> monomial_basis(const LElement& g, const GLType& t)
{
    if (static_cast<int>(g.a.size()) != t.n())
        throw input_error("element size does not match type");
    std::vector<ReducedMonomial> basis;
    if (g.ell < 0)
        return basis;
    if (g.ell > 1000000)
        throw input_error("degree too large to enumerate a monomial basis");
    ReducedMonomial m;
    m.xexp = g.a;
    m.texp.assign(t.d + 1, 0);
    // compositions of ell(g) into d+1 parts, in canonical monomial order
    // (T0-heavy first)
    auto rec = [&](auto&& self, int j, long long remaining) -> void {
        if (j == t.d) {
            m.texp[j] = static_cast<int>(remaining);
            basis.push_back(m);
            return;
        }
        for (long long v = remaining; v >= 0; --v) {
            m.texp[j] = static_cast<int>(v);
            self(self, j + 1, remaining - v);
        }
    };
    rec(rec, 0, g.ell);
    return basis;
}

long long hilbert(const LElement& g, const GLType& t)
{
    return g.ell >= 0 ? binomial(g.ell + t.d, t.d) : 0;
}

std::string to_string(const ReducedMonomial& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.xexp.size(); ++i) {
        if (m.xexp[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "X" + std::to_string(i + 1);
        if (m.xexp[i] > 1)
            s += "^" + std::to_string(m.xexp[i]);
    }
    for (std::size_t j = 0; j < m.texp.size(); ++j) {
        if (m.texp[j] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "T" + std::to_string(j);
        if (m.texp[j] > 1)
            s += "^" + std::to_string(m.texp[j]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const RingElement& f)
{
    if (f.terms.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : f.terms) {
        if (!s.empty())
            s += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0)
            s += "-";
        Rational abs = c.sign() < 0 ? -c : c;
        std::string mono = to_string(m);
        if (abs == Rational(1) && mono != "1")
            s += mono;
        else if (mono == "1")
            s += abs.str();
        else
            s += abs.str() + "*" + mono;
    }
    return s;
}

} // namespace glorder
