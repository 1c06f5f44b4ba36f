#ifndef GLORDER_TESTS_ORACLES_HPP
#define GLORDER_TESTS_ORACLES_HPP

// Brute-force oracles, deliberately independent of the library's formulas.
// Expected values frozen into tests were computed with these.

#include <vector>

#include "glorder/glring.hpp"
#include "glorder/lgroup.hpp"

namespace glorder::test {

// Normal form by stepwise rewriting with the defining relations p_i x_i = c,
// one application at a time (no floor-division shortcut).
inline LElement word_reduce_oracle(std::vector<long long> word, const GLType& t)
{
    long long m = word[t.n()];
    for (int i = 0; i < t.n(); ++i) {
        while (word[i] >= t.weights[i]) {
            word[i] -= t.weights[i];
            ++m;
        }
        while (word[i] < 0) {
            word[i] += t.weights[i];
            --m;
        }
    }
    LElement x;
    x.a.assign(word.begin(), word.begin() + t.n());
    x.ell = m;
    return x;
}

// Exhaustive search for a nonnegative word representation of x. The bound
// covers every element with |ell| <= slack (one extra relation application
// per generator beyond the torsion part).
inline bool effective_oracle(const LElement& x, const GLType& t, int slack = 4)
{
    if (t.n() == 0)
        return x.ell == 0; // positive cone of the torsion-free quotient alone
    std::vector<long long> b(t.n(), 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == t.n()) {
            std::vector<long long> word(b);
            word.push_back(0);
            return word_reduce_oracle(word, t) == x;
        }
        for (b[i] = 0; b[i] <= x.a[i] + static_cast<long long>(slack) * t.weights[i]; ++b[i])
            if (self(self, i + 1))
                return true;
        return false;
    };
    return rec(rec, 0);
}

// Alternative reducer that always rewrites the highest-indexed oversized
// variable first; confluence means it must agree with the library's reducer.
inline void reduce_term_alt(const FormalMonomial& mono, const Rational& coef, const GLType& t,
                            RingElement& out)
{
    if (coef.is_zero())
        return;
    for (int i = t.n() - 1; i >= 0; --i) {
        if (mono.xexp[i] >= t.weights[i]) {
            FormalMonomial rest = mono;
            rest.xexp[i] -= t.weights[i];
            for (int j = t.d; j >= 0; --j) {
                const Rational& lambda = t.hyperplanes[i][j];
                if (lambda.is_zero())
                    continue;
                FormalMonomial next = rest;
                ++next.texp[j];
                reduce_term_alt(next, coef * lambda, t, out);
            }
            return;
        }
    }
    ReducedMonomial m;
    m.xexp.assign(mono.xexp.begin(), mono.xexp.end());
    m.texp.assign(mono.texp.begin(), mono.texp.end());
    auto [it, inserted] = out.terms.emplace(m, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero())
            out.terms.erase(it);
    }
}

inline RingElement reduce_alt(const FormalPoly& poly, const GLType& t)
{
    RingElement out;
    for (const auto& [mono, coef] : poly)
        reduce_term_alt(mono, coef, t, out);
    return out;
}

// Unreduced product of formal polynomials.
inline FormalPoly formal_product(const FormalPoly& f, const FormalPoly& g, const GLType& t)
{
    FormalPoly out;
    for (const auto& [mf, cf] : f) {
        for (const auto& [mg, cg] : g) {
            FormalMonomial m;
            m.xexp.resize(t.n());
            m.texp.resize(t.d + 1);
            for (int i = 0; i < t.n(); ++i)
                m.xexp[i] = mf.xexp[i] + mg.xexp[i];
            for (int j = 0; j <= t.d; ++j)
                m.texp[j] = mf.texp[j] + mg.texp[j];
            out.emplace_back(std::move(m), cf * cg);
        }
    }
    return out;
}

// All reduced monomials of the given degree, found by scanning the whole
// reduced grid up to the c-degree of g and comparing degrees.
inline std::vector<ReducedMonomial> degree_monomials_oracle(const LElement& g, const GLType& t)
{
    std::vector<ReducedMonomial> found;
    if (g.ell < 0)
        return found;
    ReducedMonomial m;
    m.xexp.assign(t.n(), 0);
    m.texp.assign(t.d + 1, 0);
    auto scan_t = [&](auto&& self, int j, long long remaining) -> void {
        if (j == t.d) {
            m.texp[j] = static_cast<int>(remaining);
            if (degree(m, t) == g)
                found.push_back(m);
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            m.texp[j] = static_cast<int>(v);
            self(self, j + 1, remaining - v);
        }
    };
    auto scan_x = [&](auto&& self, int i) -> void {
        if (i == t.n()) {
            for (long long total = 0; total <= g.ell; ++total)
                scan_t(scan_t, 0, total);
            return;
        }
        for (m.xexp[i] = 0; m.xexp[i] < t.weights[i]; ++m.xexp[i])
            self(self, i + 1);
        m.xexp[i] = 0;
    };
    scan_x(scan_x, 0);
    return found;
}

} // namespace glorder::test

#endif
