#ifndef GLORDER_GLRING_HPP
#define GLORDER_GLRING_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glorder/lgroup.hpp"
#include "glorder/rational.hpp"

namespace glorder {

// Monomial X^xexp T^texp in the reduced basis: 0 <= xexp_i < p_i. These
// monomials form a k-basis of the quotient ring.
struct ReducedMonomial {
    std::vector<int> xexp;
    std::vector<int> texp;

    friend bool operator==(const ReducedMonomial&, const ReducedMonomial&) = default;
    // lex on (xexp, texp) with earlier variables weighted heaviest, so X1
    // leads X2 and T0 leads T1 in canonical listings
    friend bool operator<(const ReducedMonomial& a, const ReducedMonomial& b)
    {
        if (a.xexp != b.xexp)
            return b.xexp < a.xexp;
        return b.texp < a.texp;
    }
};

// Exact element of the quotient ring, stored as a term map in canonical
// (xexp, texp)-lex order. Zero is the empty map.
struct RingElement {
    std::map<ReducedMonomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

// Unreduced monomial of the ambient polynomial ring: X-exponents are
// unrestricted nonnegative integers.
struct FormalMonomial {
    std::vector<long long> xexp;
    std::vector<long long> texp;
};

using FormalPoly = std::vector<std::pair<FormalMonomial, Rational>>;

// Rewrites X_i^{p_i} -> ell_i(T) until every X-exponent is reduced. The
// substitutes contain no X variables, so the rewriting is confluent and the
// result does not depend on the rewrite order.
RingElement reduce(const FormalPoly& poly, const GLType& t);

RingElement ring_add(const RingElement& f, const RingElement& g);
RingElement ring_scale(const Rational& c, const RingElement& f);
RingElement multiply(const RingElement& f, const RingElement& g, const GLType& t);

RingElement ring_one(const GLType& t);
RingElement ring_x(int i, const GLType& t); // X_{i+1}
RingElement ring_t(int j, const GLType& t); // T_j

// Degree of a reduced monomial as a group element (always a normal form).
LElement degree(const ReducedMonomial& m, const GLType& t);
// Degree of a homogeneous element; nullopt for 0 or inhomogeneous input.
std::optional<LElement> degree(const RingElement& f, const GLType& t);

// k-basis of the graded piece R_g: xexp pinned to the torsion part of g,
// texp running over all compositions of ell(g). Empty when ell(g) < 0.
std::vector<ReducedMonomial> monomial_basis(const LElement& g, const GLType& t);

// dim_k R_g = C(ell(g)+d, d) for ell(g) >= 0, else 0.
long long hilbert(const LElement& g, const GLType& t);

std::string to_string(const ReducedMonomial& m);
std::string to_string(const RingElement& f);

} // namespace glorder

#endif
