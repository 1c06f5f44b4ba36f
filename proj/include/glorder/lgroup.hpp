#ifndef GLORDER_LGROUP_HPP
#define GLORDER_LGROUP_HPP

#include <string>
#include <vector>

#include "glorder/gltype.hpp"

namespace glorder {

// Element of the rank-1 group <x_1..x_n, c | p_i x_i = c> in normal form:
// sum a_i x_i + ell c with 0 <= a_i < p_i. The normal form is unique.
struct LElement {
    std::vector<int> a;
    long long ell = 0;

    friend bool operator==(const LElement&, const LElement&) = default;
};

LElement l_zero(const GLType& t);
LElement l_gen(int i, const GLType& t);               // x_i, 0-based i
LElement l_c(const GLType& t, long long k = 1);       // k*c

// Normal form of the raw word sum b_i x_i + m c; raw has n+1 entries,
// the last being the c coefficient. Floor division rounds toward -inf.
LElement normal_form(const std::vector<long long>& raw, const GLType& t);

// Normal form of x + sign*y; sign is +1 or -1.
LElement group_op(const LElement& x, const LElement& y, int sign, const GLType& t);
LElement l_add(const LElement& x, const LElement& y, const GLType& t);
LElement l_sub(const LElement& x, const LElement& y, const GLType& t);
LElement l_neg(const LElement& x, const GLType& t);

// Membership in the positive cone: on normal forms this is ell >= 0.
bool is_effective(const LElement& x);
// x <= y in the induced partial order, i.e. y - x is effective.
bool l_leq(const LElement& x, const LElement& y, const GLType& t);

// Membership in the tilting interval [0, d*c]:
// ell >= 0 and ell + #{i : a_i > 0} <= d.
bool in_interval(const LElement& x, const GLType& t);

// Canonical enumeration order: ascending c-coefficient, then ascending total
// torsion degree, then earlier-indexed generators first. This reproduces the
// customary listing 0, x_1, ..., x_n, x_1+x_2, ... within each level.
bool interval_less(const LElement& u, const LElement& v);

// All elements of [0, d*c] in canonical order.
std::vector<LElement> interval(const GLType& t);

// "2*x1+1*c" style text form; "0" for the identity.
std::string to_string(const LElement& x);

} // namespace glorder

#endif
