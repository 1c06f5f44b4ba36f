#ifndef GLORDER_PROJCOHOM_HPP
#define GLORDER_PROJCOHOM_HPP

#include <vector>

#include "glorder/lgroup.hpp"

namespace glorder {

// Cohomology dimensions (h^0, ..., h^d) of a line bundle twist; at most one
// entry is nonzero and the middle degrees always vanish.
struct CohomologyVector {
    std::vector<long long> dims;

    friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

// h^i(P^d, O(ell)): C(ell+d, d) at i = 0 for ell >= 0, C(-ell-1, d) at i = d
// for ell <= -d-1, zero everywhere else. Throws on i outside [0, d].
long long h(int i, long long ell, int d);

// dim Hom(P(x), P(y)) = h^0 of the twist ell(y - x).
long long hom_dim(const LElement& x, const LElement& y, const GLType& t);

// All Ext^i(P(x), P(y)) dimensions, i = 0..d.
CohomologyVector ext_dims(const LElement& x, const LElement& y, const GLType& t);

} // namespace glorder

#endif
