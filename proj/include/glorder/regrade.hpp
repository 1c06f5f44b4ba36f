#ifndef GLORDER_REGRADE_HPP
#define GLORDER_REGRADE_HPP

#include <vector>

#include "glorder/glring.hpp"
#include "glorder/lgroup.hpp"

namespace glorder {

// Canonical representatives of the torsion cosets: {sum a_i x_i, 0 <= a_i < p_i}
// with ell = 0, in ascending lexicographic order of the exponent vector.
std::vector<LElement> coset_reps(const GLType& t);

// One degree of the Z-regraded ring: block (i, j) holds the monomial basis of
// the graded piece at reps[i] - reps[j] + h*c.
struct RegradedComponent {
    long long h = 0;
    std::vector<LElement> reps;
    std::vector<std::vector<std::vector<ReducedMonomial>>> blocks;

    long long block_dim(std::size_t i, std::size_t j) const
    {
        return static_cast<long long>(blocks[i][j].size());
    }
    long long total_dim() const;
};

RegradedComponent regrade_component(long long h, const GLType& t);
// Same, over a caller-supplied transversal (each rep may be shifted by
// multiples of c); used to exercise representative-independence.
RegradedComponent regrade_component_with_reps(long long h, const GLType& t,
                                              const std::vector<LElement>& reps);

// Concrete element of one regraded degree: a reps x reps block matrix of ring
// elements, block (i, j) homogeneous of degree reps[i] - reps[j] + h*c.
struct RegradedElement {
    long long h = 0;
    std::vector<std::vector<RingElement>> block;
};

RegradedElement regrade_identity(const GLType& t);
// Block-matrix product with entrywise ring multiplication; degrees add.
RegradedElement regrade_multiply(const RegradedElement& u, const RegradedElement& v,
                                 const GLType& t);

// Degree-ell dimension of the triangular tensor algebra over the polynomial
// subring: entries strictly above the diagonal in u factors contribute
// dim S_{ell-u}.
long long triangular_tensor_dim(long long ell, const GLType& t);

// Degree-ell dimension of the section algebra of the order: sums h^0 of
// O(ell + twist) over all matrix entries. Throws on negative ell.
long long b_algebra_dim(long long ell, const GLType& t);

struct ShiftTransport {
    long long h = 0;
    long long rep_index = 0;
};

// Unique decomposition g = reps[i] + h*c; the bookkeeping image of the shift
// by g under the regrading equivalence.
ShiftTransport transport_shift(const LElement& g, const GLType& t);

} // namespace glorder

#endif
