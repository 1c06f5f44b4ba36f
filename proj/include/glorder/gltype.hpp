#ifndef GLORDER_GLTYPE_HPP
#define GLORDER_GLTYPE_HPP

#include <vector>

#include "glorder/linalg.hpp"
#include "glorder/rational.hpp"

namespace glorder {

// Defining datum of an order on projective d-space: a list of weighted
// hyperplanes ell_i(T) = sum_j lambda_{i,j} T_j with weights p_i >= 1.
struct GLType {
    int d = 1;                 // projective dimension
    std::vector<int> weights;  // p_i, one per hyperplane
    RatMatrix hyperplanes;     // n rows, d+1 exact rational coefficients each

    int n() const { return static_cast<int>(weights.size()); }
};

struct RankViolation {
    std::vector<int> subset; // 0-based row indices, ascending
    int rank;                // exact rank, < subset.size()
};

struct ValidationReport {
    bool ok = true;
    std::vector<RankViolation> violations;
};

// Checks general position: every subset of at most d+1 coefficient rows must
// have full rank. Throws input_error / weight_error on structurally malformed
// data (wrong matrix shape, zero row, nonpositive weight).
ValidationReport validate_type(const GLType& t);

// All index subsets S with |S| <= d, including the empty set, ordered by
// (size, lex). Under general position these are exactly the subsets whose
// hyperplane intersection is nonempty.
std::vector<std::vector<int>> strata(const GLType& t);

} // namespace glorder

#endif
