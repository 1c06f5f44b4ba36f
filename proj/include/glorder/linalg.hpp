#ifndef GLORDER_LINALG_HPP
#define GLORDER_LINALG_HPP

#include <optional>
#include <vector>

#include "glorder/rational.hpp"

namespace glorder {

using RatMatrix = std::vector<std::vector<Rational>>;

// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
// integers (exact), so no rational pivoting thresholds enter anywhere.
int rank_fraction_free(const RatMatrix& m);

// Solve the square system A x = b exactly over the rationals.
// Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_exact(RatMatrix a, std::vector<Rational> b);

} // namespace glorder

#endif
