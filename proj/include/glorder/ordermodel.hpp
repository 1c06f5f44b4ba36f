#ifndef GLORDER_ORDERMODEL_HPP
#define GLORDER_ORDERMODEL_HPP

#include <vector>

#include "glorder/lgroup.hpp"

namespace glorder {

// A line bundle twist m*O(1) + sum tw_i L_i tracked per hyperplane; only the
// total degree matters for cohomology, the split drives local data and display.
struct DivisorTwist {
    long long m = 0;
    std::vector<int> tw;

    long long total() const;
    friend bool operator==(const DivisorTwist&, const DivisorTwist&) = default;
};

// Column module P(x) written entrywise over the multi-index grid
// (j_1..j_n), 1 <= j_i <= p_i, flattened row-major (j_1 most significant).
struct ColumnBundle {
    std::vector<int> weights;
    std::vector<DivisorTwist> entries;

    long long rank() const { return static_cast<long long>(entries.size()); }
    std::size_t flat_index(const std::vector<int>& j) const;
    const DivisorTwist& at(const std::vector<int>& j) const { return entries[flat_index(j)]; }
};

// Multi-indices of the grid in flattening order.
std::vector<std::vector<int>> multi_indices(const std::vector<int>& weights);

// Entry (j, k) of the order: a factor contributes -L_i exactly when it sits
// strictly above the diagonal, j_i < k_i.
DivisorTwist order_entry(const std::vector<int>& j, const std::vector<int>& k, const GLType& t);

// P(x) entrywise. For x = sum a_i x_i + ell c in normal form, factor i is the
// column ((1 - a_i - 1) mod p_i) + 1 of its triangular factor twisted by
// ceil(a_i/p_i) L_i, and the free twist picks up ell.
ColumnBundle twisted_column(const LElement& x, const GLType& t);

// Same construction driven by a raw word (b_1..b_n, m): factor i keeps its
// own twist ceil(b_i/p_i) L_i. Different words for one group element give
// different (m, tw) splits with identical entrywise totals; in particular a
// full p_i x_i step adds exactly one L_i twist to every entry.
ColumnBundle twisted_column_raw(const std::vector<long long>& word, const GLType& t);

// Total degree of the (1,...,1) entry of P(x); agrees with ell(x) on normal
// forms and with sum floor(b_i/p_i) + m on any raw word (b, m).
long long top_entry(const LElement& x, const GLType& t);

struct LocalType {
    std::vector<int> weights;  // (p_i) for i in the stratum
    int global_dimension;      // predicted stalk global dimension, = d
};

// Local Morita type of the stalk over the open stratum of s (0-based indices).
// Throws for subsets that are not strata (more than d hyperplanes meet only
// in the empty set).
LocalType local_type(const std::vector<int>& s, const GLType& t);

} // namespace glorder

#endif
