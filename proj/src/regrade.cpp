#include "glorder/regrade.hpp"

#include <algorithm>
#include <cstdint>

#include "glorder/errors.hpp"
#include "glorder/ordermodel.hpp"
#include "glorder/projcohom.hpp"

namespace glorder {

std::vector<LElement> coset_reps(const GLType& t)
{
    std::vector<LElement> reps;
    std::vector<int> a(t.n(), 0);
    while (true) {
        reps.push_back(LElement{a, 0});
        int i = t.n() - 1;
        while (i >= 0 && a[i] == t.weights[i] - 1) {
            a[i] = 0;
            --i;
        }
        if (i < 0)
            break;
        ++a[i];
    }
    return reps;
}

long long RegradedComponent::total_dim() const
{
    long long s = 0;
    for (const auto& row : blocks)
        for (const auto& b : row)
            s += static_cast<long long>(b.size());
    return s;
}

RegradedComponent regrade_component_with_reps(long long h, const GLType& t,
                                              const std::vector<LElement>& reps)
{
    RegradedComponent comp;
    comp.h = h;
    comp.reps = reps;
    const std::size_t k = reps.size();
    comp.blocks.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        comp.blocks[i].resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            LElement g = l_add(l_sub(reps[i], reps[j], t), l_c(t, h), t);
            comp.blocks[i][j] = monomial_basis(g, t);
        }
    }
    return comp;
}

RegradedComponent regrade_component(long long h, const GLType& t)
{
    return regrade_component_with_reps(h, t, coset_reps(t));
}

RegradedElement regrade_identity(const GLType& t)
{
    auto reps = coset_reps(t);
    RegradedElement e;
    e.h = 0;
    e.block.assign(reps.size(), std::vector<RingElement>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
        e.block[i][i] = ring_one(t);
    return e;
}

namespace {

// block (i, j) of a degree-h element must be homogeneous of degree
// reps_i - reps_j + h c (or zero)
void check_block_degrees(const RegradedElement& e, const GLType& t)
{
    auto reps = coset_reps(t);
    if (e.block.size() != reps.size())
        throw input_error("regraded element block count does not match the transversal");
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (e.block[i].size() != reps.size())
            throw input_error("ragged block matrix");
        for (std::size_t j = 0; j < reps.size(); ++j) {
            if (e.block[i][j].is_zero())
                continue;
            LElement want = l_add(l_sub(reps[i], reps[j], t), l_c(t, e.h), t);
            auto deg = degree(e.block[i][j], t);
            if (!deg || !(*deg == want))
                throw input_error("degree mismatch in regraded element block");
        }
    }
}

} // namespace

RegradedElement regrade_multiply(const RegradedElement& u, const RegradedElement& v,
                                 const GLType& t)
{
    check_block_degrees(u, t);
    check_block_degrees(v, t);
    const std::size_t k = u.block.size();
    if (v.block.size() != k)
        throw input_error("regraded elements have different block counts");
    RegradedElement w;
    w.h = u.h + v.h;
    w.block.assign(k, std::vector<RingElement>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            RingElement sum;
            for (std::size_t mid = 0; mid < k; ++mid) {
                if (u.block[i][mid].is_zero() || v.block[mid][j].is_zero())
                    continue;
                sum = ring_add(sum, multiply(u.block[i][mid], v.block[mid][j], t));
            }
            w.block[i][j] = std::move(sum);
        }
    }
    return w;
}

long long triangular_tensor_dim(long long ell, const GLType& t)
{
    if (ell < 0)
        return 0;
    auto grid = multi_indices(t.weights);
    long long total = 0;
    for (const auto& j : grid) {
        for (const auto& k : grid) {
            int upper = 0;
            for (int i = 0; i < t.n(); ++i)
                upper += j[i] < k[i] ? 1 : 0;
            long long m = ell - upper;
            total += m >= 0 ? binomial(m + t.d, t.d) : 0;
        }
    }
    return total;
}

long long b_algebra_dim(long long ell, const GLType& t)
{
    if (ell < 0)
        throw input_error("section algebra degrees are nonnegative");
    auto grid = multi_indices(t.weights);
    long long total = 0;
    for (const auto& j : grid)
        for (const auto& k : grid)
            total += h(0, ell + order_entry(j, k, t).total(), t.d);
    return total;
}

ShiftTransport transport_shift(const LElement& g, const GLType& t)
{
    if (static_cast<int>(g.a.size()) != t.n())
        throw input_error("element size does not match type");
    ShiftTransport s;
    s.h = g.ell;
    // reps are ascending-lex, so the index is the mixed-radix value of a
    for (int i = 0; i < t.n(); ++i) {
        if (s.rep_index > (INT64_MAX - g.a[i]) / t.weights[i])
            throw std::overflow_error("coset index exceeded 64-bit range");
        s.rep_index = s.rep_index * t.weights[i] + g.a[i];
    }
    return s;
}

} // namespace glorder
