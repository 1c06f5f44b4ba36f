#include "glorder/ordermodel.hpp"

#include <algorithm>
#include <numeric>

#include "glorder/errors.hpp"

namespace glorder {

long long DivisorTwist::total() const
{
    return m + std::accumulate(tw.begin(), tw.end(), 0LL);
}

std::size_t ColumnBundle::flat_index(const std::vector<int>& j) const
{
    if (j.size() != weights.size())
        throw input_error("multi-index size does not match type");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] < 1 || j[i] > weights[i])
            throw input_error("multi-index entry out of range");
        idx = idx * weights[i] + (j[i] - 1);
    }
    return idx;
}

std::vector<std::vector<int>> multi_indices(const std::vector<int>& weights)
{
    std::vector<std::vector<int>> out;
    std::vector<int> j(weights.size(), 1);
    while (true) {
        out.push_back(j);
        int i = static_cast<int>(weights.size()) - 1;
        while (i >= 0 && j[i] == weights[i]) {
            j[i] = 1;
            --i;
        }
        if (i < 0)
            break;
        ++j[i];
    }
    return out;
}

DivisorTwist order_entry(const std::vector<int>& j, const std::vector<int>& k, const GLType& t)
{
    if (static_cast<int>(j.size()) != t.n() || static_cast<int>(k.size()) != t.n())
        throw input_error("multi-index size does not match type");
    DivisorTwist e;
    e.tw.resize(t.n());
    for (int i = 0; i < t.n(); ++i) {
        if (j[i] < 1 || j[i] > t.weights[i] || k[i] < 1 || k[i] > t.weights[i])
            throw input_error("multi-index entry out of range");
        e.tw[i] = j[i] < k[i] ? -1 : 0;
    }
    return e;
}

ColumnBundle twisted_column_raw(const std::vector<long long>& word, const GLType& t)
{
    if (static_cast<int>(word.size()) != t.n() + 1)
        throw input_error("raw word must have n+1 entries");
    // column index and tensor twist contributed by each factor
    std::vector<int> col(t.n()), up(t.n());
    for (int i = 0; i < t.n(); ++i) {
        long long p = t.weights[i];
        col[i] = static_cast<int>(((-word[i]) % p + p) % p) + 1;
        up[i] = static_cast<int>(ceil_div(word[i], p));
    }
    ColumnBundle b;
    b.weights = t.weights;
    for (const auto& j : multi_indices(t.weights)) {
        DivisorTwist e;
        e.m = word[t.n()];
        e.tw.resize(t.n());
        for (int i = 0; i < t.n(); ++i)
            e.tw[i] = up[i] - (j[i] < col[i] ? 1 : 0);
        b.entries.push_back(std::move(e));
    }
    return b;
}

ColumnBundle twisted_column(const LElement& x, const GLType& t)
{
    if (static_cast<int>(x.a.size()) != t.n())
        throw input_error("element size does not match type");
    std::vector<long long> word(x.a.begin(), x.a.end());
    word.push_back(x.ell);
    return twisted_column_raw(word, t);
}

long long top_entry(const LElement& x, const GLType& t)
{
    ColumnBundle b = twisted_column(x, t);
    return b.entries.front().total(); // (1,...,1) flattens to index 0
}

LocalType local_type(const std::vector<int>& s, const GLType& t)
{
    if (static_cast<int>(s.size()) > t.d)
        throw input_error("more than d hyperplanes meet in the empty set; not a stratum");
    std::vector<int> seen;
    LocalType lt;
    lt.global_dimension = t.d;
    for (int i : s) {
        if (i < 0 || i >= t.n())
            throw input_error("stratum index out of range");
        if (std::find(seen.begin(), seen.end(), i) != seen.end())
            throw input_error("stratum indices must be distinct");
        seen.push_back(i);
        lt.weights.push_back(t.weights[i]);
    }
    return lt;
}

} // namespace glorder
