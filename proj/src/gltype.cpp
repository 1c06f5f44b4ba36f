#include "glorder/gltype.hpp"

#include <algorithm>
#include <string>

#include "glorder/errors.hpp"

namespace glorder {

namespace {

void check_shape(const GLType& t)
{
    if (t.d < 1)
        throw input_error("projective dimension d must be >= 1");
    if (t.hyperplanes.size() != t.weights.size())
        throw input_error("hyperplane row count does not match weight count");
    for (int i = 0; i < t.n(); ++i) {
        if (t.weights[i] < 1)
            throw weight_error("weight p_" + std::to_string(i + 1) + " must be a positive integer");
        if (static_cast<int>(t.hyperplanes[i].size()) != t.d + 1)
            throw input_error("hyperplane row " + std::to_string(i + 1) + " must have d+1 entries");
        bool nonzero = false;
        for (const auto& c : t.hyperplanes[i])
            nonzero = nonzero || !c.is_zero();
        if (!nonzero)
            throw input_error("hyperplane row " + std::to_string(i + 1) + " is zero");
    }
}

// Visit all subsets of {0..n-1} of size <= max_size, ordered by (size, lex).
template <typename F>
void for_each_subset(int n, int max_size, F&& visit)
{
    std::vector<int> s;
    for (int size = 0; size <= std::min(n, max_size); ++size) {
        s.assign(size, 0);
        for (int i = 0; i < size; ++i)
            s[i] = i;
        while (true) {
            visit(s);
            if (size == 0)
                break;
            int i = size - 1;
            while (i >= 0 && s[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++s[i];
            for (int j = i + 1; j < size; ++j)
                s[j] = s[j - 1] + 1;
        }
    }
}

} // namespace

ValidationReport validate_type(const GLType& t)
{
    check_shape(t);
    ValidationReport report;
    for_each_subset(t.n(), t.d + 1, [&](const std::vector<int>& s) {
        if (s.empty())
            return;
        RatMatrix rows;
        rows.reserve(s.size());
        for (int i : s)
            rows.push_back(t.hyperplanes[i]);
        int r = rank_fraction_free(rows);
        if (r < static_cast<int>(s.size()))
            report.violations.push_back({s, r});
    });
    report.ok = report.violations.empty();
    return report;
}

std::vector<std::vector<int>> strata(const GLType& t)
{
    ValidationReport report = validate_type(t);
    if (!report.ok)
        throw input_error("type fails general position; strata are undefined");
    std::vector<std::vector<int>> out;
    for_each_subset(t.n(), t.d, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

} // namespace glorder
