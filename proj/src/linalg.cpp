#include "glorder/linalg.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "glorder/errors.hpp"

namespace glorder {

namespace {

long long checked_ll(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("fraction-free elimination exceeded 64-bit range");
    return static_cast<long long>(v);
}

// Clear denominators row by row; scaling a row does not change the rank.
std::vector<std::vector<long long>> integerize(const RatMatrix& m)
{
    std::vector<std::vector<long long>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        long long mult = 1;
        for (const auto& e : row) {
            long long d = e.den();
            long long g = std::gcd(mult, d);
            mult = checked_ll(static_cast<__int128>(mult) / g * d);
        }
        std::vector<long long> irow;
        irow.reserve(row.size());
        for (const auto& e : row)
            irow.push_back(checked_ll(static_cast<__int128>(e.num()) * (mult / e.den())));
        out.push_back(std::move(irow));
    }
    return out;
}

} // namespace

int rank_fraction_free(const RatMatrix& m)
{
    if (m.empty())
        return 0;
    auto a = integerize(m);
    const std::size_t rows = a.size(), cols = a[0].size();
    for (const auto& r : a)
        if (r.size() != cols)
            throw input_error("ragged matrix");

    long long prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                __int128 num = static_cast<__int128>(a[rank][col]) * a[i][j]
                             - static_cast<__int128>(a[i][col]) * a[rank][j];
                if (num % prev != 0)
                    throw std::logic_error("Bareiss division not exact");
                a[i][j] = checked_ll(num / prev);
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

std::optional<std::vector<Rational>> solve_exact(RatMatrix a, std::vector<Rational> b)
{
    const std::size_t n = a.size();
    if (b.size() != n)
        throw input_error("solve_exact: size mismatch");
    for (const auto& row : a)
        if (row.size() != n)
            throw input_error("solve_exact: matrix not square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero())
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        Rational inv = Rational(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j)
            a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero())
                continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < n; ++j)
                a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

} // namespace glorder
