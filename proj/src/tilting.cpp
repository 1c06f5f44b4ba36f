#include "glorder/tilting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "glorder/errors.hpp"
#include "glorder/linalg.hpp"

namespace glorder {

namespace {

using VertexKey = std::pair<std::vector<int>, long long>;

VertexKey key_of(const LElement& x) { return {x.a, x.ell}; }

std::map<VertexKey, int> index_vertices(const std::vector<LElement>& vs)
{
    std::map<VertexKey, int> idx;
    for (std::size_t i = 0; i < vs.size(); ++i)
        idx.emplace(key_of(vs[i]), static_cast<int>(i));
    return idx;
}

} // namespace

TiltingDatum build_tilting(const GLType& t)
{
    ValidationReport report = validate_type(t);
    if (!report.ok)
        throw input_error("type fails general position");
    return TiltingDatum{t, interval(t)};
}

long long CartanMatrix::total() const
{
    long long s = 0;
    for (const auto& row : entries)
        s = std::accumulate(row.begin(), row.end(), s);
    return s;
}

CartanMatrix cartan(const TiltingDatum& T)
{
    CartanMatrix m;
    m.summands = T.summands;
    const std::size_t k = T.summands.size();
    m.entries.assign(k, std::vector<long long>(k, 0));
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            m.entries[x][y] = hom_dim(T.summands[x], T.summands[y], T.type);
    return m;
}

RigidityReport rigidity_report(const TiltingDatum& T)
{
    RigidityReport r;
    const int d = T.type.d;
    bool first = true;
    for (std::size_t x = 0; x < T.summands.size(); ++x) {
        for (std::size_t y = 0; y < T.summands.size(); ++y) {
            long long ell = l_sub(T.summands[y], T.summands[x], T.type).ell;
            if (first) {
                r.ell_min = r.ell_max = ell;
                first = false;
            } else {
                r.ell_min = std::min(r.ell_min, ell);
                r.ell_max = std::max(r.ell_max, ell);
            }
            for (int i = 1; i <= d; ++i) {
                long long dim = h(i, ell, d);
                if (dim != 0)
                    r.violations.push_back({static_cast<int>(x), static_cast<int>(y), ell, i, dim});
            }
            ++r.pairs_checked;
        }
    }
    r.ok = r.violations.empty();
    r.ell_in_range = r.ell_min >= -d && r.ell_max <= d;
    return r;
}

long long EndoAlgebra::total_dim() const
{
    long long s = 0;
    for (const auto& row : bases)
        for (const auto& b : row)
            s += static_cast<long long>(b.size());
    return s;
}

RingElement EndoAlgebra::compose(int x, int y, int u, int z, int v) const
{
    RingElement f, g;
    f.terms.emplace(bases[x][y][u], Rational(1));
    g.terms.emplace(bases[y][z][v], Rational(1));
    return multiply(f, g, type);
}

std::vector<Rational> EndoAlgebra::compose_coeffs(int x, int y, int u, int z, int v) const
{
    return expand_in_basis(compose(x, y, u, z, v), bases[x][z]);
}

EndoAlgebra endo_algebra(const TiltingDatum& T)
{
    EndoAlgebra e;
    e.type = T.type;
    e.summands = T.summands;
    const std::size_t k = T.summands.size();
    e.bases.resize(k);
    for (std::size_t x = 0; x < k; ++x) {
        e.bases[x].resize(k);
        for (std::size_t y = 0; y < k; ++y)
            e.bases[x][y] = monomial_basis(l_sub(T.summands[y], T.summands[x], T.type), T.type);
    }
    return e;
}

std::vector<Rational> expand_in_basis(const RingElement& f, const std::vector<ReducedMonomial>& basis)
{
    std::vector<Rational> coeffs(basis.size(), Rational(0));
    for (const auto& [m, c] : f.terms) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || !(*it == m))
            throw input_error("term outside the component basis");
        coeffs[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return coeffs;
}

QuiverPresentation quiver_presentation(const TiltingDatum& T,
                                       const std::optional<std::vector<int>>& pivot_override)
{
    const GLType& t = T.type;
    if (t.n() <= t.d)
        throw arrow_insufficient_error(
            "quiver presentation needs n >= d+1 generators: with n <= d the degree-c maps "
            "are not spanned by arrow paths");

    QuiverPresentation q;
    q.vertices = T.summands;
    auto idx = index_vertices(q.vertices);
    auto vertex_index = [&](const LElement& v) -> int {
        auto it = idx.find(key_of(v));
        return it == idx.end() ? -1 : it->second;
    };

    std::vector<LElement> gens;
    for (int i = 0; i < t.n(); ++i)
        gens.push_back(l_gen(i, t));

    for (std::size_t vi = 0; vi < q.vertices.size(); ++vi) {
        for (int i = 0; i < t.n(); ++i) {
            int to = vertex_index(l_add(q.vertices[vi], gens[i], t));
            if (to >= 0)
                q.arrows.push_back({static_cast<int>(vi), to, i});
        }
    }

    // pivot set: lexicographically first d+1 indices whose forms are independent
    if (pivot_override) {
        q.pivot = *pivot_override;
        std::sort(q.pivot.begin(), q.pivot.end());
        if (static_cast<int>(q.pivot.size()) != t.d + 1)
            throw input_error("pivot set must have d+1 indices");
        if (std::adjacent_find(q.pivot.begin(), q.pivot.end()) != q.pivot.end())
            throw input_error("pivot indices must be distinct");
        RatMatrix rows;
        for (int i : q.pivot) {
            if (i < 0 || i >= t.n())
                throw input_error("pivot index out of range");
            rows.push_back(t.hyperplanes[i]);
        }
        if (rank_fraction_free(rows) != t.d + 1)
            throw input_error("pivot forms are not linearly independent");
    } else {
        RatMatrix rows;
        for (int i = 0; i < t.n() && static_cast<int>(q.pivot.size()) < t.d + 1; ++i) {
            rows.push_back(t.hyperplanes[i]);
            if (rank_fraction_free(rows) == static_cast<int>(rows.size()))
                q.pivot.push_back(i);
            else
                rows.pop_back();
        }
        if (static_cast<int>(q.pivot.size()) != t.d + 1)
            throw input_error("hyperplane forms do not span; type fails general position");
    }

    // mu coefficients: ell_i = sum_j mu_{ij} ell_j over the pivot forms
    RatMatrix pivot_cols(t.d + 1, std::vector<Rational>(t.d + 1));
    for (int j = 0; j <= t.d; ++j)
        for (int row = 0; row <= t.d; ++row)
            pivot_cols[row][j] = t.hyperplanes[q.pivot[j]][row];
    std::map<int, std::vector<Rational>> mu;
    for (int i = 0; i < t.n(); ++i) {
        if (std::find(q.pivot.begin(), q.pivot.end(), i) != q.pivot.end())
            continue;
        std::vector<Rational> b(t.d + 1);
        for (int row = 0; row <= t.d; ++row)
            b[row] = t.hyperplanes[i][row];
        auto sol = solve_exact(pivot_cols, b);
        if (!sol)
            throw input_error("pivot forms are not linearly independent");
        mu.emplace(i, std::move(*sol));
    }

    auto path_stays = [&](const LElement& v, int gen, int steps) {
        LElement cur = v;
        for (int k = 0; k < steps; ++k) {
            cur = l_add(cur, gens[gen], t);
            if (vertex_index(cur) < 0)
                return false;
        }
        return true;
    };

    for (std::size_t vi = 0; vi < q.vertices.size(); ++vi) {
        const LElement& v = q.vertices[vi];
        // commutativity squares
        for (int i = 0; i < t.n(); ++i) {
            for (int j = i + 1; j < t.n(); ++j) {
                LElement vij = l_add(l_add(v, gens[i], t), gens[j], t);
                if (vertex_index(l_add(v, gens[i], t)) < 0 || vertex_index(l_add(v, gens[j], t)) < 0
                    || vertex_index(vij) < 0)
                    continue;
                Relation rel;
                rel.at = static_cast<int>(vi);
                rel.terms.push_back({Rational(1), {i, j}});
                rel.terms.push_back({Rational(-1), {j, i}});
                q.relations.push_back(std::move(rel));
            }
        }
        // power relations for non-pivot generators
        for (const auto& [i, coeffs] : mu) {
            if (!path_stays(v, i, t.weights[i]))
                continue;
            bool all = true;
            for (int j = 0; j <= t.d && all; ++j)
                all = path_stays(v, q.pivot[j], t.weights[q.pivot[j]]);
            if (!all)
                continue;
            Relation rel;
            rel.at = static_cast<int>(vi);
            rel.terms.push_back({Rational(1), std::vector<int>(t.weights[i], i)});
            for (int j = 0; j <= t.d; ++j)
                rel.terms.push_back(
                    {-coeffs[j], std::vector<int>(t.weights[q.pivot[j]], q.pivot[j])});
            q.relations.push_back(std::move(rel));
        }
    }
    return q;
}

GenerationReport arrow_generation_check(const TiltingDatum& T)
{
    const GLType& t = T.type;
    GenerationReport report;
    auto idx = index_vertices(T.summands);
    auto vertex_index = [&](const LElement& v) -> int {
        auto it = idx.find(key_of(v));
        return it == idx.end() ? -1 : it->second;
    };
    std::vector<LElement> gens;
    for (int i = 0; i < t.n(); ++i)
        gens.push_back(l_gen(i, t));

    const std::size_t k = T.summands.size();
    for (std::size_t s = 0; s < k; ++s) {
        // reachable generator multisets; an ordering staying inside the
        // vertex set exists iff the multiset is built up one step at a time
        std::map<std::vector<int>, int> state_vertex;
        std::vector<std::vector<int>> queue;
        std::vector<int> zero(t.n(), 0);
        state_vertex.emplace(zero, static_cast<int>(s));
        queue.push_back(zero);
        while (!queue.empty()) {
            std::vector<int> m = queue.back();
            queue.pop_back();
            int vi = state_vertex.at(m);
            for (int i = 0; i < t.n(); ++i) {
                int to = vertex_index(l_add(T.summands[vi], gens[i], t));
                if (to < 0)
                    continue;
                std::vector<int> m2 = m;
                ++m2[i];
                if (state_vertex.emplace(m2, to).second)
                    queue.push_back(m2);
            }
        }

        // group multisets by target and compare span ranks with Hom dims
        std::map<int, std::vector<std::vector<int>>> by_target;
        for (const auto& [m, vi] : state_vertex)
            by_target[vi].push_back(m);

        for (std::size_t y = 0; y < k; ++y) {
            long long dim = hom_dim(T.summands[s], T.summands[y], t);
            auto it = by_target.find(static_cast<int>(y));
            long long span = 0;
            if (it != by_target.end()) {
                auto basis = monomial_basis(l_sub(T.summands[y], T.summands[s], t), t);
                RatMatrix rows;
                for (const auto& m : it->second) {
                    FormalMonomial fm;
                    fm.xexp.assign(m.begin(), m.end());
                    fm.texp.assign(t.d + 1, 0);
                    rows.push_back(expand_in_basis(reduce({{fm, Rational(1)}}, t), basis));
                }
                span = rank_fraction_free(rows);
            }
            if (span < dim)
                report.deficits.push_back({static_cast<int>(s), static_cast<int>(y), span, dim});
            ++report.pairs_checked;
        }
    }
    report.ok = report.deficits.empty();
    return report;
}

} // namespace glorder
