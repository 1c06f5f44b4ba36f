#include "glorder/json_io.hpp"

#include <fstream>

#include "glorder/errors.hpp"

namespace glorder {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& v)
{
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    if (v.is_string())
        return Rational::parse(v.get<std::string>());
    throw input_error("matrix entries must be integers or \"p/q\" strings");
}

json rational_to_json(const Rational& r)
{
    if (r.den() == 1)
        return json(r.num());
    return json(r.str());
}

json elements_json(const std::vector<LElement>& elems)
{
    json arr = json::array();
    for (const auto& e : elems)
        arr.push_back(to_string(e));
    return arr;
}

json one_based(const std::vector<int>& idx)
{
    json arr = json::array();
    for (int i : idx)
        arr.push_back(i + 1);
    return arr;
}

} // namespace

GLType type_from_json(const json& j)
{
    if (!j.is_object())
        throw input_error("type spec must be a JSON object");
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw input_error("type spec needs an integer field \"d\"");
    GLType t;
    t.d = j["d"].get<int>();
    if (!j.contains("weights") || !j["weights"].is_array())
        throw input_error("type spec needs an array field \"weights\"");
    for (const auto& w : j["weights"]) {
        if (!w.is_number_integer())
            throw input_error("weights must be integers");
        t.weights.push_back(w.get<int>());
    }
    if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array())
        throw input_error("type spec needs an array field \"hyperplanes\"");
    for (const auto& row : j["hyperplanes"]) {
        if (!row.is_array())
            throw input_error("hyperplane rows must be arrays");
        std::vector<Rational> r;
        for (const auto& v : row)
            r.push_back(rational_from_json(v));
        t.hyperplanes.push_back(std::move(r));
    }
    return t;
}

GLType load_type(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open type spec file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return type_from_json(j);
}

json to_json(const ValidationReport& r)
{
    json out;
    out["ok"] = r.ok;
    json v = json::array();
    for (const auto& viol : r.violations)
        v.push_back({{"subset", one_based(viol.subset)}, {"rank", viol.rank}});
    out["violations"] = v;
    return out;
}

json interval_json(const std::vector<LElement>& elems)
{
    json out;
    out["size"] = elems.size();
    out["elements"] = elements_json(elems);
    return out;
}

json to_json(const CartanMatrix& m)
{
    json out;
    out["summands"] = elements_json(m.summands);
    out["matrix"] = m.entries;
    out["total"] = m.total();
    return out;
}

json to_json(const RigidityReport& r)
{
    json out;
    out["ok"] = r.ok;
    out["ell_in_range"] = r.ell_in_range;
    out["ell_min"] = r.ell_min;
    out["ell_max"] = r.ell_max;
    out["pairs_checked"] = r.pairs_checked;
    json v = json::array();
    for (const auto& w : r.violations)
        v.push_back({{"from", w.from}, {"to", w.to}, {"ell", w.ell}, {"degree", w.degree}, {"dim", w.dim}});
    out["violations"] = v;
    return out;
}

json to_json(const QuiverPresentation& q)
{
    json out;
    out["vertices"] = elements_json(q.vertices);
    json arrows = json::array();
    for (const auto& a : q.arrows)
        arrows.push_back({{"from", a.from}, {"to", a.to}, {"gen", a.gen + 1}});
    out["arrows"] = arrows;
    json rels = json::array();
    for (const auto& r : q.relations) {
        json terms = json::array();
        for (const auto& term : r.terms) {
            json path = json::array();
            for (int g : term.gens)
                path.push_back(g + 1);
            terms.push_back({{"coef", term.coef.str()}, {"path", path}});
        }
        rels.push_back({{"at", r.at}, {"terms", terms}});
    }
    out["relations"] = rels;
    out["pivot"] = one_based(q.pivot);
    return out;
}

json to_json(const EndoAlgebra& e, bool with_products)
{
    json out;
    out["summands"] = elements_json(e.summands);
    const std::size_t k = e.summands.size();
    json dims = json::array();
    json bases = json::array();
    for (std::size_t x = 0; x < k; ++x) {
        json drow = json::array(), brow = json::array();
        for (std::size_t y = 0; y < k; ++y) {
            drow.push_back(e.dim(static_cast<int>(x), static_cast<int>(y)));
            json mons = json::array();
            for (const auto& m : e.bases[x][y])
                mons.push_back(to_string(m));
            brow.push_back(mons);
        }
        dims.push_back(drow);
        bases.push_back(brow);
    }
    out["dims"] = dims;
    out["bases"] = bases;
    out["total_dim"] = e.total_dim();
    if (with_products) {
        json prods = json::array();
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y)
                for (std::size_t z = 0; z < k; ++z)
                    for (std::size_t u = 0; u < e.bases[x][y].size(); ++u)
                        for (std::size_t v = 0; v < e.bases[y][z].size(); ++v) {
                            auto coeffs = e.compose_coeffs(static_cast<int>(x), static_cast<int>(y),
                                                           static_cast<int>(u), static_cast<int>(z),
                                                           static_cast<int>(v));
                            json cs = json::array();
                            for (const auto& c : coeffs)
                                cs.push_back(rational_to_json(c));
                            prods.push_back({{"first", {x, y, u}}, {"second", {y, z, v}}, {"coeffs", cs}});
                        }
        out["products"] = prods;
    }
    return out;
}

json to_json(const ColumnBundle& b)
{
    json out;
    out["rank"] = b.rank();
    json entries = json::array();
    auto grid = multi_indices(b.weights);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& e = b.entries[i];
        entries.push_back({{"index", grid[i]}, {"m", e.m}, {"tw", e.tw}});
    }
    out["entries"] = entries;
    return out;
}

json hilbert_table_json(const GLType& t, long long max_degree)
{
    json out;
    auto reps = coset_reps(t);
    out["max_degree"] = max_degree;
    out["reps"] = elements_json(reps);
    json dims = json::array();
    for (const auto& rep : reps) {
        json row = json::array();
        for (long long ell = 0; ell <= max_degree; ++ell)
            row.push_back(hilbert(l_add(rep, l_c(t, ell), t), t));
        dims.push_back(row);
    }
    out["dims"] = dims;
    return out;
}

json regrade_sweep_json(const GLType& t, long long max_degree)
{
    json out;
    json comps = json::array();
    auto reps = coset_reps(t);
    for (long long h = 0; h <= max_degree; ++h) {
        RegradedComponent comp = regrade_component(h, t);
        json dims = json::array();
        for (std::size_t i = 0; i < reps.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < reps.size(); ++j)
                row.push_back(comp.block_dim(i, j));
            dims.push_back(row);
        }
        comps.push_back({{"h", h},
                         {"reps", elements_json(reps)},
                         {"dims", dims},
                         {"total", comp.total_dim()},
                         {"triangular_tensor_dim", triangular_tensor_dim(h, t)},
                         {"b_algebra_dim", b_algebra_dim(h, t)}});
    }
    out["components"] = comps;
    return out;
}

json local_types_json(const GLType& t)
{
    json out;
    json arr = json::array();
    for (const auto& s : strata(t)) {
        LocalType lt = local_type(s, t);
        arr.push_back({{"indices", one_based(s)},
                       {"weights", lt.weights},
                       {"global_dimension", lt.global_dimension}});
    }
    out["strata"] = arr;
    return out;
}

json transport_json(const std::vector<long long>& word, const GLType& t)
{
    LElement g = normal_form(word, t);
    ShiftTransport s = transport_shift(g, t);
    auto reps = coset_reps(t);
    json out;
    out["word"] = word;
    out["element"] = to_string(g);
    out["h"] = s.h;
    out["rep_index"] = s.rep_index;
    out["rep"] = to_string(reps[s.rep_index]);
    return out;
}

std::string to_dot(const QuiverPresentation& q)
{
    std::string s = "digraph quiver {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        s += "  v" + std::to_string(i) + " [label=\"" + to_string(q.vertices[i]) + "\"];\n";
    for (const auto& a : q.arrows)
        s += "  v" + std::to_string(a.from) + " -> v" + std::to_string(a.to) + " [label=\"x"
           + std::to_string(a.gen + 1) + "\"];\n";
    s += "}\n";
    return s;
}

} // namespace glorder
