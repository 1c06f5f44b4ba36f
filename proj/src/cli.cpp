#include "glorder/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "glorder/errors.hpp"
#include "glorder/json_io.hpp"

namespace glorder {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string path_str(const std::vector<int>& gens)
{
    std::string s;
    for (int g : gens) {
        if (!s.empty())
            s += "*";
        s += "x" + std::to_string(g + 1);
    }
    return s;
}

std::string relation_str(const Relation& r)
{
    std::string s;
    for (const auto& term : r.terms) {
        Rational c = term.coef;
        if (s.empty()) {
            if (c.sign() < 0)
                s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        Rational abs = c.sign() < 0 ? -c : c;
        if (abs != Rational(1))
            s += abs.str() + "*";
        s += path_str(term.gens);
    }
    return s + " = 0";
}

void print_validation(const ValidationReport& r, const GLType& t, std::ostream& out)
{
    if (r.ok) {
        out << "OK: general position holds (n=" << t.n() << ", d=" << t.d << ")\n";
        return;
    }
    out << "FAIL: " << r.violations.size() << " rank-deficient subset(s)\n";
    for (const auto& v : r.violations) {
        out << "  subset {";
        for (std::size_t i = 0; i < v.subset.size(); ++i)
            out << (i ? "," : "") << v.subset[i] + 1;
        out << "} has rank " << v.rank << " < " << v.subset.size() << "\n";
    }
}

void print_matrix(const std::vector<std::vector<long long>>& m, std::ostream& out)
{
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << "\n";
    }
}

struct Options {
    std::string file;
    std::string format = "text";
    long long max_degree = 6;
    std::vector<int> pivot;
    std::vector<long long> word;
    bool with_products = false;
};

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out)
{
    GLType t = load_type(opt.file);

    if (cmd == "validate") {
        ValidationReport r = validate_type(t);
        if (opt.format == "json")
            out << to_json(r).dump(2) << "\n";
        else
            print_validation(r, t, out);
        return r.ok ? kExitOk : kExitFailure;
    }

    // every other command requires a valid type
    ValidationReport r = validate_type(t);
    if (!r.ok) {
        print_validation(r, t, out);
        return kExitFailure;
    }

    if (cmd == "interval") {
        auto elems = interval(t);
        if (opt.format == "json") {
            out << interval_json(elems).dump(2) << "\n";
        } else {
            for (const auto& e : elems)
                out << to_string(e) << "\n";
        }
        return kExitOk;
    }

    if (cmd == "cartan") {
        CartanMatrix m = cartan(build_tilting(t));
        if (opt.format == "json") {
            out << to_json(m).dump(2) << "\n";
        } else {
            out << "# summands\n";
            for (const auto& s : m.summands)
                out << to_string(s) << "\n";
            out << "# hom dimension matrix\n";
            print_matrix(m.entries, out);
            out << "# total " << m.total() << "\n";
        }
        return kExitOk;
    }

    if (cmd == "rigidity") {
        RigidityReport rep = rigidity_report(build_tilting(t));
        if (opt.format == "json") {
            out << to_json(rep).dump(2) << "\n";
        } else if (rep.ok) {
            out << "OK: all Ext^i, i>0 vanish; ell range [" << rep.ell_min << "," << rep.ell_max
                << "]\n";
        } else {
            out << "FAIL: " << rep.violations.size() << " nonvanishing Ext group(s)\n";
            for (const auto& w : rep.violations)
                out << "  Ext^" << w.degree << " between summands " << w.from << " -> " << w.to
                    << " has dim " << w.dim << " (ell=" << w.ell << ")\n";
        }
        return rep.ok ? kExitOk : kExitFailure;
    }

    if (cmd == "quiver") {
        std::optional<std::vector<int>> pivot;
        if (!opt.pivot.empty()) {
            std::vector<int> p = opt.pivot;
            for (int& i : p)
                --i; // CLI uses 1-based generator indices
            pivot = p;
        }
        QuiverPresentation q = quiver_presentation(build_tilting(t), pivot);
        if (opt.format == "json") {
            out << to_json(q).dump(2) << "\n";
        } else if (opt.format == "dot") {
            out << to_dot(q);
        } else {
            out << "# vertices (" << q.vertices.size() << ")\n";
            for (std::size_t i = 0; i < q.vertices.size(); ++i)
                out << i << ": " << to_string(q.vertices[i]) << "\n";
            out << "# arrows (" << q.arrows.size() << ")\n";
            for (const auto& a : q.arrows)
                out << a.from << " -> " << a.to << " [x" << a.gen + 1 << "]\n";
            out << "# relations (" << q.relations.size() << ")\n";
            for (const auto& rel : q.relations)
                out << "at " << rel.at << ": " << relation_str(rel) << "\n";
        }
        return kExitOk;
    }

    if (cmd == "endo") {
        EndoAlgebra e = endo_algebra(build_tilting(t));
        if (opt.format == "json") {
            out << to_json(e, opt.with_products).dump(2) << "\n";
        } else {
            out << "# summands\n";
            for (const auto& s : e.summands)
                out << to_string(s) << "\n";
            out << "# component dimensions\n";
            const std::size_t k = e.summands.size();
            for (std::size_t x = 0; x < k; ++x) {
                for (std::size_t y = 0; y < k; ++y)
                    out << (y ? " " : "") << e.dim(static_cast<int>(x), static_cast<int>(y));
                out << "\n";
            }
            out << "# total dimension " << e.total_dim() << "\n";
        }
        return kExitOk;
    }

    if (cmd == "hilbert") {
        nlohmann::json j = hilbert_table_json(t, opt.max_degree);
        if (opt.format == "json") {
            out << j.dump(2) << "\n";
        } else {
            auto reps = j["reps"];
            auto dims = j["dims"];
            for (std::size_t i = 0; i < reps.size(); ++i) {
                out << reps[i].get<std::string>() << ":";
                for (const auto& v : dims[i])
                    out << " " << v.get<long long>();
                out << "\n";
            }
        }
        return kExitOk;
    }

    if (cmd == "regrade") {
        nlohmann::json j = regrade_sweep_json(t, opt.max_degree);
        if (opt.format == "json") {
            out << j.dump(2) << "\n";
        } else {
            for (const auto& comp : j["components"])
                out << "h=" << comp["h"].get<long long>() << ": dim "
                    << comp["total"].get<long long>() << " (triangular "
                    << comp["triangular_tensor_dim"].get<long long>() << ", sections "
                    << comp["b_algebra_dim"].get<long long>() << ")\n";
        }
        return kExitOk;
    }

    if (cmd == "local") {
        nlohmann::json j = local_types_json(t);
        if (opt.format == "json") {
            out << j.dump(2) << "\n";
        } else {
            for (const auto& s : j["strata"]) {
                out << "stratum {";
                const auto& idx = s["indices"];
                for (std::size_t i = 0; i < idx.size(); ++i)
                    out << (i ? "," : "") << idx[i].get<int>();
                out << "}: weights (";
                const auto& ws = s["weights"];
                for (std::size_t i = 0; i < ws.size(); ++i)
                    out << (i ? "," : "") << ws[i].get<int>();
                out << "), global dimension " << s["global_dimension"].get<int>() << "\n";
            }
        }
        return kExitOk;
    }

    if (cmd == "transport") {
        if (static_cast<int>(opt.word.size()) != t.n() + 1)
            throw input_error("--word needs n+1 comma-separated integers (x coefficients, then c)");
        nlohmann::json j = transport_json(opt.word, t);
        if (opt.format == "json")
            out << j.dump(2) << "\n";
        else
            out << j["element"].get<std::string>() << " = rep[" << j["rep_index"].get<long long>()
                << "] (" << j["rep"].get<std::string>() << ") + " << j["h"].get<long long>()
                << "*c\n";
        return kExitOk;
    }

    throw input_error("unknown command: " + cmd);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact toolkit for weighted-hyperplane orders on projective space: grading-group "
                 "combinatorics, tilting data, quiver presentations, regraded section algebras"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> commands = {"validate", "interval", "cartan", "rigidity",
                                               "quiver",   "endo",     "hilbert", "regrade",
                                               "local",    "transport"};
    std::vector<CLI::App*> subs;
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("file", opt.file, "type spec JSON file")->required();
        if (name == "quiver")
            sub->add_option("--format", opt.format, "output format")
                ->check(CLI::IsMember({"text", "json", "dot"}));
        else
            sub->add_option("--format", opt.format, "output format")
                ->check(CLI::IsMember({"text", "json"}));
        if (name == "hilbert" || name == "regrade")
            sub->add_option("--max-degree", opt.max_degree, "largest degree to sweep")
                ->check(CLI::Range(0, 10000));
        if (name == "quiver")
            sub->add_option("--pivot", opt.pivot, "1-based indices of the pivot forms")
                ->delimiter(',');
        if (name == "transport")
            sub->add_option("--word", opt.word, "raw word: n x-coefficients, then the c coefficient")
                ->delimiter(',')
                ->required();
        if (name == "endo")
            sub->add_flag("--products", opt.with_products, "include structure constants in JSON");
        subs.push_back(sub);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string cmd;
    for (std::size_t i = 0; i < commands.size(); ++i)
        if (subs[i]->parsed())
            cmd = commands[i];

    try {
        return dispatch(cmd, opt, out);
    } catch (const arrow_insufficient_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace glorder
