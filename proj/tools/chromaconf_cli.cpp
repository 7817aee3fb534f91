// chromaconf: exact invariants of chromatic configuration spaces.
//
// Exit codes: 0 success, 1 user error, 2 guard refusal, 3 internal
// verification failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "chromaconf/chromaconf.hpp"

namespace cc = chromaconf;
using nlohmann::json;

namespace {

struct CommonOptions {
    std::string graph_source;
    std::string spec_path;
    std::optional<int> dim;
    bool json_output = false;
    std::string ordering = "nbc";
    std::optional<int> guard_edges;
    std::optional<int> guard_vertices;
    std::optional<long long> degree;
    std::string level = "nbc";
    std::string suite;
    bool corrupt = false; // hidden hook for the negative verification test
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cc::InvalidArgument("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

cc::Graph load_graph(const CommonOptions& opt) {
    if (opt.graph_source.empty())
        throw cc::InvalidArgument("--graph <expr|path> is required for this command");
    if (std::filesystem::exists(opt.graph_source))
        return cc::parse_graph(read_file(opt.graph_source));
    return cc::parse_graph(opt.graph_source);
}

cc::Guards load_guards(const CommonOptions& opt) {
    cc::Guards guards = cc::Guards::defaults();
    if (opt.guard_edges) {
        guards.forest_max_edges = *opt.guard_edges;
        guards.orientation_max_edges = *opt.guard_edges;
    }
    if (opt.guard_vertices) guards.lattice_max_vertices = *opt.guard_vertices;
    return guards;
}

int resolve_dim(const CommonOptions& opt) {
    if (!opt.dim) {
        std::cerr << "note: --dim not given, defaulting to N = 2\n";
        return 2;
    }
    return *opt.dim;
}

cc::EdgeOrdering resolve_ordering(const cc::Graph& g, const std::string& name) {
    if (name == "nbc") return cc::nbc_edge_ordering(g);
    if (name == "lex") return cc::lex_edge_ordering(g);
    if (name.rfind("random:", 0) == 0) {
        try {
            return cc::random_edge_ordering(g, std::stoull(name.substr(7)));
        } catch (const std::exception&) {
            throw cc::InvalidArgument("--ordering random:SEED needs an integer seed");
        }
    }
    throw cc::InvalidArgument("unknown ordering '" + name + "' (expected nbc, lex or random:SEED)");
}

void emit(const json& machine, const std::string& human, bool as_json) {
    if (as_json)
        std::cout << machine.dump() << "\n";
    else
        std::cout << human << "\n";
}

// ---------------------------------------------------------------------
// verify: single-graph route agreement and the named property batteries.

struct VerifyContext {
    int failures = 0;
    int guard_skips = 0;

    void check(const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    }
    void skip(const std::string& name, const std::string& why) {
        std::cout << "skip " << name << " (" << why << ")\n";
        ++guard_skips;
    }
};

void verify_graph(VerifyContext& ctx, const cc::Graph& g, int dim, const std::string& level,
                  const cc::Guards& guards, bool corrupt) {
    cc::PoincareSeries chromatic_route = cc::poincare_from_chromatic(g, dim);

    if (corrupt) {
        // Deliberately corrupted coefficient vector: must be reported as an
        // internal verification failure, never silently accepted.
        std::vector<cc::Int> coeffs(chromatic_route.base().coefficients());
        if (coeffs.size() > 1) coeffs[1] += 1;
        cc::IntPolynomial corrupted{std::move(coeffs)};
        if (corrupted != chromatic_route.base())
            throw cc::InternalError("coefficient vector fails re-derivation (corruption injected)");
    }

    ctx.check("coloring-count oracle agreement (Whitney alternating form)", [&] {
        for (long long lambda = 0; lambda <= 4; ++lambda)
            if (cc::count_proper_colorings(g, lambda, guards) !=
                cc::chromatic_polynomial(g).evaluate(lambda))
                return false;
        return true;
    }());

    ctx.check("reciprocal substitution equals coefficient transpose", [&] {
        return cc::poincare_reciprocity(g, dim) == chromatic_route.expand();
    }());

    ctx.check("Euler characteristic via coloring count", [&] {
        cc::euler_characteristic(g, dim); // throws on mismatch
        return true;
    }());

    if (level == "nbc" || level == "gm") {
        if (g.edge_count() > guards.forest_max_edges) {
            ctx.skip("broken-circuit route agreement", "forest guard");
        } else {
            ctx.check("broken-circuit route agreement (Whitney)", [&] {
                return cc::poincare_from_nbc(g, cc::nbc_edge_ordering(g), dim, guards) ==
                       chromatic_route;
            }());
        }
    }
    if (level == "gm") {
        bool within = true;
        for (const auto& comp : g.connected_components())
            if (static_cast<int>(comp.size()) > guards.gm_max_vertices) within = false;
        if (!within) {
            ctx.skip("interval-homology route agreement", "gm guard");
        } else {
            ctx.check("interval-homology route agreement (Goresky-MacPherson)", [&] {
                return cc::poincare_from_gm(g, dim, guards) == chromatic_route;
            }());
        }
    }
}

void verify_suite(VerifyContext& ctx, const std::string& scope, const cc::Guards& guards) {
    const bool quick = scope == "quick";
    std::vector<std::pair<std::string, cc::Graph>> fixtures;
    auto add = [&](const std::string& name, const cc::Graph& g) { fixtures.push_back({name, g}); };
    const int top = quick ? 5 : 6;
    for (int m = 2; m <= top; ++m) add("complete:" + std::to_string(m), cc::Graph::complete(m));
    for (int m = 3; m <= 6; ++m) add("cycle:" + std::to_string(m), cc::Graph::cycle(m));
    for (int m = 2; m <= 6; ++m) add("path:" + std::to_string(m), cc::Graph::path(m));
    for (int m = 3; m <= 6; ++m) add("star:" + std::to_string(m), cc::Graph::star(m));
    add("diamond", cc::Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    if (!quick) add("box:complete:3,complete:2", cc::box_product(cc::Graph::complete(3), cc::Graph::complete(2)));

    for (const auto& [name, g] : fixtures) {
        const int m = g.vertex_count();
        auto w = cc::whitney_coefficients(g);
        auto ord = cc::nbc_edge_ordering(g);

        ctx.check(name + ": coloring-count oracle, lambda <= 4", [&] {
            for (long long lambda = 0; lambda <= 4; ++lambda)
                if (cc::count_proper_colorings(g, lambda, guards) !=
                    cc::chromatic_polynomial(g).evaluate(lambda))
                    return false;
            return true;
        }());

        ctx.check(name + ": forest counts match coefficients (Whitney broken-circuit theorem)", [&] {
            for (int k = 1; k <= m; ++k)
                if (cc::Int(cc::nbc_forests(g, ord, k, guards).size()) != w.a(k)) return false;
            return true;
        }());

        ctx.check(name + ": forest counts are ordering independent", [&] {
            for (std::uint64_t seed = 1; seed <= (quick ? 3u : 5u); ++seed) {
                auto random_ord = cc::random_edge_ordering(g, seed);
                for (int k = 1; k <= m; ++k)
                    if (cc::nbc_forests(g, random_ord, k, guards).size() !=
                        cc::nbc_forests(g, ord, k, guards).size())
                        return false;
            }
            return true;
        }());

        ctx.check(name + ": Euler characteristic via coloring count, N in {2,3}", [&] {
            cc::euler_characteristic(g, 2);
            cc::euler_characteristic(g, 3);
            return true;
        }());

        if (g.edge_count() <= 10) {
            ctx.check(name + ": unique-source orientation count (Greene-Zaslavsky)", [&] {
                for (int v0 = 1; v0 <= m; ++v0)
                    if (cc::count_acyclic_orientations_unique_source(g, v0, guards) != w.a(1))
                        return false;
                return true;
            }());
        } else {
            ctx.skip(name + ": unique-source orientation count", "edge guard");
        }

        if (m <= guards.lattice_max_vertices && m <= 7) {
            auto lattice = cc::BondLattice::build(g, guards);
            ctx.check(name + ": lattice characteristic polynomial (Rota)", [&] {
                return lattice.rota_characteristic_polynomial() == cc::chromatic_polynomial(g);
            }());
            if (m <= (quick ? 5 : 6)) {
                ctx.check(name + ": Moebius equals interval Euler characteristic (Hall)", [&] {
                    return cc::verify_hall(lattice, guards).ok();
                }());
            }
        }

        if (m <= (quick ? 5 : guards.gm_max_vertices)) {
            ctx.check(name + ": route agreement chromatic = forests = interval homology "
                             "(Goresky-MacPherson)", [&] {
                auto reference = cc::poincare_from_chromatic(g, 2);
                return cc::poincare_from_nbc(g, ord, 2, guards) == reference &&
                       cc::poincare_from_gm(g, 2, guards) == reference;
            }());
        } else {
            ctx.skip(name + ": route agreement", "gm guard");
        }
    }

    ctx.check("obstacle quotient: two movers avoiding their own obstacles", [&] {
        auto series = cc::obstacle_poincare(cc::ObstacleSpec::diagonal_avoidance(2), 2);
        return series.base() == cc::IntPolynomial({1, 3, 3});
    }());
    ctx.check("obstacle quotient: three movers avoiding their own obstacles", [&] {
        auto series = cc::obstacle_poincare(cc::ObstacleSpec::diagonal_avoidance(3), 2);
        return series.base() == cc::IntPolynomial({1, 6, 14, 13});
    }());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chromatic, lattice and configuration-space invariants of simple graphs"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto add_common = [&](CLI::App* cmd, bool space_level, bool graph_input = true) {
        if (graph_input)
            cmd->add_option("--graph", opt.graph_source, "builder expression or edge-list file");
        cmd->add_flag("--json", opt.json_output, "machine-readable output");
        cmd->add_option("--guard-edges", opt.guard_edges, "override the edge-count guards");
        cmd->add_option("--guard-vertices", opt.guard_vertices, "override the lattice vertex guard");
        if (space_level)
            cmd->add_option("--dim", opt.dim, "Euclidean dimension N >= 2 (defaults to 2 with a notice)");
        return cmd;
    };

    auto* cmd_chromatic = add_common(app.add_subcommand("chromatic", "chromatic polynomial"), false);
    (void)cmd_chromatic;
    auto* cmd_whitney = add_common(app.add_subcommand("whitney", "alternating-form coefficients a_1..a_m"), false);
    (void)cmd_whitney;
    bool symbolic = false;
    auto* cmd_poincare = add_common(app.add_subcommand("poincare", "Poincare polynomial of the configuration space"), true);
    cmd_poincare->add_flag("--symbolic", symbolic, "print exponents in terms of N instead of substituting");
    auto* cmd_betti = add_common(app.add_subcommand("betti", "a single Betti number"), true);
    cmd_betti->add_option("--degree", opt.degree, "homological degree i")->required();
    auto* cmd_euler = add_common(app.add_subcommand("euler", "Euler characteristic"), true);
    (void)cmd_euler;
    auto* cmd_forests = add_common(app.add_subcommand("nbc-forests", "forests with no broken circuit"), false);
    cmd_forests->add_option("--ordering", opt.ordering, "nbc|lex|random:SEED");
    cmd_forests->add_option("--components", opt.degree, "restrict to forests with k trees");
    auto* cmd_basis = add_common(app.add_subcommand("basis", "homology-basis forests in one degree"), true);
    cmd_basis->add_option("--ordering", opt.ordering, "nbc|lex|random:SEED");
    cmd_basis->add_option("--degree", opt.degree, "homological degree i")->required();
    auto* cmd_lattice = add_common(app.add_subcommand("bond-lattice", "connected-partition lattice"), false);
    (void)cmd_lattice;
    auto* cmd_interval = add_common(app.add_subcommand("interval-homology", "reduced homology of lower intervals"), false);
    std::string element;
    cmd_interval->add_option("--element", element, "partition such as '1|23|4' (default: every element)");
    auto* cmd_splitting = add_common(app.add_subcommand("splitting", "stable wedge decomposition"), true);
    (void)cmd_splitting;
    auto* cmd_obstacles = app.add_subcommand("obstacles", "configuration space with obstacles");
    cmd_obstacles->add_option("--spec", opt.spec_path, "JSON obstacle spec path")->required();
    cmd_obstacles->add_flag("--json", opt.json_output, "machine-readable output");
    cmd_obstacles->add_option("--dim", opt.dim, "Euclidean dimension N >= 2");
    auto* cmd_verify = add_common(app.add_subcommand("verify", "route agreement and property batteries"), true);
    cmd_verify->add_option("--level", opt.level, "chromatic|nbc|gm (single graph)");
    cmd_verify->add_option("--suite", opt.suite, "quick|full (fixture battery)");
    cmd_verify->add_flag("--self-test-corrupt", opt.corrupt)->group(""); // hidden harness hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        cc::Guards guards = load_guards(opt);

        if (app.got_subcommand("chromatic")) {
            cc::Graph g = load_graph(opt);
            cc::IntPolynomial chi = cc::chromatic_polynomial(g);
            emit(cc::polynomial_to_json(chi, "lambda"), chi.to_string("lambda"), opt.json_output);
        } else if (app.got_subcommand("whitney")) {
            cc::Graph g = load_graph(opt);
            auto w = cc::whitney_coefficients(g);
            json arr = json::array();
            for (int i = 1; i <= w.vertex_count(); ++i) arr.push_back(w.a(i).str());
            std::ostringstream human;
            for (int i = 1; i <= w.vertex_count(); ++i)
                human << (i > 1 ? " " : "") << "a_" << i << "=" << w.a(i).str();
            emit(json{{"a", arr}}, human.str(), opt.json_output);
        } else if (app.got_subcommand("poincare")) {
            cc::Graph g = load_graph(opt);
            auto series = cc::poincare_from_chromatic(g, resolve_dim(opt));
            emit(cc::poincare_to_json(series), series.pretty(symbolic), opt.json_output);
        } else if (app.got_subcommand("betti")) {
            cc::Graph g = load_graph(opt);
            cc::Int b = cc::betti_number(g, resolve_dim(opt), *opt.degree);
            emit(json{{"degree", *opt.degree}, {"rank", b.str()}}, b.str(), opt.json_output);
        } else if (app.got_subcommand("euler")) {
            cc::Graph g = load_graph(opt);
            cc::Int chi = cc::euler_characteristic(g, resolve_dim(opt));
            emit(json{{"euler_characteristic", chi.str()}}, chi.str(), opt.json_output);
        } else if (app.got_subcommand("nbc-forests")) {
            cc::Graph g = load_graph(opt);
            auto ord = resolve_ordering(g, opt.ordering);
            std::vector<cc::Forest> forests;
            if (opt.degree)
                forests = cc::nbc_forests(g, ord, static_cast<int>(*opt.degree), guards);
            else
                forests = cc::all_nbc_forests(g, ord, guards);
            std::ostringstream human;
            human << forests.size() << " forests";
            for (const auto& f : forests) {
                human << "\n";
                if (f.edges.empty()) human << "(empty)";
                for (const auto& [i, j] : f.edges) human << "{" << i << "," << j << "} ";
            }
            emit(cc::forests_to_json(forests), human.str(), opt.json_output);
        } else if (app.got_subcommand("basis")) {
            cc::Graph g = load_graph(opt);
            int dim = resolve_dim(opt);
            auto ord = resolve_ordering(g, opt.ordering);
            auto forests = cc::nbc_basis(g, ord, dim, *opt.degree, guards);
            if (forests.empty() && *opt.degree != 0)
                std::cerr << "note: degree " << *opt.degree
                          << " carries no basis classes (it must be a multiple of N-1 = "
                          << dim - 1 << " within range)\n";
            std::ostringstream human;
            human << forests.size() << " basis forests in degree " << *opt.degree;
            for (const auto& f : forests) {
                human << "\n";
                if (f.edges.empty()) human << "(empty)";
                for (const auto& [i, j] : f.edges) human << "{" << i << "," << j << "} ";
            }
            emit(cc::forests_to_json(forests), human.str(), opt.json_output);
        } else if (app.got_subcommand("bond-lattice")) {
            cc::Graph g = load_graph(opt);
            auto lattice = cc::BondLattice::build(g, guards);
            std::ostringstream human;
            human << lattice.size() << " connected partitions";
            auto counts = lattice.counts_by_length();
            for (size_t k = 1; k < counts.size(); ++k)
                human << "\nlength " << k << ": " << counts[k];
            emit(cc::lattice_to_json(lattice), human.str(), opt.json_output);
        } else if (app.got_subcommand("interval-homology")) {
            cc::Graph g = load_graph(opt);
            auto lattice = cc::BondLattice::build(g, guards);
            json out = json::array();
            std::ostringstream human;
            for (int x = 1; x < lattice.size(); ++x) {
                const auto& part = lattice.element(x);
                if (!element.empty() && part.to_string() != element) continue;
                auto betti = cc::reduced_betti_numbers(
                    cc::order_complex(lattice.lower_interval(x), guards));
                out.push_back(json{{"element", part.to_string()},
                                   {"reduced_betti", cc::betti_vector_to_json(betti)}});
                human << part.to_string() << ": [";
                for (size_t i = 0; i < betti.values().size(); ++i)
                    human << (i ? ", " : "") << betti.values()[i];
                human << "] (listed from dimension -1)\n";
            }
            if (!element.empty() && out.empty())
                throw cc::InvalidArgument("'" + element + "' is not a connected partition above the bottom");
            emit(out, human.str(), opt.json_output);
        } else if (app.got_subcommand("splitting")) {
            cc::Graph g = load_graph(opt);
            auto summands = cc::stable_splitting_summary(g, resolve_dim(opt));
            json out = json::array();
            std::ostringstream human;
            for (const auto& s : summands) {
                out.push_back(json{{"sphere_dimension", s.sphere_dimension},
                                   {"multiplicity", s.multiplicity.str()}});
                human << (human.str().empty() ? "" : " v ") << "(S^" << s.sphere_dimension << ")^"
                      << s.multiplicity.str();
            }
            emit(out, human.str(), opt.json_output);
        } else if (app.got_subcommand("obstacles")) {
            auto spec = cc::ObstacleSpec::from_json_text(read_file(opt.spec_path));
            int dim = resolve_dim(opt);
            auto series = cc::obstacle_poincare(spec, dim);
            std::ostringstream human;
            human << spec.movers << " movers, " << spec.obstacles << " obstacles, Betti: ";
            auto degrees = series.t_degrees();
            for (size_t i = 0; i < degrees.size(); ++i)
                human << (i ? ", " : "") << "b_" << degrees[i] << "=" << series.betti(degrees[i]).str();
            human << "\n" << series.pretty(false);
            emit(cc::poincare_to_json(series), human.str(), opt.json_output);
        } else if (app.got_subcommand("verify")) {
            VerifyContext ctx;
            if (!opt.suite.empty()) {
                if (opt.suite != "quick" && opt.suite != "full")
                    throw cc::InvalidArgument("--suite must be quick or full");
                verify_suite(ctx, opt.suite, guards);
            } else {
                cc::Graph g = load_graph(opt);
                if (opt.level != "chromatic" && opt.level != "nbc" && opt.level != "gm")
                    throw cc::InvalidArgument("--level must be chromatic, nbc or gm");
                verify_graph(ctx, g, resolve_dim(opt), opt.level, guards, opt.corrupt);
            }
            if (ctx.failures > 0) {
                std::cerr << ctx.failures << " verification failures\n";
                return 3;
            }
            std::cout << "all checks passed";
            if (ctx.guard_skips > 0) std::cout << " (" << ctx.guard_skips << " skipped by guards)";
            std::cout << "\n";
        }
        return 0;
    } catch (const cc::InternalError& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 3;
    } catch (const cc::GuardExceeded& e) {
        std::cerr << "guard refusal: " << e.what() << "\n";
        return 2;
    } catch (const cc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
