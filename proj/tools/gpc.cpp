// gpc: command-line front end for the graph power library.
//
// Numeric commands print one JSON object on stdout (or a short table with
// --human). Graph-producing commands print gpc-graph-v1 JSON, or DOT with
// --dot, to stdout or to -o FILE.

#include "gpc/constructions.hpp"
#include "gpc/error.hpp"
#include "gpc/homomorphism.hpp"
#include "gpc/invariants.hpp"
#include "gpc/io.hpp"
#include "gpc/isomorphism.hpp"
#include "gpc/powers.hpp"
#include "gpc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct Globals {
    bool human = false;
    bool dot = false;
    std::string out;
    std::optional<unsigned> jobs;
    std::optional<std::uint64_t> node_budget;
    std::optional<std::size_t> vertex_cap;

    gpc::SearchOptions search() const {
        auto options = gpc::SearchOptions::from_environment();
        if (jobs)
            options.jobs = *jobs;
        if (node_budget)
            options.node_budget = *node_budget;
        if (vertex_cap)
            options.vertex_cap = *vertex_cap;
        return options;
    }
};

gpc::Graph load(const std::string& path) {
    if (path == "-") {
        std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
        return gpc::from_json(text);
    }
    return gpc::read_graph(path);
}

void emit_graph(const Globals& g, const gpc::Graph& graph) {
    const auto text = g.dot ? gpc::to_dot(graph) : gpc::to_json(graph) + "\n";
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file)
        throw gpc::Error("cannot write " + g.out);
    file << text;
}

void emit(const Globals& g, const json& value) {
    if (!g.human) {
        std::cout << value.dump() << "\n";
        return;
    }
    std::size_t width = 0;
    for (const auto& [key, v] : value.items())
        width = std::max(width, key.size());
    for (const auto& [key, v] : value.items())
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << key
                  << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

json rational(const gpc::Rational& r) { return r.to_string(); }

json thickness_json(const gpc::ThicknessEstimate& e) {
    json out;
    out["level"] = e.level;
    out["found"] = e.found;
    out["best_ratio"] = e.found ? json(rational(e.best_ratio)) : json(nullptr);
    out["r"] = e.witness.r;
    out["s"] = e.witness.s;
    out["witness_chi"] = e.witness_chi;
    out["search_bound"] = e.search_bound;
    out["exhaustive_below_bound"] = e.exhaustive_below_bound;
    return out;
}

void require_odd(int value, const char* what) {
    if (value < 1 || value % 2 == 0)
        throw gpc::PreconditionError(std::string(what) + " must be a positive odd integer");
}

int print_verify(const Globals& g, const std::vector<gpc::VerifyReport>& reports, bool csv) {
    bool failed = false;
    if (csv) {
        std::cout << "suite,instances,failures,seconds\n";
        for (const auto& r : reports)
            std::cout << r.lemma_id << "," << r.instances_checked << "," << r.failures.size() << ","
                      << r.elapsed.count() << "\n";
    } else if (g.human) {
        std::cout << std::left << std::setw(14) << "suite" << std::setw(11) << "instances" << std::setw(10)
                  << "failures" << "seconds\n";
        for (const auto& r : reports) {
            std::cout << std::left << std::setw(14) << r.lemma_id << std::setw(11) << r.instances_checked
                      << std::setw(10) << r.failures.size() << std::fixed << std::setprecision(2)
                      << r.elapsed.count() << "\n";
            for (const auto& f : r.failures)
                std::cout << "  FAIL " << f.instance << ": expected " << f.expected << ", got " << f.got << "\n";
        }
    } else {
        json out = json::array();
        for (const auto& r : reports) {
            json failures = json::array();
            for (const auto& f : r.failures)
                failures.push_back({{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}});
            out.push_back({{"lemma_id", r.lemma_id},
                           {"instances_checked", r.instances_checked},
                           {"failures", failures},
                           {"elapsed_seconds", r.elapsed.count()}});
        }
        std::cout << (out.size() == 1 ? out[0] : out).dump() << "\n";
    }
    for (const auto& r : reports)
        failed = failed || !r.passed();
    return failed ? kExitFalse : kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph homomorphisms, fractional powers and their invariants"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--human", g.human, "Print tables instead of JSON");
    app.add_flag("--dot", g.dot, "Write graphs as DOT instead of JSON");
    app.add_option("-o,--out", g.out, "Output file for graph results (default stdout)");
    app.add_option("--jobs", g.jobs, "Worker threads for sweeps (env GPC_JOBS)");
    app.add_option("--node-budget", g.node_budget, "Search nodes per homomorphism test (env GPC_NODE_BUDGET)");
    app.add_option("--vertex-cap", g.vertex_cap, "Largest helical / negative power built (env GPC_VERTEX_CAP)");

    int exit_code = kExitTrue;
    std::function<void()> action;

    // make
    std::string family;
    std::vector<int> params;
    auto* make = app.add_subcommand("make", "Build a named graph family");
    make->add_option("family", family, "complete | cycle | circular | kneser | schrijver | helical | petersen | coxeter")
        ->required();
    make->add_option("params", params, "Integer parameters of the family");
    make->callback([&] {
        action = [&] {
            auto want = [&](std::size_t count) {
                if (params.size() != count)
                    throw gpc::PreconditionError(family + " takes " + std::to_string(count) + " parameter(s)");
            };
            gpc::Graph graph;
            const auto options = g.search();
            if (family == "complete") {
                want(1);
                if (params[0] < 1)
                    throw gpc::PreconditionError("complete: n >= 1 required");
                graph = gpc::complete(params[0]);
            } else if (family == "cycle") {
                want(1);
                graph = gpc::cycle(params[0]);
            } else if (family == "circular") {
                want(2);
                graph = gpc::circular_complete(params[0], params[1]);
            } else if (family == "kneser") {
                want(2);
                graph = gpc::kneser(params[0], params[1]);
            } else if (family == "schrijver") {
                want(2);
                graph = gpc::schrijver(params[0], params[1]);
            } else if (family == "helical") {
                want(3);
                graph = gpc::helical(params[0], params[1], params[2], options);
            } else if (family == "petersen") {
                want(0);
                graph = gpc::petersen();
            } else if (family == "coxeter") {
                want(0);
                graph = gpc::coxeter();
            } else {
                throw gpc::PreconditionError("unknown family: " + family);
            }
            emit_graph(g, graph);
        };
    });

    std::string input;
    std::string second;

    // subdivide
    int t_param = 1;
    auto* subdivide = app.add_subcommand("subdivide", "Replace each edge by a path of length t");
    subdivide->add_option("graph", input, "Graph JSON ('-' for stdin)")->required();
    subdivide->add_option("-t", t_param, "Path length")->required();
    subdivide->callback([&] { action = [&] { emit_graph(g, gpc::subdivide(load(input), t_param)); }; });

    // power
    int num = 1;
    int den = 1;
    bool negative = false;
    auto* power = app.add_subcommand("power", "Fractional power G^{num/den}, or with --negative G^{-num/den}");
    power->add_option("graph", input, "Graph JSON")->required();
    power->add_option("-n,--num", num, "Odd numerator")->required();
    power->add_option("-d,--den", den, "Odd denominator")->required();
    power->add_flag("--negative", negative, "Negative power; requires num <= den");
    power->callback([&] {
        action = [&] {
            require_odd(num, "numerator");
            require_odd(den, "denominator");
            const auto graph = load(input);
            if (negative) {
                if (num > den)
                    throw gpc::PreconditionError("--negative requires num <= den");
                emit_graph(g, gpc::negative_power(graph, (num - 1) / 2, (den - 1) / 2, g.search()));
            } else {
                emit_graph(g, gpc::fractional_power(graph, {(num - 1) / 2, (den - 1) / 2}));
            }
        };
    });

    // negpower
    int s_param = 0;
    int r_param = 0;
    auto* negpower = app.add_subcommand("negpower", "G^{-(2s+1)/(2r+1)}");
    negpower->add_option("graph", input, "Graph JSON")->required();
    negpower->add_option("-s", s_param, "Numerator index s")->required();
    negpower->add_option("-r", r_param, "Denominator index r")->required();
    negpower->callback([&] {
        action = [&] { emit_graph(g, gpc::negative_power(load(input), s_param, r_param, g.search())); };
    });

    // hom
    bool certificate = false;
    auto* hom = app.add_subcommand("hom", "Decide G -> H (exit 0 exists, 1 none, 2 error or unknown)");
    hom->add_option("G", input, "Source graph JSON")->required();
    hom->add_option("H", second, "Target graph JSON")->required();
    hom->add_flag("--certificate", certificate, "Include the vertex map");
    hom->callback([&] {
        action = [&] {
            const auto gg = load(input);
            const auto hh = load(second);
            const auto cert = gpc::exists_hom(gg, hh, g.search());
            json out;
            out["verdict"] = cert.exists() ? "exists" : "none";
            out["nodes_explored"] = cert.nodes_explored;
            if (certificate && cert.exists()) {
                json map = json::object();
                for (gpc::VertexId v = 0; v < gg.order(); ++v)
                    map[gg.name(v)] = hh.name(cert.map[v]);
                out["map"] = map;
            }
            emit(g, out);
            exit_code = cert.exists() ? kExitTrue : kExitFalse;
        };
    });

    auto single = [&](const char* name, const char* help, std::function<json(const gpc::Graph&)> body) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("graph", input, "Graph JSON")->required();
        cmd->callback([&, body] { action = [&, body] { emit(g, body(load(input))); }; });
        return cmd;
    };

    single("chi", "Chromatic number", [&](const gpc::Graph& graph) {
        return json{{"chi", gpc::chromatic_number(graph, g.search())}};
    });
    single("chic", "Circular chromatic number", [&](const gpc::Graph& graph) {
        return json{{"chi_c", rational(gpc::circular_chromatic_number(graph, g.search()))}};
    });
    single("oddgirth", "Odd girth (1 with a loop, inf when bipartite)", [&](const gpc::Graph& graph) {
        return json{{"odd_girth", gpc::odd_girth(graph).to_string()}};
    });

    int max_t = 3;
    int max_n = 10;
    auto* chic_powers = single("chic-powers", "Bounded sweep of (2n+1)/(n-t) with chi(G^{(2n+1)/(3(2t+1))}) = 3",
                               [&](const gpc::Graph& graph) {
                                   const auto sweep = gpc::chic_via_powers(graph, max_t, max_n, g.search());
                                   return json{{"found", sweep.found},
                                               {"best", sweep.found ? json(rational(sweep.best)) : json(nullptr)},
                                               {"n", sweep.witness_n},
                                               {"t", sweep.witness_t},
                                               {"max_t", sweep.max_t},
                                               {"max_n", sweep.max_n},
                                               {"exhaustive", false}};
                               });
    chic_powers->add_option("--max-t", max_t, "Largest t")->capture_default_str();
    chic_powers->add_option("--max-n", max_n, "Largest n")->capture_default_str();

    int level = 0;
    int max_s = 2;
    std::string target;
    auto* thickness = single("thickness", "Lattice lower bound on the power thickness theta_i (or theta_H with --target)",
                             [&](const gpc::Graph& graph) {
                                 if (!target.empty()) {
                                     auto e = gpc::theta_H_lower_bound(graph, load(target), max_s, g.search());
                                     auto out = thickness_json(e);
                                     out.erase("level");
                                     out.erase("witness_chi");
                                     return out;
                                 }
                                 return thickness_json(gpc::thickness_lower_bound(graph, level, max_s, g.search()));
                             });
    thickness->add_option("-i,--level", level, "Level i")->capture_default_str();
    thickness->add_option("--max-s", max_s, "Largest s (denominator 2s+1)")->capture_default_str();
    thickness->add_option("--target", target, "Graph H for theta_H");

    auto* colorful = app.add_subcommand("colorful", "Colourful-graph predicate (exit 0 yes, 1 no)");
    colorful->add_option("graph", input, "Graph JSON")->required();
    colorful->callback([&] {
        action = [&] {
            const bool yes = gpc::is_colorful(load(input), g.search());
            emit(g, json{{"colorful", yes}});
            exit_code = yes ? kExitTrue : kExitFalse;
        };
    });

    int f_t = 0;
    std::optional<int> f_max_n;
    auto* fparam = single("fparam", "Largest 2n+1 with S_{2t+1}(G) -> C_{2n+1}", [&](const gpc::Graph& graph) {
        const auto og = gpc::odd_girth(graph);
        int bound = f_max_n.value_or(0);
        if (!f_max_n) {
            if (!og.is_finite())
                throw gpc::PreconditionError("fparam: graph must be loopless and non-bipartite");
            bound = static_cast<int>(((2 * f_t + 1) * og.length() - 1) / 2);
        }
        const auto f = gpc::f_parameter(graph, f_t, bound, g.search());
        return json{{"f", f}, {"t", f_t}, {"max_n", bound}, {"exact", !f_max_n || bound * 2 + 1 >= (2 * f_t + 1) * static_cast<int>(og.length())}};
    });
    fparam->add_option("-t", f_t, "Subdivision index t")->capture_default_str();
    fparam->add_option("--max-n", f_max_n, "Largest n tried (default makes the answer exact)");

    int spectral_n = 1;
    auto* spectral = single("spectral", "Laplacian necessary condition for G -> C_{2n+1}", [&](const gpc::Graph& graph) {
        const auto report = gpc::spectral_check(graph, spectral_n);
        return json{{"lambda_g", report.lambda_g},
                    {"edge_count", report.edge_count},
                    {"vertex_count", report.vertex_count},
                    {"cycle_length", report.cycle_length},
                    {"lambda_cycle", report.lambda_cycle},
                    {"bound_satisfied", report.bound_satisfied}};
    });
    spectral->add_option("-n", spectral_n, "Cycle C_{2n+1}")->required();

    auto* core = app.add_subcommand("core", "Core of a small graph");
    core->add_option("graph", input, "Graph JSON")->required();
    core->callback([&] { action = [&] { emit_graph(g, gpc::core_of(load(input), g.search())); }; });

    auto* iso = app.add_subcommand("iso", "Isomorphism test (exit 0 yes, 1 no)");
    iso->add_option("G", input, "Graph JSON")->required();
    iso->add_option("H", second, "Graph JSON")->required();
    iso->callback([&] {
        action = [&] {
            const bool yes = gpc::are_isomorphic(load(input), load(second));
            emit(g, json{{"isomorphic", yes}});
            exit_code = yes ? kExitTrue : kExitFalse;
        };
    });

    std::string suite;
    gpc::VerifyOptions verify_options;
    bool csv = false;
    auto* verify = app.add_subcommand("verify", "Run a statement-verification suite ('all' runs every suite)");
    verify->add_option("suite", suite, "Suite id")->required();
    verify->add_option("--max-n", verify_options.max_n, "Suite bound on n");
    verify->add_option("--max-s", verify_options.max_s, "Suite bound on s");
    verify->add_option("--pool", verify_options.pool, "default | small")->capture_default_str();
    verify->add_flag("--csv", csv, "CSV summary");
    verify->callback([&] {
        action = [&] {
            const auto& ids = gpc::verify_suite_ids();
            if (suite != "all" && std::find(ids.begin(), ids.end(), suite) == ids.end()) {
                std::ostringstream known;
                for (const auto& id : ids)
                    known << " " << id;
                throw gpc::PreconditionError("unknown suite '" + suite + "'; known:" + known.str());
            }
            verify_options.search = g.search();
            std::vector<gpc::VerifyReport> reports;
            for (const auto& id : ids)
                if (suite == "all" || suite == id)
                    reports.push_back(gpc::run_verify(id, verify_options));
            exit_code = print_verify(g, reports, csv);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        action();
    } catch (const gpc::BudgetExceededError& e) {
        std::cerr << "gpc: unknown: " << e.what() << "\n";
        return kExitError;
    } catch (const gpc::Error& e) {
        std::cerr << "gpc: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "gpc: " << e.what() << "\n";
        return kExitError;
    }
    return exit_code;
}
