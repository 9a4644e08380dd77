// Command-line front end: colour point files, solve edge lists exactly,
// embed graphs, print the closed-form constants, run exhaustive small-order
// searches and Monte Carlo sweeps, and re-verify emitted colourings.
//
// Exit codes: 0 success, 1 verification found the colouring invalid,
// 2 bad input, 3 budget or precision exhausted, 4 internal invariant breach.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "geoclique/cell_two_colouring.hpp"
#include "geoclique/cliques.hpp"
#include "geoclique/colouring.hpp"
#include "geoclique/embed.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/exact.hpp"
#include "geoclique/graph.hpp"
#include "geoclique/greedy.hpp"
#include "geoclique/grid_colouring.hpp"
#include "geoclique/hex.hpp"
#include "geoclique/pentagon.hpp"
#include "geoclique/point_set.hpp"
#include "geoclique/small_graphs.hpp"
#include "geoclique/strip.hpp"
#include "geoclique/sweep.hpp"

namespace {

using namespace geoclique;

struct CommonOpts {
    std::uint64_t budget_cliques = Budget{}.max_cliques;
    std::uint64_t budget_nodes = Budget{}.max_nodes;
    Budget budget() const { return Budget{budget_cliques, budget_nodes}; }
};

void write_or_print_colouring(const Colouring& c, const std::string& out_path) {
    if (out_path.empty()) {
        write_colouring_json(c, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw invalid_input("cannot write " + out_path);
        write_colouring_json(c, out);
    }
}

int cmd_colour(const std::string& points_path, const std::string& algo, double radius,
               const std::string& out_path, const CommonOpts& opts, bool force_invalid) {
    PointSet ps = read_points_csv_file(points_path, radius);
    Colouring colouring;
    if (algo == "strip") {
        if (ps.dim != 2) throw invalid_input("strip requires dimension 2");
        colouring = strip_colouring(ps, StripParams{}, opts.budget()).colouring;
    } else if (algo == "grid") {
        colouring = grid_colouring(ps).colouring;
    } else if (algo == "hex") {
        if (ps.dim != 3) throw invalid_input("hex requires dimension 3");
        colouring = hex_colouring_R3(ps, opts.budget()).colouring;
    } else {
        throw invalid_input("unknown algorithm '" + algo + "' (strip|grid|hex)");
    }
    if (force_invalid)
        for (auto& c : colouring.colours) c = 0;
    const Graph g = build_geometric_graph(ps);
    const bool valid = is_clique_colouring(g, colouring, opts.budget()).ok;
    if (valid) write_or_print_colouring(colouring, out_path);
    std::printf("palette=%d valid=%s n=%d m=%zu\n", colouring.palette_size(),
                valid ? "true" : "false", g.order(), g.edge_count());
    return valid ? 0 : 4;
}

int cmd_exact(const std::string& edges_path, const std::string& out_path, const CommonOpts& opts,
              bool force_invalid) {
    const Graph g = read_edge_list_file(edges_path);
    ExactResult res = clique_chromatic_number_exact(g, opts.budget());
    if (force_invalid && g.edge_count() > 0)
        for (auto& c : res.witness.colours) c = 0;
    if (!is_clique_colouring(g, res.witness, opts.budget()).ok) {
        std::printf("chi_c=%d valid=false\n", res.chi_c);
        return 4;
    }
    if (!out_path.empty()) write_or_print_colouring(res.witness, out_path);
    std::printf("chi_c=%d\n", res.chi_c);
    return 0;
}

int cmd_greedy(const std::string& edges_path, const std::string& out_path, const CommonOpts& opts,
               bool force_invalid) {
    const Graph g = read_edge_list_file(edges_path);
    Colouring c = greedy_sqrt_colouring(g);
    if (force_invalid && g.edge_count() > 0)
        for (auto& v : c.colours) v = 0;
    const bool valid = is_clique_colouring(g, c, opts.budget()).ok;
    if (valid) write_or_print_colouring(c, out_path);
    std::printf("palette=%d valid=%s n=%d m=%zu\n", c.palette_size(), valid ? "true" : "false",
                g.order(), g.edge_count());
    return valid ? 0 : 4;
}

int cmd_embed(const std::string& edges_path, double margin, const std::string& out_path) {
    const Graph g = read_edge_list_file(edges_path);
    const Embedding emb = embed_graph(g, margin);
    if (build_geometric_graph(emb.as_point_set()) != g)
        throw internal_error("rebuilt geometric graph differs from the input");
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw invalid_input("cannot write " + out_path);
        const PointSet ps = emb.as_point_set();
        write_points_csv(ps, out);
    }
    std::printf("n=%d dim=%d threshold=%.6f margin=%.9f rebuild=exact\n", g.order(), g.order(),
                emb.threshold, emb.margin);
    return 0;
}

int cmd_exhaustive(int n, int jobs) {
    const ExhaustiveResult res = exhaustive_chi_c_max(n, jobs);
    std::printf(
        "n=%d chi_c_max=%d extremal_classes=%zu all_triangle_free=%s some_triangle_free=%s "
        "scanned=%llu\n",
        res.n, res.max_chi_c, res.extremal.size(),
        res.all_extremal_triangle_free ? "true" : "false",
        res.some_extremal_triangle_free ? "true" : "false",
        static_cast<unsigned long long>(res.graphs_scanned));
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path, int jobs,
              std::int64_t seed_override) {
    SweepConfig cfg = parse_sweep_config_file(config_path);
    if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
    const EstimateTable table = run_sweep({cfg}, jobs);
    if (out_path.empty()) {
        table.write_csv(std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw invalid_input("cannot write " + out_path);
        table.write_csv(out);
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& colouring_path, double radius,
               const CommonOpts& opts) {
    const Colouring c = read_colouring_json_file(colouring_path);
    std::ifstream probe(graph_path);
    if (!probe) throw invalid_input("cannot open " + graph_path);
    std::string first;
    std::getline(probe, first);
    probe.close();
    const Graph g = first.rfind("dim=", 0) == 0
                        ? build_geometric_graph(read_points_csv_file(graph_path, radius))
                        : read_edge_list_file(graph_path);
    const auto res = is_clique_colouring(g, c, opts.budget());
    if (res.ok) {
        std::printf("valid=true palette=%d\n", c.palette_size());
        return 0;
    }
    std::printf("valid=false violating_clique=");
    for (std::size_t i = 0; i < res.violating_clique->size(); ++i)
        std::printf("%s%d", i ? "," : "", (*res.violating_clique)[i]);
    std::printf("\n");
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique colourings of geometric graphs"};
    app.require_subcommand(1);

    CommonOpts opts;
    bool force_invalid = false;
    int jobs = 1;

    std::string points_path, edges_path, graph_path, colouring_path, config_path, out_path;
    std::string algo = "strip";
    double radius = 1.0;
    double margin = 1e-9;
    int exhaustive_n = 5;

    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-cliques", opts.budget_cliques, "max maximal cliques enumerated");
        sub->add_option("--budget-nodes", opts.budget_nodes, "max search node expansions");
    };

    auto* colour = app.add_subcommand("colour", "clique-colour a points file");
    colour->add_option("points", points_path, "points CSV (header dim=d)")->required();
    colour->add_option("--algo", algo, "strip|grid|hex");
    colour->add_option("--radius", radius, "threshold radius");
    colour->add_option("--out", out_path, "write the colouring JSON here");
    colour->add_flag("--debug-force-invalid", force_invalid, "corrupt the colouring to prove the gate");
    add_budget(colour);

    auto* exact = app.add_subcommand("exact", "exact clique chromatic number of an edge list");
    exact->add_option("edges", edges_path, "edge list file ('n m' then edges)")->required();
    exact->add_option("--out", out_path, "write the witness JSON here");
    exact->add_flag("--debug-force-invalid", force_invalid, "corrupt the witness to prove the gate");
    add_budget(exact);

    auto* greedy = app.add_subcommand("greedy", "sqrt-bound clique colouring of an edge list");
    greedy->add_option("edges", edges_path, "edge list file")->required();
    greedy->add_option("--out", out_path, "write the colouring JSON here");
    greedy->add_flag("--debug-force-invalid", force_invalid, "corrupt the colouring to prove the gate");
    add_budget(greedy);

    auto* embed = app.add_subcommand("embed", "realise an edge list as a geometric graph");
    embed->add_option("edges", edges_path, "edge list file")->required();
    embed->add_option("--margin", margin, "required distance margin around the threshold");
    embed->add_option("--out", out_path, "write the points CSV here");

    auto* constants = app.add_subcommand("constants", "print the pentagon and threshold constants");

    auto* exhaustive =
        app.add_subcommand("exhaustive", "max clique chromatic number over all n-vertex graphs");
    exhaustive->add_option("--n", exhaustive_n, "graph order, 1..7")->required();
    exhaustive->add_option("--jobs", jobs, "worker threads");

    std::int64_t seed_override = -1;
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep from a config file");
    sweep->add_option("config", config_path, "sweep config (key=value or JSON)")->required();
    sweep->add_option("--out", out_path, "write the CSV here");
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_option("--seed", seed_override, "override the config seed");

    auto* verify = app.add_subcommand("verify", "check a colouring JSON against a graph or points file");
    verify->add_option("graph", graph_path, "edge list or points CSV")->required();
    verify->add_option("colouring", colouring_path, "colouring JSON")->required();
    verify->add_option("--radius", radius, "threshold radius for points input");
    add_budget(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (colour->parsed()) return cmd_colour(points_path, algo, radius, out_path, opts, force_invalid);
        if (exact->parsed()) return cmd_exact(edges_path, out_path, opts, force_invalid);
        if (greedy->parsed()) return cmd_greedy(edges_path, out_path, opts, force_invalid);
        if (embed->parsed()) return cmd_embed(edges_path, margin, out_path);
        if (constants->parsed()) {
            print_pentagon_constants(pentagon_constants(), std::cout);
            return 0;
        }
        if (exhaustive->parsed()) return cmd_exhaustive(exhaustive_n, jobs);
        if (sweep->parsed()) return cmd_sweep(config_path, out_path, jobs, seed_override);
        if (verify->parsed()) return cmd_verify(graph_path, colouring_path, radius, opts);
    } catch (const invalid_input& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const budget_exceeded& e) {
        std::fprintf(stderr, "budget: %s\n", e.what());
        return 3;
    } catch (const margin_collapse& e) {
        std::fprintf(stderr, "precision: %s\n", e.what());
        return 3;
    } catch (const internal_error& e) {
        std::fprintf(stderr, "internal: %s\n", e.what());
        return 4;
    }
    return 2;
}
