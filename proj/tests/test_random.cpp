#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "geoclique/census.hpp"
#include "geoclique/colouring.hpp"
#include "geoclique/components_chi.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/exact.hpp"
#include "geoclique/rgg.hpp"
#include "geoclique/rng.hpp"
#include "geoclique/sweep.hpp"
#include "oracles.hpp"

using namespace geoclique;

TEST_CASE("rng streams are deterministic and trial-disjoint") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng t0 = Rng::for_trial(9, 0), t1 = Rng::for_trial(9, 1);
    CHECK(t0.next_u64() != t1.next_u64());
}

TEST_CASE("poisson sampler hits its mean in both regimes") {
    Rng rng(77);
    for (double mean : {0.5, 5.0, 29.5, 40.0, 300.0}) {
        double sum = 0;
        const int reps = 20000;
        for (int i = 0; i < reps; ++i) sum += static_cast<double>(rng.poisson(mean));
        const double avg = sum / reps;
        CHECK(std::abs(avg - mean) < 5 * std::sqrt(mean / reps) + 0.02);
    }
    CHECK(Rng(1).poisson(0.0) == 0);
}

TEST_CASE("rgg sampling basics") {
    RggConfig one{1, 0.5, RggModel::uniform, 42};
    const RggSample s1 = sample_rgg(one);
    CHECK(s1.graph.order() == 1);
    CHECK(s1.graph.edge_count() == 0);

    RggConfig cfg{500, 1.0, RggModel::uniform, 2024};
    const RggSample a = sample_rgg(cfg);
    const RggSample b = sample_rgg(cfg);
    CHECK(a.points.points == b.points.points);
    CHECK(a.graph == b.graph);

    // all points stay in the square
    const double half = cfg.square_side() / 2;
    for (const auto& p : a.points.points) {
        CHECK(std::abs(p[0]) <= half);
        CHECK(std::abs(p[1]) <= half);
    }
}

TEST_CASE("poisson model conditioned on its count matches the uniform model") {
    // Kolmogorov-Smirnov on edge counts, 1000 paired draws, 1% level.
    const std::int64_t n = 100;
    const double r = 1.8;
    const int reps = 1000;
    std::vector<int> uni, poi;
    Rng urng(31337), prng(91337);
    RggConfig ucfg{n, r, RggModel::uniform, 0};
    RggConfig pcfg{n, r, RggModel::poisson, 0};
    while (static_cast<int>(uni.size()) < reps) {
        const RggSample s = sample_rgg(ucfg, urng);
        uni.push_back(static_cast<int>(s.graph.edge_count()));
    }
    while (static_cast<int>(poi.size()) < reps) {
        const PointSet pts = sample_rgg_points(pcfg, prng);
        if (static_cast<std::int64_t>(pts.size()) != n) continue;  // condition on N = n
        poi.push_back(static_cast<int>(count_geometric_edges(pts)));
    }
    std::sort(uni.begin(), uni.end());
    std::sort(poi.begin(), poi.end());
    double d = 0;
    std::size_t i = 0, j = 0;
    while (i < uni.size() && j < poi.size()) {
        if (uni[i] <= poi[j]) ++i;
        else ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / reps - static_cast<double>(j) / reps));
    }
    const double crit = 1.628 * std::sqrt(2.0 / reps);  // alpha = 0.01
    CHECK(d < crit);
}

TEST_CASE("component census") {
    Graph g(12);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 1) % 5);
    g.add_edge(10, 11);
    const ComponentCensus c = component_census(g, cycle_graph(5));
    CHECK(c.isomorphic_count == 2);
    CHECK(c.largest_component == 5);
    CHECK(c.size_histogram.at(2) == 1);
    std::int64_t total = 0;
    for (const auto& [size, count] : c.size_histogram) total += size * count;
    CHECK(total == g.order());

    CHECK(component_census(cycle_graph(6), cycle_graph(5)).isomorphic_count == 0);
    CHECK_THROWS_AS(component_census(g, edgeless_graph(2)), invalid_input);  // disconnected query
}

TEST_CASE("triangle-free 5-cycle certificates") {
    const auto w = find_triangle_free_c5(cycle_graph(5));
    REQUIRE(w.has_value());
    CHECK(w->size() == 5);

    CHECK_FALSE(find_triangle_free_c5(complete_graph(5)).has_value());

    // a vertex over one cycle edge kills every candidate
    Graph g = cycle_graph(5);
    Graph h(6);
    for (int i = 0; i < 5; ++i) h.add_edge(i, (i + 1) % 5);
    h.add_edge(5, 0);
    h.add_edge(5, 1);
    CHECK_FALSE(find_triangle_free_c5(h).has_value());
}

TEST_CASE("chi_c by components: exact route") {
    Graph edges(6);
    edges.add_edge(0, 1);
    edges.add_edge(2, 3);
    edges.add_edge(4, 5);
    const ChiByComponents r = chi_c_by_components(edges);
    CHECK(r.method == ChiMethod::exact);
    CHECK(*r.exact_value == 2);
    REQUIRE(r.witness.has_value());
    CHECK(is_clique_colouring(edges, *r.witness).ok);

    Rng rng(55);
    for (int t = 0; t < 30; ++t) {
        RggConfig cfg{400, 0.9, RggModel::uniform, 1000 + static_cast<std::uint64_t>(t)};
        const RggSample s = sample_rgg(cfg);
        const ChiByComponents res = chi_c_by_components(s.graph);
        REQUIRE(res.method == ChiMethod::exact);
        CHECK(is_clique_colouring(s.graph, *res.witness).ok);
        CHECK(*res.exact_value == clique_chromatic_number_exact(s.graph).chi_c);
    }
}

TEST_CASE("chi_c by components: bounded route stays ordered") {
    Budget tiny;
    tiny.max_nodes = 50;  // force the bounded path on anything nontrivial
    tiny.max_cliques = 4;
    Graph g = cycle_graph(9);
    const ChiByComponents r = chi_c_by_components(g, tiny);
    CHECK(r.method == ChiMethod::bounded);
    CHECK(r.lower >= 2);
    CHECK(r.lower <= r.upper);
    REQUIRE(r.witness.has_value());
    CHECK(is_clique_colouring(g, *r.witness).ok);
    CHECK(r.witness->palette_size() == r.upper);
}

TEST_CASE("sweep config parsing and regime expressions") {
    CHECK(eval_radius_expression("0.25", 100) == doctest::Approx(0.25));
    CHECK(eval_radius_expression("1*n^{-0.5}", 10000) == doctest::Approx(0.01));
    CHECK(eval_radius_expression("2.5*n^{0.25}", 16) == doctest::Approx(5.0));
    CHECK(eval_radius_expression("0.4*sqrt(log(n))", 10000) ==
          doctest::Approx(0.4 * std::sqrt(std::log(10000.0))));
    CHECK_THROWS_AS(eval_radius_expression("n^{", 10), invalid_input);
    CHECK_THROWS_AS(eval_radius_expression("frog", 10), invalid_input);

    std::istringstream kv("# comment\nn=1000\nr=1*n^{-0.5}\nmodel=poisson\ntrials=10\nseed=7\n");
    const SweepConfig cfg = parse_sweep_config(kv);
    CHECK(cfg.n == 1000);
    CHECK(cfg.model == RggModel::poisson);
    CHECK(cfg.trials == 10);
    CHECK(cfg.seed == 7);
    CHECK(cfg.resolve_r() == doctest::Approx(1.0 / std::sqrt(1000.0)));

    std::istringstream js(R"({"n": 500, "r": "n^{-0.6}", "trials": 5, "seed": 1})");
    const SweepConfig jcfg = parse_sweep_config(js);
    CHECK(jcfg.n == 500);
    CHECK(jcfg.trials == 5);

    std::istringstream zero("n=10\nr=0.5\ntrials=0\n");
    CHECK_THROWS_AS(parse_sweep_config(zero), invalid_input);
}

TEST_CASE("sweep is reproducible and its exact masses sum to one") {
    SweepConfig cfg;
    cfg.n = 300;
    cfg.r_expr = "1*n^{-0.5}";
    cfg.trials = 40;
    cfg.seed = 99;
    const EstimateTable t1 = run_sweep({cfg}, 2);
    const EstimateTable t2 = run_sweep({cfg}, 1);
    std::ostringstream s1, s2;
    t1.write_csv(s1);
    t2.write_csv(s2);
    CHECK(s1.str() == s2.str());

    double mass = 0;
    for (const auto& row : t1.rows) {
        CHECK(row.ci_lo <= row.p_hat);
        CHECK(row.p_hat <= row.ci_hi);
        if (row.method_tag == "exact" || row.method_tag == "bounded") mass += row.p_hat;
    }
    CHECK(mass == doctest::Approx(1.0));
}

TEST_CASE("wilson interval sanity") {
    const WilsonInterval w = wilson95(0, 50);
    CHECK(w.lo < 1e-12);
    CHECK(w.hi > 0.0);
    CHECK(w.hi < 0.1);
    const WilsonInterval mid = wilson95(25, 50);
    CHECK(mid.lo < 0.5);
    CHECK(mid.hi > 0.5);
}

TEST_CASE("five-cycle component rate estimate is self-consistent") {
    const MuEstimate est = estimate_mu_c5(3000, 60, 5);
    CHECK(est.mean_count >= 0);
    CHECK(est.p_at_least_one <= 1.0);
    // Poisson-style consistency, with slack for the small sample
    CHECK(std::abs((1 - std::exp(-est.mean_count)) - est.p_at_least_one) < 0.15);
}

TEST_CASE("edge counts track the density formula at the edge threshold") {
    // mean edge count over trials vs (pi/2) * n * r^2
    const std::int64_t n = 10000;
    const double r = std::pow(static_cast<double>(n), -0.5);
    const int trials = 200;
    double total = 0;
    for (int i = 0; i < trials; ++i) {
        Rng rng = Rng::for_trial(808, static_cast<std::uint64_t>(i));
        RggConfig cfg{n, r, RggModel::uniform, 808};
        total += static_cast<double>(count_geometric_edges(sample_rgg_points(cfg, rng)));
    }
    const double mean = total / trials;
    const double expect = M_PI / 2 * static_cast<double>(n) * r * r;
    // generous CI: sd of a single count is ~sqrt(mean)
    CHECK(std::abs(mean - expect) < 5 * std::sqrt(expect / trials) + 0.05 * expect);
}

TEST_CASE("below the 3-vertex component threshold such components are rare") {
    const std::int64_t n = 100000;
    const double r = std::pow(static_cast<double>(n), -0.375);  // n*r^4 -> 0
    const int trials = 100;
    int with_big = 0;
    for (int i = 0; i < trials; ++i) {
        Rng rng = Rng::for_trial(909, static_cast<std::uint64_t>(i));
        RggConfig cfg{n, r, RggModel::uniform, 909};
        const RggSample s = sample_rgg(cfg, rng);
        const ComponentCensus c = component_census(s.graph, cycle_graph(3));
        if (c.largest_component >= 3) ++with_big;
    }
    CHECK(with_big <= 5);  // the fraction tends to zero; allow small-sample noise
}
