#include "geoclique/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "geoclique/cell_two_colouring.hpp"
#include "geoclique/census.hpp"
#include "geoclique/components_chi.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/strip.hpp"

namespace geoclique {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw invalid_input(std::string("invalid ") + what + ": '" + s + "'");
    }
}

}  // namespace

double eval_radius_expression(const std::string& raw, std::int64_t n) {
    const std::string expr = trim(raw);
    if (expr.empty()) throw invalid_input("invalid regime expression: empty");
    const auto star = expr.find('*');
    const double coeff = star == std::string::npos ? 1.0 : parse_double(expr.substr(0, star), "coefficient");
    const std::string tail = star == std::string::npos ? expr : trim(expr.substr(star + 1));

    if (tail.rfind("n^{", 0) == 0 && tail.back() == '}') {
        const double e = parse_double(tail.substr(3, tail.size() - 4), "exponent");
        return coeff * std::pow(static_cast<double>(n), e);
    }
    if (tail == "sqrt(log(n))" || tail == "sqrt(log n)")
        return coeff * std::sqrt(std::log(static_cast<double>(n)));
    if (star == std::string::npos) return parse_double(expr, "radius");
    throw invalid_input("invalid regime expression: '" + raw + "'");
}

double SweepConfig::resolve_r() const { return eval_radius_expression(r_expr, n); }

void SweepConfig::validate() const {
    if (n < 1) throw invalid_input("sweep config: n must be >= 1");
    if (trials < 1) throw invalid_input("sweep config: trials must be >= 1");
    const double r = resolve_r();
    if (!(r > 0)) throw invalid_input("sweep config: radius must resolve to a positive value");
}

SweepConfig parse_sweep_config(std::istream& in) {
    std::string first;
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    const auto head = text.find_first_not_of(" \t\r\n");
    SweepConfig cfg;
    if (head != std::string::npos && text[head] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw invalid_input(std::string("sweep config json: ") + e.what());
        }
        cfg.n = j.at("n").get<std::int64_t>();
        if (j.at("r").is_string()) cfg.r_expr = j.at("r").get<std::string>();
        else cfg.r_expr = std::to_string(j.at("r").get<double>());
        cfg.model = parse_rgg_model(j.value("model", std::string("uniform")));
        cfg.trials = j.at("trials").get<std::int64_t>();
        cfg.seed = j.value("seed", std::uint64_t{0});
        cfg.budget.max_cliques = j.value("budget_cliques", cfg.budget.max_cliques);
        cfg.budget.max_nodes = j.value("budget_nodes", cfg.budget.max_nodes);
        cfg.label = j.value("label", std::string{});
    } else {
        std::stringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw invalid_input("sweep config: expected key=value, got '" + line + "'");
            const std::string key = trim(line.substr(0, eq));
            const std::string val = trim(line.substr(eq + 1));
            if (key == "n") cfg.n = static_cast<std::int64_t>(parse_double(val, "n"));
            else if (key == "r") cfg.r_expr = val;
            else if (key == "model") cfg.model = parse_rgg_model(val);
            else if (key == "trials") cfg.trials = static_cast<std::int64_t>(parse_double(val, "trials"));
            else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_double(val, "seed"));
            else if (key == "budget_cliques") cfg.budget.max_cliques = static_cast<std::uint64_t>(parse_double(val, "budget"));
            else if (key == "budget_nodes") cfg.budget.max_nodes = static_cast<std::uint64_t>(parse_double(val, "budget"));
            else if (key == "label") cfg.label = val;
            else throw invalid_input("sweep config: unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

SweepConfig parse_sweep_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    return parse_sweep_config(in);
}

WilsonInterval wilson95(std::int64_t successes, std::int64_t trials) {
    const double z = 1.959963984540054;
    const double nn = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1 + z2 / nn;
    const double centre = p + z2 / (2 * nn);
    const double spread = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
    return {std::max(0.0, (centre - spread) / denom), std::min(1.0, (centre + spread) / denom)};
}

namespace {

struct TrialOutcome {
    bool exact = false;
    int value = 0;       // exact chi_c when exact
    int lower = 1;       // certified bounds otherwise
    int upper = 1;
    bool cert3 = false;  // triangle-free 5-cycle found
    bool cert_attempted = false;
};

// Sparse cells are solved exactly; dense ones keep constructive bounds.
// Expected edge count decides which side we are on.
constexpr double kMaxMeanDegreeForExact = 3.0;
constexpr double kMaxExpectedEdges = 4e6;

TrialOutcome run_trial(const SweepConfig& cfg, double r, std::uint64_t trial_index) {
    Rng rng = Rng::for_trial(cfg.seed, trial_index);
    RggConfig rcfg{cfg.n, r, cfg.model, cfg.seed};
    const double mean_degree = M_PI * r * r;
    const double expected_edges = 0.5 * static_cast<double>(cfg.n) * mean_degree;

    TrialOutcome out;
    if (mean_degree <= kMaxMeanDegreeForExact && expected_edges <= kMaxExpectedEdges) {
        const RggSample sample = sample_rgg(rcfg, rng);
        const ChiByComponents chi = chi_c_by_components(sample.graph, cfg.budget);
        if (chi.method == ChiMethod::exact) {
            out.exact = true;
            out.value = *chi.exact_value;
        } else {
            out.lower = chi.lower;
            out.upper = chi.upper;
            out.cert_attempted = true;
            out.cert3 = chi.lower >= 3;
        }
        return out;
    }

    // Dense route: constructive bounds only, no adjacency materialised
    // unless the certificate search is affordable.
    const PointSet pts = sample_rgg_points(rcfg, rng);
    out.lower = has_geometric_edge(pts) ? 2 : 1;
    StripResult strip = strip_colouring(pts, StripParams{}, cfg.budget);
    out.upper = strip.colouring.palette_size();
    const double half = rcfg.square_side() / 2;
    DenseTwoColouring two = dense_two_colouring(pts, -half, half, -half, half);
    if (two.certified) out.upper = std::min(out.upper, 2);
    if (expected_edges <= kMaxExpectedEdges) {
        const Graph g = build_geometric_graph(pts);
        out.cert_attempted = true;
        if (find_triangle_free_c5(g)) {
            out.cert3 = true;
            out.lower = std::max(out.lower, 3);
        }
    }
    out.upper = std::max(out.upper, out.lower);
    return out;
}

}  // namespace

EstimateTable run_sweep(const std::vector<SweepConfig>& configs, int jobs) {
    EstimateTable table;
    jobs = std::max(1, jobs);
    for (const auto& cfg : configs) {
        cfg.validate();
        const double r = cfg.resolve_r();
        std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
        std::atomic<std::int64_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::int64_t t = next.fetch_add(1);
                if (t >= cfg.trials) break;
                outcomes[static_cast<std::size_t>(t)] = run_trial(cfg, r, static_cast<std::uint64_t>(t));
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> threads;
            for (int w = 0; w < jobs; ++w) threads.emplace_back(worker);
            for (auto& th : threads) th.join();
        }

        std::map<int, std::int64_t> exact_counts;
        std::int64_t bounded = 0, cert3 = 0, cert_attempted = 0;
        std::map<int, std::int64_t> upper_counts;
        for (const auto& o : outcomes) {
            if (o.exact) {
                ++exact_counts[o.value];
            } else {
                ++bounded;
                ++upper_counts[o.upper];
                cert_attempted += o.cert_attempted;
                cert3 += o.cert3;
            }
        }

        auto push = [&](int k, std::int64_t cnt, const std::string& tag) {
            EstimateRow row;
            row.n = cfg.n;
            row.r = r;
            row.model = cfg.model == RggModel::uniform ? "uniform" : "poisson";
            row.trials = cfg.trials;
            row.seed = cfg.seed;
            row.k = k;
            row.p_hat = static_cast<double>(cnt) / static_cast<double>(cfg.trials);
            const WilsonInterval ci = wilson95(cnt, cfg.trials);
            row.ci_lo = ci.lo;
            row.ci_hi = ci.hi;
            row.method_tag = tag;
            table.rows.push_back(row);
        };
        for (const auto& [k, cnt] : exact_counts) push(k, cnt, "exact");
        if (bounded > 0) {
            push(-1, bounded, "bounded");
            if (cert_attempted > 0) push(3, cert3, "lower_cert");
            for (const auto& [k, cnt] : upper_counts) push(k, cnt, "upper_colour");
        }
    }
    return table;
}

void EstimateTable::write_csv(std::ostream& out) const {
    out << "n,r,model,trials,seed,k,p_hat,ci_lo,ci_hi,method_tag\n";
    char buf[256];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%lld,%.6f,%s,%lld,%llu,%d,%.6f,%.6f,%.6f,%s\n",
                      static_cast<long long>(row.n), row.r, row.model.c_str(),
                      static_cast<long long>(row.trials), static_cast<unsigned long long>(row.seed),
                      row.k, row.p_hat, row.ci_lo, row.ci_hi, row.method_tag.c_str());
        out << buf;
    }
}

MuEstimate estimate_mu_c5(std::int64_t n, std::int64_t trials, std::uint64_t seed) {
    if (n < 1 || trials < 1) throw invalid_input("estimate_mu_c5: n and trials must be >= 1");
    const double r = std::pow(static_cast<double>(n), -0.125);
    const Graph c5 = cycle_graph(5);
    std::int64_t total = 0, have = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        RggConfig cfg{n, r, RggModel::uniform, seed};
        const RggSample sample = sample_rgg(cfg, rng);
        const ComponentCensus census = component_census(sample.graph, c5);
        total += census.isomorphic_count;
        have += census.isomorphic_count > 0;
    }
    MuEstimate est;
    est.trials = trials;
    est.mean_count = static_cast<double>(total) / static_cast<double>(trials);
    est.p_at_least_one = static_cast<double>(have) / static_cast<double>(trials);
    return est;
}

}  // namespace geoclique
