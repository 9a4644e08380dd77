#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "geoclique/cliques.hpp"
#include "geoclique/rgg.hpp"

namespace geoclique {

/// One Monte Carlo sweep cell: sample `trials` graphs from G(n, r) and
/// estimate the distribution of the clique chromatic number.
struct SweepConfig {
    std::int64_t n = 0;
    std::string r_expr;  // "0.01", "1*n^{-0.5}", "0.4*sqrt(log(n))"
    RggModel model = RggModel::uniform;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    Budget budget;
    std::string label;

    double resolve_r() const;
    void validate() const;
};

/// "c*n^{e}", "c*sqrt(log(n))" or a plain decimal.
double eval_radius_expression(const std::string& expr, std::int64_t n);

SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config_file(const std::string& path);

struct WilsonInterval {
    double lo = 0, hi = 0;
};
/// 95% Wilson score interval; well behaved at p near 0 and 1.
WilsonInterval wilson95(std::int64_t successes, std::int64_t trials);

struct EstimateRow {
    std::int64_t n = 0;
    double r = 0;
    std::string model;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    int k = 0;
    double p_hat = 0;
    double ci_lo = 0, ci_hi = 0;
    std::string method_tag;  // exact | bounded | lower_cert | upper_colour
};

struct EstimateTable {
    std::vector<EstimateRow> rows;
    void write_csv(std::ostream& out) const;
};

/// Runs every config; trials are independent streams derived from
/// (seed, trial index), so the table is identical for a fixed seed no
/// matter how many workers run it. Sparse cells are solved exactly per
/// component; cells too dense for exact search keep certified bounds
/// (never dropped): the lower_cert rows count chi_c >= 3 certificates and
/// the upper_colour rows histogram the constructive palette sizes.
EstimateTable run_sweep(const std::vector<SweepConfig>& configs, int jobs = 1);

struct MuEstimate {
    double mean_count = 0;      // average number of 5-cycle components per trial
    double p_at_least_one = 0;  // fraction of trials with one or more
    std::int64_t trials = 0;
};

/// Empirical stand-in for the limiting expected number of 5-cycle
/// components at n*r^8 = 1 (the analytic constant is out of reach here).
MuEstimate estimate_mu_c5(std::int64_t n, std::int64_t trials, std::uint64_t seed);

}  // namespace geoclique
