#include "geoclique/rgg.hpp"

#include <cmath>

#include "geoclique/errors.hpp"

namespace geoclique {

double RggConfig::square_side() const { return std::sqrt(static_cast<double>(n)); }

void RggConfig::validate() const {
    if (n < 1) throw invalid_input("rgg: n must be >= 1");
    if (!(r > 0)) throw invalid_input("rgg: r must be > 0");
}

PointSet sample_rgg_points(const RggConfig& cfg, Rng& rng) {
    cfg.validate();
    const double half = cfg.square_side() / 2;
    const std::uint64_t count = cfg.model == RggModel::uniform
                                    ? static_cast<std::uint64_t>(cfg.n)
                                    : rng.poisson(static_cast<double>(cfg.n));
    PointSet ps;
    ps.dim = 2;
    ps.radius = cfg.r;
    ps.points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const double x = rng.uniform(-half, half);
        const double y = rng.uniform(-half, half);
        ps.points.push_back({x, y});
    }
    return ps;
}

RggSample sample_rgg(const RggConfig& cfg, Rng& rng) {
    RggSample s;
    s.points = sample_rgg_points(cfg, rng);
    s.graph = build_geometric_graph(s.points);
    return s;
}

RggSample sample_rgg(const RggConfig& cfg) {
    Rng rng(cfg.seed);
    return sample_rgg(cfg, rng);
}

RggModel parse_rgg_model(const std::string& s) {
    if (s == "uniform") return RggModel::uniform;
    if (s == "poisson") return RggModel::poisson;
    throw invalid_input("unknown model '" + s + "' (expected uniform or poisson)");
}

}  // namespace geoclique
