#pragma once

#include <cstdint>
#include <string>

#include "geoclique/graph.hpp"
#include "geoclique/point_set.hpp"
#include "geoclique/rng.hpp"

namespace geoclique {

enum class RggModel { uniform, poisson };

/// Random planar point set in the square [-sqrt(n)/2, sqrt(n)/2]^2 with
/// threshold r: exactly n i.i.d. uniform points, or a unit-intensity
/// Poisson process (point count ~ Poisson(n)).
struct RggConfig {
    std::int64_t n = 1;
    double r = 1.0;
    RggModel model = RggModel::uniform;
    std::uint64_t seed = 0;

    double square_side() const;
    void validate() const;
};

struct RggSample {
    PointSet points;
    Graph graph;
};

/// Draw a point set from cfg (the rng carries the trial stream) and build
/// its geometric graph.
RggSample sample_rgg(const RggConfig& cfg, Rng& rng);
RggSample sample_rgg(const RggConfig& cfg);  // fresh stream from cfg.seed

/// Point set only; callers that never need full adjacency (dense regimes)
/// use this to avoid materialising millions of edges.
PointSet sample_rgg_points(const RggConfig& cfg, Rng& rng);

RggModel parse_rgg_model(const std::string& s);

}  // namespace geoclique
