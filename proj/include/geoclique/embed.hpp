#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "geoclique/graph.hpp"
#include "geoclique/point_set.hpp"

namespace geoclique {

/// The numeric placement drove some pairwise distance too close to the
/// threshold for the requested margin.
struct margin_collapse : std::runtime_error {
    explicit margin_collapse(const std::string& what) : std::runtime_error(what) {}
};

/// Geometric realisation of a graph: n points on the hyperplane
/// sum(x) = 1 in R^n, pairwise distance below sqrt(2) exactly on edges.
struct Embedding {
    std::vector<std::vector<double>> points;  // n vectors in R^n
    double threshold = 0;                     // sqrt(2)
    double margin = 0;                        // min over pairs of |d - sqrt(2)|

    PointSet as_point_set() const;
};

/// Realise g (n >= 2) as a geometric graph in R^n. Vertices start at the
/// unit vectors; vertex m is nudged by delta*y where y is the unique vector
/// with sum(y) = 0 and y_m - y_i = -1 on edges im, +1 on non-edges, and the
/// remaining vertices are placed recursively with a displacement cap small
/// enough that the triangle inequality preserves every earlier separation.
/// Rebuilding the geometric graph at r = sqrt(2) reproduces g exactly;
/// throws margin_collapse if the final margin falls below
/// max(target_margin, 1e-9).
Embedding embed_graph(const Graph& g, double target_margin = 1e-9);

}  // namespace geoclique
