#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "geoclique/graph.hpp"

namespace geoclique {

/// Points in R^d with a threshold radius. Distinct points are adjacent in
/// the induced geometric graph exactly when their Euclidean distance is at
/// most the radius (closed comparison, no epsilon fuzz).
struct PointSet {
    int dim = 0;
    std::vector<std::vector<double>> points;
    double radius = 1.0;

    std::size_t size() const { return points.size(); }
    void validate() const;  // throws invalid_input on malformed data
};

double squared_distance(const std::vector<double>& a, const std::vector<double>& b);

/// Geometric graph of `ps`: i != j adjacent iff d(x_i, x_j) <= radius.
/// Uses uniform grid bucketing with cell side = radius, so sparse
/// instances cost O(n + m).
Graph build_geometric_graph(const PointSet& ps);

/// Number of edges of the geometric graph without materialising adjacency.
std::size_t count_geometric_edges(const PointSet& ps);

/// True iff some pair lies within the radius; stops at the first hit.
bool has_geometric_edge(const PointSet& ps);

/// Points CSV: header "dim=d", then one line per point with d
/// comma-separated decimals.
PointSet read_points_csv(std::istream& in, double radius);
PointSet read_points_csv_file(const std::string& path, double radius);
void write_points_csv(const PointSet& ps, std::ostream& out);

}  // namespace geoclique
