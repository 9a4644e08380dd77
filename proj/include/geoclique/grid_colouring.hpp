#pragma once

#include "geoclique/colouring.hpp"
#include "geoclique/point_set.hpp"

namespace geoclique {

/// Hypercube tessellation parameters for dimension d: cells of side
/// s = 1/ceil(sqrt(d)) in threshold units have diameter <= 1, so each cell
/// induces a clique.
struct GridParams {
    int dim = 0;
    int k = 0;           // ceil(sqrt(dim))
    double cell_side = 0;  // 1/k, threshold units

    static GridParams for_dimension(int dim);
    int palette_bound() const;  // 2 * (k+1)^dim
};

struct GridResult {
    Colouring colouring;
    GridParams params;
};

/// Clique colouring in R^d with at most 2*(ceil(sqrt(d))+1)^d colours.
/// Cells are grouped into (k+1)^d translate families; cells of one family
/// are pairwise further than 1 apart, so the family's subgraph is a
/// disjoint union of cliques and two colours suffice for it: the
/// lexicographically smallest point of each cell takes the family's first
/// colour, the rest the second.
GridResult grid_colouring(const PointSet& ps);

}  // namespace geoclique
