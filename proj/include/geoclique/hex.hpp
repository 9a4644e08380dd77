#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "geoclique/cliques.hpp"
#include "geoclique/colouring.hpp"
#include "geoclique/point_set.hpp"

namespace geoclique {

/// Unit triangular lattice scaled by `edge`: sites i*p + j*q with
/// p = edge*(1,0), q = edge*(1/2, sqrt(3)/2). Its hexagonal Voronoi cells
/// have diameter 2*edge/sqrt(3). The sublattice generated by 2p+q and
/// -p+3q has index 7, so the sites split into 7 translate classes; cells
/// of one class are at distance >= 1.49*edge from each other
/// (the minimum is sqrt(7/3)*edge between cell boundaries).
struct HexLattice {
    double edge = 1.0;

    std::array<double, 2> site(long long i, long long j) const;
    /// The 6 corners of the Voronoi cell around site (i,j).
    std::array<std::array<double, 2>, 6> cell_corners(long long i, long long j) const;
};

struct HexCell {
    long long i = 0, j = 0;  // lattice coordinates of the nearest site
    int colour = 0;          // translate class, 0..6
};

/// Voronoi cell of a planar point: nearest lattice site (ties broken
/// toward the lexicographically smaller site) and its translate class.
HexCell hex_cell_of(double x, double y, const HexLattice& lattice);

struct HexResult {
    Colouring colouring;
    bool any_cylinder_needed_three = false;
};

/// Clique colouring in R^3 with at most 21 colours: project to the plane,
/// 7-colour the hexagonal cells of a lattice scaled so cells have planar
/// diameter sqrt(3)/2 (threshold units), then clique-colour each vertical
/// cylinder with at most 3 colours private to its cell class. Within a
/// cylinder, points at equal height are adjacent, and the height order of
/// non-adjacent pairs is a partial order, so the cylinder subproblems are
/// solved exactly like strips (budgeted).
HexResult hex_colouring_R3(const PointSet& ps, const Budget& budget = {});

}  // namespace geoclique
