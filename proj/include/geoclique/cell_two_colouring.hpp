#pragma once

#include <cstdint>

#include "geoclique/colouring.hpp"
#include "geoclique/hex.hpp"
#include "geoclique/point_set.hpp"

namespace geoclique {

/// Outcome of the dense-regime two-colouring of points in an axis-aligned
/// rectangle. The colouring alternates two colours inside each hexagonal
/// cell of diameter r*(1 - sqrt(3)/2), so every cell with >= 2 points uses
/// both colours.
///
/// Two validity reports are produced:
///  - literal_cell_condition: every cell intersecting the rectangle holds
///    >= 2 points (and hence both colours). Sufficient on its own, but at
///    desk scale boundary half-cells regularly miss it.
///  - certified: a probe-grid check of the underlying geometric argument.
///    For a maximal clique with diametral pair at distance D and midpoint
///    y, every point within r - sqrt(3)*D/2 of y joins the clique by
///    maximality; and near a rectangle corner D is forced small, since y
///    is the midpoint of two in-rectangle points. The checker covers the
///    rectangle with probe patches and requires two opposite-coloured
///    points inside the eroded witness ball of each patch. If every probe
///    passes, no maximal clique is monochromatic.
struct DenseTwoColouring {
    Colouring colouring;
    bool literal_cell_condition = false;
    bool certified = false;
    std::int64_t cells_with_points = 0;
    std::int64_t deficient_cells = 0;  // cells intersecting the rectangle with < 2 points
    std::int64_t probes = 0;
    std::int64_t failed_probes = 0;
};

DenseTwoColouring dense_two_colouring(const PointSet& ps, double xlo, double xhi, double ylo,
                                      double yhi);

}  // namespace geoclique
