#pragma once

#include <utility>
#include <vector>

#include "geoclique/cliques.hpp"
#include "geoclique/colouring.hpp"
#include "geoclique/point_set.hpp"

namespace geoclique {

/// Horizontal strips R x [anchor + i*h, anchor + (i+1)*h), in threshold
/// units (the colourer rescales so the radius is 1). Any height strictly
/// between 1/2 and sqrt(3)/2 works; the default is the midpoint of that
/// interval, which maximises slack on both constraints.
struct StripParams {
    double strip_height = 0.6830127018922193;
    double anchor = 0.0;
};

struct StripResult {
    Colouring colouring;
    int strips_used = 0;
    /// Some strip needed a third colour (none has been observed; worth
    /// keeping an eye on, so it is surfaced here).
    bool any_strip_needed_three = false;
    /// Number of strips whose two-colouring was certified by the dense
    /// cell argument rather than solved exactly.
    int strips_via_cells = 0;
};

/// Clique colouring of a planar point set with at most 9 colours: strips
/// get cyclic labels a,b,c with a private 3-colour palette each, and each
/// strip is clique-coloured with at most 3 of its palette colours.
///
/// Per strip, a dense shortcut is tried first: split the strip into
/// x-cells of width sqrt(1-h^2) - 1/2 (threshold units). Every maximal
/// clique of the strip graph contains all strip points of some full cell,
/// so if every full cell holds >= 2 points, alternating two colours inside
/// each cell is a valid clique colouring. Otherwise the strip's maximal
/// cliques are enumerated and 2- then 3-coloured exactly (budgeted).
StripResult strip_colouring(const PointSet& ps, const StripParams& params = {},
                            const Budget& budget = {});

/// The order u < v iff u_x < v_x and uv is a non-edge, for points lying in
/// one strip. Returns all ordered pairs; verified transitive and
/// antisymmetric (a violation means the strip precondition was broken).
std::vector<std::pair<int, int>> strip_cocomparability_order(const PointSet& strip_points);

}  // namespace geoclique
