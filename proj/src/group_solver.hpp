#pragma once

#include <vector>

#include "geoclique/cliques.hpp"
#include "geoclique/point_set.hpp"

namespace geoclique::detail {

struct GroupColouring {
    std::vector<int> colours;  // parallel to the member list, values 0..2
    bool needed_three = false;
    bool via_cells = false;  // dense cell certificate carried at least one chunk
};

/// Clique-colour the geometric graph induced by `members` with at most 3
/// colours, given that any two members whose `axis_dim` coordinates differ
/// by at most `safe_gap` are guaranteed adjacent (the caller established
/// that by confining the group to a strip or cylinder).
///
/// The group splits at axis gaps wider than the radius (no edges cross
/// such a gap, and no maximal clique spans it). Per chunk, a dense
/// certificate is tried first: with cells of width safe_gap - r/2 along
/// the axis, every maximal clique contains all members of some full cell,
/// so if each full cell has >= 2 members, alternating two colours inside
/// every cell is valid. Otherwise the chunk's maximal cliques are
/// enumerated and 2- then 3-coloured exactly (budgeted); failure at 3 is
/// impossible for genuine strip/cylinder input.
GroupColouring colour_axis_group(const PointSet& ps, const std::vector<int>& members, int axis_dim,
                                 double safe_gap, const Budget& budget);

}  // namespace geoclique::detail
