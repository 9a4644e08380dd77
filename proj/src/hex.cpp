#include "geoclique/hex.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "geoclique/errors.hpp"
#include "group_solver.hpp"

namespace geoclique {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
}

std::array<double, 2> HexLattice::site(long long i, long long j) const {
    return {edge * (static_cast<double>(i) + 0.5 * static_cast<double>(j)),
            edge * (kSqrt3 / 2) * static_cast<double>(j)};
}

std::array<std::array<double, 2>, 6> HexLattice::cell_corners(long long i, long long j) const {
    // Regular hexagon with two vertical sides; circumradius edge/sqrt(3).
    const auto c = site(i, j);
    const double rc = edge / kSqrt3;
    std::array<std::array<double, 2>, 6> out{};
    for (int t = 0; t < 6; ++t) {
        const double ang = (2 * t + 1) * (M_PI / 6);  // 30, 90, ... degrees
        out[static_cast<std::size_t>(t)] = {c[0] + rc * std::cos(ang), c[1] + rc * std::sin(ang)};
    }
    return out;
}

HexCell hex_cell_of(double x, double y, const HexLattice& lattice) {
    if (!(lattice.edge > 0)) throw invalid_input("hex lattice edge must be positive");
    // Invert the basis p=(e,0), q=(e/2, e*sqrt(3)/2); the nearest site is a
    // corner of the enclosing basis parallelogram (its two triangles are the
    // Delaunay triangles of the lattice).
    const double v = y / (lattice.edge * kSqrt3 / 2);
    const double u = x / lattice.edge - 0.5 * v;
    const auto i0 = static_cast<long long>(std::floor(u));
    const auto j0 = static_cast<long long>(std::floor(v));
    HexCell best;
    double best_d2 = 0;
    bool first = true;
    for (long long dj = 0; dj <= 1; ++dj)
        for (long long di = 0; di <= 1; ++di) {
            const long long ci = i0 + di, cj = j0 + dj;
            const auto s = lattice.site(ci, cj);
            const double dx = x - s[0], dy = y - s[1];
            const double d2 = dx * dx + dy * dy;
            const bool closer =
                first || d2 < best_d2 ||
                (d2 == best_d2 && std::tie(ci, cj) < std::tie(best.i, best.j));
            if (closer) {
                best.i = ci;
                best.j = cj;
                best_d2 = d2;
                first = false;
            }
        }
    // Translate class: constant on the index-7 sublattice generated by
    // (2,1) and (-1,3) in lattice coordinates.
    auto m = (best.i + 5 * best.j) % 7;
    if (m < 0) m += 7;
    best.colour = static_cast<int>(m);
    return best;
}

HexResult hex_colouring_R3(const PointSet& ps, const Budget& budget) {
    ps.validate();
    if (ps.dim != 3) throw invalid_input("hex colouring requires dimension 3");
    const double r = ps.radius;
    // Cells scaled so their planar diameter is sqrt(3)/2 in threshold
    // units: same-class cells stay further than 1 apart, and a cylinder's
    // planar spread leaves a height gap of 1/2 with guaranteed adjacency.
    const HexLattice lattice{0.75 * r};
    const double safe_gap = (r / 2) * (1.0 - 1e-12);

    std::map<std::pair<long long, long long>, std::pair<int, std::vector<int>>> cylinders;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const HexCell cell = hex_cell_of(ps.points[i][0], ps.points[i][1], lattice);
        auto& entry = cylinders[{cell.i, cell.j}];
        entry.first = cell.colour;
        entry.second.push_back(static_cast<int>(i));
    }

    HexResult result;
    result.colouring.colours.assign(ps.size(), 0);
    for (const auto& [cell, entry] : cylinders) {
        const int base = 3 * entry.first;
        detail::GroupColouring gc = detail::colour_axis_group(ps, entry.second, 2, safe_gap, budget);
        for (std::size_t i = 0; i < entry.second.size(); ++i)
            result.colouring.colours[static_cast<std::size_t>(entry.second[i])] = base + gc.colours[i];
        result.any_cylinder_needed_three |= gc.needed_three;
    }
    return result;
}

}  // namespace geoclique
