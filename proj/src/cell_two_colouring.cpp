#include "geoclique/cell_two_colouring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "geoclique/errors.hpp"

namespace geoclique {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

struct Pt {
    double x, y;
};

// Area of the hexagonal cell clipped to the rectangle (Sutherland-Hodgman).
double clipped_cell_area(const HexLattice& lat, long long i, long long j, double xlo, double xhi,
                         double ylo, double yhi) {
    std::vector<Pt> poly;
    for (const auto& c : lat.cell_corners(i, j)) poly.push_back({c[0], c[1]});
    auto clip = [&](auto inside, auto intersect) {
        std::vector<Pt> out;
        for (std::size_t a = 0; a < poly.size(); ++a) {
            const Pt& p = poly[a];
            const Pt& q = poly[(a + 1) % poly.size()];
            const bool pin = inside(p), qin = inside(q);
            if (pin) out.push_back(p);
            if (pin != qin) out.push_back(intersect(p, q));
        }
        poly = std::move(out);
    };
    auto cut_x = [&](double bound, bool keep_ge) {
        clip([=](const Pt& p) { return keep_ge ? p.x >= bound : p.x <= bound; },
             [=](const Pt& p, const Pt& q) {
                 double t = (bound - p.x) / (q.x - p.x);
                 return Pt{bound, p.y + t * (q.y - p.y)};
             });
    };
    auto cut_y = [&](double bound, bool keep_ge) {
        clip([=](const Pt& p) { return keep_ge ? p.y >= bound : p.y <= bound; },
             [=](const Pt& p, const Pt& q) {
                 double t = (bound - p.y) / (q.y - p.y);
                 return Pt{p.x + t * (q.x - p.x), bound};
             });
    };
    cut_x(xlo, true);
    if (poly.empty()) return 0;
    cut_x(xhi, false);
    if (poly.empty()) return 0;
    cut_y(ylo, true);
    if (poly.empty()) return 0;
    cut_y(yhi, false);
    if (poly.size() < 3) return 0;
    double twice = 0;
    for (std::size_t a = 0; a < poly.size(); ++a) {
        const Pt& p = poly[a];
        const Pt& q = poly[(a + 1) % poly.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return std::abs(twice) / 2;
}

struct PairKeyHash {
    std::size_t operator()(const std::pair<long long, long long>& k) const {
        return std::hash<long long>()(k.first * 1000003LL + k.second);
    }
};

}  // namespace

DenseTwoColouring dense_two_colouring(const PointSet& ps, double xlo, double xhi, double ylo,
                                      double yhi) {
    ps.validate();
    if (ps.dim != 2) throw invalid_input("dense two-colouring requires dimension 2");
    if (!(xlo < xhi && ylo < yhi)) throw invalid_input("dense two-colouring: empty rectangle");
    for (const auto& p : ps.points)
        if (p[0] < xlo || p[0] > xhi || p[1] < ylo || p[1] > yhi)
            throw invalid_input("dense two-colouring: point outside the rectangle");

    const double r = ps.radius;
    const double delta = r * (1.0 - kSqrt3 / 2) * (1.0 - 1e-12);  // cell diameter
    const HexLattice lattice{delta * kSqrt3 / 2};

    DenseTwoColouring result;
    result.colouring.colours.assign(ps.size(), 0);

    // Colour rule: alternate inside each cell in (x, y, id) order, so any
    // cell with two or more points shows both colours.
    std::map<std::pair<long long, long long>, std::vector<int>> cells;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const HexCell c = hex_cell_of(ps.points[i][0], ps.points[i][1], lattice);
        cells[{c.i, c.j}].push_back(static_cast<int>(i));
    }
    for (auto& [key, members] : cells) {
        std::sort(members.begin(), members.end(), [&](int a, int b) {
            const auto& pa = ps.points[static_cast<std::size_t>(a)];
            const auto& pb = ps.points[static_cast<std::size_t>(b)];
            return pa != pb ? pa < pb : a < b;
        });
        for (std::size_t t = 0; t < members.size(); ++t)
            result.colouring.colours[static_cast<std::size_t>(members[t])] = static_cast<int>(t & 1);
    }
    result.cells_with_points = static_cast<std::int64_t>(cells.size());

    // Literal condition: every cell meeting the rectangle holds >= 2 points.
    {
        const double rc = lattice.edge / kSqrt3;  // cell circumradius
        const double row = lattice.edge * kSqrt3 / 2;
        const auto jlo = static_cast<long long>(std::floor((ylo - rc) / row));
        const auto jhi = static_cast<long long>(std::ceil((yhi + rc) / row));
        for (long long j = jlo; j <= jhi; ++j) {
            const auto ilo =
                static_cast<long long>(std::floor((xlo - rc) / lattice.edge - 0.5 * static_cast<double>(j))) - 1;
            const auto ihi =
                static_cast<long long>(std::ceil((xhi + rc) / lattice.edge - 0.5 * static_cast<double>(j))) + 1;
            for (long long i = ilo; i <= ihi; ++i) {
                if (clipped_cell_area(lattice, i, j, xlo, xhi, ylo, yhi) <= 1e-9 * delta * delta)
                    continue;
                auto it = cells.find({i, j});
                const std::size_t cnt = it == cells.end() ? 0 : it->second.size();
                if (cnt < 2) ++result.deficient_cells;
            }
        }
        result.literal_cell_condition = result.deficient_cells == 0;
    }

    // Certified check. For a maximal clique with diametral pair distance D
    // and midpoint y, every point within r - sqrt(3)*D/2 of y is in the
    // clique; and D <= 2*sqrt(tx^2 + ty^2) where tx, ty are y's distances
    // to the nearer rectangle sides (both endpoints lie in the rectangle).
    // Cover the rectangle with probe patches and demand two
    // opposite-coloured points inside each patch's eroded witness ball.
    {
        const double g = r / 24;
        const double h = g / std::sqrt(2.0);
        const auto nx = static_cast<long long>(std::ceil((xhi - xlo) / g));
        const auto ny = static_cast<long long>(std::ceil((yhi - ylo) / g));

        // Bucket the points for ball queries.
        const double bucket = std::max(delta, 1e-9);
        std::unordered_map<std::pair<long long, long long>, std::vector<int>, PairKeyHash> grid;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const auto bx = static_cast<long long>(std::floor(ps.points[i][0] / bucket));
            const auto by = static_cast<long long>(std::floor(ps.points[i][1] / bucket));
            grid[{bx, by}].push_back(static_cast<int>(i));
        }
        auto ball_has_both_colours = [&](double qx, double qy, double rho) {
            const double rho2 = rho * rho;
            const auto cbx = static_cast<long long>(std::floor(qx / bucket));
            const auto cby = static_cast<long long>(std::floor(qy / bucket));
            const auto reach = static_cast<long long>(std::floor(rho / bucket)) + 1;
            bool seen[2] = {false, false};
            for (long long ring = 0; ring <= reach; ++ring) {
                for (long long by = cby - ring; by <= cby + ring; ++by) {
                    for (long long bx = cbx - ring; bx <= cbx + ring; ++bx) {
                        if (std::max(std::llabs(bx - cbx), std::llabs(by - cby)) != ring) continue;
                        auto it = grid.find({bx, by});
                        if (it == grid.end()) continue;
                        for (int id : it->second) {
                            const double dx = ps.points[static_cast<std::size_t>(id)][0] - qx;
                            const double dy = ps.points[static_cast<std::size_t>(id)][1] - qy;
                            if (dx * dx + dy * dy <= rho2) {
                                seen[result.colouring.colours[static_cast<std::size_t>(id)]] = true;
                                if (seen[0] && seen[1]) return true;
                            }
                        }
                    }
                }
            }
            return false;
        };

        result.certified = true;
        for (long long iy = 0; iy < ny; ++iy) {
            for (long long ix = 0; ix < nx; ++ix) {
                const double qx = xlo + (static_cast<double>(ix) + 0.5) * g;
                const double qy = ylo + (static_cast<double>(iy) + 0.5) * g;
                ++result.probes;
                const double tx = std::max(0.0, std::min(qx - xlo, xhi - qx)) + g / 2;
                const double ty = std::max(0.0, std::min(qy - ylo, yhi - qy)) + g / 2;
                const double dbar = std::min(r, 2 * std::hypot(tx, ty));
                const double rho = (r - (kSqrt3 / 2) * dbar - h) * (1.0 - 1e-12);
                if (rho <= 0 || !ball_has_both_colours(qx, qy, rho)) {
                    ++result.failed_probes;
                    result.certified = false;
                }
            }
        }
    }
    return result;
}

}  // namespace geoclique
