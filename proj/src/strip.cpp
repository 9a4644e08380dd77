#include "geoclique/strip.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "geoclique/errors.hpp"
#include "group_solver.hpp"

namespace geoclique {

namespace {

void check_strip_params(const StripParams& params) {
    if (!(params.strip_height > 0.5 && params.strip_height < std::sqrt(3.0) / 2))
        throw invalid_input("strip height must lie strictly between 1/2 and sqrt(3)/2");
}

}  // namespace

StripResult strip_colouring(const PointSet& ps, const StripParams& params, const Budget& budget) {
    ps.validate();
    if (ps.dim != 2) throw invalid_input("strip colouring requires dimension 2");
    check_strip_params(params);

    const double r = ps.radius;
    const double h = params.strip_height;
    // Pairs in one strip differ by less than h*r vertically, so a horizontal
    // gap of at most r*sqrt(1-h^2) keeps them within the radius. The tiny
    // shrink keeps that guarantee through floating-point distance checks.
    const double safe_gap = r * std::sqrt(1.0 - h * h) * (1.0 - 1e-12);

    std::map<long long, std::vector<int>> strips;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const double y = ps.points[i][1] / r;
        const auto idx = static_cast<long long>(std::floor((y - params.anchor) / h));
        strips[idx].push_back(static_cast<int>(i));
    }

    StripResult result;
    result.colouring.colours.assign(ps.size(), 0);
    result.strips_used = static_cast<int>(strips.size());
    for (const auto& [idx, members] : strips) {
        const int cls = static_cast<int>(((idx % 3) + 3) % 3);
        const int base = 3 * cls;
        detail::GroupColouring gc = detail::colour_axis_group(ps, members, 0, safe_gap, budget);
        for (std::size_t i = 0; i < members.size(); ++i)
            result.colouring.colours[static_cast<std::size_t>(members[i])] = base + gc.colours[i];
        result.any_strip_needed_three |= gc.needed_three;
        result.strips_via_cells += gc.via_cells ? 1 : 0;
    }
    return result;
}

std::vector<std::pair<int, int>> strip_cocomparability_order(const PointSet& strip_points) {
    strip_points.validate();
    if (strip_points.dim != 2) throw invalid_input("strip order requires dimension 2");
    const int n = static_cast<int>(strip_points.size());
    const double r2 = strip_points.radius * strip_points.radius;

    std::vector<std::vector<bool>> less(static_cast<std::size_t>(n),
                                        std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const auto& pu = strip_points.points[static_cast<std::size_t>(u)];
            const auto& pv = strip_points.points[static_cast<std::size_t>(v)];
            if (pu[0] < pv[0] && squared_distance(pu, pv) > r2) {
                less[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
                pairs.emplace_back(u, v);
            }
        }
    }
    // Antisymmetry holds by the strict x comparison; transitivity must be
    // checked, and a violation means the points were not confined to one
    // strip of admissible height.
    for (const auto& [u, v] : pairs)
        for (int w = 0; w < n; ++w)
            if (less[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] &&
                !less[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)])
                throw invalid_input("strip order is not transitive; input is not a single strip");
    return pairs;
}

}  // namespace geoclique
