#include "geoclique/grid_colouring.hpp"

#include <cmath>
#include <cstdint>
#include <map>

#include "geoclique/errors.hpp"

namespace geoclique {

GridParams GridParams::for_dimension(int dim) {
    if (dim < 1) throw invalid_input("grid colouring requires dimension >= 1");
    if (dim > 12) throw invalid_input("grid colouring supports dimension <= 12");
    int k = 1;
    while (k * k < dim) ++k;  // ceil(sqrt(dim)) without float rounding
    return GridParams{dim, k, 1.0 / k};
}

int GridParams::palette_bound() const {
    long long b = 2;
    for (int a = 0; a < dim; ++a) b *= k + 1;
    return static_cast<int>(b);
}

GridResult grid_colouring(const PointSet& ps) {
    ps.validate();
    GridResult result;
    result.params = GridParams::for_dimension(ps.dim);
    const int d = ps.dim;
    const int k = result.params.k;
    const double side = result.params.cell_side * ps.radius;

    // Cell key -> (family palette base, members).
    std::map<std::vector<std::int64_t>, std::vector<int>> cells;
    std::vector<std::int64_t> key(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (int a = 0; a < d; ++a)
            key[static_cast<std::size_t>(a)] =
                static_cast<std::int64_t>(std::floor(ps.points[i][static_cast<std::size_t>(a)] / side));
        cells[key].push_back(static_cast<int>(i));
    }

    result.colouring.colours.assign(ps.size(), 0);
    for (const auto& [cell, members] : cells) {
        long long family = 0;
        for (int a = 0; a < d; ++a) {
            auto m = cell[static_cast<std::size_t>(a)] % (k + 1);
            if (m < 0) m += k + 1;
            family = family * (k + 1) + m;
        }
        const int first_colour = static_cast<int>(2 * family);
        // Lexicographically smallest point takes the family's first colour,
        // everything else in the cell the second.
        int smallest = members[0];
        for (int v : members) {
            const auto& pv = ps.points[static_cast<std::size_t>(v)];
            const auto& pex = ps.points[static_cast<std::size_t>(smallest)];
            if (pv < pex || (pv == pex && v < smallest)) smallest = v;
        }
        for (int v : members)
            result.colouring.colours[static_cast<std::size_t>(v)] =
                v == smallest ? first_colour : first_colour + 1;
    }
    return result;
}

}  // namespace geoclique
