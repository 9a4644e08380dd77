#pragma once

#include <optional>
#include <string>

#include "geoclique/cliques.hpp"
#include "geoclique/colouring.hpp"
#include "geoclique/graph.hpp"

namespace geoclique {

enum class ChiMethod { exact, bounded };

struct ChiByComponents {
    ChiMethod method = ChiMethod::exact;
    /// Exact value when method == exact; otherwise unset.
    std::optional<int> exact_value;
    /// Certified bounds, always set (lower == upper == value when exact).
    int lower = 1;
    int upper = 1;
    std::optional<Colouring> witness;  // valid colouring with `upper` colours
};

/// Clique chromatic number by independent exact solves per connected
/// component (the value for the whole graph is the maximum, at least 1).
/// Components that blow the budget degrade the result to certified bounds:
/// lower from an edge (>=2) or a triangle-free 5-cycle (>=3), upper from
/// the constructive 2*sqrt(n) colouring, which is valid by construction.
ChiByComponents chi_c_by_components(const Graph& g, const Budget& budget = {});

}  // namespace geoclique
