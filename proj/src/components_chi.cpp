#include "geoclique/components_chi.hpp"

#include <algorithm>

#include "geoclique/census.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/exact.hpp"
#include "geoclique/greedy.hpp"

namespace geoclique {

ChiByComponents chi_c_by_components(const Graph& g, const Budget& budget) {
    ChiByComponents out;
    Colouring merged;
    merged.colours.assign(static_cast<std::size_t>(g.order()), 0);

    bool any_budget_failure = false;
    int exact_max = 1;
    for (const auto& comp : g.components()) {
        if (comp.size() == 1) continue;
        try {
            const Graph sub = g.induced(comp);
            const ExactResult res = clique_chromatic_number_exact(sub, budget);
            exact_max = std::max(exact_max, res.chi_c);
            for (std::size_t i = 0; i < comp.size(); ++i)
                merged.colours[static_cast<std::size_t>(comp[i])] = res.witness.colours[i];
        } catch (const budget_exceeded&) {
            any_budget_failure = true;
            break;
        }
    }

    if (!any_budget_failure) {
        out.method = ChiMethod::exact;
        out.exact_value = exact_max;
        out.lower = out.upper = exact_max;
        out.witness = std::move(merged);
        return out;
    }

    // Certified bounds. The constructive sqrt-bound colouring is valid by
    // construction, so its palette is a true upper bound.
    out.method = ChiMethod::bounded;
    out.lower = g.edge_count() > 0 ? 2 : 1;
    if (find_triangle_free_c5(g)) out.lower = std::max(out.lower, 3);
    Colouring greedy = greedy_sqrt_colouring(g);
    out.upper = std::max(greedy.palette_size(), out.lower);
    out.witness = std::move(greedy);
    return out;
}

}  // namespace geoclique
