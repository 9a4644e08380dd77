#include "geoclique/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace geoclique {

namespace {

// Maximal independent set of the subgraph induced by `alive`, greedy by
// ascending degree (within the induced subgraph), lowest index first.
std::vector<int> greedy_mis(const Graph& g, const std::vector<char>& alive) {
    std::vector<int> verts;
    for (int v = 0; v < g.order(); ++v)
        if (alive[static_cast<std::size_t>(v)]) verts.push_back(v);
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    for (int v : verts) {
        int d = 0;
        for (int w : g.neighbours(v)) d += alive[static_cast<std::size_t>(w)];
        deg[static_cast<std::size_t>(v)] = d;
    }
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        int da = deg[static_cast<std::size_t>(a)], db = deg[static_cast<std::size_t>(b)];
        return da != db ? da < db : a < b;
    });
    std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> mis;
    for (int v : verts) {
        if (blocked[static_cast<std::size_t>(v)]) continue;
        mis.push_back(v);
        for (int w : g.neighbours(v)) blocked[static_cast<std::size_t>(w)] = 1;
    }
    std::sort(mis.begin(), mis.end());
    return mis;
}

}  // namespace

Colouring greedy_sqrt_colouring(const Graph& g) {
    const int n = g.order();
    Colouring result;
    result.colours.assign(static_cast<std::size_t>(n), 0);
    if (n == 0) return result;

    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    int alive_count = n;
    int next_colour = 0;

    while (alive_count > 0) {
        std::vector<int> mis = greedy_mis(g, alive);
        const long long sz = static_cast<long long>(mis.size());
        if (sz * sz >= n) {
            // Phase 1: spend one fresh colour on the whole set and drop it.
            for (int v : mis) {
                result.colours[static_cast<std::size_t>(v)] = next_colour;
                alive[static_cast<std::size_t>(v)] = 0;
            }
            alive_count -= static_cast<int>(mis.size());
            ++next_colour;
            continue;
        }
        // Phase 2: mis = {u_1 < ... < u_k} dominates the remaining graph.
        // One fresh colour for the set itself, and fresh colour i for the
        // vertices whose lowest-indexed neighbour in the set is u_i.
        const int base = next_colour;
        for (int v : mis) result.colours[static_cast<std::size_t>(v)] = base;
        for (int v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            if (std::binary_search(mis.begin(), mis.end(), v)) continue;
            int idx = -1;
            for (std::size_t i = 0; i < mis.size(); ++i) {
                if (g.has_edge(v, mis[i])) {
                    idx = static_cast<int>(i);
                    break;
                }
            }
            // idx >= 0 because a maximal independent set dominates.
            result.colours[static_cast<std::size_t>(v)] = base + 1 + idx;
        }
        break;
    }
    return result;
}

}  // namespace geoclique
