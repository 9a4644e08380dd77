#include "geoclique/census.hpp"

#include <algorithm>
#include <numeric>

#include "geoclique/errors.hpp"

namespace geoclique {

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

// Backtracking isomorphism for small graphs, vertices of `a` mapped in
// decreasing-degree order.
bool iso_search(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<char>& used,
                const std::vector<int>& order, std::size_t pos) {
    if (pos == order.size()) return true;
    const int va = order[pos];
    for (int vb = 0; vb < b.order(); ++vb) {
        if (used[static_cast<std::size_t>(vb)]) continue;
        if (a.degree(va) != b.degree(vb)) continue;
        bool consistent = true;
        for (std::size_t q = 0; q < pos && consistent; ++q) {
            const int wa = order[q];
            if (a.has_edge(va, wa) != b.has_edge(vb, map[static_cast<std::size_t>(wa)]))
                consistent = false;
        }
        if (!consistent) continue;
        map[static_cast<std::size_t>(va)] = vb;
        used[static_cast<std::size_t>(vb)] = 1;
        if (iso_search(a, b, map, used, order, pos + 1)) return true;
        used[static_cast<std::size_t>(vb)] = 0;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (sorted_degrees(a) != sorted_degrees(b)) return false;
    std::vector<int> order(static_cast<std::size_t>(a.order()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a.degree(x) != a.degree(y) ? a.degree(x) > a.degree(y) : x < y; });
    std::vector<int> map(static_cast<std::size_t>(a.order()), -1);
    std::vector<char> used(static_cast<std::size_t>(a.order()), 0);
    return iso_search(a, b, map, used, order, 0);
}

ComponentCensus component_census(const Graph& g, const Graph& h) {
    if (h.order() < 1 || h.order() > 10)
        throw invalid_input("component census: query graph must have 1..10 vertices");
    if (h.components().size() != 1) throw invalid_input("component census: query graph must be connected");

    ComponentCensus census;
    for (const auto& comp : g.components()) {
        const int size = static_cast<int>(comp.size());
        ++census.size_histogram[size];
        ++census.component_count;
        census.largest_component = std::max(census.largest_component, size);
        if (size == h.order() && are_isomorphic(g.induced(comp), h)) ++census.isomorphic_count;
    }
    return census;
}

std::optional<std::vector<int>> find_triangle_free_c5(const Graph& g) {
    const int n = g.order();
    // Edges in no triangle: exactly the maximal cliques of size 2.
    std::vector<std::vector<int>> tf(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbours(u)) {
            if (v < u) continue;
            const auto& nu = g.neighbours(u);
            const auto& nv = g.neighbours(v);
            bool triangle = false;
            std::size_t a = 0, b = 0;
            while (a < nu.size() && b < nv.size()) {
                if (nu[a] == nv[b]) {
                    triangle = true;
                    break;
                }
                if (nu[a] < nv[b]) ++a;
                else ++b;
            }
            if (!triangle) {
                tf[static_cast<std::size_t>(u)].push_back(v);
                tf[static_cast<std::size_t>(v)].push_back(u);
            }
        }
    }
    for (auto& nb : tf) std::sort(nb.begin(), nb.end());

    // A 5-cycle whose edges are all triangle-free is automatically induced:
    // a chord would close a triangle with two of its edges.
    for (int u = 0; u < n; ++u) {
        for (int v : tf[static_cast<std::size_t>(u)]) {
            if (v < u) continue;
            for (int a : tf[static_cast<std::size_t>(v)]) {
                if (a == u) continue;
                for (int b : tf[static_cast<std::size_t>(a)]) {
                    if (b == u || b == v) continue;
                    for (int c : tf[static_cast<std::size_t>(b)]) {
                        if (c == u || c == v || c == a) continue;
                        if (std::binary_search(tf[static_cast<std::size_t>(c)].begin(),
                                               tf[static_cast<std::size_t>(c)].end(), u))
                            return std::vector<int>{u, v, a, b, c};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace geoclique
