#pragma once

// Brute-force reference implementations used only by tests. Each one is an
// independent route to the answer: subset scans instead of branch and
// bound, proper colourings instead of hypergraph search.

#include <algorithm>
#include <optional>
#include <vector>

#include "geoclique/graph.hpp"
#include "geoclique/rng.hpp"

namespace oracle {

using geoclique::Graph;

// All inclusion-maximal cliques by scanning every vertex subset (n <= ~20).
inline std::vector<std::vector<int>> brute_maximal_cliques(const Graph& g) {
    const int n = g.order();
    std::vector<unsigned> clique_masks;
    for (unsigned s = 1; s < (1u << n); ++s) {
        bool clique = true;
        for (int i = 0; i < n && clique; ++i) {
            if (!(s >> i & 1)) continue;
            for (int j = i + 1; j < n && clique; ++j)
                if ((s >> j & 1) && !g.has_edge(i, j)) clique = false;
        }
        if (clique) clique_masks.push_back(s);
    }
    std::vector<std::vector<int>> out;
    for (unsigned s : clique_masks) {
        bool maximal = true;
        for (unsigned t : clique_masks)
            if (t != s && (s & t) == s) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<int> c;
        for (int i = 0; i < n; ++i)
            if (s >> i & 1) c.push_back(i);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Ordinary chromatic number by backtracking (n small).
inline bool properly_colourable(const Graph& g, int k, std::vector<int>& colour, int v) {
    if (v == g.order()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int w : g.neighbours(v))
            if (w < v && colour[static_cast<std::size_t>(w)] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colour[static_cast<std::size_t>(v)] = c;
        if (properly_colourable(g, k, colour, v + 1)) return true;
    }
    return false;
}

inline int brute_chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
        if (properly_colourable(g, k, colour, 0)) return k;
    }
}

// Minimum vertex set hitting all maximal cliques of size >= 2, by scanning
// subsets in increasing size (n <= ~16).
inline int brute_clique_transversal(const Graph& g) {
    const auto cliques = brute_maximal_cliques(g);
    std::vector<unsigned> targets;
    for (const auto& c : cliques)
        if (c.size() >= 2) {
            unsigned m = 0;
            for (int v : c) m |= 1u << v;
            targets.push_back(m);
        }
    if (targets.empty()) return 0;
    const int n = g.order();
    for (int size = 1; size <= n; ++size) {
        for (unsigned s = 0; s < (1u << n); ++s) {
            if (__builtin_popcount(s) != size) continue;
            bool hits_all = true;
            for (unsigned t : targets)
                if (!(t & s)) {
                    hits_all = false;
                    break;
                }
            if (hits_all) return size;
        }
    }
    return n;
}

inline bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbours(u)) {
            if (v <= u) continue;
            for (int w : g.neighbours(v))
                if (w > v && g.has_edge(u, w)) return true;
        }
    return false;
}

inline Graph random_graph(int n, double p, geoclique::Rng& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) g.add_edge(i, j);
    return g;
}

}  // namespace oracle
