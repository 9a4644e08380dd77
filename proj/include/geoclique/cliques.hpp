#pragma once

#include <cstdint>
#include <vector>

#include "geoclique/graph.hpp"

namespace geoclique {

/// Caps for exact searches. Defaults match the library-wide contract:
/// clique enumeration stops after max_cliques outputs, branch-and-bound
/// after max_nodes expansions; both raise budget_exceeded.
struct Budget {
    std::uint64_t max_cliques = 1'000'000;
    std::uint64_t max_nodes = 100'000'000;
};

/// The maximal cliques of a graph, viewed as a hypergraph on the vertex
/// set. Singletons appear only for isolated vertices and are flagged as
/// ignorable by size.
struct CliqueHypergraph {
    std::vector<std::vector<int>> cliques;  // each sorted ascending

    bool ignorable(std::size_t i) const { return cliques[i].size() < 2; }
    std::size_t count_nontrivial() const {
        std::size_t k = 0;
        for (const auto& c : cliques) k += (c.size() >= 2);
        return k;
    }
};

/// Pivoting branch-and-bound enumeration of all maximal cliques
/// (extend/exclude candidate sets, pivot chosen with maximum candidate
/// neighbourhood). Each maximal clique is reported exactly once.
CliqueHypergraph enumerate_maximal_cliques(const Graph& g, const Budget& budget = {});

}  // namespace geoclique
