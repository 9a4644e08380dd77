#pragma once

#include <vector>

#include "geoclique/cliques.hpp"
#include "geoclique/colouring.hpp"
#include "geoclique/graph.hpp"

namespace geoclique {

struct ExactResult {
    int chi_c = 1;
    Colouring witness;
};

/// Minimum palette size admitting a valid clique colouring, plus a witness.
/// Solved independently per connected component (the minimum for a disjoint
/// union is the maximum over components, and at least 1). Backtracking over
/// vertices in decreasing-degree order, pruning as soon as some maximal
/// clique is forced monochromatic.
ExactResult clique_chromatic_number_exact(const Graph& g, const Budget& budget = {});

/// Exact minimum size of a vertex set meeting every maximal clique with
/// >= 2 vertices (isolated vertices ignored). Branch and bound over the
/// clique hypergraph.
int clique_transversal_number(const Graph& g, const Budget& budget = {});

}  // namespace geoclique
