#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "geoclique/graph.hpp"

namespace geoclique {

struct ComponentCensus {
    std::map<int, std::int64_t> size_histogram;  // component size -> count
    std::int64_t isomorphic_count = 0;           // components isomorphic to the query
    int largest_component = 0;
    std::int64_t component_count = 0;
};

/// Count connected components of g isomorphic to the connected query h
/// (|V(h)| <= 10; exact isomorphism by refinement + backtracking), plus the
/// full component size histogram.
ComponentCensus component_census(const Graph& g, const Graph& h);

bool are_isomorphic(const Graph& a, const Graph& b);

/// An induced 5-cycle of g none of whose edges lies in a triangle, if one
/// exists. Each such edge is a maximal clique, so the cycle forces a third
/// colour. Exhaustive over 5-cycles of the triangle-free-edge subgraph
/// (any chord would put a cycle edge in a triangle, so these cycles are
/// automatically induced).
std::optional<std::vector<int>> find_triangle_free_c5(const Graph& g);

}  // namespace geoclique
