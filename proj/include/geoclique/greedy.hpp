#pragma once

#include "geoclique/colouring.hpp"
#include "geoclique/graph.hpp"

namespace geoclique {

/// Clique colouring with at most 2*sqrt(n) colours, n the graph order.
/// Phase 1 repeatedly extracts a maximal independent set (greedy by
/// ascending degree, lowest index first) and spends one fresh colour on it,
/// while such sets have at least sqrt(n) vertices. Phase 2 takes the first
/// small maximal independent set I = {u_1 < ... < u_k} of the remaining
/// graph H, colours I with one fresh colour, and every other vertex v of H
/// with the fresh colour indexed by min{ i : u_i adjacent to v } (I is
/// dominating in H, so the index exists).
///
/// Valid by construction: a monochromatic maximal clique inside a phase-1
/// class would be an independent set; inside class i of phase 2 it could be
/// extended by u_i.
Colouring greedy_sqrt_colouring(const Graph& g);

}  // namespace geoclique
