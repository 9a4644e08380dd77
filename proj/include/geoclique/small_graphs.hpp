#pragma once

#include <cstdint>
#include <vector>

#include "geoclique/graph.hpp"

namespace geoclique {

/// Adjacency of an n-vertex graph (n <= 7) packed into the C(n,2) bits of a
/// word, edge (i,j), i<j, at bit i*(2n-i-1)/2 + (j-i-1) -- i.e. row-major
/// over the strict upper triangle.
using SmallGraphCode = std::uint32_t;

Graph decode_small_graph(int n, SmallGraphCode code);
SmallGraphCode encode_small_graph(const Graph& g);

/// Least code over all vertex relabelings; equal codes == isomorphic graphs.
SmallGraphCode canonical_small_code(int n, SmallGraphCode code);

/// Clique chromatic number of an n-vertex graph, n <= 7, by bitmask search.
int chi_c_small(int n, SmallGraphCode code);

struct ExhaustiveResult {
    int n = 0;
    int max_chi_c = 1;
    /// Canonical codes of the extremal graphs, one per isomorphism class.
    std::vector<SmallGraphCode> extremal;
    /// True when every extremal class is triangle-free.
    bool all_extremal_triangle_free = false;
    /// True when at least one extremal class is triangle-free, i.e. the
    /// maximum is attained by a triangle-free graph.
    bool some_extremal_triangle_free = false;
    std::uint64_t graphs_scanned = 0;
};

/// Maximum of the clique chromatic number over all labeled n-vertex graphs
/// (1 <= n <= 7), with the maximisers reduced up to isomorphism. The scan
/// over all 2^{n(n-1)/2} graphs is partitioned across `jobs` workers by
/// fixing leading adjacency bits.
ExhaustiveResult exhaustive_chi_c_max(int n, int jobs = 1);

}  // namespace geoclique
