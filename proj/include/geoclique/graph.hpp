#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace geoclique {

/// Finite simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Adjacency is kept symmetric and irreflexive by the mutators.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    /// Vertex sets of the connected components, each sorted ascending.
    std::vector<std::vector<int>> components() const;

    /// Subgraph induced by `vertices` (which must be sorted ascending);
    /// vertex i of the result is vertices[i].
    Graph induced(const std::vector<int>& vertices) const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

  private:
    std::vector<std::vector<int>> adj_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph edgeless_graph(int n);

/// Triangle-free 11-vertex graph with chromatic number 4 (cycle shadow
/// construction applied to a 5-cycle). Used as a test fixture.
Graph groetzsch_graph();

/// Edge-list text format: first line "n m", then m lines "u v", 0-based.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace geoclique
