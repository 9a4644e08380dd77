#include "geoclique/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "geoclique/errors.hpp"

namespace geoclique {

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    const int n = order();
    if (u < 0 || v < 0 || u >= n || v >= n) throw invalid_input("edge endpoint out of range");
    if (u == v) throw invalid_input("self-loops are not allowed");
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;  // already present
    au.insert(it, v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    const auto& au = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::vector<int>> Graph::components() const {
    const int n = order();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) continue;
        const int id = static_cast<int>(comps.size());
        comps.emplace_back();
        stack.push_back(s);
        label[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps[static_cast<std::size_t>(id)].push_back(v);
            for (int w : neighbours(v)) {
                if (label[static_cast<std::size_t>(w)] == -1) {
                    label[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    for (auto& c : comps) std::sort(c.begin(), c.end());
    return comps;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (int w : neighbours(vertices[i])) {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
            if (it == vertices.end() || *it != w) continue;
            const auto j = static_cast<std::size_t>(it - vertices.begin());
            if (j > i) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return h;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph groetzsch_graph() {
    // Outer 5-cycle 0..4, shadows 5..9 (shadow 5+i sees the cycle
    // neighbours of i), apex 10 adjacent to every shadow.
    Graph g(11);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
        g.add_edge(5 + i, 10);
    }
    return g;
}

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw invalid_input("edge list: expected header 'n m'");
    if (n < 0 || m < 0) throw invalid_input("edge list: negative counts");
    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw invalid_input("edge list: truncated before edge " + std::to_string(e));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbours(u))
            if (u < v) out << u << ' ' << v << '\n';
}

}  // namespace geoclique
