#include "group_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "geoclique/errors.hpp"
#include "hyper_colour.hpp"

namespace geoclique::detail {

namespace {

// members sorted by (axis value, tie-break on the remaining coordinates,
// then id); local colours wired straight into `out`.
struct Chunk {
    std::vector<int> members;     // point ids
    std::vector<std::size_t> at;  // positions in the group's member list
};

bool try_cell_certificate(const PointSet& ps, const Chunk& chunk, int axis_dim, double cell_width,
                          std::vector<int>& out) {
    if (!(cell_width > 1e-12 * ps.radius)) return false;
    if (chunk.members.size() < 2) return false;
    double lo = ps.points[static_cast<std::size_t>(chunk.members.front())][static_cast<std::size_t>(axis_dim)];
    double hi = ps.points[static_cast<std::size_t>(chunk.members.back())][static_cast<std::size_t>(axis_dim)];
    const auto full_cells = static_cast<long long>(std::floor((hi - lo) / cell_width));
    if (full_cells < 1) {
        // Axis extent below one cell: the whole chunk is one clique.
        for (std::size_t i = 0; i < chunk.members.size(); ++i)
            out[chunk.at[i]] = static_cast<int>(i & 1);
        return true;
    }
    // Count members per cell; every full cell needs at least two.
    std::vector<long long> count(static_cast<std::size_t>(full_cells) + 1, 0);
    std::vector<long long> cell_of(chunk.members.size());
    for (std::size_t i = 0; i < chunk.members.size(); ++i) {
        double a = ps.points[static_cast<std::size_t>(chunk.members[i])][static_cast<std::size_t>(axis_dim)];
        auto c = static_cast<long long>(std::floor((a - lo) / cell_width));
        c = std::clamp(c, 0LL, full_cells);  // trailing partial cell folds into index full_cells
        cell_of[i] = c;
        ++count[static_cast<std::size_t>(c)];
    }
    for (long long c = 0; c < full_cells; ++c)
        if (count[static_cast<std::size_t>(c)] < 2) return false;
    // Alternate inside each cell; members are axis-sorted, so a stable walk
    // per cell alternates deterministically.
    std::vector<long long> seen(static_cast<std::size_t>(full_cells) + 1, 0);
    for (std::size_t i = 0; i < chunk.members.size(); ++i) {
        auto c = static_cast<std::size_t>(cell_of[i]);
        out[chunk.at[i]] = static_cast<int>(seen[c] & 1);
        ++seen[c];
    }
    return true;
}

void solve_chunk_exact(const PointSet& ps, const Chunk& chunk, const Budget& budget,
                       std::vector<int>& out, bool& needed_three) {
    const std::size_t m = chunk.members.size();
    if (m == 1) {
        out[chunk.at[0]] = 0;
        return;
    }
    PointSet sub;
    sub.dim = ps.dim;
    sub.radius = ps.radius;
    sub.points.reserve(m);
    for (int id : chunk.members) sub.points.push_back(ps.points[static_cast<std::size_t>(id)]);
    const Graph g = build_geometric_graph(sub);
    const CliqueHypergraph hyper = enumerate_maximal_cliques(g, budget);

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> cdeg(m, 0);
    for (const auto& cl : hyper.cliques)
        if (cl.size() >= 2)
            for (int v : cl) ++cdeg[static_cast<std::size_t>(v)];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return cdeg[static_cast<std::size_t>(a)] != cdeg[static_cast<std::size_t>(b)]
                   ? cdeg[static_cast<std::size_t>(a)] > cdeg[static_cast<std::size_t>(b)]
                   : a < b;
    });

    HypergraphColourer solver(static_cast<int>(m), hyper.cliques);
    std::uint64_t nodes = 0;
    auto two = solver.solve(2, order, budget.max_nodes, nodes);
    const std::vector<int>* chosen = nullptr;
    std::optional<std::vector<int>> three;
    if (two) {
        chosen = &*two;
    } else {
        three = solver.solve(3, order, budget.max_nodes, nodes);
        if (!three)
            throw internal_error("strip/cylinder subproblem not 3-colourable; input violates the geometry");
        needed_three = true;
        chosen = &*three;
    }
    for (std::size_t i = 0; i < m; ++i) out[chunk.at[i]] = (*chosen)[i];
}

}  // namespace

GroupColouring colour_axis_group(const PointSet& ps, const std::vector<int>& members, int axis_dim,
                                 double safe_gap, const Budget& budget) {
    GroupColouring result;
    result.colours.assign(members.size(), 0);
    if (members.empty()) return result;

    std::vector<std::size_t> idx(members.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto axis_of = [&](std::size_t i) {
        return ps.points[static_cast<std::size_t>(members[i])][static_cast<std::size_t>(axis_dim)];
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        double xa = axis_of(a), xb = axis_of(b);
        if (xa != xb) return xa < xb;
        const auto& pa = ps.points[static_cast<std::size_t>(members[a])];
        const auto& pb = ps.points[static_cast<std::size_t>(members[b])];
        if (pa != pb) return pa < pb;
        return members[a] < members[b];
    });

    const double cell_width = safe_gap - ps.radius / 2;
    Chunk chunk;
    auto flush = [&]() {
        if (chunk.members.empty()) return;
        if (try_cell_certificate(ps, chunk, axis_dim, cell_width, result.colours)) {
            result.via_cells = true;
        } else {
            solve_chunk_exact(ps, chunk, budget, result.colours, result.needed_three);
        }
        chunk.members.clear();
        chunk.at.clear();
    };
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
        if (!chunk.members.empty()) {
            double prev =
                ps.points[static_cast<std::size_t>(chunk.members.back())][static_cast<std::size_t>(axis_dim)];
            if (axis_of(idx[pos]) - prev > ps.radius) flush();  // no edge crosses a gap wider than r
        }
        chunk.members.push_back(members[idx[pos]]);
        chunk.at.push_back(idx[pos]);
    }
    flush();
    return result;
}

}  // namespace geoclique::detail
