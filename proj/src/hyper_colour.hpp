#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geoclique/errors.hpp"

namespace geoclique::detail {

/// Backtracking k-colouring of a clique hypergraph: find an assignment of
/// colours 0..k-1 to vertices 0..n-1 so that no clique of size >= 2 ends up
/// monochromatic. Vertices are tried in the given order with the usual
/// first-use symmetry breaking; a branch dies the moment some clique is
/// completely assigned one colour. `nodes` accumulates assignments across
/// calls and is checked against max_nodes.
class HypergraphColourer {
  public:
    HypergraphColourer(int n, const std::vector<std::vector<int>>& cliques)
        : n_(n), cliques_(&cliques), incident_(static_cast<std::size_t>(n)) {
        for (std::size_t q = 0; q < cliques.size(); ++q) {
            if (cliques[q].size() < 2) continue;
            for (int v : cliques[q]) incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(q));
        }
    }

    std::optional<std::vector<int>> solve(int k, const std::vector<int>& order,
                                          std::uint64_t max_nodes, std::uint64_t& nodes) {
        k_ = k;
        order_ = &order;
        max_nodes_ = max_nodes;
        nodes_ = &nodes;
        colour_.assign(static_cast<std::size_t>(n_), -1);
        assigned_.assign(cliques_->size(), 0);
        per_colour_.assign(cliques_->size() * static_cast<std::size_t>(k), 0);
        if (recurse(0, 0)) return colour_;
        return std::nullopt;
    }

  private:
    bool recurse(std::size_t pos, int used) {
        if (pos == order_->size()) return true;
        const int v = (*order_)[pos];
        const int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (++*nodes_ > max_nodes_)
                throw budget_exceeded("exact colouring exceeded the node budget");
            if (assign(v, c)) {
                if (recurse(pos + 1, c == used ? used + 1 : used)) return true;
            }
            unassign(v, c);
        }
        return false;
    }

    // Returns false (leaving counts consistent for unassign) when some
    // clique becomes fully assigned and monochromatic.
    bool assign(int v, int c) {
        colour_[static_cast<std::size_t>(v)] = c;
        bool ok = true;
        for (int q : incident_[static_cast<std::size_t>(v)]) {
            auto qi = static_cast<std::size_t>(q);
            ++assigned_[qi];
            auto& cnt = per_colour_[qi * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
            ++cnt;
            if (cnt == static_cast<int>((*cliques_)[qi].size())) ok = false;
        }
        return ok;
    }

    void unassign(int v, int c) {
        for (int q : incident_[static_cast<std::size_t>(v)]) {
            auto qi = static_cast<std::size_t>(q);
            --assigned_[qi];
            --per_colour_[qi * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
        }
        colour_[static_cast<std::size_t>(v)] = -1;
    }

    int n_;
    int k_ = 0;
    const std::vector<std::vector<int>>* cliques_;
    const std::vector<int>* order_ = nullptr;
    std::vector<std::vector<int>> incident_;
    std::vector<int> colour_;
    std::vector<int> assigned_;
    std::vector<int> per_colour_;
    std::uint64_t max_nodes_ = 0;
    std::uint64_t* nodes_ = nullptr;
};

}  // namespace geoclique::detail
