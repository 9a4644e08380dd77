#include "geoclique/exact.hpp"

#include <algorithm>
#include <numeric>

#include "geoclique/errors.hpp"
#include "hyper_colour.hpp"

namespace geoclique {

namespace {

// Local cliques of one component, vertices renumbered 0..nc-1.
std::vector<std::vector<int>> relabel_cliques(const std::vector<std::vector<int>>& cliques,
                                              const std::vector<int>& comp) {
    std::vector<std::vector<int>> local;
    for (const auto& cl : cliques) {
        if (cl.size() < 2) continue;
        if (!std::binary_search(comp.begin(), comp.end(), cl[0])) continue;
        std::vector<int> lc;
        lc.reserve(cl.size());
        for (int v : cl)
            lc.push_back(static_cast<int>(std::lower_bound(comp.begin(), comp.end(), v) - comp.begin()));
        local.push_back(std::move(lc));
    }
    return local;
}

}  // namespace

ExactResult clique_chromatic_number_exact(const Graph& g, const Budget& budget) {
    ExactResult result;
    result.witness.colours.assign(static_cast<std::size_t>(g.order()), 0);
    if (g.order() == 0) return result;

    const CliqueHypergraph hyper = enumerate_maximal_cliques(g, budget);
    std::uint64_t nodes = 0;

    for (const auto& comp : g.components()) {
        bool has_edge = false;
        for (int v : comp)
            if (g.degree(v) > 0) {
                has_edge = true;
                break;
            }
        if (!has_edge) continue;  // isolated vertex keeps colour 0

        const auto local = relabel_cliques(hyper.cliques, comp);
        const int nc = static_cast<int>(comp.size());
        std::vector<int> order(static_cast<std::size_t>(nc));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int da = g.degree(comp[static_cast<std::size_t>(a)]);
            int db = g.degree(comp[static_cast<std::size_t>(b)]);
            return da != db ? da > db : a < b;
        });

        detail::HypergraphColourer solver(nc, local);
        for (int k = 2; k <= nc; ++k) {
            auto assignment = solver.solve(k, order, budget.max_nodes, nodes);
            if (assignment) {
                for (int i = 0; i < nc; ++i)
                    result.witness.colours[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] =
                        (*assignment)[static_cast<std::size_t>(i)];
                result.chi_c = std::max(result.chi_c, k);
                break;
            }
            if (k == nc) throw internal_error("no clique colouring found with n colours");
        }
    }
    return result;
}

namespace {

class TransversalSolver {
  public:
    TransversalSolver(int n, std::vector<std::vector<int>> cliques, const Budget& budget)
        : n_(n), cliques_(std::move(cliques)), budget_(budget) {
        incident_.resize(static_cast<std::size_t>(n_));
        for (std::size_t q = 0; q < cliques_.size(); ++q)
            for (int v : cliques_[q]) incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(q));
    }

    int solve() {
        if (cliques_.empty()) return 0;
        cover_count_.assign(cliques_.size(), 0);
        best_ = n_;  // hitting every vertex always works
        search(0);
        return best_;
    }

  private:
    // Disjoint uncovered cliques give a lower bound on what is still needed.
    int lower_bound() const {
        int lb = 0;
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        for (std::size_t q = 0; q < cliques_.size(); ++q) {
            if (cover_count_[q] > 0) continue;
            bool disjoint = true;
            for (int v : cliques_[q])
                if (used[static_cast<std::size_t>(v)]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            ++lb;
            for (int v : cliques_[q]) used[static_cast<std::size_t>(v)] = 1;
        }
        return lb;
    }

    void search(int chosen) {
        if (++nodes_ > budget_.max_nodes)
            throw budget_exceeded("clique transversal exceeded the node budget");
        int target = -1;
        std::size_t smallest = static_cast<std::size_t>(n_) + 1;
        for (std::size_t q = 0; q < cliques_.size(); ++q) {
            if (cover_count_[q] == 0 && cliques_[q].size() < smallest) {
                smallest = cliques_[q].size();
                target = static_cast<int>(q);
            }
        }
        if (target < 0) {
            best_ = std::min(best_, chosen);
            return;
        }
        if (chosen + std::max(1, lower_bound()) >= best_) return;
        for (int v : cliques_[static_cast<std::size_t>(target)]) {
            for (int q : incident_[static_cast<std::size_t>(v)]) ++cover_count_[static_cast<std::size_t>(q)];
            search(chosen + 1);
            for (int q : incident_[static_cast<std::size_t>(v)]) --cover_count_[static_cast<std::size_t>(q)];
        }
    }

    int n_;
    std::vector<std::vector<int>> cliques_;
    Budget budget_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> cover_count_;
    int best_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

int clique_transversal_number(const Graph& g, const Budget& budget) {
    const CliqueHypergraph hyper = enumerate_maximal_cliques(g, budget);
    std::vector<std::vector<int>> nontrivial;
    for (const auto& cl : hyper.cliques)
        if (cl.size() >= 2) nontrivial.push_back(cl);
    TransversalSolver solver(g.order(), std::move(nontrivial), budget);
    return solver.solve();
}

}  // namespace geoclique
