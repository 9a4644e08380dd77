#include "geoclique/cliques.hpp"

#include <algorithm>

#include "bit_rows.hpp"
#include "geoclique/errors.hpp"

namespace geoclique {

namespace {

using detail::BitRows;

// Pivoting recursion over bitset candidate/exclude sets.
class Enumerator {
  public:
    Enumerator(const BitRows& adj, const Budget& budget, std::uint64_t& nodes,
               std::vector<std::vector<int>>& out, const std::vector<int>& global_ids)
        : adj_(adj),
          words_(adj.words()),
          budget_(budget),
          nodes_(nodes),
          out_(out),
          ids_(global_ids) {}

    void run() {
        const int n = adj_.size();
        std::vector<std::uint64_t> p(static_cast<std::size_t>(words_), 0);
        std::vector<std::uint64_t> x(static_cast<std::size_t>(words_), 0);
        for (int v = 0; v < n; ++v) p[static_cast<std::size_t>(v >> 6)] |= 1ULL << (v & 63);
        current_.clear();
        expand(p.data(), x.data(), 0);
    }

  private:
    std::uint64_t* level_buffer(int depth) {
        if (scratch_.size() <= static_cast<std::size_t>(depth))
            scratch_.resize(static_cast<std::size_t>(depth) + 1,
                            std::vector<std::uint64_t>(static_cast<std::size_t>(2 * words_)));
        return scratch_[static_cast<std::size_t>(depth)].data();
    }

    void expand(std::uint64_t* p, std::uint64_t* x, int depth) {
        if (++nodes_ > budget_.max_nodes)
            throw budget_exceeded("clique enumeration exceeded the node budget");
        if (!detail::any_words(p, words_) && !detail::any_words(x, words_)) {
            if (out_.size() >= budget_.max_cliques)
                throw budget_exceeded("clique enumeration exceeded the clique budget");
            std::vector<int> clique;
            clique.reserve(current_.size());
            for (int v : current_) clique.push_back(ids_[static_cast<std::size_t>(v)]);
            std::sort(clique.begin(), clique.end());
            out_.push_back(std::move(clique));
            return;
        }
        // Pivot: vertex of P|X with the most candidates among its neighbours.
        int pivot = -1, best = -1;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t both = p[w] | x[w];
            while (both) {
                int v = w * 64 + std::countr_zero(both);
                both &= both - 1;
                int cnt = detail::popcount_and(p, adj_.row(v), words_);
                if (cnt > best) {
                    best = cnt;
                    pivot = v;
                }
            }
        }
        std::uint64_t* childp = level_buffer(depth);
        std::uint64_t* childx = childp + words_;
        const std::uint64_t* pivot_row = adj_.row(pivot);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t cand = p[w] & ~pivot_row[w];
            while (cand) {
                int v = w * 64 + std::countr_zero(cand);
                cand &= cand - 1;
                const std::uint64_t* nv = adj_.row(v);
                for (int e = 0; e < words_; ++e) {
                    childp[e] = p[e] & nv[e];
                    childx[e] = x[e] & nv[e];
                }
                current_.push_back(v);
                expand(childp, childx, depth + 1);
                childp = level_buffer(depth);  // may have reallocated
                childx = childp + words_;
                current_.pop_back();
                p[w] &= ~(1ULL << (v & 63));
                x[w] |= 1ULL << (v & 63);
            }
        }
    }

    const BitRows& adj_;
    int words_;
    const Budget& budget_;
    std::uint64_t& nodes_;
    std::vector<std::vector<int>>& out_;
    const std::vector<int>& ids_;
    std::vector<std::vector<std::uint64_t>> scratch_;
    std::vector<int> current_;
};

constexpr int kMaxComponentForEnumeration = 1 << 15;

}  // namespace

CliqueHypergraph enumerate_maximal_cliques(const Graph& g, const Budget& budget) {
    CliqueHypergraph h;
    std::uint64_t nodes = 0;
    for (const auto& comp : g.components()) {
        if (comp.size() == 1) {
            h.cliques.push_back(comp);  // isolated vertex, flagged by size
            continue;
        }
        if (comp.size() > kMaxComponentForEnumeration)
            throw budget_exceeded("component too large for clique enumeration");
        const int nc = static_cast<int>(comp.size());
        BitRows adj(nc);
        for (int i = 0; i < nc; ++i) {
            for (int wglob : g.neighbours(comp[static_cast<std::size_t>(i)])) {
                auto it = std::lower_bound(comp.begin(), comp.end(), wglob);
                adj.set(i, static_cast<int>(it - comp.begin()));
            }
        }
        Enumerator e(adj, budget, nodes, h.cliques, comp);
        e.run();
    }
    return h;
}

}  // namespace geoclique
