#include "geoclique/small_graphs.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "geoclique/errors.hpp"

namespace geoclique {

namespace {

constexpr int kMaxN = 7;

int edge_bit(int n, int i, int j) {  // requires i < j
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::array<int, kMaxN> adjacency_masks(int n, SmallGraphCode code) {
    std::array<int, kMaxN> adj{};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (code >> edge_bit(n, i, j) & 1) {
                adj[static_cast<std::size_t>(i)] |= 1 << j;
                adj[static_cast<std::size_t>(j)] |= 1 << i;
            }
    return adj;
}

// Maximal cliques as vertex bitmasks; singletons only for isolated vertices.
void maximal_clique_masks(int n, const std::array<int, kMaxN>& adj, std::vector<int>& out) {
    out.clear();
    const int full = (1 << n) - 1;
    for (int s = 1; s <= full; ++s) {
        bool clique = true;
        for (int m = s; m && clique;) {
            int v = std::countr_zero(static_cast<unsigned>(m));
            m &= m - 1;
            if ((adj[static_cast<std::size_t>(v)] & s) != (s & ~(1 << v))) clique = false;
        }
        if (!clique) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w)
            if (!(s >> w & 1) && (adj[static_cast<std::size_t>(w)] & s) == s) maximal = false;
        if (maximal) out.push_back(s);
    }
}

bool two_colourable(int n, const std::vector<int>& wide) {
    const int full = (1 << n) - 1;
    for (int s = 1; s <= full; s += 2) {  // vertex 0 always in s
        bool ok = true;
        for (int m : wide)
            if ((m & s) == m || (m & ~s & full) == m) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

struct KBacktracker {
    int n, k;
    const std::vector<int>* wide;
    std::array<int, kMaxN> colour;

    bool monochromatic_complete(int v) const {
        for (int m : *wide) {
            if (!(m >> v & 1)) continue;
            const int c0 = colour[static_cast<std::size_t>(v)];
            bool bad = true;
            for (int mm = m; mm;) {
                int w = std::countr_zero(static_cast<unsigned>(mm));
                mm &= mm - 1;
                if (colour[static_cast<std::size_t>(w)] != c0) {  // unassigned is -1
                    bad = false;
                    break;
                }
            }
            if (bad) return true;
        }
        return false;
    }

    bool rec(int v, int used) {
        if (v == n) return true;
        const int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            colour[static_cast<std::size_t>(v)] = c;
            if (!monochromatic_complete(v) && rec(v + 1, std::max(used, c + 1))) return true;
        }
        colour[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    bool solve() {
        colour.fill(-1);
        return rec(0, 0);
    }
};

int chi_of_clique_masks(int n, const std::vector<int>& cliques) {
    std::vector<int> wide;
    for (int m : cliques)
        if (std::popcount(static_cast<unsigned>(m)) >= 2) wide.push_back(m);
    if (wide.empty()) return 1;
    if (two_colourable(n, wide)) return 2;
    for (int k = 3; k <= n; ++k) {
        KBacktracker bt{n, k, &wide, {}};
        if (bt.solve()) return k;
    }
    throw internal_error("no clique colouring found in small-graph search");
}

struct PermTables {
    // For each permutation of the vertices, where each edge bit goes.
    std::vector<std::array<std::uint8_t, 21>> edge_maps;
};

const PermTables& perm_tables(int n) {
    static std::array<PermTables, kMaxN + 1> cache;
    static std::array<bool, kMaxN + 1> ready{};
    auto& t = cache[static_cast<std::size_t>(n)];
    if (!ready[static_cast<std::size_t>(n)]) {
        std::array<int, kMaxN> perm{};
        std::iota(perm.begin(), perm.begin() + n, 0);
        do {
            std::array<std::uint8_t, 21> map{};
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int pi = perm[static_cast<std::size_t>(i)], pj = perm[static_cast<std::size_t>(j)];
                    if (pi > pj) std::swap(pi, pj);
                    map[static_cast<std::size_t>(edge_bit(n, i, j))] =
                        static_cast<std::uint8_t>(edge_bit(n, pi, pj));
                }
            t.edge_maps.push_back(map);
        } while (std::next_permutation(perm.begin(), perm.begin() + n));
        ready[static_cast<std::size_t>(n)] = true;
    }
    return t;
}

bool has_triangle(int n, SmallGraphCode code) {
    auto adj = adjacency_masks(n, code);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((code >> edge_bit(n, i, j) & 1) &&
                (adj[static_cast<std::size_t>(i)] & adj[static_cast<std::size_t>(j)]))
                return true;
    return false;
}

void check_n(int n) {
    if (n < 1 || n > kMaxN) throw invalid_input("small-graph search supports 1 <= n <= 7");
}

}  // namespace

Graph decode_small_graph(int n, SmallGraphCode code) {
    check_n(n);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (code >> edge_bit(n, i, j) & 1) g.add_edge(i, j);
    return g;
}

SmallGraphCode encode_small_graph(const Graph& g) {
    const int n = g.order();
    check_n(n);
    SmallGraphCode code = 0;
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbours(i))
            if (i < j) code |= 1u << edge_bit(n, i, j);
    return code;
}

SmallGraphCode canonical_small_code(int n, SmallGraphCode code) {
    check_n(n);
    const auto& tables = perm_tables(n);
    SmallGraphCode best = ~0u;
    for (const auto& map : tables.edge_maps) {
        SmallGraphCode permuted = 0;
        for (SmallGraphCode bits = code; bits;) {
            int e = std::countr_zero(bits);
            bits &= bits - 1;
            permuted |= 1u << map[static_cast<std::size_t>(e)];
        }
        best = std::min(best, permuted);
    }
    return best;
}

int chi_c_small(int n, SmallGraphCode code) {
    check_n(n);
    if (code == 0 || n == 1) return 1;
    auto adj = adjacency_masks(n, code);
    std::vector<int> cliques;
    maximal_clique_masks(n, adj, cliques);
    return chi_of_clique_masks(n, cliques);
}

ExhaustiveResult exhaustive_chi_c_max(int n, int jobs) {
    check_n(n);
    perm_tables(n);  // build the shared tables before workers start
    ExhaustiveResult result;
    result.n = n;
    const std::uint64_t total = 1ULL << (n * (n - 1) / 2);
    result.graphs_scanned = total;

    jobs = std::max(1, jobs);
    struct Part {
        int max_chi = 1;
        std::vector<SmallGraphCode> extremal;
    };
    std::vector<Part> parts(static_cast<std::size_t>(jobs));
    std::atomic<std::uint64_t> next_block{0};
    constexpr std::uint64_t kBlock = 1 << 14;

    auto worker = [&](int id) {
        auto& part = parts[static_cast<std::size_t>(id)];
        std::vector<int> cliques;
        while (true) {
            const std::uint64_t lo = next_block.fetch_add(kBlock);
            if (lo >= total) break;
            const std::uint64_t hi = std::min(total, lo + kBlock);
            for (std::uint64_t code = lo; code < hi; ++code) {
                const auto c = static_cast<SmallGraphCode>(code);
                int chi = 1;
                if (c != 0) {
                    auto adj = adjacency_masks(n, c);
                    maximal_clique_masks(n, adj, cliques);
                    chi = chi_of_clique_masks(n, cliques);
                }
                if (chi > part.max_chi) {
                    part.max_chi = chi;
                    part.extremal.clear();
                }
                if (chi == part.max_chi) part.extremal.push_back(c);
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
        for (auto& th : threads) th.join();
    }

    for (const auto& p : parts) result.max_chi_c = std::max(result.max_chi_c, p.max_chi);
    std::unordered_set<SmallGraphCode> canon;
    for (const auto& p : parts) {
        if (p.max_chi != result.max_chi_c) continue;
        for (SmallGraphCode c : p.extremal) canon.insert(canonical_small_code(n, c));
    }
    result.extremal.assign(canon.begin(), canon.end());
    std::sort(result.extremal.begin(), result.extremal.end());
    result.all_extremal_triangle_free = true;
    result.some_extremal_triangle_free = false;
    for (SmallGraphCode c : result.extremal) {
        if (has_triangle(n, c)) result.all_extremal_triangle_free = false;
        else result.some_extremal_triangle_free = true;
    }
    return result;
}

}  // namespace geoclique
