#include "geoclique/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "geoclique/errors.hpp"

namespace geoclique {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

}  // namespace

PointSet Embedding::as_point_set() const {
    PointSet ps;
    ps.dim = static_cast<int>(points.size());
    ps.points = points;
    ps.radius = threshold;
    return ps;
}

Embedding embed_graph(const Graph& g, double target_margin) {
    const int n = g.order();
    if (n < 2) throw invalid_input("embedding requires at least 2 vertices");

    Embedding emb;
    emb.threshold = kSqrt2;
    emb.points.assign(static_cast<std::size_t>(n),
                      std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) emb.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;

    // Place vertices from the last down to the third; each placement nudges
    // one unit vector inside the hyperplane sum(x)=1, and the cap keeps all
    // later (smaller-index) placements small enough that the triangle
    // inequality preserves the separations set up here.
    double cap = 0.25;  // any value < 1/||y|| works at the top level
    for (int m = n - 1; m >= 2; --m) {
        // y has sum 0 and y_m - y_i = -1 on edges im, +1 on non-edges.
        std::vector<double> z(static_cast<std::size_t>(m));
        double zsum = 0;
        for (int i = 0; i < m; ++i) {
            z[static_cast<std::size_t>(i)] = g.has_edge(i, m) ? -1.0 : 1.0;
            zsum += z[static_cast<std::size_t>(i)];
        }
        const double ym = zsum / (m + 1);
        double norm2 = ym * ym;
        for (int i = 0; i < m; ++i) {
            const double yi = ym - z[static_cast<std::size_t>(i)];
            norm2 += yi * yi;
        }
        const double norm = std::sqrt(norm2);
        const double eps = std::min(1.0 / (2 * norm), cap);
        const double delta = eps / norm;
        auto& x = emb.points[static_cast<std::size_t>(m)];
        x[static_cast<std::size_t>(m)] = 1.0 + delta * ym;
        for (int i = 0; i < m; ++i)
            x[static_cast<std::size_t>(i)] = delta * (ym - z[static_cast<std::size_t>(i)]);
        const double gap = std::min(std::sqrt(2.0 + delta) - kSqrt2, kSqrt2 - std::sqrt(2.0 - delta));
        cap = std::min(cap, gap / 2);
    }

    // Base pair: slide both endpoints along their connecting line inside
    // the hyperplane, together for an edge, apart otherwise.
    {
        const double t = std::min(0.05, cap);
        const double step = t / kSqrt2;  // per-coordinate move of (e1-e0)/sqrt(2)
        const double sgn = g.has_edge(0, 1) ? 1.0 : -1.0;
        emb.points[0][0] -= sgn * step;
        emb.points[0][1] += sgn * step;
        emb.points[1][0] += sgn * step;
        emb.points[1][1] -= sgn * step;
    }

    // Margin, side correctness and the hyperplane constraint.
    emb.margin = kSqrt2;
    for (int i = 0; i < n; ++i) {
        double rowsum = 0;
        for (double v : emb.points[static_cast<std::size_t>(i)]) rowsum += v;
        if (std::abs(rowsum - 1.0) > 1e-9)
            throw internal_error("embedding left the hyperplane sum(x)=1");
        for (int j = i + 1; j < n; ++j) {
            const double d = std::sqrt(squared_distance(emb.points[static_cast<std::size_t>(i)],
                                                        emb.points[static_cast<std::size_t>(j)]));
            if ((d < kSqrt2) != g.has_edge(i, j))
                throw internal_error("embedding placed a pair on the wrong side of the threshold");
            emb.margin = std::min(emb.margin, std::abs(d - kSqrt2));
        }
    }
    if (emb.margin < std::max(target_margin, 1e-9)) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "embedding margin %.3e below the requested tolerance",
                      emb.margin);
        throw margin_collapse(msg);
    }
    return emb;
}

}  // namespace geoclique
