#include "geoclique/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "geoclique/errors.hpp"

namespace geoclique {

void PointSet::validate() const {
    if (dim < 1) throw invalid_input("point set: dimension must be >= 1");
    if (!(radius > 0)) throw invalid_input("point set: radius must be > 0");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw invalid_input("point set: dimension mismatch among points");
}

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

namespace {

// Bucket key for grid hashing: packs the per-axis cell indices.
struct CellKey {
    std::vector<std::int64_t> idx;
    bool operator==(const CellKey& o) const { return idx == o.idx; }
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto v : k.idx) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

using BucketMap = std::unordered_map<CellKey, std::vector<int>, CellKeyHash>;

BucketMap bucket_points(const PointSet& ps) {
    BucketMap buckets;
    buckets.reserve(ps.size() * 2 + 1);
    CellKey key;
    key.idx.resize(static_cast<std::size_t>(ps.dim));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (int d = 0; d < ps.dim; ++d)
            key.idx[static_cast<std::size_t>(d)] =
                static_cast<std::int64_t>(std::floor(ps.points[i][static_cast<std::size_t>(d)] / ps.radius));
        buckets[key].push_back(static_cast<int>(i));
    }
    return buckets;
}

// Visits each unordered close pair exactly once.
template <typename PairFn>
void for_each_close_pair(const PointSet& ps, PairFn&& fn) {
    const double r2 = ps.radius * ps.radius;
    BucketMap buckets = bucket_points(ps);
    const int dim = ps.dim;
    std::vector<std::int64_t> offset(static_cast<std::size_t>(dim), -1);
    CellKey other;
    other.idx.resize(static_cast<std::size_t>(dim));
    for (const auto& [key, ids] : buckets) {
        // within the bucket
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                if (squared_distance(ps.points[static_cast<std::size_t>(ids[a])],
                                     ps.points[static_cast<std::size_t>(ids[b])]) <= r2)
                    fn(ids[a], ids[b]);
        // against lexicographically larger neighbouring buckets
        std::fill(offset.begin(), offset.end(), -1);
        while (true) {
            // advance odometer
            int d = dim - 1;
            while (d >= 0 && offset[static_cast<std::size_t>(d)] == 1) {
                offset[static_cast<std::size_t>(d)] = -1;
                --d;
            }
            if (d < 0) break;
            ++offset[static_cast<std::size_t>(d)];
            bool lex_positive = false;
            for (int e = 0; e < dim; ++e) {
                if (offset[static_cast<std::size_t>(e)] != 0) {
                    lex_positive = offset[static_cast<std::size_t>(e)] > 0;
                    break;
                }
            }
            if (!lex_positive) continue;
            for (int e = 0; e < dim; ++e)
                other.idx[static_cast<std::size_t>(e)] =
                    key.idx[static_cast<std::size_t>(e)] + offset[static_cast<std::size_t>(e)];
            auto it = buckets.find(other);
            if (it == buckets.end()) continue;
            for (int i : ids)
                for (int j : it->second)
                    if (squared_distance(ps.points[static_cast<std::size_t>(i)],
                                         ps.points[static_cast<std::size_t>(j)]) <= r2)
                        fn(i, j);
        }
    }
}

}  // namespace

Graph build_geometric_graph(const PointSet& ps) {
    ps.validate();
    Graph g(static_cast<int>(ps.size()));
    for_each_close_pair(ps, [&](int i, int j) { g.add_edge(i, j); });
    return g;
}

std::size_t count_geometric_edges(const PointSet& ps) {
    ps.validate();
    std::size_t m = 0;
    for_each_close_pair(ps, [&](int, int) { ++m; });
    return m;
}

bool has_geometric_edge(const PointSet& ps) {
    ps.validate();
    const double r2 = ps.radius * ps.radius;
    const BucketMap buckets = bucket_points(ps);
    // any bucket with two points settles it; otherwise fall back to the
    // full pair scan (rare: at most one point per cell)
    for (const auto& [key, ids] : buckets) {
        (void)key;
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                if (squared_distance(ps.points[static_cast<std::size_t>(ids[a])],
                                     ps.points[static_cast<std::size_t>(ids[b])]) <= r2)
                    return true;
    }
    bool found = false;
    for_each_close_pair(ps, [&](int, int) { found = true; });
    return found;
}

PointSet read_points_csv(std::istream& in, double radius) {
    std::string line;
    if (!std::getline(in, line)) throw invalid_input("points csv: empty input");
    if (line.rfind("dim=", 0) != 0) throw invalid_input("points csv: expected header 'dim=d'");
    PointSet ps;
    try {
        ps.dim = std::stoi(line.substr(4));
    } catch (const std::exception&) {
        throw invalid_input("points csv: bad dimension in header");
    }
    ps.radius = radius;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> p;
        std::stringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) {
            try {
                p.push_back(std::stod(field));
            } catch (const std::exception&) {
                throw invalid_input("points csv: bad coordinate '" + field + "'");
            }
        }
        ps.points.push_back(std::move(p));
    }
    ps.validate();
    return ps;
}

PointSet read_points_csv_file(const std::string& path, double radius) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    return read_points_csv(in, radius);
}

void write_points_csv(const PointSet& ps, std::ostream& out) {
    out << "dim=" << ps.dim << '\n';
    out.precision(17);
    for (const auto& p : ps.points) {
        for (std::size_t d = 0; d < p.size(); ++d) {
            if (d) out << ',';
            out << p[d];
        }
        out << '\n';
    }
}

}  // namespace geoclique
