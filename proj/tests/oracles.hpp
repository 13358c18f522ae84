#pragma once

// Independent reference implementations used only by the tests. None of
// these call into the code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "okp/geometry.hpp"

namespace okp::oracle {

struct Point {
    double x, y;
};

inline Point polygon_point(int n, int i) {
    double t = 2.0 * std::numbers::pi * i / n;
    return {std::cos(t), std::sin(t)};
}

inline double orient(Point p, Point q, Point r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

/// Proper intersection of the straight segments between regular-polygon
/// vertices, via orientation signs.
inline bool segments_cross(int n, Chord e1, Chord e2) {
    if (e1.shares_endpoint(e2)) return false;
    Point a = polygon_point(n, e1.a), b = polygon_point(n, e1.b);
    Point c = polygon_point(n, e2.a), d = polygon_point(n, e2.b);
    double o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    return (o1 > 0) != (o2 > 0) && (o3 > 0) != (o4 > 0);
}

inline std::vector<int> geometric_crossing_counts(int n, const std::vector<Chord>& edges) {
    std::vector<int> counts(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (i != j && segments_cross(n, edges[i], edges[j])) ++counts[i];
    return counts;
}

/// Crossing pairs of the complete convex graph, one 4-subset at a time.
inline long long complete_crossings_by_subsets(int n) {
    long long total = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    Chord six[6] = {{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}};
                    for (int i = 0; i < 6; ++i)
                        for (int j = i + 1; j < 6; ++j) total += segments_cross(n, six[i], six[j]);
                }
    return total;
}

inline long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

/// Removes a minimum degree vertex (smallest index on ties) by rescanning.
inline int naive_degeneracy(int n, const std::vector<Chord>& edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto e : edges) adj[e.a][e.b] = adj[e.b][e.a] = true;
    std::vector<bool> alive(n, true);
    int degeneracy = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_deg = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            int d = 0;
            for (int u = 0; u < n; ++u) d += alive[u] && adj[v][u];
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        degeneracy = std::max(degeneracy, best_deg);
        alive[best] = false;
    }
    return degeneracy;
}

inline bool feasible(int n, const std::vector<Chord>& edges, int k) {
    auto counts = geometric_crossing_counts(n, edges);
    return std::all_of(counts.begin(), counts.end(), [k](int c) { return c <= k; });
}

/// Largest feasible superset of `state` drawn from `extra`, by enumeration.
inline int best_completion(int n, const std::vector<Chord>& state, const std::vector<Chord>& extra, int k) {
    int best = -1;
    const std::uint32_t total = 1U << extra.size();
    for (std::uint32_t m = 0; m < total; ++m) {
        int size = static_cast<int>(state.size()) + std::popcount(m);
        if (size <= best) continue;
        std::vector<Chord> edges = state;
        for (std::size_t i = 0; i < extra.size(); ++i)
            if (m >> i & 1U) edges.push_back(extra[i]);
        if (feasible(n, edges, k)) best = size;
    }
    return best;
}

/// Maximum edge count over all diagonal subsets (all hull edges included).
/// Incremental crossing counts; practical up to n = 8.
inline int brute_max_edges(int n, int k, const std::vector<std::uint8_t>* coloring = nullptr) {
    std::vector<Chord> diag;
    int hull = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (coloring && (*coloring)[a] == (*coloring)[b]) continue;
            bool is_hull = b == a + 1 || (a == 0 && b == n - 1);
            if (is_hull) ++hull;
            else diag.push_back({a, b});
        }
    const int m = static_cast<int>(diag.size());
    std::vector<std::uint32_t> cross(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && segments_cross(n, diag[i], diag[j])) cross[i] |= 1U << j;
    int best = 0;
    for (std::uint32_t s = 0; s < (1U << m); ++s) {
        int size = std::popcount(s);
        if (size <= best) continue;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            if ((s >> i & 1U) && std::popcount(cross[i] & s) > k) ok = false;
        if (ok) best = size;
    }
    return hull + best;
}

/// Explicit adjacency matrix of C_n^{1..r}.
inline Eigen::MatrixXd circulant_adjacency(int n, int r) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= r; ++d) {
            a(i, (i + d) % n) = 1.0;
            a(i, (i - d + n) % n) = 1.0;
        }
    return a;
}

/// Maximum cut by evaluating x^T L x / 4 over every +-1 vector.
inline long long brute_maxcut(int n, int r) {
    Eigen::MatrixXd a = circulant_adjacency(n, r);
    long long best = 0;
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        long long cut = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (a(i, j) != 0.0 && ((m >> i) & 1U) != ((m >> j) & 1U)) ++cut;
        best = std::max(best, cut);
    }
    return best;
}

inline ConvexGraph random_graph(std::mt19937_64& rng, int n, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<Chord> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (keep(rng)) edges.emplace_back(a, b);
    return ConvexGraph(n, std::move(edges));
}

}  // namespace okp::oracle
