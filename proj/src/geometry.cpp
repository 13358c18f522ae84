#include "okp/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace okp {

void check_chord(int n, Chord e) {
    if (e.a < 0 || e.b >= n || e.a == e.b) {
        throw InputError("invalid chord {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                         "} for n=" + std::to_string(n));
    }
}

ConvexGraph::ConvexGraph(int n, std::vector<Chord> edges, std::optional<Coloring> coloring)
    : n_(n), edges_(std::move(edges)), coloring_(std::move(coloring)) {
    if (n_ < 2) throw InputError("vertex count must be at least 2");
    for (const auto& e : edges_) check_chord(n_, e);
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw InputError("duplicate edge");
    }
    if (coloring_) {
        if (static_cast<int>(coloring_->size()) != n_) throw InputError("coloring size must equal n");
        for (auto c : *coloring_) {
            if (c > 1) throw InputError("coloring values must be 0 or 1");
        }
    }
}

ConvexGraph ConvexGraph::complete(int n) {
    std::vector<Chord> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return ConvexGraph(n, std::move(edges));
}

ConvexGraph ConvexGraph::cycle(int n) {
    std::vector<Chord> edges;
    for (int a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
    return ConvexGraph(n, std::move(edges));
}

bool ConvexGraph::has_edge(Chord e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

ConvexGraph ConvexGraph::with_coloring(std::optional<Coloring> coloring) const {
    return ConvexGraph(n_, edges_, std::move(coloring));
}

bool ConvexGraph::coloring_is_proper() const {
    if (!coloring_) return false;
    return std::all_of(edges_.begin(), edges_.end(),
                       [&](const Chord& e) { return (*coloring_)[e.a] != (*coloring_)[e.b]; });
}

std::vector<std::vector<int>> ConvexGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return adj;
}

bool chords_cross(int n, Chord e1, Chord e2) {
    check_chord(n, e1);
    check_chord(n, e2);
    if (e1.shares_endpoint(e2)) return false;
    // a < b, so the open arc a -> b is the index range (a, b).
    bool c_inside = e1.a < e2.a && e2.a < e1.b;
    bool d_inside = e1.a < e2.b && e2.b < e1.b;
    return c_inside != d_inside;
}

int chord_length(int n, Chord e) {
    check_chord(n, e);
    int one_side = e.b - e.a - 1;
    int other_side = n - 2 - one_side;
    return std::min(one_side, other_side);
}

namespace {

constexpr int kPrefixLimit = 2048;

std::vector<int> crossing_counts_pairwise(const ConvexGraph& g) {
    const auto edges = g.edges();
    std::vector<int> counts(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (chords_cross(g.n(), edges[i], edges[j])) {
                ++counts[i];
                ++counts[j];
            }
        }
    }
    return counts;
}

}  // namespace

std::vector<int> crossing_counts(const ConvexGraph& g) {
    const int n = g.n();
    const auto edges = g.edges();
    if (n > kPrefixLimit || edges.size() < static_cast<std::size_t>(4 * n)) return crossing_counts_pairwise(g);

    // Edge (a, b) is crossed by every edge with one endpoint strictly inside
    // (a, b) and the other outside [a, b]: two rectangle sums over the
    // symmetric adjacency matrix.
    const int w = n + 1;
    std::vector<std::int32_t> sum(static_cast<std::size_t>(w) * w, 0);
    auto at = [&](int i, int j) -> std::int32_t& { return sum[static_cast<std::size_t>(i) * w + j]; };
    for (const auto& e : edges) {
        at(e.a + 1, e.b + 1) = 1;
        at(e.b + 1, e.a + 1) = 1;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) at(i, j) += at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);
    // Rows [r0, r1), columns [c0, c1).
    auto rect = [&](int r0, int r1, int c0, int c1) {
        if (r0 >= r1 || c0 >= c1) return 0;
        return at(r1, c1) - at(r0, c1) - at(r1, c0) + at(r0, c0);
    };

    std::vector<int> counts(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int a = edges[i].a, b = edges[i].b;
        counts[i] = rect(a + 1, b, 0, a) + rect(a + 1, b, b + 1, n);
    }
    return counts;
}

std::int64_t crossing_pair_count(const ConvexGraph& g) {
    auto counts = crossing_counts(g);
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}) / 2;
}

int max_crossing(const ConvexGraph& g) {
    auto counts = crossing_counts(g);
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

bool is_outer_k_planar(const ConvexGraph& g, int k) {
    if (k < 0) throw InputError("k must be nonnegative");
    return max_crossing(g) <= k;
}

std::vector<Chord> hull_edges(const ConvexGraph& g) {
    std::vector<Chord> hull;
    for (const auto& e : g.edges()) {
        if (is_hull_chord(g.n(), e)) hull.push_back(e);
    }
    return hull;
}

DegeneracyOrder degeneracy_order(const ConvexGraph& g) {
    const int n = g.n();
    auto adj = g.adjacency();
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());

    // (degree, vertex) ordering gives the smallest-index tie break for free.
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> heap;
    for (int v = 0; v < n; ++v) heap.emplace(degree[v], v);

    std::vector<bool> removed(n, false);
    DegeneracyOrder result;
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != degree[v]) continue;
        removed[v] = true;
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, d);
        for (int u : adj[v]) {
            if (!removed[u]) heap.emplace(--degree[u], u);
        }
    }
    return result;
}

GreedyColoring greedy_color(const ConvexGraph& g) {
    const int n = g.n();
    auto adj = g.adjacency();
    auto order = degeneracy_order(g).order;

    GreedyColoring result;
    result.colors.assign(n, -1);
    std::vector<bool> used;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        used.assign(adj[v].size() + 1, false);
        for (int u : adj[v]) {
            int c = result.colors[u];
            if (c >= 0 && c < static_cast<int>(used.size())) used[c] = true;
        }
        int c = 0;
        while (used[c]) ++c;
        result.colors[v] = c;
        result.count = std::max(result.count, c + 1);
    }
    return result;
}

std::optional<Coloring> bipartition(const ConvexGraph& g) {
    const int n = g.n();
    auto adj = g.adjacency();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (int u : adj[v]) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    frontier.push(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return Coloring(side.begin(), side.end());
}

ConvexGraph relabel_dihedral(const ConvexGraph& g, int shift, bool reflect) {
    const int n = g.n();
    std::vector<Chord> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        edges.emplace_back(dihedral_image(n, e.a, shift, reflect), dihedral_image(n, e.b, shift, reflect));
    }
    std::optional<Coloring> coloring;
    if (g.coloring()) {
        coloring = Coloring(n);
        for (int v = 0; v < n; ++v) (*coloring)[dihedral_image(n, v, shift, reflect)] = (*g.coloring())[v];
    }
    return ConvexGraph(n, std::move(edges), std::move(coloring));
}

}  // namespace okp
