#include "okp/constructions.hpp"

#include <algorithm>
#include <string>

namespace okp {

namespace {

void require_hull_edge(const ConvexGraph& g, Chord e, const char* which) {
    check_chord(g.n(), e);
    if (!g.has_edge(e) || !is_hull_chord(g.n(), e)) {
        throw InputError(std::string(which) + " is not a hull edge of its graph");
    }
}

// Vertices of g met when walking from e.a to e.b the long way round,
// endpoints excluded.
std::vector<int> long_arc(int n, Chord e) {
    std::vector<int> arc;
    if (e.b == e.a + 1) {
        for (int v = (e.a - 1 + n) % n; v != e.b; v = (v - 1 + n) % n) arc.push_back(v);
    } else {
        for (int v = e.a + 1; v < e.b; ++v) arc.push_back(v);
    }
    return arc;
}

}  // namespace

ConvexGraph concatenate(const ConvexGraph& g1, Chord e1, const ConvexGraph& g2, Chord e2) {
    require_hull_edge(g1, e1, "e1");
    require_hull_edge(g2, e2, "e2");

    const int n1 = g1.n();
    const int n2 = g2.n();
    const int n = n1 + n2 - 2;
    const bool wrap = e1.b != e1.a + 1;

    std::vector<int> map1(n1);
    std::vector<int> map2(n2, -1);
    std::vector<int> arc = long_arc(n2, e2);
    if (!wrap) {
        for (int w = 0; w < n1; ++w) map1[w] = w <= e1.a ? w : w + (n2 - 2);
        for (std::size_t i = 0; i < arc.size(); ++i) map2[arc[i]] = e1.a + 1 + static_cast<int>(i);
    } else {
        // Appended after n1-1, so the arc is walked from e2.b back to e2.a.
        for (int w = 0; w < n1; ++w) map1[w] = w;
        std::reverse(arc.begin(), arc.end());
        for (std::size_t i = 0; i < arc.size(); ++i) map2[arc[i]] = n1 + static_cast<int>(i);
    }
    map2[e2.a] = map1[e1.a];
    map2[e2.b] = map1[e1.b];

    std::vector<Chord> edges;
    edges.reserve(g1.edge_count() + g2.edge_count());
    for (const auto& e : g1.edges()) edges.emplace_back(map1[e.a], map1[e.b]);
    for (const auto& e : g2.edges()) edges.emplace_back(map2[e.a], map2[e.b]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::optional<Coloring> coloring;
    if (g1.coloring() && g2.coloring()) {
        const auto& c1 = *g1.coloring();
        const auto& c2 = *g2.coloring();
        bool same_a = c1[e1.a] == c2[e2.a];
        bool same_b = c1[e1.b] == c2[e2.b];
        if (same_a == same_b) {
            coloring = Coloring(n);
            for (int w = 0; w < n1; ++w) (*coloring)[map1[w]] = c1[w];
            for (int w = 0; w < n2; ++w) {
                (*coloring)[map2[w]] = same_a ? c2[w] : static_cast<std::uint8_t>(1 - c2[w]);
            }
        }
    }
    return ConvexGraph(n, std::move(edges), std::move(coloring));
}

ConvexGraph kx_chain(int x, int blocks) {
    if (x < 3) throw InputError("kx_chain requires x >= 3");
    if (blocks < 1) throw InputError("kx_chain requires blocks >= 1");
    const ConvexGraph block = ConvexGraph::complete(x);
    ConvexGraph g = block;
    for (int i = 1; i < blocks; ++i) g = concatenate(g, Chord(0, g.n() - 1), block, Chord(0, x - 1));
    return g;
}

ConvexGraph kxx_alternating(int x) {
    if (x < 1) throw InputError("kxx_alternating requires x >= 1");
    const int n = 2 * x;
    std::vector<Chord> edges;
    for (int a = 0; a < n; a += 2)
        for (int b = 1; b < n; b += 2) edges.emplace_back(a, b);
    Coloring coloring(n);
    for (int v = 0; v < n; ++v) coloring[v] = static_cast<std::uint8_t>(v % 2);
    return ConvexGraph(n, std::move(edges), std::move(coloring));
}

ConvexGraph kxx_chain(int x, int copies) {
    if (x < 2) throw InputError("kxx_chain requires x >= 2");
    if (copies < 1) throw InputError("kxx_chain requires at least one copy");
    const ConvexGraph block = kxx_alternating(x);
    ConvexGraph g = block;
    // {0, n-1} joins an even and an odd position, so it is always bichromatic.
    for (int i = 1; i < copies; ++i) g = concatenate(g, Chord(0, g.n() - 1), block, Chord(0, 2 * x - 1));
    return g;
}

int OuterCopyGraph::max_multiplicity() const {
    if (!outside.empty()) return 2;
    return inside.empty() ? 0 : 1;
}

std::vector<int> OuterCopyGraph::inside_crossings() const {
    return crossing_counts(ConvexGraph(base.n(), inside));
}

std::vector<int> OuterCopyGraph::outside_crossings() const {
    return crossing_counts(ConvexGraph(base.n(), outside));
}

int OuterCopyGraph::max_crossing() const {
    int best = 0;
    for (int c : inside_crossings()) best = std::max(best, c);
    for (int c : outside_crossings()) best = std::max(best, c);
    return best;
}

OuterCopyGraph outercopy(const ConvexGraph& g) {
    OuterCopyGraph result{g, {}, {}};
    result.inside.assign(g.edges().begin(), g.edges().end());
    for (const auto& e : g.edges()) {
        if (!is_hull_chord(g.n(), e)) result.outside.push_back(e);
    }
    return result;
}

}  // namespace okp
