#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "okp/error.hpp"

namespace okp {

/// Unordered vertex pair, stored with a < b.
struct Chord {
    int a = 0;
    int b = 0;

    Chord() = default;
    Chord(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

    bool has_endpoint(int v) const { return a == v || b == v; }
    bool shares_endpoint(const Chord& other) const {
        return has_endpoint(other.a) || has_endpoint(other.b);
    }

    auto operator<=>(const Chord&) const = default;
};

using Coloring = std::vector<std::uint8_t>;

/// Straight-line drawing on n points in convex position. Vertices are the
/// cyclic positions 0..n-1; no coordinates are kept. The edge list is
/// always sorted and duplicate free.
class ConvexGraph {
public:
    ConvexGraph() = default;
    explicit ConvexGraph(int n, std::vector<Chord> edges = {},
                         std::optional<Coloring> coloring = std::nullopt);

    static ConvexGraph complete(int n);
    static ConvexGraph cycle(int n);

    int n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Chord> edges() const { return edges_; }
    const std::optional<Coloring>& coloring() const { return coloring_; }

    bool has_edge(Chord e) const;
    ConvexGraph with_coloring(std::optional<Coloring> coloring) const;

    /// True when a coloring is attached and every edge is bichromatic.
    bool coloring_is_proper() const;

    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const ConvexGraph&) const = default;

private:
    int n_ = 0;
    std::vector<Chord> edges_;
    std::optional<Coloring> coloring_;
};

void check_chord(int n, Chord e);

/// Endpoints strictly interleave in cyclic order. Chords with a shared
/// endpoint never cross.
bool chords_cross(int n, Chord e1, Chord e2);

/// Number of vertices the chord splits off on its smaller side.
int chord_length(int n, Chord e);

inline bool is_hull_chord(int n, Chord e) { return chord_length(n, e) == 0; }

/// Per-edge crossing counts, aligned with G.edges().
std::vector<int> crossing_counts(const ConvexGraph& g);

std::int64_t crossing_pair_count(const ConvexGraph& g);

int max_crossing(const ConvexGraph& g);

bool is_outer_k_planar(const ConvexGraph& g, int k);

std::vector<Chord> hull_edges(const ConvexGraph& g);

struct DegeneracyOrder {
    std::vector<int> order;  // removal order
    int degeneracy = 0;
};

DegeneracyOrder degeneracy_order(const ConvexGraph& g);

struct GreedyColoring {
    std::vector<int> colors;
    int count = 0;
};

/// Greedy coloring along the reverse degeneracy order.
GreedyColoring greedy_color(const ConvexGraph& g);

/// A proper 2-coloring (vertex 0 of each component gets color 0), if one exists.
std::optional<Coloring> bipartition(const ConvexGraph& g);

/// Image of vertex v under the dihedral map v -> (sign*v + shift) mod n,
/// sign in {+1,-1}.
inline int dihedral_image(int n, int v, int shift, bool reflect) {
    int w = reflect ? (n - v) % n : v;
    return (w + shift) % n;
}

ConvexGraph relabel_dihedral(const ConvexGraph& g, int shift, bool reflect);

}  // namespace okp
