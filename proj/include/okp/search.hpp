#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "okp/bounds.hpp"
#include "okp/error.hpp"
#include "okp/geometry.hpp"

namespace okp {

enum class SearchMode { general, bipartite_free, bipartite_alternating, bipartite_consecutive };

std::string_view to_string(SearchMode m);
std::optional<SearchMode> parse_search_mode(std::string_view s);

inline constexpr int kMaxSearchVertices = 12;

struct SearchOptions {
    std::uint64_t node_budget = 1'000'000'000;
    int workers = 1;
    // Prune with the floor of the best proven general upper bound for (n, k).
    bool use_bound_prune = true;
    // Feasible incumbent to start from; must match n and the mode's constraint.
    std::optional<ConvexGraph> warm_start;
};

struct SearchResult {
    int max_edges = 0;
    ConvexGraph witness;
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = false;
    int n = 0;
    int k = 0;
    SearchMode mode = SearchMode::general;
};

class SearchBudgetExceeded : public BudgetError {
public:
    explicit SearchBudgetExceeded(SearchResult incumbent);
    const SearchResult& incumbent() const { return incumbent_; }

private:
    SearchResult incumbent_;
};

/// Maximum number of edges of an outer k-planar graph on n <= 12 convex
/// points, optionally restricted to bichromatic edges of a free, alternating
/// or consecutive 2-coloring. Branch-and-bound over the chords ordered by
/// length then lexicographically; the returned witness is identical for any
/// worker count.
SearchResult max_edges(int n, int k, SearchMode mode, const SearchOptions& opts = {});

/// True when g is outer k-planar and has a coloring admissible for `mode`
/// that makes every edge bichromatic.
bool mode_admits(const ConvexGraph& g, int k, SearchMode mode);

struct PruneOptions {
    bool use_bound = true;
};

/// Admissible upper bound on the edge count of any feasible completion of
/// `state` by chords from `remaining`: the minimum of
///  (i)   |state| + |remaining|,
///  (ii)  floor of the best proven general upper bound for (n, k),
///  (iii) |state| + the largest number of remaining chords whose crossings
///        with `state` fit into the unused crossing capacity of `state`.
/// Remaining chords that can no longer be added are discarded first.
int upper_prune(int n, std::span<const Chord> state, std::span<const Chord> remaining, int k,
                const PruneOptions& opts = {});

/// Lexicographically least sorted edge list over the 2n dihedral relabelings.
std::vector<Chord> canonical_form(const ConvexGraph& g);

}  // namespace okp
