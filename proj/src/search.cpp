#include "okp/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <cmath>
#include <string>
#include <thread>

namespace okp {

std::string_view to_string(SearchMode m) {
    switch (m) {
        case SearchMode::general: return "general";
        case SearchMode::bipartite_free: return "free";
        case SearchMode::bipartite_alternating: return "alternating";
        case SearchMode::bipartite_consecutive: return "consecutive";
    }
    return "?";
}

std::optional<SearchMode> parse_search_mode(std::string_view s) {
    if (s == "general" || s == "none") return SearchMode::general;
    if (s == "free") return SearchMode::bipartite_free;
    if (s == "alternating") return SearchMode::bipartite_alternating;
    if (s == "consecutive") return SearchMode::bipartite_consecutive;
    return std::nullopt;
}

SearchBudgetExceeded::SearchBudgetExceeded(SearchResult incumbent)
    : BudgetError("search node budget exceeded; best incumbent has " + std::to_string(incumbent.max_edges) +
                  " edges"),
      incumbent_(std::move(incumbent)) {}

std::vector<Chord> canonical_form(const ConvexGraph& g) {
    std::vector<Chord> best(g.edges().begin(), g.edges().end());
    std::vector<Chord> image;
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int shift = 0; shift < g.n(); ++shift) {
            image.clear();
            for (const auto& e : g.edges()) {
                image.emplace_back(dihedral_image(g.n(), e.a, shift, reflect),
                                   dihedral_image(g.n(), e.b, shift, reflect));
            }
            std::sort(image.begin(), image.end());
            if (image < best) best = image;
        }
    }
    return best;
}

namespace {

using Mask = std::uint64_t;

template <typename F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

inline Mask bit(int i) { return Mask{1} << i; }

// One branch-and-bound instance: a fixed candidate chord set on n points.
// Hull chords cross nothing and are always taken; diagonals are branched on
// in order of increasing length, then lexicographically.
struct Problem {
    int n = 0;
    int k = 0;
    std::vector<Chord> hull;
    std::vector<Chord> diag;
    std::vector<Mask> cross;
    int cap_bound = INT_MAX;
    std::optional<Coloring> coloring;
    bool rotation_invariant = false;

    int hull_count() const { return static_cast<int>(hull.size()); }
    Mask all() const { return diag.size() == 64 ? ~Mask{0} : bit(static_cast<int>(diag.size())) - 1; }

    ConvexGraph graph(Mask inc) const {
        std::vector<Chord> edges = hull;
        for_each_bit(inc, [&](int i) { edges.push_back(diag[i]); });
        return ConvexGraph(n, std::move(edges), coloring);
    }
};

Problem make_problem(int n, int k, std::vector<Chord> candidates, std::optional<Coloring> coloring,
                     int cap_bound) {
    Problem p;
    p.n = n;
    p.k = k;
    p.cap_bound = cap_bound;
    p.coloring = std::move(coloring);
    std::sort(candidates.begin(), candidates.end(), [n](const Chord& x, const Chord& y) {
        int lx = chord_length(n, x), ly = chord_length(n, y);
        return lx != ly ? lx < ly : x < y;
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) (is_hull_chord(n, c) ? p.hull : p.diag).push_back(c);
    if (p.diag.size() > 64) throw InputError("too many candidate diagonals");
    p.cross.assign(p.diag.size(), 0);
    for (std::size_t i = 0; i < p.diag.size(); ++i)
        for (std::size_t j = 0; j < p.diag.size(); ++j)
            if (i != j && chords_cross(n, p.diag[i], p.diag[j])) p.cross[i] |= bit(static_cast<int>(j));

    std::vector<Chord> sorted = candidates;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Chord> rotated;
    for (const auto& c : sorted) rotated.emplace_back((c.a + 1) % n, (c.b + 1) % n);
    std::sort(rotated.begin(), rotated.end());
    p.rotation_invariant = rotated == sorted;
    return p;
}

// Mutable search state over one Problem. cnt[i] is the number of included
// diagonals crossing included diagonal i.
class Explorer {
public:
    Explorer(const Problem& p, int incumbent, std::atomic<std::uint64_t>& nodes, std::uint64_t budget,
             std::atomic<bool>& abort)
        : p_(p), best_(incumbent), nodes_(nodes), budget_(budget), abort_(abort) {
        cnt_.fill(0);
    }

    // Adds diagonal j (which must be in avail) and returns the new avail mask.
    Mask include(int j, Mask& inc, Mask avail) {
        const int k = p_.k;
        Mask blocked = 0;
        cnt_[j] = std::popcount(p_.cross[j] & inc);
        for_each_bit(p_.cross[j] & inc, [&](int i) {
            if (++cnt_[i] == k) blocked |= p_.cross[i];
        });
        if (cnt_[j] == k) blocked |= p_.cross[j];
        inc |= bit(j);
        avail &= ~bit(j) & ~blocked;
        for_each_bit(avail & p_.cross[j], [&](int f) {
            if (std::popcount(p_.cross[f] & inc) > k) avail &= ~bit(f);
        });
        return avail;
    }

    void undo(int j, Mask inc_before) {
        for_each_bit(p_.cross[j] & inc_before, [&](int i) { --cnt_[i]; });
    }

    int bound(Mask inc, Mask avail) const {
        const int k = p_.k;
        const int base = p_.hull_count() + std::popcount(inc);
        int result = std::min(base + std::popcount(avail), p_.cap_bound);

        long long capacity = 0;
        for_each_bit(inc, [&](int i) { capacity += k - cnt_[i]; });
        std::array<int, 65> hist{};
        int free_count = 0;
        std::vector<int> heavy;  // weights above 64 are rare; bucket them separately
        for_each_bit(avail, [&](int f) {
            int w = std::popcount(p_.cross[f] & inc);
            if (w == 0) ++free_count;
            else if (w < 65) ++hist[w];
            else heavy.push_back(w);
        });
        int taken = free_count;
        for (int w = 1; w < 65 && capacity > 0; ++w) {
            if (hist[w] == 0) continue;
            long long t = std::min<long long>(hist[w], capacity / w);
            taken += static_cast<int>(t);
            capacity -= t * w;
            if (t < hist[w]) {
                capacity = 0;
                break;
            }
        }
        std::sort(heavy.begin(), heavy.end());
        for (int w : heavy) {
            if (capacity < w) break;
            capacity -= w;
            ++taken;
        }
        return std::min(result, base + taken);
    }

    void run(Mask inc, Mask avail) {
        if (aborted_) return;
        if ((++local_nodes_ & 0xFFF) == 0) flush();
        if (aborted_) return;

        // A diagonal crossing nothing that is included or still available can
        // be taken without affecting any other decision.
        for_each_bit(avail, [&](int f) {
            if ((p_.cross[f] & (inc | avail)) == 0) {
                inc |= bit(f);
                avail &= ~bit(f);
                cnt_[f] = 0;
            }
        });

        if (avail == 0) {
            int value = p_.hull_count() + std::popcount(inc);
            if (value > best_) {
                best_ = value;
                best_mask_ = inc;
                found_ = true;
            }
            return;
        }
        if (bound(inc, avail) <= best_) return;

        const int j = std::countr_zero(avail);
        Mask inc2 = inc;
        Mask avail2 = include(j, inc2, avail);
        run(inc2, avail2);
        undo(j, inc);
        run(inc, avail & ~bit(j));
    }

    void flush() {
        std::uint64_t total = nodes_.fetch_add(local_nodes_ - flushed_) + (local_nodes_ - flushed_);
        flushed_ = local_nodes_;
        if (total > budget_ || abort_.load(std::memory_order_relaxed)) {
            abort_.store(true);
            aborted_ = true;
        }
    }

    bool found() const { return found_; }
    bool aborted() const { return aborted_; }
    int best() const { return best_; }
    Mask best_mask() const { return best_mask_; }

private:
    const Problem& p_;
    std::array<int, 64> cnt_;
    int best_;
    Mask best_mask_ = 0;
    bool found_ = false;
    bool aborted_ = false;
    std::atomic<std::uint64_t>& nodes_;
    std::uint64_t budget_;
    std::atomic<bool>& abort_;
    std::uint64_t local_nodes_ = 0;
    std::uint64_t flushed_ = 0;
};

struct Incumbent {
    int value = -1;
    std::optional<ConvexGraph> witness;
};

Mask greedy(const Problem& p, Explorer& ex) {
    Mask inc = 0;
    Mask avail = p.all();
    while (avail) {
        int j = std::countr_zero(avail);
        avail = ex.include(j, inc, avail);
    }
    return inc;
}

// Root subtree: first_diag < 0 explores the whole tree; otherwise first_diag
// is the first included diagonal and every earlier diagonal is excluded.
struct Task {
    int problem = 0;
    int first_diag = -1;
};

struct TaskResult {
    bool found = false;
    int value = 0;
    Mask mask = 0;
};

std::vector<Task> root_tasks(const std::vector<Problem>& problems) {
    std::vector<Task> tasks;
    for (int pi = 0; pi < static_cast<int>(problems.size()); ++pi) {
        const auto& p = problems[pi];
        if (!p.rotation_invariant) {
            tasks.push_back({pi, -1});
            continue;
        }
        // Some rotation maps a shortest included diagonal of length L onto
        // {0, L+1}, the first length-L chord in branching order.
        for (int j = 0; j < static_cast<int>(p.diag.size()); ++j) {
            const Chord& c = p.diag[j];
            if (c.a == 0 && c.b == chord_length(p.n, c) + 1) tasks.push_back({pi, j});
        }
    }
    return tasks;
}

std::optional<Coloring> admissible_coloring(const ConvexGraph& g, SearchMode mode) {
    const int n = g.n();
    auto proper = [&](const Coloring& c) {
        return std::all_of(g.edges().begin(), g.edges().end(), [&](const Chord& e) { return c[e.a] != c[e.b]; });
    };
    switch (mode) {
        case SearchMode::general: return Coloring{};
        case SearchMode::bipartite_free: return bipartition(g);
        case SearchMode::bipartite_alternating: {
            if (n % 2 != 0) return std::nullopt;
            Coloring c(n);
            for (int v = 0; v < n; ++v) c[v] = static_cast<std::uint8_t>(v % 2);
            if (proper(c)) return c;
            return std::nullopt;
        }
        case SearchMode::bipartite_consecutive:
            for (int start = 0; start < n; ++start) {
                for (int size = 1; size < n; ++size) {
                    Coloring c(n, 1);
                    for (int i = 0; i < size; ++i) c[(start + i) % n] = 0;
                    if (proper(c)) return c;
                }
            }
            return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Chord> all_chords(int n) {
    std::vector<Chord> chords;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) chords.emplace_back(a, b);
    return chords;
}

std::vector<Chord> bichromatic(int n, const Coloring& c) {
    std::vector<Chord> chords;
    for (const auto& e : all_chords(n))
        if (c[e.a] != c[e.b]) chords.push_back(e);
    return chords;
}

std::uint32_t coloring_image(int n, std::uint32_t mask, int shift, bool reflect, bool swap) {
    std::uint32_t out = 0;
    for (int v = 0; v < n; ++v) {
        std::uint32_t c = ((mask >> v) & 1U) ^ (swap ? 1U : 0U);
        out |= c << dihedral_image(n, v, shift, reflect);
    }
    return out;
}

std::vector<Coloring> colorings_for(int n, SearchMode mode) {
    std::vector<Coloring> result;
    auto from_mask = [n](std::uint32_t mask) {
        Coloring c(n);
        for (int v = 0; v < n; ++v) c[v] = static_cast<std::uint8_t>((mask >> v) & 1U);
        return c;
    };
    switch (mode) {
        case SearchMode::general: break;
        case SearchMode::bipartite_alternating: {
            Coloring c(n);
            for (int v = 0; v < n; ++v) c[v] = static_cast<std::uint8_t>(v % 2);
            result.push_back(c);
            break;
        }
        case SearchMode::bipartite_consecutive:
            for (int s = 1; s <= n / 2; ++s) {
                Coloring c(n, 1);
                for (int v = 0; v < s; ++v) c[v] = 0;
                result.push_back(c);
            }
            break;
        case SearchMode::bipartite_free:
            for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                bool canonical = true;
                for (int reflect = 0; reflect < 2 && canonical; ++reflect)
                    for (int shift = 0; shift < n && canonical; ++shift)
                        for (int swap = 0; swap < 2 && canonical; ++swap)
                            if (coloring_image(n, mask, shift, reflect, swap) < mask) canonical = false;
                if (canonical) result.push_back(from_mask(mask));
            }
            break;
    }
    return result;
}

int bound_prune_cap(int n, int k) {
    auto best = bound_report(n, k).tightest_upper(BoundFamily::general);
    if (!best) return INT_MAX;
    return static_cast<int>(std::floor(*best + 1e-9));
}

}  // namespace

bool mode_admits(const ConvexGraph& g, int k, SearchMode mode) {
    return is_outer_k_planar(g, k) && admissible_coloring(g, mode).has_value();
}

int upper_prune(int n, std::span<const Chord> state, std::span<const Chord> remaining, int k,
                const PruneOptions& opts) {
    if (n < 3 || n > kMaxSearchVertices) throw InputError("upper_prune supports 3 <= n <= 12");
    if (k < 0) throw InputError("k must be nonnegative");
    std::vector<Chord> universe(state.begin(), state.end());
    universe.insert(universe.end(), remaining.begin(), remaining.end());
    for (const auto& c : universe) check_chord(n, c);
    const int cap = opts.use_bound ? bound_prune_cap(n, k) : INT_MAX;
    Problem p = make_problem(n, k, universe, std::nullopt, cap);

    std::vector<Chord> in_state(state.begin(), state.end());
    std::sort(in_state.begin(), in_state.end());
    in_state.erase(std::unique(in_state.begin(), in_state.end()), in_state.end());
    auto contains = [&](const Chord& c) { return std::binary_search(in_state.begin(), in_state.end(), c); };

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    Explorer ex(p, 0, nodes, UINT64_MAX, abort);
    Mask inc = 0;
    Mask avail = p.all();
    for (int j = 0; j < static_cast<int>(p.diag.size()); ++j) {
        if (!contains(p.diag[j])) continue;
        if (!(avail & bit(j))) throw InputError("state exceeds the crossing cap");
        avail = ex.include(j, inc, avail);
    }
    // State diagonals already over the cap are caught above; avail now holds
    // exactly the remaining diagonals that can still be added one at a time.
    return ex.bound(inc, avail);
}

SearchResult max_edges(int n, int k, SearchMode mode, const SearchOptions& opts) {
    if (n < 3 || n > kMaxSearchVertices) {
        throw InputError("max_edges supports 3 <= n <= " + std::to_string(kMaxSearchVertices));
    }
    if (k < 0) throw InputError("k must be nonnegative");
    if (mode == SearchMode::bipartite_alternating && n % 2 != 0) {
        throw InputError("alternating mode needs an even number of vertices");
    }

    const int cap = opts.use_bound_prune ? bound_prune_cap(n, k) : INT_MAX;
    std::vector<Problem> problems;
    if (mode == SearchMode::general) {
        problems.push_back(make_problem(n, k, all_chords(n), std::nullopt, cap));
    } else {
        for (auto& c : colorings_for(n, mode)) {
            auto cand = bichromatic(n, c);
            problems.push_back(make_problem(n, k, std::move(cand), std::move(c), cap));
        }
    }

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};

    Incumbent inc;
    for (const auto& p : problems) {
        Explorer ex(p, 0, nodes, UINT64_MAX, abort);
        Mask m = greedy(p, ex);
        int value = p.hull_count() + std::popcount(m);
        if (value > inc.value) {
            inc.value = value;
            inc.witness = p.graph(m);
        }
    }
    if (opts.warm_start) {
        const auto& w = *opts.warm_start;
        if (w.n() != n) throw InputError("warm start has a different vertex count");
        auto coloring = admissible_coloring(w, mode);
        if (!is_outer_k_planar(w, k) || !coloring) {
            throw InputError("warm start is not feasible for this k and mode");
        }
        if (static_cast<int>(w.edge_count()) > inc.value) {
            inc.value = static_cast<int>(w.edge_count());
            inc.witness = w.with_coloring(mode == SearchMode::general ? std::nullopt
                                                                      : std::optional<Coloring>(*coloring));
        }
    }

    const auto tasks = root_tasks(problems);
    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size() || abort.load()) return;
            const Problem& p = problems[tasks[t].problem];
            Explorer ex(p, inc.value, nodes, opts.node_budget, abort);
            Mask m = 0;
            Mask avail = p.all();
            if (tasks[t].first_diag >= 0) {
                const int j = tasks[t].first_diag;
                avail &= ~(bit(j) - 1);
                avail = ex.include(j, m, avail);
            }
            ex.run(m, avail);
            ex.flush();
            if (ex.found()) results[t] = {true, ex.best(), ex.best_mask()};
        }
    };
    const int workers = std::max(1, opts.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    SearchResult result;
    result.n = n;
    result.k = k;
    result.mode = mode;
    result.max_edges = inc.value;
    result.witness = *inc.witness;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (results[t].found && results[t].value > result.max_edges) {
            result.max_edges = results[t].value;
            result.witness = problems[tasks[t].problem].graph(results[t].mask);
        }
    }
    result.nodes_explored = nodes.load();
    result.proven_optimal = !abort.load();
    if (!result.proven_optimal) throw SearchBudgetExceeded(result);
    return result;
}

}  // namespace okp
