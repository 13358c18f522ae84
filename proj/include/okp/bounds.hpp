#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace okp {

enum class Validity {
    valid,           // the formula is a proven bound for this (n, k)
    conditional,     // holds subject to an unproven remark
    asymptotic,      // leading term only; lower-order terms dropped
    not_applicable,  // outside the formula's window; value is NaN
};

std::string_view to_string(Validity v);

struct BoundValue {
    double value = 0.0;
    Validity validity = Validity::not_applicable;
    std::string valid_when;
    std::string note;

    bool applicable() const { return validity != Validity::not_applicable; }
};

enum class GeneralVariant { lazy, common, local, direct, small_k };
enum class BipartiteVariant { lazy, common, local, small_k };
enum class BipartiteSetting { alternating, consecutive };
enum class CrossingFlavor { outer, outer_bipartite, multigraph_m2, multigraph_m2_bipartite };

std::string_view to_string(GeneralVariant v);
std::string_view to_string(BipartiteVariant v);
std::string_view to_string(BipartiteSetting s);
std::string_view to_string(CrossingFlavor f);

std::optional<GeneralVariant> parse_general_variant(std::string_view s);
std::optional<BipartiteVariant> parse_bipartite_variant(std::string_view s);

struct BoundOptions {
    // Threshold standing in for "sufficiently large k".
    int k_min = 176;
    // Use the -(2k+5) constant of the bipartite small-k statement instead of
    // the -(2k+6) its derivation ends with.
    bool strict_statement = false;
};

/// Infimum of the epsilon admissible in the direct density argument, i.e.
/// ((5*sqrt(2)/2)*sqrt(k) - 1) / (sqrt(2)*k - 2*sqrt(k)). Defined for k > 2.
std::optional<double> epsilon_for(int k);

BoundValue general_upper(int n, int k, GeneralVariant variant, const BoundOptions& opts = {});

/// Parameters of the K_x chain realizing general_lower.
struct KxChainParams {
    int x = 0;
    int blocks = 0;
    int n = 0;  // vertices actually used, <= requested n
    int k = 0;  // ((x-2)/2)^2, <= requested k
    long long edges = 0;
};

std::optional<KxChainParams> general_lower_params(int n, int k);

/// Edge count of the densest admissible K_x chain fitting (n, k). When (n, k)
/// is not itself admissible the largest admissible k' <= k and n' <= n are
/// used and the note says so.
BoundValue general_lower(int n, int k);

BoundValue crossing_lemma_lower(int n, double m, CrossingFlavor flavor);

BoundValue bipartite_upper(int n, int k, BipartiteVariant variant, const BoundOptions& opts = {});

BoundValue bipartite_lower(int n, int k, BipartiteSetting setting);

struct DegreeBounds {
    double general = 0.0;
    double bipartite = 0.0;
    bool bipartite_valid = false;  // k >= k_min
};

DegreeBounds maxmindeg_bound(int k, const BoundOptions& opts = {});

/// floor(2*sqrt(k+1)) + 1 colors.
int coloring_bound(int k);

/// Exact integer floor(sqrt(v)) for v >= 0.
long long isqrt(long long v);

enum class BoundKind { upper, lower };
enum class BoundFamily { general, bipartite };

std::string_view to_string(BoundKind k);
std::string_view to_string(BoundFamily f);

struct BoundEntry {
    std::string name;
    double value = 0.0;
    BoundKind kind = BoundKind::upper;
    BoundFamily family = BoundFamily::general;
    Validity validity = Validity::not_applicable;
    std::string valid_when;
    std::string source;
    std::string note;

    bool valid() const { return validity == Validity::valid; }
};

struct BoundReport {
    int n = 0;
    int k = 0;
    std::vector<BoundEntry> entries;

    const BoundEntry* find(std::string_view name) const;

    /// Every applicable upper bound dominates every applicable lower bound it
    /// covers (general uppers cover all lowers, bipartite uppers cover
    /// bipartite lowers).
    bool consistent() const;

    /// Smallest proven (validity == valid) upper bound covering the family;
    /// general bounds also cover the bipartite family.
    std::optional<double> tightest_upper(BoundFamily family) const;
};

BoundReport bound_report(int n, int k, const BoundOptions& opts = {});

}  // namespace okp
