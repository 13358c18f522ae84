#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "okp/error.hpp"

namespace okp {

/// The circulant graph C_n^{1,...,r}: i ~ i +- d (mod n) for d = 1..r.
/// Requires 1 <= r and 2r < n, so the graph is simple and 2r-regular.
struct CirculantSpec {
    int n = 0;
    int r = 0;

    CirculantSpec() = default;
    CirculantSpec(int n_, int r_) : n(n_), r(r_) {
        if (r < 1 || 2 * r >= n) throw InputError("circulant graph needs 1 <= r and 2r < n");
    }

    long long edge_count() const { return static_cast<long long>(r) * n; }
};

template <typename Scalar = double>
using SpectrumVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// D_r(theta) = 1 + 2 sum_{k=1}^r cos(k theta).
template <typename Scalar>
Scalar dirichlet_kernel(int r, Scalar theta) {
    using std::cos;
    Scalar sum(1);
    for (int k = 1; k <= r; ++k) sum += Scalar(2) * cos(Scalar(k) * theta);
    return sum;
}

/// sin((r + 1/2) theta) / sin(theta / 2); undefined at multiples of 2 pi.
template <typename Scalar>
Scalar dirichlet_closed_form(int r, Scalar theta) {
    using std::sin;
    return sin((Scalar(r) + Scalar(0.5)) * theta) / sin(theta / Scalar(2));
}

/// lambda_j = 2 sum_{k=1}^r cos(2 pi j k / n) = D_r(2 pi j / n) - 1.
template <typename Scalar = double>
Scalar adjacency_eigenvalue(const CirculantSpec& spec, int j) {
    if (j < 0 || j >= spec.n) throw InputError("eigenvalue index out of range");
    if (j == 0) return Scalar(2 * spec.r);
    const Scalar theta = Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(j) / Scalar(spec.n);
    return dirichlet_kernel<Scalar>(spec.r, theta) - Scalar(1);
}

template <typename Scalar = double>
SpectrumVector<Scalar> adjacency_spectrum(const CirculantSpec& spec) {
    SpectrumVector<Scalar> lambda(spec.n);
    for (int j = 0; j < spec.n; ++j) lambda(j) = adjacency_eigenvalue<Scalar>(spec, j);
    return lambda;
}

/// The graph is 2r-regular, so L = 2r I - A shares A's eigenvectors.
template <typename Scalar = double>
SpectrumVector<Scalar> laplacian_spectrum(const CirculantSpec& spec) {
    return (Scalar(2 * spec.r) - adjacency_spectrum<Scalar>(spec).array()).matrix();
}

template <typename Scalar = double>
Scalar laplacian_lambda_max(const CirculantSpec& spec) {
    return laplacian_spectrum<Scalar>(spec).maxCoeff();
}

/// mc(G) <= n * lambda_max(L) / 4.
double mohar_bound(const CirculantSpec& spec);

inline constexpr double kMercerC0 = -0.4344;

/// 1/r + C_0 - 8 pi / (2 (r + 1)).
double mercer_inner(int r);

/// min{-5/12, mercer_inner(r)} * r, a lower bound on min_theta D_r(theta).
/// Defined for r >= 2.
std::optional<double> mercer_min_bound(int r);

/// refined = false: (5r/8 + 76) n.
/// refined = true:  min(r n, (5r/8 + 1/4) n) when r >= 176, r n otherwise.
double lemma_maxcut_bound(const CirculantSpec& spec, bool refined);

struct Cut {
    std::vector<std::uint8_t> sides;
    long long value = 0;
};

long long cut_value(const CirculantSpec& spec, std::span<const std::uint8_t> sides);

inline constexpr int kMaxCutVertexLimit = 28;

/// Exhaustive maximum cut over the 2^(n-1) assignments with vertex 0 on
/// side 0, walked in Gray-code order with O(r) updates per step. Among
/// maximizers the lexicographically smallest side vector is returned,
/// independent of `workers`.
Cut exact_maxcut(const CirculantSpec& spec, int workers = 1);

enum class XorMode { cyclic, bounded };

/// sum_i sum_{j=-r}^{r} s_i xor s_{i+j}; cyclic wraps i+j mod n, bounded
/// drops offsets leaving [0, n-1].
long long xor_sum(std::span<const std::uint8_t> s, int r, XorMode mode);

/// Parses a string of '0'/'1' characters.
std::vector<std::uint8_t> parse_bits(std::string_view bits);

}  // namespace okp
