#include "okp/circulant.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace okp {

double mohar_bound(const CirculantSpec& spec) {
    return spec.n * laplacian_lambda_max<double>(spec) / 4.0;
}

double mercer_inner(int r) {
    if (r < 1) throw InputError("mercer_inner needs r >= 1");
    return 1.0 / r + kMercerC0 - 8.0 * std::numbers::pi / (2.0 * (r + 1));
}

std::optional<double> mercer_min_bound(int r) {
    if (r < 2) return std::nullopt;
    return std::min(-5.0 / 12.0, mercer_inner(r)) * r;
}

double lemma_maxcut_bound(const CirculantSpec& spec, bool refined) {
    const double n = spec.n;
    const double r = spec.r;
    if (!refined) return (5.0 * r / 8.0 + 76.0) * n;
    const double trivial = r * n;
    if (spec.r >= 176) return std::min(trivial, (5.0 * r / 8.0 + 0.25) * n);
    return trivial;
}

long long cut_value(const CirculantSpec& spec, std::span<const std::uint8_t> sides) {
    if (static_cast<int>(sides.size()) != spec.n) throw InputError("side vector length must equal n");
    long long value = 0;
    for (int i = 0; i < spec.n; ++i) {
        for (int d = 1; d <= spec.r; ++d) value += sides[i] != sides[(i + d) % spec.n];
    }
    return value;
}

namespace {

struct Best {
    long long value = -1;
    std::uint32_t lex_key = 0;  // s_0 is the most significant bit
    std::uint32_t mask = 0;     // bit i = side of vertex i

    void offer(long long v, std::uint32_t key, std::uint32_t m) {
        if (v > value || (v == value && key < lex_key)) {
            value = v;
            lex_key = key;
            mask = m;
        }
    }
};

// Enumerates all assignments of vertices 1..free_bits with vertices above
// free_bits fixed by `prefix` (already placed in `mask`) and vertex 0 on side 0.
Best scan_chunk(const CirculantSpec& spec, int free_bits, std::uint32_t mask) {
    const int n = spec.n;
    const int r = spec.r;
    auto side = [&](int v) { return (mask >> v) & 1U; };

    long long value = 0;
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= r; ++d) value += side(i) != side((i + d) % n);

    std::uint32_t key = 0;
    for (int i = 0; i < n; ++i) key |= side(i) << (n - 1 - i);

    Best best;
    best.offer(value, key, mask);
    const std::uint64_t steps = std::uint64_t{1} << free_bits;
    for (std::uint64_t g = 1; g < steps; ++g) {
        const int v = 1 + std::countr_zero(g);
        const unsigned sv = side(v);
        long long delta = 0;
        for (int d = 1; d <= r; ++d) {
            delta += side((v + d) % n) == sv ? 1 : -1;
            delta += side((v - d + n) % n) == sv ? 1 : -1;
        }
        mask ^= 1U << v;
        key ^= 1U << (n - 1 - v);
        value += delta;
        best.offer(value, key, mask);
    }
    return best;
}

}  // namespace

Cut exact_maxcut(const CirculantSpec& spec, int workers) {
    if (spec.n > kMaxCutVertexLimit) {
        throw BudgetError("exact_maxcut enumerates 2^(n-1) cuts; n=" + std::to_string(spec.n) +
                          " exceeds the limit of " + std::to_string(kMaxCutVertexLimit));
    }
    workers = std::max(1, workers);
    const int variable = spec.n - 1;  // vertices 1..n-1
    int prefix_bits = 0;
    while ((1 << prefix_bits) < 4 * workers && prefix_bits < variable && workers > 1) ++prefix_bits;
    const int free_bits = variable - prefix_bits;
    const int chunks = 1 << prefix_bits;

    std::vector<Best> results(chunks);
    auto run = [&](int worker) {
        for (int c = worker; c < chunks; c += workers) {
            std::uint32_t mask = static_cast<std::uint32_t>(c) << (1 + free_bits);
            results[c] = scan_chunk(spec, free_bits, mask);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    Best best;
    for (const auto& b : results) best.offer(b.value, b.lex_key, b.mask);

    Cut cut;
    cut.value = best.value;
    cut.sides.resize(spec.n);
    for (int i = 0; i < spec.n; ++i) cut.sides[i] = static_cast<std::uint8_t>((best.mask >> i) & 1U);
    return cut;
}

long long xor_sum(std::span<const std::uint8_t> s, int r, XorMode mode) {
    if (r < 1) throw InputError("xor_sum needs r >= 1");
    if (s.empty()) throw InputError("xor_sum needs a nonempty string");
    const long long n = static_cast<long long>(s.size());
    long long total = 0;
    for (long long i = 0; i < n; ++i) {
        for (long long j = -r; j <= r; ++j) {
            long long t = i + j;
            if (mode == XorMode::bounded) {
                if (t < 0 || t >= n) continue;
            } else {
                t = ((t % n) + n) % n;
            }
            total += s[i] ^ s[t];
        }
    }
    return total;
}

std::vector<std::uint8_t> parse_bits(std::string_view bits) {
    std::vector<std::uint8_t> s;
    s.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw InputError("bit string may contain only 0 and 1");
        s.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return s;
}

}  // namespace okp
