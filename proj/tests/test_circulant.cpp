#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "okp/circulant.hpp"

using namespace okp;
using doctest::Approx;

TEST_SUITE("circulant") {

TEST_CASE("circulant parameters are validated") {
    CHECK_THROWS_AS(CirculantSpec(4, 2), InputError);
    CHECK_THROWS_AS(CirculantSpec(5, 0), InputError);
    CHECK(CirculantSpec(5, 2).edge_count() == 10);
}

TEST_CASE("dirichlet kernel") {
    CHECK(dirichlet_kernel(0, 1.3) == Approx(1.0));
    CHECK(dirichlet_kernel(3, 2 * std::numbers::pi / 7) == Approx(0.0).epsilon(1e-12));
    CHECK(dirichlet_kernel(3, 0.0) == Approx(7.0));
    for (int r = 0; r <= 30; ++r)
        for (int i = 1; i < 200; ++i) {
            double theta = 2 * std::numbers::pi * i / 200.0;
            CHECK(std::abs(dirichlet_kernel(r, theta) - dirichlet_closed_form(r, theta)) <= 1e-9);
        }
    float f = dirichlet_kernel<float>(2, 0.5F);
    CHECK(f == Approx(dirichlet_kernel(2, 0.5)).epsilon(1e-5));
}

TEST_CASE("eigenvalues") {
    CHECK(adjacency_eigenvalue(CirculantSpec(6, 1), 3) == Approx(-2.0));
    CHECK(adjacency_eigenvalue(CirculantSpec(6, 1), 0) == 2.0);
    CHECK(adjacency_eigenvalue(CirculantSpec(8, 2), 1) == Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(adjacency_eigenvalue(CirculantSpec(8, 2), 8), InputError);
    CHECK(laplacian_lambda_max(CirculantSpec(6, 1)) == Approx(4.0));
    CHECK(laplacian_lambda_max(CirculantSpec(5, 1)) == Approx(3.618034).epsilon(1e-6));
    CHECK(laplacian_lambda_max(CirculantSpec(9, 2)) == Approx(6.0));
}

TEST_CASE("spectrum matches a dense eigensolver") {
    for (int n = 3; n <= 16; ++n)
        for (int r = 1; 2 * r < n; ++r) {
            CirculantSpec spec(n, r);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(oracle::circulant_adjacency(n, r));
            Eigen::VectorXd ours = adjacency_spectrum(spec);
            std::sort(ours.data(), ours.data() + n);
            CHECK((ours - solver.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-9);
        }
}

TEST_CASE("mohar and lemma bounds") {
    CHECK(mohar_bound(CirculantSpec(6, 1)) == Approx(6.0));
    CHECK(mohar_bound(CirculantSpec(5, 1)) == Approx(4.522542).epsilon(1e-6));
    CHECK(mohar_bound(CirculantSpec(12, 2)) >= exact_maxcut(CirculantSpec(12, 2)).value);
    CHECK(lemma_maxcut_bound(CirculantSpec(10, 2), false) == Approx(772.5));
    CHECK(lemma_maxcut_bound(CirculantSpec(10, 2), true) == Approx(20.0));
    CHECK(lemma_maxcut_bound(CirculantSpec(1000, 200), true) == Approx(125250.0));
}

TEST_CASE("mercer") {
    CHECK(mercer_inner(176) == Approx(-0.499715).epsilon(1e-5));
    CHECK_FALSE(mercer_min_bound(1).has_value());
    CHECK(*mercer_min_bound(2) == Approx(-8.24638).epsilon(1e-5));
    // A lower bound on the minimum of D_r over a fine grid.
    for (int r = 2; r <= 60; ++r) {
        double lo = 1e9;
        for (int i = 1; i < 4000; ++i) lo = std::min(lo, dirichlet_kernel(r, 2 * std::numbers::pi * i / 4000.0));
        CHECK(*mercer_min_bound(r) <= lo);
    }
}

TEST_CASE("exact max cut") {
    CHECK(exact_maxcut(CirculantSpec(6, 1)).value == 6);
    CHECK(exact_maxcut(CirculantSpec(5, 1)).value == 4);
    CHECK(exact_maxcut(CirculantSpec(8, 2)).value == 12);
    CHECK(exact_maxcut(CirculantSpec(12, 2)).value == 18);
    CHECK_THROWS_AS(exact_maxcut(CirculantSpec(29, 2)), BudgetError);
    for (int n = 3; n <= 14; ++n)
        for (int r = 1; 2 * r < n; ++r) {
            CirculantSpec spec(n, r);
            auto cut = exact_maxcut(spec, 1);
            CHECK(cut.value == oracle::brute_maxcut(n, r));
            CHECK(cut_value(spec, cut.sides) == cut.value);
            CHECK(cut.sides[0] == 0);
            auto par = exact_maxcut(spec, 4);
            CHECK(par.sides == cut.sides);
            CHECK(par.value == cut.value);
        }
}

TEST_CASE("cut value invariances") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 5 + static_cast<int>(rng() % 20);
        int r = 1 + static_cast<int>(rng() % ((n - 1) / 2));
        CirculantSpec spec(n, r);
        std::vector<std::uint8_t> s(n);
        for (auto& b : s) b = rng() & 1U;
        long long v = cut_value(spec, s);
        auto flipped = s;
        for (auto& b : flipped) b ^= 1U;
        CHECK(cut_value(spec, flipped) == v);
        std::vector<std::uint8_t> rot(n);
        for (int i = 0; i < n; ++i) rot[(i + 1) % n] = s[i];
        CHECK(cut_value(spec, rot) == v);
        CHECK(xor_sum(s, r, XorMode::cyclic) == 2 * v);
        CHECK(xor_sum(s, r, XorMode::bounded) <= xor_sum(s, r, XorMode::cyclic));
    }
}

TEST_CASE("xor sum") {
    CHECK(xor_sum(parse_bits("0101"), 1, XorMode::cyclic) == 8);
    CHECK(xor_sum(parse_bits("0000"), 1, XorMode::cyclic) == 0);
    CHECK(xor_sum(parse_bits("0000"), 3, XorMode::bounded) == 0);
    CHECK(xor_sum(parse_bits("0011"), 1, XorMode::bounded) == 2);
    CHECK_THROWS_AS(parse_bits("01a"), InputError);
}

}  // TEST_SUITE
