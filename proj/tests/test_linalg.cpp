#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/linalg.hpp"

#include <random>
#include <vector>

using namespace resgraph;

namespace {

RMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    RMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

RMatrix random_symmetric(std::mt19937& rng, Eigen::Index n, int lo, int hi) {
    std::uniform_int_distribution<int> entry(lo, hi);
    RMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) {
            m(i, j) = entry(rng);
            m(j, i) = m(i, j);
        }
    return m;
}

} // namespace

TEST_CASE("definiteness of fixed matrices") {
    CHECK(negative_definiteness(from_rows({{-1}})) == Definiteness::Definite);
    CHECK(negative_definiteness(from_rows({{0}})) == Definiteness::SemidefiniteDegenerate);
    CHECK(negative_definiteness(from_rows({{1}})) == Definiteness::Indefinite);
    CHECK(negative_definiteness(from_rows({{-2, 1}, {1, -2}})) == Definiteness::Definite);
    // affine A1: kernel (1,1)
    CHECK(negative_definiteness(from_rows({{-2, 2}, {2, -2}})) ==
          Definiteness::SemidefiniteDegenerate);
    CHECK(negative_definiteness(from_rows({{-2, 3}, {3, -2}})) == Definiteness::Indefinite);
    // triangle of (-2)-curves: eigenvalues 0, -3, -3
    CHECK(negative_definiteness(from_rows({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}})) ==
          Definiteness::SemidefiniteDegenerate);
    // zero diagonal with surviving off-diagonal entry: hyperbolic plane
    CHECK(negative_definiteness(from_rows({{0, 1}, {1, 0}})) == Definiteness::Indefinite);
    CHECK(negative_definiteness(from_rows({{0, 0}, {0, 0}})) ==
          Definiteness::SemidefiniteDegenerate);
}

TEST_CASE("pivot classification agrees with characteristic polynomial signs") {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> dim(1, 6);
    int seen[3] = {0, 0, 0};
    for (int trial = 0; trial < 300; ++trial) {
        const RMatrix m = random_symmetric(rng, dim(rng), -4, 4);
        const Definiteness got = negative_definiteness(m);
        REQUIRE(got == oracle::eigen_sign_class(m));
        ++seen[static_cast<int>(got)];
    }
    // -(A^T A + I) is always negative definite; -(A^T A) at least semidefinite
    std::uniform_int_distribution<int> dim2(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Index n = dim2(rng);
        const RMatrix a = random_symmetric(rng, n, -3, 3);
        const RMatrix nd = -(a.transpose() * a) - RMatrix::Identity(n, n);
        REQUIRE(negative_definiteness(nd) == Definiteness::Definite);
        const RMatrix ns = -(a.transpose() * a);
        const Definiteness got = negative_definiteness(ns);
        REQUIRE(got == oracle::eigen_sign_class(ns));
        REQUIRE(got != Definiteness::Indefinite);
        ++seen[static_cast<int>(got)];
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
}

TEST_CASE("solve matches Cramer's rule and leaves no residual") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> rhs(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 1 + trial % 5;
        const RMatrix a0 = random_symmetric(rng, n, -3, 3);
        const RMatrix a = -(a0.transpose() * a0) - RMatrix::Identity(n, n);
        RVector b(n);
        for (Eigen::Index i = 0; i < n; ++i) b(i) = rhs(rng);
        const RVector x = solve_negative_definite(a, b);
        REQUIRE(oracle::same(a * x, b));
        REQUIRE(oracle::same(x, oracle::cramer_solve(a, b)));
    }
}

TEST_CASE("solve rejects a singular system") {
    const RMatrix a = from_rows({{-2, 2}, {2, -2}});
    RVector b(2);
    b << 1, 0;
    CHECK_THROWS_AS(solve_negative_definite(a, b), DomainError);
}

TEST_CASE("kernel generator on corank-1 matrices") {
    const RVector k1 = kernel_generator(from_rows({{-2, 2}, {2, -2}}));
    REQUIRE(k1.size() == 2);
    CHECK(k1(0) == 1);
    CHECK(k1(1) == 1);

    const RVector k2 = kernel_generator(from_rows({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}));
    for (Eigen::Index i = 0; i < 3; ++i) CHECK(k2(i) == 1);

    // affine D4 tilde: central (-2) with four (-2) leaves, kernel (2,1,1,1,1)
    const RMatrix d4 = from_rows({{-2, 1, 1, 1, 1},
                                  {1, -2, 0, 0, 0},
                                  {1, 0, -2, 0, 0},
                                  {1, 0, 0, -2, 0},
                                  {1, 0, 0, 0, -2}});
    const RVector k3 = kernel_generator(d4);
    CHECK(k3(0) == 2);
    for (Eigen::Index i = 1; i < 5; ++i) CHECK(k3(i) == 1);

    CHECK_THROWS_AS(kernel_generator(from_rows({{-2, 1}, {1, -2}})), DomainError);
    CHECK_THROWS_AS(kernel_generator(from_rows({{1, 0}, {0, -1}})), DomainError);
}
