#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/invariants.hpp"

#include <algorithm>
#include <random>

using namespace resgraph;

TEST_CASE("codiscrepancy vanishes exactly on Du Val graphs") {
    for (const DualGraph& g : {chain_graph({2}), chain_graph({2, 2, 2}),
                               star_graph(2, {{2}, {2}, {2, 2}}),
                               star_graph(2, {{2}, {2, 2}, {2, 2, 2, 2}})}) {
        const Codiscrepancy d = codiscrepancy(g);
        CHECK(d.max_coeff == 0);
        CHECK(d.k2 == 0);
        CHECK(d.index == 1);
        CHECK(d.log_terminal());
    }
}

TEST_CASE("codiscrepancy of single-vertex chains") {
    // chain [r]: delta = (r-2)/r, K^2 = -(r-2)^2/r
    for (int r = 3; r <= 9; ++r) {
        const Codiscrepancy d = codiscrepancy(chain_graph({r}));
        CHECK(d.delta(0) == Rational(r - 2, r));
        CHECK(d.k2 == -Rational((r - 2) * (r - 2), r));
        CHECK(d.max_coeff == Rational(r - 2, r));
        CHECK(d.log_terminal());
        CHECK(d.index == Int(r / std::gcd(r, r - 2)));
    }
    CHECK(codiscrepancy(chain_graph({4})).index == 2);
}

TEST_CASE("codiscrepancy solves the adjunction system") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> weight(2, 6), len(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> w(static_cast<size_t>(len(rng)));
        for (int& x : w) x = weight(rng);
        const DualGraph g = chain_graph(w);
        const Codiscrepancy d = codiscrepancy(g);
        const RMatrix m = intersection_matrix_q(g);
        RVector b(g.size());
        for (Eigen::Index i = 0; i < g.size(); ++i)
            b(i) = 2 - 2 * g.vertex(i).genus - g.vertex(i).weight;
        REQUIRE(oracle::same(m * d.delta, b));
        REQUIRE(oracle::same(d.delta, oracle::cramer_solve(m, b)));
        for (Eigen::Index i = 0; i < g.size(); ++i) CHECK(d.delta(i) >= 0);
        CHECK(d.k2 == (d.delta.transpose() * b)(0, 0));
        CHECK(d.k2 <= 0);
        CHECK(denominator_lcm(d.delta) == d.index);
    }
}

TEST_CASE("codiscrepancy refuses non-contractible graphs") {
    CHECK_THROWS_AS(codiscrepancy(cycle_graph({2, 2, 2})), NotContractible);
    CHECK_THROWS_AS(codiscrepancy(fork_graph({2})), NotContractible);
    CHECK_THROWS_AS(codiscrepancy(star_graph(2, {{2, 2}, {2, 2}, {2, 2}})), NotContractible);
}

TEST_CASE("strictly log canonical markers") {
    const Codiscrepancy fork4 = codiscrepancy(fork_graph({4}));
    CHECK(fork4.max_coeff == 1);
    CHECK(fork4.log_canonical());
    CHECK_FALSE(fork4.log_terminal());
    CHECK(fork4.index == 2);
    CHECK(fork4.k2 == -2);

    const Codiscrepancy cusp = codiscrepancy(cycle_graph({2, 3}));
    CHECK(cusp.max_coeff == 1);
    CHECK(cusp.index == 1);
    CHECK(cusp.k2 == -1);

    const Codiscrepancy ell = codiscrepancy(elliptic_vertex_graph(5));
    CHECK(ell.max_coeff == 1);
    CHECK(ell.k2 == -5);

    // a genus-1 curve inside a chain fails log canonicity
    const DualGraph bad({{"a", 3, 1}, {"b", 2}}, {{"a", "b"}});
    CHECK(codiscrepancy(bad).max_coeff > 1);
}

TEST_CASE("closed forms for integral strictly-lc K^2") {
    CHECK(k2_closed_form(GraphShape::forked_chain({4})) == Rational(-2));
    CHECK(k2_closed_form(GraphShape::forked_chain({3, 3, 3})) == Rational(-3));
    CHECK(k2_closed_form(GraphShape::forked_chain({2, 2, 5, 2, 2})) == Rational(-3));
    // Du Val arms: -(n-2)
    CHECK(k2_closed_form(GraphShape::star(3, {{2, 2}, {2, 2}, {2, 2}})) == Rational(-1));
    CHECK(k2_closed_form(GraphShape::star(4, {{2}, {2, 2, 2}, {2, 2, 2}})) == Rational(-2));
    // single-curve arms: -(n - 9 + sum r_i)
    CHECK(k2_closed_form(GraphShape::star(2, {{3}, {3}, {3}})) == Rational(-2));
    CHECK(k2_closed_form(GraphShape::star(3, {{2}, {4}, {4}})) == Rational(-4));
    CHECK(k2_closed_form(GraphShape::star(2, {{2}, {3}, {6}})) == Rational(-4));
    // mixed arm pattern: non-integral, no closed form
    CHECK_FALSE(k2_closed_form(GraphShape::star(3, {{2, 2}, {3}, {3}})).has_value());
    CHECK_THROWS_AS(k2_closed_form(GraphShape::chain({4})), ShapeMismatch);

    // closed forms agree with the definitional computation
    const std::vector<GraphShape> shapes = {
        GraphShape::forked_chain({4}),      GraphShape::forked_chain({3, 3, 3}),
        GraphShape::forked_chain({5, 2}),   GraphShape::star(3, {{2, 2}, {2, 2}, {2, 2}}),
        GraphShape::star(2, {{3}, {3}, {3}}), GraphShape::star(3, {{2}, {4}, {4}}),
        GraphShape::star(2, {{2}, {3}, {6}}),
    };
    for (const GraphShape& s : shapes) {
        const std::optional<Rational> closed = k2_closed_form(s);
        REQUIRE(closed.has_value());
        CHECK(*closed == codiscrepancy(build_graph(s)).k2);
    }
    // mixed: the definitional K^2 is genuinely non-integral
    const Codiscrepancy mixed = codiscrepancy(build_graph(GraphShape::star(3, {{2, 2}, {3}, {3}})));
    CHECK(mixed.max_coeff == 1);
    CHECK_FALSE(is_integer(mixed.k2));
    CHECK(mixed.k2 == Rational(-7, 3));
}

TEST_CASE("arm contributions to the adjunction bookkeeping") {
    CHECK(chain_delta_contribution(ArmKind::DuValChain, 1) == Rational(1, 2));
    CHECK(chain_delta_contribution(ArmKind::DuValChain, 3) == Rational(3, 4));
    CHECK(chain_delta_contribution(ArmKind::SingleVertex, 3) == Rational(0));
    CHECK(chain_delta_contribution(ArmKind::SingleVertex, 4) == Rational(-3, 4));
    CHECK(chain_delta_contribution(ArmKind::SingleVertex, 6) == Rational(-5, 2));
}

TEST_CASE("fundamental cycle on classical graphs") {
    // A_n: the reduced cycle
    const FundamentalCycle an = fundamental_cycle(chain_graph({2, 2, 2, 2}));
    for (Eigen::Index i = 0; i < 4; ++i) CHECK(an.z(i) == 1);
    CHECK(an.z2 == -2);
    CHECK(an.pa == 0);
    CHECK(an.mult == 2);
    CHECK(an.rational);

    // E8: multiset of coefficients {2,2,3,3,4,4,5,6}
    const DualGraph e8 = star_graph(2, {{2}, {2, 2}, {2, 2, 2, 2}});
    const FundamentalCycle fe8 = fundamental_cycle(e8);
    std::vector<Int> coeffs;
    for (Eigen::Index i = 0; i < e8.size(); ++i) coeffs.push_back(numerator(fe8.z(i)));
    std::sort(coeffs.begin(), coeffs.end());
    CHECK(coeffs == std::vector<Int>{2, 2, 3, 3, 4, 4, 5, 6});
    CHECK(fe8.z2 == -2);
    CHECK(fe8.pa == 0);

    // index-2 fork: reduced cycle, multiplicity 4
    const FundamentalCycle ff = fundamental_cycle(fork_graph({4}));
    for (Eigen::Index i = 0; i < 5; ++i) CHECK(ff.z(i) == 1);
    CHECK(ff.z2 == -4);
    CHECK(ff.mult == 4);
    CHECK(ff.rational);

    // cusp: p_a = 1, multiplicity clamped at 2
    const FundamentalCycle fc = fundamental_cycle(cycle_graph({2, 3}));
    CHECK(fc.z2 == -1);
    CHECK(fc.pa == 1);
    CHECK_FALSE(fc.rational);
    CHECK(fc.mult == 2);

    // p_a recomputed by adjunction matches
    for (const DualGraph& g : {chain_graph({3, 2, 5}), fork_graph({3, 3}), cycle_graph({4, 3})}) {
        const FundamentalCycle f = fundamental_cycle(g);
        CHECK(arithmetic_genus(g, f.z) == f.pa);
    }
}

TEST_CASE("fundamental cycle is the lattice minimum") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> weight(2, 4);
    std::vector<DualGraph> graphs;
    for (int len = 1; len <= 4; ++len)
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<int> w(static_cast<size_t>(len));
            for (int& x : w) x = weight(rng);
            graphs.push_back(chain_graph(w));
        }
    graphs.push_back(star_graph(2, {{2}, {2}, {2, 2}}));
    graphs.push_back(star_graph(3, {{2}, {2}, {2}}));
    graphs.push_back(fork_graph({3}));
    graphs.push_back(cycle_graph({2, 3}));
    for (const DualGraph& g : graphs) {
        const FundamentalCycle f = fundamental_cycle(g);
        const auto brute = oracle::bruteforce_fundamental_cycle(intersection_matrix_q(g), 8);
        REQUIRE(brute.has_value());
        REQUIRE(oracle::same(f.z, *brute));
    }
}

TEST_CASE("Milnor numbers") {
    for (int k = 1; k <= 6; ++k) {
        const MilnorNumber m = milnor_number(chain_graph(std::vector<int>(k, 2)));
        CHECK(m.integral);
        CHECK(m.value == k);
    }
    const MilnorNumber e8 = milnor_number(star_graph(2, {{2}, {2, 2}, {2, 2, 2, 2}}));
    CHECK(e8.value == 8);

    // Wahl chains: mu = d - 1
    CHECK(milnor_number(chain_graph({4})).value == 0);
    CHECK(milnor_number(chain_graph({5, 2})).value == 0);
    CHECK(milnor_number(chain_graph(to_chain({8, 3}))).value == 1);

    const MilnorNumber bad = milnor_number(chain_graph({3}));
    CHECK_FALSE(bad.integral);
    CHECK(bad.value == Rational(2, 3));
}

TEST_CASE("index-one cover bookkeeping") {
    const IndexOneCover f6 = index_one_cover_k2(GraphShape::forked_chain({6}), DvKind::DV, 2, 6);
    CHECK(f6.minus_k2 == 8);
    CHECK(f6.mult == 8);
    CHECK(f6.embdim == 8);

    const IndexOneCover f3 = index_one_cover_k2(GraphShape::forked_chain({3}), DvKind::DV, 2, 3);
    CHECK(f3.minus_k2 == 2);
    CHECK(f3.mult == 2);
    CHECK(f3.embdim == 3);

    const IndexOneCover s26 =
        index_one_cover_k2(GraphShape::star(2, {{2}, {3}, {6}}), DvKind::NDV, 6, 2);
    CHECK(s26.minus_k2 == 6);

    const IndexOneCover dv3 =
        index_one_cover_k2(GraphShape::star(3, {{2, 2}, {2, 2}, {2, 2}}), DvKind::DV, 3, 3);
    CHECK(dv3.minus_k2 == 3);

    CHECK_THROWS_AS(index_one_cover_k2(GraphShape::forked_chain({4}), DvKind::DV, 3, 4),
                    ShapeMismatch);
    CHECK_THROWS_AS(index_one_cover_k2(GraphShape::chain({4}), DvKind::DV, 2, 4), ShapeMismatch);
    CHECK_THROWS_AS(index_one_cover_k2(GraphShape::forked_chain({4}), DvKind::Mixed, 2, 4),
                    DomainError);
}

TEST_CASE("T-singularity sweep bookkeeping") {
    const TSweep s = sweep_t_singularities(60);
    CHECK(s.max_r == 60);
    CHECK(s.k2_integral_iff_t);
    CHECK(s.du_val == 59);  // one du val chain per order r
    CHECK(s.types == s.du_val + s.t + s.not_t);
    CHECK(s.t == static_cast<long long>(s.t_types.size()));

    long long expected_types = 0;
    for (int r = 2; r <= 60; ++r)
        for (int q = 1; q < r; ++q)
            if (std::gcd(r, q) == 1) ++expected_types;
    CHECK(s.types == expected_types);

    const auto has = [&](int r, int q, int d, int n, int a) {
        for (const auto& [c, p] : s.t_types)
            if (c == CyclicType{r, q}) return p == TParams{d, n, a};
        return false;
    };
    CHECK(has(4, 1, 1, 2, 1));
    CHECK(has(9, 2, 1, 3, 1));
    CHECK(has(8, 3, 2, 2, 1));
    CHECK(has(25, 9, 1, 5, 2));

    CHECK_THROWS_AS(sweep_t_singularities(1), DomainError);
}

TEST_CASE("anticanonical defect") {
    // log terminal with integral K^2: 0
    CHECK(c_anticanonical(chain_graph({2, 2})) == 0);
    CHECK(c_anticanonical(chain_graph({4})) == 0);
    CHECK(c_anticanonical(chain_graph({3, 3})) == 0);
    CHECK(c_anticanonical(chain_graph({2, 5, 3})) == 0);
    CHECK(c_anticanonical(star_graph(2, {{2}, {2}, {2, 2, 2}})) == 0);
    // the vanishing needs K^2 integral: these log terminal values are sharp
    CHECK(c_anticanonical(chain_graph({3, 5})) == Rational(2) / 7);
    CHECK(c_anticanonical(star_graph(3, {{2}, {2}, {2}})) == Rational(-2) / 3);
    // strictly lc with Du Val arms: -1
    CHECK(c_anticanonical(fork_graph({4})) == -1);
    CHECK(c_anticanonical(fork_graph({3, 3})) == -1);
    CHECK(c_anticanonical(fork_graph({2, 2, 5, 2, 2})) == -1);
    CHECK(c_anticanonical(star_graph(3, {{2, 2}, {2, 2}, {2, 2}})) == -1);
    // strictly lc with single-curve arms: 0
    CHECK(c_anticanonical(star_graph(2, {{3}, {3}, {3}})) == 0);
    CHECK(c_anticanonical(star_graph(3, {{2}, {4}, {4}})) == 0);
    CHECK(c_anticanonical(star_graph(2, {{2}, {3}, {6}})) == 0);
    // non-rational or non-lc graphs are rejected
    CHECK_THROWS_AS(c_anticanonical(cycle_graph({2, 3})), DomainError);
    CHECK_THROWS_AS(c_anticanonical(elliptic_vertex_graph(3)), DomainError);
    const DualGraph bad({{"a", 3, 1}, {"b", 2}}, {{"a", "b"}});
    CHECK_THROWS_AS(c_anticanonical(bad), DomainError);
}
