#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resgraph/classify.hpp"
#include "resgraph/errors.hpp"

#include <algorithm>

using namespace resgraph;
using Kind = SingularityClass::Kind;

TEST_CASE("Du Val graphs and their symbols") {
    CHECK(classify(chain_graph({2, 2, 2})).ade == "A3");
    CHECK(classify(star_graph(2, {{2}, {2}, {2}})).ade == "D4");
    CHECK(classify(star_graph(2, {{2}, {2}, {2, 2}})).ade == "D5");
    CHECK(classify(star_graph(2, {{2}, {2, 2}, {2, 2}})).ade == "E6");
    CHECK(classify(star_graph(2, {{2}, {2, 2}, {2, 2, 2}})).ade == "E7");
    CHECK(classify(star_graph(2, {{2}, {2, 2}, {2, 2, 2, 2}})).ade == "E8");
    const SingularityClass a1 = classify(chain_graph({2}));
    CHECK(a1.kind == Kind::DuVal);
    CHECK(a1.ade == "A1");
    CHECK(a1.index == 1);
}

TEST_CASE("log terminal chains carry their cyclic type") {
    const SingularityClass c = classify(chain_graph({4}));
    CHECK(c.kind == Kind::LogTerminalCyclic);
    REQUIRE(c.cyclic.has_value());
    CHECK(*c.cyclic == CyclicType{4, 1});
    CHECK(c.index == 2);

    const SingularityClass c2 = classify(chain_graph({3, 4, 2}));
    REQUIRE(c2.cyclic.has_value());
    CHECK(*c2.cyclic == CyclicType{19, 7});
}

TEST_CASE("log terminal quotients beyond chains") {
    const SingularityClass d = classify(star_graph(3, {{2}, {2}, {2}}));
    CHECK(d.kind == Kind::LogTerminalOther);
    CHECK(d.index > 1);
}

TEST_CASE("strictly log canonical shapes") {
    const SingularityClass se = classify(elliptic_vertex_graph(3));
    CHECK(se.kind == Kind::SimpleElliptic);
    CHECK(se.elliptic_weight == 3);
    CHECK(se.index == 1);

    const SingularityClass cu = classify(cycle_graph({2, 3}));
    CHECK(cu.kind == Kind::Cusp);
    CHECK(cu.index == 1);
    {
        std::vector<int> w = cu.cycle_weights;
        std::sort(w.begin(), w.end());
        CHECK(w == std::vector<int>{2, 3});
    }

    const SingularityClass fk = classify(fork_graph({4, 3}));
    CHECK(fk.kind == Kind::IndexTwoFork);
    CHECK(fk.index == 2);
    CHECK(fk.dv == DvKind::DV);
    {
        std::vector<int> spine = fk.spine;
        std::sort(spine.begin(), spine.end());
        CHECK(spine == std::vector<int>{3, 4});
    }

    const SingularityClass s3 = classify(star_graph(2, {{3}, {3}, {3}}));
    CHECK(s3.kind == Kind::IndexHighStar);
    CHECK(s3.star_index == 3);
    CHECK(s3.star_n == 2);
    CHECK(s3.index == 3);
    CHECK(s3.dv == DvKind::NDV);
    REQUIRE(s3.arm_types.size() == 3);
    for (const CyclicType& t : s3.arm_types) CHECK(t == CyclicType{3, 1});

    CHECK(classify(star_graph(2, {{2}, {4}, {4}})).star_index == 4);
    CHECK(classify(star_graph(2, {{2}, {3}, {6}})).star_index == 6);
    CHECK(classify(star_graph(3, {{2, 2}, {2, 2}, {2, 2}})).dv == DvKind::DV);
    CHECK(classify(star_graph(3, {{2}, {4}, {4}})).dv == DvKind::NDV);
    CHECK(classify(star_graph(3, {{2, 2}, {3}, {3}})).dv == DvKind::Mixed);

    // arm types are sorted and du val plus single-curve arms normalize
    const SingularityClass mx = classify(star_graph(3, {{2, 2, 2}, {4}, {2}}));
    CHECK(mx.kind == Kind::IndexHighStar);
    CHECK(mx.dv == DvKind::Mixed);
    CHECK(mx.arm_types == std::vector<CyclicType>{{2, 1}, {4, 1}, {4, 3}});
}

TEST_CASE("beyond log canonical") {
    // center 3 with three A3 arms: contractible, max coefficient 4/3
    CHECK(classify(star_graph(3, {{2, 2, 2}, {2, 2, 2}, {2, 2, 2}})).kind ==
          Kind::NotLogCanonical);
    const DualGraph bad({{"a", 3, 1}, {"b", 2}}, {{"a", "b"}});
    CHECK(classify(bad).kind == Kind::NotLogCanonical);
    CHECK_THROWS_AS(classify(cycle_graph({2, 2, 2})), NotContractible);
}

TEST_CASE("rationality") {
    CHECK(rationality(chain_graph({2, 2})));
    CHECK(rationality(chain_graph({4})));
    CHECK(rationality(fork_graph({4})));
    CHECK(rationality(star_graph(2, {{3}, {3}, {3}})));
    CHECK_FALSE(rationality(cycle_graph({2, 3})));
    CHECK_FALSE(rationality(elliptic_vertex_graph(2)));
}

TEST_CASE("smoothability of log terminal singularities") {
    const Verdict ak = smoothability(chain_graph({2, 2, 2}));
    CHECK(ak.status == Smoothability::Smoothable);
    REQUIRE(ak.mu.has_value());
    CHECK(*ak.mu == 3);

    const Verdict w4 = smoothability(chain_graph({4}));
    CHECK(w4.status == Smoothability::Smoothable);
    CHECK(*w4.mu == 0);

    const Verdict w83 = smoothability(chain_graph({3, 3}));
    CHECK(w83.status == Smoothability::Smoothable);
    CHECK(*w83.mu == 1);

    CHECK(smoothability(chain_graph({3})).status == Smoothability::NotSmoothable);
    CHECK(smoothability(chain_graph({5})).status == Smoothability::NotSmoothable);
    CHECK(smoothability(star_graph(3, {{2}, {2}, {2}})).status == Smoothability::NotSmoothable);
}

TEST_CASE("smoothability of simple elliptic and cusp singularities") {
    for (int n = 1; n <= 9; ++n)
        CHECK(smoothability(elliptic_vertex_graph(n)).status == Smoothability::Smoothable);
    CHECK(smoothability(elliptic_vertex_graph(10)).status == Smoothability::NotSmoothable);
    // simple elliptic verdicts carry no Milnor number (non-rational point)
    CHECK_FALSE(smoothability(elliptic_vertex_graph(5)).mu.has_value());

    // small cusp: open, large cusp: multiplicity beyond the bound
    CHECK(smoothability(cycle_graph({2, 3})).status == Smoothability::Unknown);
    CHECK(smoothability(cycle_graph({14, 2})).status == Smoothability::NotSmoothable);
}

TEST_CASE("smoothability of index-2 forks") {
    const Verdict f4 = smoothability(fork_graph({4}));
    CHECK(f4.status == Smoothability::Smoothable);
    REQUIRE(f4.mu.has_value());
    CHECK(*f4.mu == 3);

    CHECK(smoothability(fork_graph({6})).status == Smoothability::Smoothable);
    CHECK(smoothability(fork_graph({7})).status == Smoothability::NotSmoothable);

    const Verdict f43 = smoothability(fork_graph({4, 3}));
    CHECK(f43.status == Smoothability::Smoothable);
    CHECK(*f43.mu == 3);
    CHECK(smoothability(fork_graph({3, 3, 3})).status == Smoothability::Smoothable);
    CHECK(smoothability(fork_graph({3, 2, 3})).status == Smoothability::Smoothable);

    // sum(n_i - 3) > 3: the index-one cover is a cusp past the bound
    CHECK(smoothability(fork_graph({5, 5})).status == Smoothability::NotSmoothable);
    CHECK(smoothability(fork_graph({6, 4})).status == Smoothability::NotSmoothable);

    // admissible but not among the known constructions: left open
    CHECK(smoothability(fork_graph({4, 4, 4})).status == Smoothability::Unknown);
    CHECK(smoothability(fork_graph({6, 2})).status == Smoothability::Unknown);
}

TEST_CASE("smoothability of high-index stars") {
    CHECK(smoothability(star_graph(2, {{3}, {3}, {3}})).status == Smoothability::Smoothable);
    CHECK(*smoothability(star_graph(2, {{3}, {3}, {3}})).mu == 2);
    CHECK(smoothability(star_graph(4, {{3}, {3}, {3}})).status == Smoothability::Smoothable);
    CHECK(*smoothability(star_graph(4, {{3}, {3}, {3}})).mu == 0);
    CHECK(smoothability(star_graph(5, {{3}, {3}, {3}})).status == Smoothability::NotSmoothable);

    CHECK(*smoothability(star_graph(2, {{2}, {4}, {4}})).mu == 1);
    CHECK(smoothability(star_graph(4, {{2}, {4}, {4}})).status == Smoothability::NotSmoothable);

    CHECK(*smoothability(star_graph(2, {{2}, {3}, {6}})).mu == 0);
    CHECK(smoothability(star_graph(3, {{2}, {3}, {6}})).status == Smoothability::NotSmoothable);

    // Du Val or mixed arms never smooth at index >= 3
    CHECK(smoothability(star_graph(3, {{2, 2}, {2, 2}, {2, 2}})).status ==
          Smoothability::NotSmoothable);
    CHECK(smoothability(star_graph(3, {{2, 2}, {3}, {3}})).status ==
          Smoothability::NotSmoothable);
}

TEST_CASE("verdicts cite a criterion") {
    CHECK_FALSE(smoothability(chain_graph({4})).provenance.empty());
    CHECK_FALSE(smoothability(fork_graph({7})).provenance.empty());
    CHECK_FALSE(smoothability(elliptic_vertex_graph(3)).provenance.empty());
}

TEST_CASE("classification sweep over small graphs") {
    const SweepSummary s = classification_sweep(5, 4);
    CHECK(s.max_vertices == 5);
    CHECK(s.max_weight == 4);
    // chains: 3 + 9 + 27 + 81 + 243; forks: spine length 1 only
    CHECK(s.graphs == 363 + 3);
    CHECK(s.not_contractible == 1);  // the all-2 fork
    long long classified = 0;
    for (const auto& [kind, count] : s.by_kind) {
        CHECK(count > 0);
        classified += count;
    }
    CHECK(classified + s.not_contractible == s.graphs);
    CHECK(s.smoothable + s.not_smoothable + s.unknown == classified);
    CHECK(s.by_kind.count("DuVal"));
    CHECK(s.by_kind.count("LogTerminalCyclic"));
    CHECK(s.by_kind.count("IndexTwoFork"));
    CHECK(s.by_kind.at("DuVal") > 0);
    CHECK_THROWS_AS(classification_sweep(0, 4), DomainError);
    CHECK_THROWS_AS(classification_sweep(5, 1), DomainError);
}
