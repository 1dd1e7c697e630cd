#include "gpc/constructions.hpp"
#include "gpc/error.hpp"
#include "gpc/isomorphism.hpp"
#include "gpc/powers.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gpc;

TEST(Power, MatchesWalkEnumeration) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracle::random_graph(rng, 4 + trial % 5, 0.4);
        for (int k = 1; k <= 5; ++k)
            EXPECT_EQ(oracle::adjacency(power(g, k)), oracle::walk_power(oracle::adjacency(g), k))
                << "trial " << trial << " k " << k;
    }
    EXPECT_THROW(power(cycle(5), 0), PreconditionError);
}

TEST(Power, CompleteGraphPowers) {
    EXPECT_EQ(power(complete(3), 2).loop_count(), 3u);
    EXPECT_EQ(power(complete(2), 2).size(), 2u);  // two loops, no edge
}

TEST(Subdivide, CountsAndIdentity) {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = oracle::random_graph(rng, 6, 0.5);
        EXPECT_EQ(subdivide(g, 1), g);
        for (int t : {2, 3, 4, 5}) {
            const auto s = subdivide(g, t);
            EXPECT_EQ(s.order(), g.order() + g.size() * static_cast<std::size_t>(t - 1));
            EXPECT_EQ(s.size(), g.size() * static_cast<std::size_t>(t));
        }
    }
}

TEST(Subdivide, OddCycleStretches) {
    for (int t : {1, 3, 5})
        EXPECT_EQ(odd_girth(subdivide(cycle(5), t)), OddGirth::finite(5 * static_cast<std::size_t>(t)));
}

TEST(Subdivide, InnerLabelScheme) {
    // s = 1: path 0 - (1,0)_1 - (0,1)_1 - 1, with (0,1)_1 two steps from 0
    const auto s = subdivide(complete(2), 3);
    ASSERT_EQ(s.order(), 4u);
    const auto u = s.index_of("0");
    const auto v = s.index_of("1");
    const auto uv = s.index_of("(0,1)_1");
    const auto vu = s.index_of("(1,0)_1");
    EXPECT_TRUE(s.adjacent(u, vu));
    EXPECT_TRUE(s.adjacent(vu, uv));
    EXPECT_TRUE(s.adjacent(uv, v));
    EXPECT_TRUE(s.label(uv).is_sub());
}

TEST(Subdivide, NestedSubdivisionKeepsLabelsUnique) {
    const auto twice = subdivide(subdivide(cycle(3), 3), 3);
    std::set<std::string> names(twice.names().begin(), twice.names().end());
    EXPECT_EQ(names.size(), twice.order());
    EXPECT_EQ(odd_girth(twice), OddGirth::finite(27));
}

TEST(Subdivide, RejectsLoops) { EXPECT_THROW(subdivide(power(complete(3), 2), 3), LoopError); }

TEST(FractionalPower, OddCyclePowersAreCircularComplete) {
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t < n; ++t)
            EXPECT_TRUE(are_isomorphic(fractional_power(cycle(2 * n + 1), {t, 0}), circular_complete(2 * n + 1, n - t)))
                << "n=" << n << " t=" << t;
}

TEST(FractionalPower, SmallCyclePowersAgainstPermutationOracle) {
    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t < n; ++t)
            EXPECT_TRUE(oracle::isomorphic(oracle::walk_power(oracle::cycle(2 * n + 1), 2 * t + 1),
                                           oracle::circular(2 * n + 1, n - t)));
}

TEST(FractionalPower, TriangleSevenThirdsIsK9) {
    const auto g = fractional_power(complete(3), {3, 1});
    EXPECT_EQ(g.order(), 9u);
    EXPECT_TRUE(are_isomorphic(g, complete(9)));
}

TEST(FractionalPower, IsPowerOfSubdivision) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracle::random_graph(rng, 5, 0.5);
        const auto expected = oracle::walk_power(oracle::adjacency(subdivide(g, 3)), 5);
        EXPECT_EQ(oracle::adjacency(fractional_power(g, {2, 1})), expected);
    }
}

TEST(NegativePower, UnitExponentGivesTheGraphBack) {
    std::mt19937 rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracle::random_non_bipartite(rng, 6, 0.4);
        const auto back = negative_unit_power(g, 0);
        EXPECT_EQ(oracle::adjacency(back), oracle::adjacency(g));
    }
}

TEST(NegativePower, LabelsAndLimits) {
    const auto n = negative_unit_power(complete(3), 1);
    EXPECT_TRUE(n.label(0).is_set_tuple());
    EXPECT_EQ(n.name(0).rfind("{0}|", 0), 0u);
    EXPECT_FALSE(n.has_loops());
    SearchOptions tight;
    tight.vertex_cap = 5;
    EXPECT_THROW(negative_unit_power(complete(5), 1, tight), CapExceededError);
    EXPECT_THROW(negative_power(complete(3), 2, 1), PreconditionError);
    EXPECT_THROW(negative_unit_power(power(complete(3), 2), 1), LoopError);
}

TEST(NegativePower, CompositeIsPowerOfUnit) {
    EXPECT_EQ(negative_power(cycle(5), 1, 1), power(negative_unit_power(cycle(5), 1), 3));
}
