#include "gpc/constructions.hpp"
#include "gpc/error.hpp"
#include "gpc/graph.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace gpc;

TEST(GraphBuilder, RejectsDuplicateLabels) {
    GraphBuilder b;
    b.add_vertex(VertexLabel::atom("a"));
    EXPECT_THROW(b.add_vertex(VertexLabel::atom("a")), PreconditionError);
}

TEST(GraphBuilder, EdgesAreIdempotentAndLoopsCount) {
    GraphBuilder b;
    auto a = b.add_vertex(VertexLabel::atom("a"));
    auto c = b.add_vertex(VertexLabel::atom("c"));
    b.add_edge(a, c);
    b.add_edge(c, a);
    b.add_edge(a, a);
    const auto g = std::move(b).build();
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.loop_count(), 1u);
    EXPECT_TRUE(g.has_loop(a));
    EXPECT_FALSE(g.has_loop(c));
}

TEST(Graph, LookupByName) {
    const auto g = cycle(4);
    EXPECT_EQ(g.index_of("2"), 2u);
    EXPECT_FALSE(g.find("7").has_value());
    EXPECT_THROW(g.index_of("7"), UnknownVertexError);
}

TEST(OddGirth, Basics) {
    EXPECT_EQ(odd_girth(cycle(5)), OddGirth::finite(5));
    EXPECT_EQ(odd_girth(cycle(8)), OddGirth::infinite());
    EXPECT_EQ(odd_girth(complete(4)), OddGirth::finite(3));
    EXPECT_EQ(odd_girth(petersen()), OddGirth::finite(5));
    EXPECT_EQ(odd_girth(coxeter()), OddGirth::finite(7));

    GraphBuilder b;
    auto v = b.add_vertex(VertexLabel::atom("v"));
    b.add_edge(v, v);
    EXPECT_TRUE(odd_girth(std::move(b).build()).is_one());
}

TEST(OddGirth, ExceedsComparesExactly) {
    const auto og = OddGirth::finite(5);
    EXPECT_TRUE(og.exceeds(9, 2));
    EXPECT_FALSE(og.exceeds(5, 1));
    EXPECT_FALSE(og.exceeds(15, 3));
    EXPECT_TRUE(OddGirth::infinite().exceeds(1000, 1));
    EXPECT_FALSE(OddGirth::one().exceeds(1, 1));
}

TEST(OddGirth, MatchesClosedWalkOracle) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + trial % 8;
        const auto g = oracle::random_graph(rng, n, 0.3);
        const auto expected = oracle::odd_girth(oracle::adjacency(g));
        const auto got = odd_girth(g);
        if (!expected) {
            EXPECT_TRUE(got.is_infinite());
            EXPECT_TRUE(is_bipartite(g));
        } else {
            ASSERT_TRUE(got.is_finite()) << "trial " << trial;
            EXPECT_EQ(static_cast<int>(got.length()), *expected);
            EXPECT_FALSE(is_bipartite(g));
        }
    }
}

TEST(WalkNeighborhood, MatchesWalkOracle) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = oracle::random_graph(rng, 7, 0.35);
        const auto m = oracle::adjacency(g);
        for (int length = 0; length <= 4; ++length) {
            const auto walks = length == 0 ? oracle::walk_power(m, 0) : oracle::walk_power(m, length);
            for (VertexId v = 0; v < g.order(); ++v) {
                const auto got = walk_neighborhood(g, v, length);
                for (VertexId w = 0; w < g.order(); ++w)
                    EXPECT_EQ(got.test(w), walks[v][w]) << "length " << length;
            }
        }
    }
}

TEST(WalkNeighborhood, ByLabelIsSorted) {
    const auto g = cycle(6);
    const auto got = walk_neighborhood(g, VertexLabel::atom("0"), 2);
    ASSERT_EQ(got.size(), 3u);
    EXPECT_EQ(got[0].render(), "0");
    EXPECT_EQ(got[1].render(), "2");
    EXPECT_EQ(got[2].render(), "4");
}

TEST(InducedSubgraph, KeepsOrderAndEdges) {
    const auto g = petersen();
    std::vector<VertexLabel> outer;
    for (int i = 0; i < 5; ++i)
        outer.push_back(VertexLabel::atom(i));
    const auto c = induced_subgraph(g, outer);
    EXPECT_EQ(c.order(), 5u);
    EXPECT_EQ(c.size(), 5u);
    EXPECT_EQ(c.name(3), "3");
    std::vector<VertexLabel> missing{VertexLabel::atom("x")};
    EXPECT_THROW(induced_subgraph(g, missing), UnknownVertexError);
}

TEST(Laplacian, KnownSpectra) {
    EXPECT_NEAR(laplacian_lambda_max(complete(5)), 5.0, 1e-9);
    // largest eigenvalue of C_n: 2 - 2 cos(2 pi floor(n/2) / n)
    for (int n : {5, 7, 8}) {
        const double expected = 2 - 2 * std::cos(2 * std::numbers::pi * (n / 2) / n);
        EXPECT_NEAR(laplacian_lambda_max(cycle(n)), expected, 1e-9);
    }
    EXPECT_NEAR(laplacian_lambda_max(petersen()), 5.0, 1e-9);
}

TEST(Components, SplitsAndOrders) {
    std::mt19937 rng(3);
    GraphBuilder b;
    for (int i = 0; i < 6; ++i)
        b.add_vertex(VertexLabel::atom(i));
    b.add_edge(0, 3);
    b.add_edge(1, 4);
    b.add_edge(4, 5);
    const auto parts = connected_components(std::move(b).build());
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts[0], (std::vector<VertexId>{0, 3}));
    EXPECT_EQ(parts[1], (std::vector<VertexId>{1, 4, 5}));
    EXPECT_EQ(parts[2], (std::vector<VertexId>{2}));
}

TEST(Symmetry, RotationAndCompleteness) {
    EXPECT_TRUE(is_rotation_invariant(cycle(7)));
    EXPECT_TRUE(is_rotation_invariant(circular_complete(11, 4)));
    EXPECT_FALSE(is_rotation_invariant(petersen()));
    EXPECT_TRUE(is_complete(complete(6)));
    EXPECT_FALSE(is_complete(cycle(5)));
}
