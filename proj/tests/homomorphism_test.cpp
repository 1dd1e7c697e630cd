#include "gpc/constructions.hpp"
#include "gpc/error.hpp"
#include "gpc/homomorphism.hpp"
#include "gpc/isomorphism.hpp"
#include "gpc/powers.hpp"
#include "oracle.hpp"
#include "sat_hom.hpp"

#include <gtest/gtest.h>

using namespace gpc;

namespace {

std::vector<Graph> small_targets(std::mt19937& rng) {
    std::vector<Graph> out{complete(2), complete(3), complete(4), cycle(5), cycle(7), circular_complete(7, 2),
                           circular_complete(8, 3)};
    for (int i = 0; i < 4; ++i)
        out.push_back(oracle::random_graph(rng, 5, 0.5));
    return out;
}

}  // namespace

TEST(ExistsHom, AgreesWithBacktrackingOracle) {
    std::mt19937 rng(31);
    const auto targets = small_targets(rng);
    for (int trial = 0; trial < 120; ++trial) {
        const auto g = oracle::random_graph(rng, 4 + trial % 5, 0.25 + 0.05 * (trial % 6));
        const auto& h = targets[static_cast<std::size_t>(trial) % targets.size()];
        const auto cert = exists_hom(g, h);
        ASSERT_EQ(cert.exists(), oracle::hom_exists(g, h)) << "trial " << trial;
        if (cert.exists())
            EXPECT_TRUE(is_homomorphism(g, h, cert.map));
        else
            EXPECT_TRUE(cert.map.empty());
    }
}

TEST(ExistsHom, ClauseLearningBackendAgreesWithOracle) {
    std::mt19937 rng(32);
    const auto targets = small_targets(rng);
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = oracle::random_graph(rng, 5 + trial % 4, 0.4);
        const auto& h = targets[static_cast<std::size_t>(trial) % targets.size()];
        if (g.size() == 0 || h.size() == 0)
            continue;
        const auto map = detail::sat_hom(g, h, 1'000'000);
        ASSERT_EQ(map.has_value(), oracle::hom_exists(g, h)) << "trial " << trial;
        if (map)
            EXPECT_TRUE(is_homomorphism(g, h, *map));
    }
}

TEST(ExistsHom, LoopsAndEmptyGraphs) {
    const auto looped = power(complete(3), 2);
    EXPECT_TRUE(exists_hom(petersen(), looped).exists());
    EXPECT_FALSE(exists_hom(looped, complete(5)).exists());
    EXPECT_TRUE(exists_hom(Graph{}, complete(1)).exists());
    EXPECT_FALSE(exists_hom(complete(1), Graph{}).exists());
    EXPECT_FALSE(exists_hom(complete(2), complete(1)).exists());
}

TEST(ExistsHom, ComponentsAreSolvedSeparately) {
    GraphBuilder b;
    for (int i = 0; i < 8; ++i)
        b.add_vertex(VertexLabel::atom(i));
    for (int i = 0; i < 5; ++i)
        b.add_edge(i, (i + 1) % 5);
    b.add_edge(5, 6);
    const auto g = std::move(b).build();
    const auto cert = exists_hom(g, cycle(5));
    ASSERT_TRUE(cert.exists());
    EXPECT_TRUE(is_homomorphism(g, cycle(5), cert.map));
}

TEST(ExistsHom, BudgetIsReportedNotGuessed) {
    SearchOptions tiny;
    tiny.node_budget = 10;
    EXPECT_THROW(exists_hom(helical(4, 1, 3), complete(3), tiny), BudgetExceededError);
}

TEST(ExistsHom, HardColouringRefutation) {
    // needs clause learning: far beyond the backtracking probe
    EXPECT_FALSE(exists_hom(helical(4, 1, 3), complete(3)).exists());
}

TEST(ExistsHom, NamedFacts) {
    EXPECT_FALSE(exists_hom(coxeter(), cycle(7)).exists());
    EXPECT_TRUE(exists_hom(coxeter(), complete(3)).exists());
    EXPECT_FALSE(exists_hom(petersen(), cycle(5)).exists());
    EXPECT_TRUE(exists_hom(cycle(7), cycle(5)).exists());
    EXPECT_FALSE(exists_hom(cycle(5), cycle(7)).exists());
}

TEST(IsHomomorphism, RejectsBadMaps) {
    EXPECT_FALSE(is_homomorphism(cycle(5), complete(2), {0, 1, 0, 1, 0}));
    EXPECT_FALSE(is_homomorphism(cycle(5), complete(3), {0, 1}));
    EXPECT_FALSE(is_homomorphism(cycle(5), complete(3), {0, 1, 0, 1, 7}));
    EXPECT_TRUE(is_homomorphism(cycle(5), complete(3), {0, 1, 0, 1, 2}));
}

TEST(Order, EquivalenceAndStrictness) {
    EXPECT_FALSE(hom_equivalent(complete(3), power(complete(3), 3)));  // K_3^3 has loops
    EXPECT_TRUE(hom_equivalent(cycle(6), complete(2)));
    EXPECT_TRUE(strictly_below(cycle(7), cycle(5)));
    EXPECT_TRUE(strictly_below(cycle(5), complete(3)));
    EXPECT_FALSE(strictly_below(complete(3), complete(3)));
}

TEST(Core, MatchesSubsetOracle) {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = oracle::random_non_bipartite(rng, 7, 0.35);
        const auto core = core_of(g);
        // smallest induced subgraph that G maps to
        std::size_t best = g.order();
        for (unsigned mask = 1; mask < (1u << g.order()); ++mask) {
            Bitset keep(g.order());
            for (VertexId v = 0; v < g.order(); ++v)
                keep[v] = (mask >> v) & 1;
            if (keep.count() < best && oracle::hom_exists(g, induced_subgraph(g, keep)))
                best = keep.count();
        }
        EXPECT_EQ(core.order(), best) << "trial " << trial;
        EXPECT_TRUE(hom_equivalent(g, core));
    }
}

TEST(Core, KnownCores) {
    EXPECT_TRUE(are_isomorphic(core_of(cycle(6)), complete(2)));
    EXPECT_TRUE(are_isomorphic(core_of(cycle(7)), cycle(7)));
    SearchOptions capped;
    capped.core_cap = 5;
    EXPECT_THROW(core_of(petersen(), capped), PreconditionError);
}

TEST(Duality, BothSidesAgreeOnSmallCases) {
    for (const auto& g : {cycle(5), cycle(7)})
        for (const auto& h : {complete(3), cycle(5)})
            for (OddFraction e : {OddFraction{0, 0}, OddFraction{1, 1}, OddFraction{1, 0}})
                if (odd_girth(g).exceeds(e.numerator(), e.denominator()))
                    EXPECT_TRUE(verify_duality(g, h, e));
}

TEST(Duality, Preconditions) {
    EXPECT_THROW(check_duality(cycle(5), complete(3), {0, 1}), PreconditionError);
    EXPECT_THROW(check_duality(cycle(5), complete(3), {2, 0}), PreconditionError);
    EXPECT_THROW(check_duality(power(complete(3), 2), complete(3), {0, 0}), LoopError);
}

TEST(NegativePower, CubeOfInverseIsEquivalent) {
    const auto inverse = negative_unit_power(cycle(5), 1);
    EXPECT_TRUE(hom_equivalent(power(inverse, 3), cycle(5)));
}
