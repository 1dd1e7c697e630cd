#include "gpc/constructions.hpp"
#include "gpc/error.hpp"
#include "gpc/homomorphism.hpp"
#include "gpc/invariants.hpp"
#include "gpc/powers.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace gpc;

namespace {

// Every proper k-colouring, no symmetry reduction; each one peeled by hand.
bool colorful_by_enumeration(const Graph& g) {
    const auto m = oracle::adjacency(g);
    const int n = static_cast<int>(g.order());
    const int k = oracle::chromatic(m);
    std::vector<int> colour(n, 0);
    bool all = true;
    auto peel_survives = [&] {
        std::vector<bool> alive(n, true);
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (!alive[v])
                    continue;
                std::vector<bool> seen(k, false);
                seen[colour[v]] = true;
                for (int w = 0; w < n; ++w)
                    if (alive[w] && m[v][w])
                        seen[colour[w]] = true;
                if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
                    alive[v] = false;
                    changed = true;
                }
            }
        }
        return std::find(alive.begin(), alive.end(), true) != alive.end();
    };
    auto assign = [&](auto&& self, int v) -> void {
        if (!all)
            return;
        if (v == n) {
            all = peel_survives();
            return;
        }
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = !(m[u][v] && colour[u] == c);
            if (!ok)
                continue;
            colour[v] = c;
            self(self, v + 1);
        }
    };
    assign(assign, 0);
    return all;
}

}  // namespace

TEST(Chromatic, AgreesWithOracle) {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracle::random_graph(rng, 3 + trial % 6, 0.2 + 0.1 * (trial % 6));
        EXPECT_EQ(chromatic_number(g), oracle::chromatic(oracle::adjacency(g))) << "trial " << trial;
    }
}

TEST(Chromatic, KnownValues) {
    EXPECT_EQ(chromatic_number(Graph{}), 0);
    EXPECT_EQ(chromatic_number(cycle(7)), 3);
    EXPECT_EQ(chromatic_number(petersen()), 3);
    EXPECT_EQ(chromatic_number(kneser(6, 2)), 4);
    EXPECT_EQ(chromatic_number(helical(4, 1, 2)), 4);
    EXPECT_EQ(chromatic_number(circular_complete(11, 4)), 3);
    EXPECT_THROW(chromatic_number(power(complete(3), 2)), LoopError);
}

TEST(CircularChromatic, AgreesWithOracle) {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = oracle::random_non_bipartite(rng, 5 + trial % 2, 0.35);
        EXPECT_EQ(circular_chromatic_number(g), oracle::circular_chromatic(oracle::adjacency(g))) << "trial " << trial;
    }
}

TEST(CircularChromatic, KnownValues) {
    EXPECT_TRUE(circular_chromatic_number(cycle(5)).same_pair({5, 2}));
    EXPECT_TRUE(circular_chromatic_number(circular_complete(11, 4)).same_pair({11, 4}));
    EXPECT_TRUE(circular_chromatic_number(petersen()).same_pair({3, 1}));
    EXPECT_TRUE(circular_chromatic_number(complete(2)).same_pair({2, 1}));
    EXPECT_THROW(circular_chromatic_number(complete(1)), PreconditionError);
}

TEST(ChicSweep, OddCycles) {
    const auto c5 = chic_via_powers(cycle(5), 3, 10);
    ASSERT_TRUE(c5.found);
    EXPECT_TRUE(c5.best.same_pair({5, 2}));
    const auto c7 = chic_via_powers(cycle(7), 3, 10);
    ASSERT_TRUE(c7.found);
    EXPECT_EQ(c7.best, (Rational{7, 3}));
    EXPECT_THROW(chic_via_powers(cycle(6), 2, 5), PreconditionError);
}

TEST(Thickness, Examples) {
    const auto c5 = thickness_lower_bound(cycle(5), 0, 2);
    ASSERT_TRUE(c5.found);
    EXPECT_EQ(c5.best_ratio, (Rational{5, 3}));
    EXPECT_EQ(c5.witness, (OddFraction{2, 1}));
    EXPECT_EQ(c5.witness_chi, 3);

    const auto k4 = thickness_lower_bound(complete(4), 0, 1);
    EXPECT_EQ(k4.best_ratio, (Rational{1, 1}));

    const auto h = thickness_lower_bound(helical(4, 1, 2), 0, 0);
    EXPECT_TRUE(h.best_ratio.same_pair({3, 1}));

    EXPECT_THROW(thickness_lower_bound(cycle(6), 0, 1), PreconditionError);
    EXPECT_THROW(thickness_lower_bound(cycle(5), -1, 1), PreconditionError);
}

TEST(Thickness, ExtraColoursOnlyHelp) {
    const auto tight = thickness_lower_bound(cycle(7), 0, 2);
    const auto loose = thickness_lower_bound(cycle(7), 1, 2);
    EXPECT_GE(loose.best_ratio, tight.best_ratio);
}

TEST(ThetaH, Examples) {
    EXPECT_GE(theta_H_lower_bound(cycle(5), cycle(5), 0).best_ratio, (Rational{1, 1}));
    EXPECT_EQ(theta_H_lower_bound(cycle(5), complete(3), 1).best_ratio, (Rational{5, 3}));
    const auto c7 = theta_H_lower_bound(cycle(7), cycle(5), 0);
    ASSERT_TRUE(c7.found);
    EXPECT_EQ(c7.best_ratio, (Rational{1, 1}));
    // C5^{1/3} = C15 -> C7, but C5 itself does not map to C7
    const auto c5 = theta_H_lower_bound(cycle(5), cycle(7), 1);
    ASSERT_TRUE(c5.found);
    EXPECT_LT(c5.best_ratio, (Rational{1, 1}));
}

TEST(Colorful, Examples) {
    for (int n = 3; n <= 5; ++n)
        EXPECT_TRUE(is_colorful(complete(n)));
    EXPECT_FALSE(is_colorful(cycle(5)));
    EXPECT_FALSE(is_colorful(cycle(7)));
    EXPECT_TRUE(is_colorful(petersen()));
}

TEST(Colorful, AgreesWithFullEnumeration) {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = oracle::random_non_bipartite(rng, 5 + trial % 3, 0.4);
        EXPECT_EQ(is_colorful(g), colorful_by_enumeration(g)) << "trial " << trial;
    }
}

TEST(Colorful, BudgetIsEnforced) {
    SearchOptions tiny;
    tiny.coloring_budget = 3;
    EXPECT_THROW(is_colorful(petersen(), tiny), BudgetExceededError);
}

TEST(FParameter, ClosedFormAndSolverAgree) {
    for (const auto& g : {cycle(5), cycle(7), petersen(), circular_complete(7, 2)})
        for (int t : {0, 1}) {
            const auto chi_c = oracle::circular_chromatic(oracle::adjacency(g));
            EXPECT_EQ(f_parameter(g, t, 12), f_closed_form(chi_c, t)) << "t=" << t;
        }
}

TEST(FParameter, Values) {
    EXPECT_EQ(f_parameter(cycle(5), 0, 5), 5);
    EXPECT_EQ(f_parameter(cycle(5), 1, 10), 15);
    EXPECT_EQ(f_parameter(petersen(), 0, 5), 3);
    EXPECT_EQ(f_parameter(complete(4), 0, 3), 1);
    EXPECT_THROW(f_parameter(cycle(4), 0, 3), PreconditionError);
    EXPECT_EQ(f_closed_form({5, 2}, 1), 15);
    EXPECT_THROW(f_closed_form({2, 1}, 0), PreconditionError);
}

TEST(Spectral, Examples) {
    const auto k4 = spectral_check(complete(4), 2);
    EXPECT_FALSE(k4.bound_satisfied);
    EXPECT_EQ(k4.edge_count, 6u);
    EXPECT_NEAR(k4.lambda_g, 4.0, 1e-9);
    EXPECT_TRUE(spectral_check(cycle(5), 2).bound_satisfied);
    EXPECT_TRUE(spectral_check(cycle(15), 7).bound_satisfied);
    EXPECT_THROW(spectral_check(cycle(5), 0), PreconditionError);
    EXPECT_THROW(spectral_check(power(complete(3), 2), 1), LoopError);
}

TEST(Spectral, NeverContradictsAFoundHomomorphism) {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = oracle::random_non_bipartite(rng, 5 + trial % 5, 0.3);
        for (int n = 1; n <= 3; ++n)
            if (exists_hom(g, cycle(2 * n + 1)).exists())
                EXPECT_TRUE(spectral_check(g, n).bound_satisfied) << "trial " << trial << " n " << n;
    }
}
