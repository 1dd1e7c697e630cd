#include "gpc/constructions.hpp"
#include "gpc/error.hpp"
#include "gpc/isomorphism.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace gpc;

TEST(Families, SizesAndLabels) {
    EXPECT_EQ(complete(6).size(), 15u);
    EXPECT_EQ(cycle(9).size(), 9u);
    EXPECT_EQ(cycle(9).name(4), "4");
    for (auto [n, d] : {std::pair{7, 2}, {11, 4}, {8, 3}, {6, 3}})
        EXPECT_EQ(circular_complete(n, d).size(), static_cast<std::size_t>(n * (n - 2 * d + 1) / 2));
    EXPECT_EQ(kneser(6, 2).order(), 15u);
    EXPECT_EQ(kneser(6, 2).name(0), "{1,2}");
}

TEST(Families, InvalidParameters) {
    EXPECT_THROW(cycle(2), PreconditionError);
    EXPECT_THROW(circular_complete(3, 2), PreconditionError);
    EXPECT_THROW(kneser(3, 2), PreconditionError);
    EXPECT_THROW(helical(3, 2, 1), PreconditionError);
}

TEST(Families, CircularCompleteMatchesOracle) {
    for (int n = 2; n <= 9; ++n)
        for (int d = 1; 2 * d <= n; ++d)
            EXPECT_EQ(oracle::adjacency(circular_complete(n, d)), oracle::circular(n, d)) << n << "/" << d;
}

TEST(Families, KneserFivetwoIsPetersen) { EXPECT_TRUE(are_isomorphic(kneser(5, 2), petersen())); }

TEST(Families, SchrijverCounts) {
    // m/(m-n) * binom(m-n, n) stable sets
    EXPECT_EQ(schrijver(5, 2).order(), 5u);
    EXPECT_TRUE(are_isomorphic(schrijver(5, 2), cycle(5)));
    EXPECT_EQ(schrijver(6, 2).order(), 9u);
    EXPECT_EQ(schrijver(7, 2).order(), 14u);
    EXPECT_EQ(schrijver(8, 3).order(), 16u);
}

TEST(Helical, DegenerateCases) {
    for (int m = 2; m <= 6; ++m)
        EXPECT_TRUE(are_isomorphic(helical(m, 1, 1), complete(m))) << m;
    for (auto [m, n] : {std::pair{5, 2}, {6, 2}, {7, 3}, {7, 2}})
        EXPECT_TRUE(are_isomorphic(helical(m, n, 1), kneser(m, n))) << m << "," << n;
}

TEST(Helical, SmallCaseMatchesPermutationOracle) {
    EXPECT_TRUE(oracle::isomorphic(oracle::adjacency(helical(4, 1, 1)), oracle::complete(4)));
}

TEST(Helical, OddGirthAtLeastTwoKPlusOne) {
    for (int m = 3; m <= 6; ++m)
        for (int n = 1; n <= 2; ++n)
            for (int k = 1; k <= 3; ++k) {
                if (m <= 2 * n)
                    continue;
                const auto og = odd_girth(helical(m, n, k));
                EXPECT_TRUE(og.is_infinite() || og.length() >= static_cast<std::size_t>(2 * k + 1))
                    << "H(" << m << "," << n << "," << k << ")";
            }
}

TEST(Helical, LabelsAndCap) {
    const auto h = helical(3, 1, 2);
    EXPECT_EQ(h.order(), 9u);
    EXPECT_EQ(h.name(0), "{1}|{2}");
    EXPECT_TRUE(h.label(0).is_set_tuple());
    SearchOptions tight;
    tight.vertex_cap = 10;
    EXPECT_THROW(helical(5, 1, 2, tight), CapExceededError);
}

TEST(Named, PetersenAndCoxeter) {
    const auto p = petersen();
    const auto c = coxeter();
    EXPECT_EQ(p.order(), 10u);
    EXPECT_EQ(p.size(), 15u);
    EXPECT_EQ(c.order(), 28u);
    EXPECT_EQ(c.size(), 42u);
    for (VertexId v = 0; v < c.order(); ++v)
        EXPECT_EQ(c.degree(v), 3u);
    EXPECT_EQ(odd_girth(c), OddGirth::finite(7));
}
