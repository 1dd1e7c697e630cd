#include "gpc/error.hpp"
#include "gpc/verify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gpc;

TEST(Verify, SuiteIdsAreStable) {
    const auto& ids = verify_suite_ids();
    ASSERT_EQ(ids.size(), 20u);
    EXPECT_EQ(ids.front(), "lemmaA");
    EXPECT_EQ(ids.back(), "spectral");
    EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
}

TEST(Verify, RejectsUnknownIdOrPool) {
    EXPECT_THROW(run_verify("lemma99"), PreconditionError);
    VerifyOptions options;
    options.pool = "huge";
    EXPECT_THROW(run_verify("lemmaA", options), PreconditionError);
}

class QuickSuite : public ::testing::TestWithParam<std::string> {};

TEST_P(QuickSuite, PassesOnSmallPool) {
    VerifyOptions options;
    options.pool = "small";
    const auto report = run_verify(GetParam(), options);
    EXPECT_EQ(report.lemma_id, GetParam());
    EXPECT_GT(report.instances_checked, 0u);
    for (const auto& f : report.failures)
        ADD_FAILURE() << f.instance << ": expected " << f.expected << ", got " << f.got;
}

// thm-c and thm-heli need chi(H(5,1,2)); they run through the CLI test instead
INSTANTIATE_TEST_SUITE_P(Suites, QuickSuite,
                         ::testing::Values("lemmaA", "lemma1", "lemma2", "thm3", "cor4", "lemma5", "lemma6", "thm7",
                                           "thm-b", "lemma8", "thm-colorful", "lemma-chromc", "lemma-oddg", "thm11",
                                           "thm12", "thm-circular", "f-formula", "spectral"),
                         [](const auto& info) {
                             std::string name = info.param;
                             std::erase(name, '-');
                             return name;
                         });

TEST(Verify, BoundsAreHonoured) {
    VerifyOptions narrow;
    narrow.pool = "small";
    narrow.max_s = 0;
    VerifyOptions wide = narrow;
    wide.max_s = 1;
    EXPECT_LT(run_verify("lemma1", narrow).instances_checked, run_verify("lemma1", wide).instances_checked);
}
