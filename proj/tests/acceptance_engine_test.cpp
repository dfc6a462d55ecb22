#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace skewdna;

TEST(AcceptanceEngine, ComputedCorrespondenceMatchesReference) {
    const auto got = computed_correspondence();
    const auto want = reference_correspondence();
    ASSERT_EQ(got.size(), 16u);
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_EQ(got[i].bases, want[i].bases) << want[i].element;
        EXPECT_EQ(got[i].gray_first, want[i].gray_first) << want[i].element;
        EXPECT_EQ(got[i].gray_second, want[i].gray_second) << want[i].element;
    }
}

TEST(AcceptanceEngine, CorruptedCorrespondenceIsCaught) {
    SuiteOptions opt;
    std::swap(opt.correspondence[4].bases, opt.correspondence[5].bases);  // v <-> 1+v
    AcceptanceSuite suite(opt);
    const auto r = suite.run(1);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.key, "table1");
    EXPECT_NE(r.detail.find("row v"), std::string::npos) << r.detail;
    EXPECT_EQ(format_result_line(r).substr(0, 13), "FAIL 01 table");
}

TEST(AcceptanceEngine, CorruptedLength12CodeIsCaught) {
    SuiteOptions opt;
    opt.length12_code[3] = "GAAGGAAGGAAC";
    AcceptanceSuite suite(opt);
    const auto r = suite.run(5);
    EXPECT_FALSE(r.passed());
    EXPECT_NE(r.detail.find("differs"), std::string::npos);
}

TEST(AcceptanceEngine, FastChecksPass) {
    AcceptanceSuite suite;
    for (int i : {1, 2, 3, 4, 5, 10, 11}) {
        const auto r = suite.run(i);
        EXPECT_TRUE(r.passed()) << format_result_line(r);
    }
}

TEST(AcceptanceEngine, BudgetsArePinned) {
    EXPECT_EQ(check_budget(1), 1.0);
    EXPECT_EQ(check_budget(6), 120.0);
    EXPECT_THROW(check_budget(13), std::out_of_range);
    AcceptanceSuite suite;
    EXPECT_THROW(suite.run(0), std::out_of_range);
}

}  // namespace
