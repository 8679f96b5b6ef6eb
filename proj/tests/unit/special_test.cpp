#include <gtest/gtest.h>

#include "freejord/special/special_jordan.hpp"

using namespace freejord;
using namespace freejord::special;

namespace {

const std::vector<long> kReversible = {2,    3,    6,    10,   20,    36,    72,    136,    272,    528,
                                       1056, 2080, 4160, 8256, 16512, 32896, 65792, 131328, 262656, 524800};
const std::vector<long> kBDims = {0,   1,   2,    6,    12,   27,    54,    114,   226,    466,
                                  930, 1888, 3780, 7633, 15288, 30774, 61680, 123899, 248346, 498300};

}  // namespace

TEST(Words, Reversal) {
    EXPECT_EQ(to_string(reversal(parse_word("121"))), "121");
    EXPECT_EQ(to_string(reversal(parse_word("112"))), "211");
    for (int n = 1; n <= 10; ++n)
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            Word w;
            for (int i = 0; i < n; ++i) w.push_back(static_cast<int>(m >> i & 1u));
            ASSERT_EQ(reversal(reversal(w)), w);
        }
    EXPECT_THROW(parse_word("123"), InputError);
}

TEST(Reversible, PublishedValues) {
    for (int n = 1; n <= 20; ++n) EXPECT_EQ(reversible_dim(n), kReversible[static_cast<std::size_t>(n - 1)]) << n;
    EXPECT_EQ(reversible_dim(19), 262656);
}

TEST(Reversible, FormulaMatchesExplicitBasis) {
    for (int n = 1; n <= 16; ++n) EXPECT_EQ(reversible_dim(n), static_cast<unsigned long>(reversible_dim_explicit(n))) << n;
}

TEST(Necklaces, SmallCounts) {
    EXPECT_EQ(necklace_count(1), 2);
    EXPECT_EQ(bracelet_count(1), 2);
    EXPECT_EQ(necklace_count(6), 14);
    EXPECT_EQ(bracelet_count(6), 13);
    const std::vector<long> necklaces = {2, 3, 4, 6, 8, 14, 20, 36, 60, 108};
    const std::vector<long> bracelets = {2, 3, 4, 6, 8, 13, 18, 30, 46, 78};
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(necklace_count(n), necklaces[static_cast<std::size_t>(n - 1)]) << n;
        EXPECT_EQ(bracelet_count(n), bracelets[static_cast<std::size_t>(n - 1)]) << n;
    }
}

TEST(BDims, PublishedValues) {
    for (int n = 1; n <= 20; ++n) {
        EXPECT_EQ(b_dim_two_gen(n), kBDims[static_cast<std::size_t>(n - 1)]) << n;
        EXPECT_GE(b_dim_two_gen(n), 0);
    }
    EXPECT_EQ(b_dim_two_gen(6), 27);
    EXPECT_EQ(b_dim_two_gen(20), 498300);
}

TEST(JordanSpan, EqualsReversibleThroughTwelve) {
    EXPECT_EQ(jordan_span_dim(2), 3);
    EXPECT_EQ(jordan_span_dim(5), 20);
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(jordan_span_dim(n), reversible_dim(n)) << n;
}

TEST(JordanSpan, RefusesAboveBound) { EXPECT_THROW(jordan_span_dim(15), InfeasibleError); }
