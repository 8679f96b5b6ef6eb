#include <vector>

#include <gtest/gtest.h>

#include "freejord/series/predictor.hpp"

using namespace freejord;
using namespace freejord::series;

namespace {

// Published dimensions of the two-generated free Jordan algebra, degrees 1..20.
const std::vector<long> kTwoGenDims = {2,     3,     6,     10,     20,     36,     72,
                                       136,   272,   528,   1056,   2080,   4160,   8256,
                                       16512, 32896, 65792, 131328, 262656, 524800};

DimSequence two_gen_sequence(int n) {
    DimSequence d{2, {}};
    for (int k = 0; k < n; ++k) d.dims.emplace_back(kTwoGenDims[k]);
    return d;
}

}  // namespace

TEST(LaurentPoly, Residue) {
    EXPECT_EQ(residue(LaurentPoly{{1, 3}, {0, -5}, {-1, 7}}), 7);
    EXPECT_EQ(residue(LaurentPoly{{1, 1}, {-2, 1}}), 0);
    LaurentPoly p{{1, 1}, {-1, 1}};
    EXPECT_EQ((p * p).coefficient(0), 2);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((LaurentPoly{{9, -1218}, {-1, 2}}).to_string(), "-1218t^9 + 2t^-1");
}

TEST(ConjectureSeries, EmptyProduct) {
    DimSequence zeros{2, {0}};
    auto s = conjecture_series(2, zeros, 1);
    EXPECT_EQ(s[0], (LaurentPoly{{0, 1}, {1, -1}}));
    EXPECT_EQ(s[1], (LaurentPoly{{0, -2}, {-1, 2}}));
    EXPECT_THROW(conjecture_series(2, zeros, 2), InputError);
}

TEST(ConjectureSeries, DegreeNineteenCoefficient) {
    auto s = conjecture_series(2, two_gen_sequence(19), 19);
    const LaurentPoly& c = s[19];
    EXPECT_EQ(c.coefficient(9), -1218);
    EXPECT_EQ(c.coefficient(8), 45184);
    EXPECT_EQ(c.coefficient(-1), 2);
    EXPECT_EQ(residue(c), 2);

    // remaining printed monomials, excluding the garbled t^-8/t^-9 pair
    const std::vector<std::pair<int, long>> printed = {
        {7, -472252},   {6, 2389852},   {5, -7383950}, {4, 15783200}, {3, -24906124},
        {2, 29605472},  {1, -25748624}, {0, 13996812}, {-2, -9637460}, {-3, 11988306},
        {-4, -8946852}, {-5, 4523548},  {-6, -1498732}, {-7, 286354}, {-9, 390}};
    for (const auto& [e, v] : printed) EXPECT_EQ(c.coefficient(e), v) << "t^" << e;
}

TEST(PredictDims, TwoGenerators) {
    auto d5 = predict_dims(2, 5);
    EXPECT_EQ(d5.dims, (std::vector<Integer>{2, 3, 6, 10, 20}));
    auto d19 = predict_dims(2, 19);
    for (int n = 1; n <= 18; ++n) EXPECT_EQ(d19.at(n), kTwoGenDims[n - 1]) << "degree " << n;
    EXPECT_EQ(d19.at(19), 262658);
}

TEST(CheckSequence, CounterexampleResidues) {
    auto rep = check_sequence(2, two_gen_sequence(20));
    for (int n = 1; n <= 18; ++n) EXPECT_EQ(rep.residues[n - 1], 0) << "degree " << n;
    EXPECT_EQ(rep.residues[18], 2);
    ASSERT_TRUE(rep.first_nonzero.has_value());
    EXPECT_EQ(*rep.first_nonzero, 19);
}

TEST(CheckSequence, PredictionsAreResidueFree) {
    for (int p = 1; p <= 4; ++p)
        for (int n : {1, 7, 14, 20}) {
            auto rep = check_sequence(p, predict_dims(p, n));
            EXPECT_FALSE(rep.first_nonzero.has_value()) << "p=" << p << " N=" << n;
        }
    auto rep3 = check_sequence(3, predict_dims(3, 10));
    for (const auto& r : rep3.residues) EXPECT_EQ(r, 0);
}

TEST(PredictDims, PrefixStability) {
    for (int p = 1; p <= 4; ++p) {
        auto longer = predict_dims(p, 20);
        for (int n = 1; n < 20; n += 3) {
            auto shorter = predict_dims(p, n);
            for (int k = 1; k <= n; ++k) EXPECT_EQ(shorter.at(k), longer.at(k));
        }
    }
}

TEST(DegreeFactor, ClosedFormMatchesPowering) {
    const int order = 19;
    for (int n = 10; n <= 19; ++n) {
        const Integer a = kTwoGenDims[n - 1];
        TruncatedLaurentSeries f = TruncatedLaurentSeries::one(order);
        f[n] = LaurentPoly{{1, -1}, {-1, -1}};
        if (2 * n <= order) f[2 * n] += LaurentPoly::constant(1);
        EXPECT_EQ(f.pow(a), degree_factor(n, a, order)) << "n=" << n;
    }
    // the product form over n = 10..19 collapses to 1 - (t + 1/t) sum a_n z^n
    TruncatedLaurentSeries prod = TruncatedLaurentSeries::one(order);
    for (int n = 10; n <= 19; ++n) prod *= degree_factor(n, kTwoGenDims[n - 1], order);
    for (int n = 10; n <= 19; ++n)
        EXPECT_EQ(prod[n], (LaurentPoly{{1, -kTwoGenDims[n - 1]}, {-1, -kTwoGenDims[n - 1]}}));
}

TEST(ConjectureSeries, SpecializationAtOneIsIntegral) {
    auto s = conjecture_series(2, two_gen_sequence(20), 20);
    // at t = 1 the base factor vanishes identically
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(s[k].at_one(), 0);
}
