#include <algorithm>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "freejord/sym/characters.hpp"
#include "freejord/sym/kostka.hpp"

using namespace freejord;
using namespace freejord::sym;

namespace {

// Euler's pentagonal recurrence for the partition function.
long partition_count(int n) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const long sign = (k % 2) ? 1 : -1;
            p[m] += sign * p[m - g1];
            if (g2 <= m) p[m] += sign * p[m - g2];
        }
    return p[n];
}

// Standard tableaux counted by removing outer corners.
long syt_count(const Partition& lam) {
    if (lam.empty()) return 1;
    long total = 0;
    for (int i = 0; i < lam.length(); ++i) {
        if (lam[i] > lam[i + 1]) {
            auto parts = lam.parts();
            --parts[i];
            if (parts[i] == 0) parts.pop_back();
            total += syt_count(Partition(parts));
        }
    }
    return total;
}

}  // namespace

TEST(Partitions, CountsAndOrder) {
    EXPECT_EQ(partitions(0).size(), 1u);
    EXPECT_TRUE(partitions(0)[0].empty());
    EXPECT_EQ(partitions(4).size(), 5u);
    for (int n = 1; n <= 16; ++n) EXPECT_EQ(static_cast<long>(partitions(n).size()), partition_count(n));
    EXPECT_EQ(partitions(10).size(), 42u);
    auto p4 = partitions(4);
    EXPECT_EQ(p4[0], Partition({4}));
    EXPECT_EQ(p4[1], Partition({3, 1}));
    EXPECT_EQ(p4[2], Partition({2, 2}));
    EXPECT_EQ(p4[3], Partition({2, 1, 1}));
    EXPECT_EQ(p4[4], Partition({1, 1, 1, 1}));
    for (int n = 2; n <= 10; ++n) {
        auto ps = partitions(n);
        EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
    }
}

TEST(Partitions, ParseAndFormat) {
    EXPECT_EQ(Partition::parse("2^2,1^3"), Partition({2, 2, 1, 1, 1}));
    EXPECT_EQ(Partition({3, 2, 2, 1}).to_exponent_string(), "3,2^2,1");
    EXPECT_EQ(Partition({4, 1}).conjugate(), Partition({2, 1, 1, 1}));
    EXPECT_THROW(Partition({1, 2}), InputError);
    EXPECT_THROW(Partition::parse("a,b"), InputError);
}

TEST(DimIrrep, Examples) {
    EXPECT_EQ(dim_irrep(Partition({5})), 1);
    EXPECT_EQ(dim_irrep(Partition({2, 1})), 2);
    std::int64_t sum = 0;
    for (const auto& lam : partitions(8)) sum += dim_irrep(lam) * dim_irrep(lam);
    EXPECT_EQ(sum, 40320);
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : partitions(n)) EXPECT_EQ(dim_irrep(lam), syt_count(lam)) << lam.to_string();
}

TEST(Character, Examples) {
    for (const auto& lam : partitions(6)) EXPECT_EQ(character(lam, Partition({1, 1, 1, 1, 1, 1})), dim_irrep(lam));
    EXPECT_EQ(character(Partition({1, 1}), Partition({2})), -1);
    EXPECT_EQ(character(Partition({2, 1}), Partition({2, 1})), 0);
    EXPECT_THROW(character(Partition({2}), Partition({1})), InputError);
}

TEST(Character, Orthogonality) {
    for (int n = 1; n <= 8; ++n) {
        auto table = character_table(n);
        const auto& cls = table->classes;
        // columns: sum_lambda chi(mu)^2 = z_mu
        for (std::size_t j = 0; j < cls.size(); ++j) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < cls.size(); ++i) s += table->values[i][j] * table->values[i][j];
            EXPECT_EQ(s, centralizer_order(cls[j]));
        }
        // rows: sum_mu chi^a(mu) chi^b(mu) n!/z_mu = n! delta
        std::int64_t fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = 0; b < cls.size(); ++b) {
                std::int64_t s = 0;
                for (std::size_t j = 0; j < cls.size(); ++j)
                    s += table->values[a][j] * table->values[b][j] * (fact / centralizer_order(cls[j]));
                EXPECT_EQ(s, a == b ? fact : 0);
            }
    }
}

TEST(CycleType, OneLine) {
    EXPECT_EQ(cycle_type({1, 0, 2}), Partition({2, 1}));
    EXPECT_EQ(cycle_type({1, 2, 0, 4, 3}), Partition({3, 2}));
}

TEST(Kostka, Examples) {
    EXPECT_EQ(kostka(Partition({3, 2}), {3, 2}), 1);
    EXPECT_EQ(kostka(Partition({2, 1}), {1, 1, 1}), 2);
    EXPECT_EQ(kostka(Partition({3}), {2, 1}), 1);
    EXPECT_EQ(kostka(Partition({2, 1}), {3}), 0);
    EXPECT_THROW(kostka(Partition({2, 1}), {1, 1}), InputError);
    // K_{lambda,1^n} counts standard tableaux
    for (const auto& lam : partitions(6)) EXPECT_EQ(kostka(lam, std::vector<int>(6, 1)), dim_irrep(lam));
}

TEST(Kostka, InvariantUnderPermutingContent) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        auto parts = partitions(n);
        const auto& lam = parts[rng() % parts.size()];
        std::vector<int> mu;
        int left = n;
        while (left > 0) {
            int c = static_cast<int>(rng() % (left + 1));
            mu.push_back(c);
            left -= c;
        }
        const auto base = kostka(lam, mu);
        std::shuffle(mu.begin(), mu.end(), rng);
        EXPECT_EQ(kostka(lam, mu), base);
        EXPECT_EQ(kostka(lam, Partition::from_composition(mu).parts()), base);
    }
}
