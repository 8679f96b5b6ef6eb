#include <random>

#include <gtest/gtest.h>

#include "freejord/clifton/clifton.hpp"
#include "freejord/sym/characters.hpp"

using namespace freejord;
using namespace freejord::clifton;
using sym::Permutation;

namespace {

Rational trace(const DenseMatrix<RationalField>& m) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace

TEST(StandardTableaux, Counts) {
    EXPECT_EQ(standard_tableaux(Partition({5}))->size(), 1u);
    EXPECT_EQ(standard_tableaux(Partition({2, 1}))->size(), 2u);
    EXPECT_EQ(standard_tableaux(Partition({2, 2}))->size(), 2u);
    for (int n = 1; n <= 9; ++n)
        for (const auto& lam : sym::partitions(n))
            EXPECT_EQ(static_cast<std::int64_t>(standard_tableaux(lam)->size()), sym::dim_irrep(lam));
    const auto& t = standard_tableaux(Partition({2, 1}))->front();
    EXPECT_EQ(t.to_string(), "1 2/3");
}

TEST(CliftonMatrix, OneRowAndOneColumn) {
    std::mt19937 rng(7);
    for (int n = 1; n <= 7; ++n) {
        const auto sigma = sym::random_permutation(n, rng);
        auto A = clifton_matrix(Partition({n}), sigma);
        ASSERT_EQ(A.matrix.rows(), 1u);
        EXPECT_EQ(A.matrix(0, 0), 1);
        auto rho = rep_matrix(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), sigma);
        EXPECT_EQ(rho.matrix(0, 0), sym::sign(sigma));
    }
}

TEST(CliftonMatrix, TranspositionTraceOnHook) {
    auto rho = rep_matrix(Partition({2, 1}), sym::transposition(3, 0, 1));
    EXPECT_EQ(trace(rho.matrix), sym::character(Partition({2, 1}), Partition({2, 1})));
    EXPECT_EQ(trace(rho.matrix), 0);
    EXPECT_THROW(clifton_matrix(Partition({2, 1}), Permutation{0, 1}), InputError);
}

TEST(RepMatrix, IdentityIsIdentity) {
    for (const auto& lam : sym::partitions(6)) {
        auto rho = rep_matrix(lam, sym::identity_permutation(6));
        EXPECT_EQ(rho.matrix, DenseMatrix<RationalField>::identity(RationalField{}, rho.matrix.rows()));
    }
}

TEST(RepMatrix, TraceIsCharacterExhaustive) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : sym::partitions(n))
            for (const auto& sigma : sym::all_permutations(n))
                EXPECT_EQ(trace(rep_matrix(lam, sigma).matrix), sym::character(lam, sym::cycle_type(sigma)))
                    << lam.to_string();
}

TEST(RepMatrix, TraceIsCharacterSampled) {
    std::mt19937 rng(11);
    for (int n : {7, 8})
        for (const auto& lam : sym::partitions(n))
            for (int k = 0; k < 6; ++k) {
                const auto sigma = sym::random_permutation(n, rng);
                EXPECT_EQ(trace(rep_matrix(lam, sigma).matrix), sym::character(lam, sym::cycle_type(sigma)));
            }
}

TEST(RepMatrix, HomomorphismExhaustivePairsSmall) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : sym::partitions(n))
            for (const auto& a : sym::all_permutations(n))
                for (const auto& b : sym::all_permutations(n))
                    EXPECT_EQ(rep_matrix(lam, sym::compose(a, b)).matrix,
                              rep_matrix(lam, a).matrix * rep_matrix(lam, b).matrix);
}

TEST(RepMatrix, HomomorphismRandomPairs) {
    std::mt19937 rng(5);
    for (const auto& lam : sym::partitions(6))
        for (int k = 0; k < 50; ++k) {
            const auto a = sym::random_permutation(6, rng), b = sym::random_permutation(6, rng);
            EXPECT_EQ(rep_matrix(lam, sym::compose(a, b)).matrix, rep_matrix(lam, a).matrix * rep_matrix(lam, b).matrix);
        }
    for (int n : {7, 8})
        for (const auto& lam : sym::partitions(n)) {
            const auto a = sym::random_permutation(n, rng), b = sym::random_permutation(n, rng);
            EXPECT_EQ(rep_matrix(lam, sym::compose(a, b)).matrix, rep_matrix(lam, a).matrix * rep_matrix(lam, b).matrix);
        }
}

TEST(RepMatrix, ModularHomomorphism) {
    PrimeField F(kDefaultPrimes[0]);
    std::mt19937 rng(3);
    const Partition lam({4, 3, 1});
    for (int k = 0; k < 5; ++k) {
        const auto a = sym::random_permutation(8, rng), b = sym::random_permutation(8, rng);
        EXPECT_EQ(rep_matrix(F, lam, sym::compose(a, b)), rep_matrix(F, lam, a) * rep_matrix(F, lam, b));
        EXPECT_EQ(rep_matrix(F, lam, a), reduce_mod_p(rep_matrix(lam, a).matrix, F.p));
    }
}

TEST(RepMatrix, AveragingProjector) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : sym::partitions(n)) {
            const auto d = static_cast<std::size_t>(sym::dim_irrep(lam));
            DenseMatrix<RationalField> sum(RationalField{}, d, d);
            for (const auto& sigma : sym::all_permutations(n)) {
                auto rho = rep_matrix(lam, sigma).matrix;
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) sum(i, j) += rho(i, j);
            }
            EXPECT_EQ(rank(sum), lam == Partition({n}) ? 1u : 0u) << lam.to_string();
        }
}

TEST(CliftonMatrix, IdentityLowerUnitriangularUpToTen) {
    // unitriangular implies determinant one, hence invertible
    for (int n = 1; n <= 10; ++n)
        for (const auto& lam : sym::partitions(n)) {
            const auto A = clifton_matrix(PrimeField(101), lam, sym::identity_permutation(n));
            bool ok = true;
            for (std::size_t i = 0; i < A.rows() && ok; ++i) {
                ok = A(i, i) == 1;
                for (std::size_t j = i + 1; j < A.cols() && ok; ++j) ok = A(i, j) == 0;
            }
            EXPECT_TRUE(ok) << lam.to_string();
        }
}
