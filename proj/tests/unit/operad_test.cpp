#include <chrono>
#include <unistd.h>

#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "freejord/app/reference_data.hpp"
#include "freejord/operad/consequences.hpp"
#include "freejord/operad/hentzel.hpp"
#include "freejord/operad/multidegree.hpp"
#include "freejord/operad/naive.hpp"
#include "freejord/operad/straighten.hpp"
#include "freejord/sym/kostka.hpp"

using namespace freejord;
using freejord::app::jord_tables;
using freejord::app::kJordDims;
using namespace freejord::operad;

namespace {

constexpr std::uint32_t kP = 1000003;
constexpr int kDim = 4;

using Mat = std::vector<std::uint64_t>;

Mat jordan(const Mat& a, const Mat& b) {
    Mat r(kDim * kDim, 0);
    const std::uint64_t half = (kP + 1) / 2;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            std::uint64_t s = 0;
            for (int k = 0; k < kDim; ++k) s += a[i * kDim + k] * b[k * kDim + j] % kP + b[i * kDim + k] * a[k * kDim + j] % kP;
            r[i * kDim + j] = s % kP * half % kP;
        }
    return r;
}

std::vector<Mat> random_symmetric(int count, std::mt19937_64& rng) {
    std::vector<Mat> out;
    for (int c = 0; c < count; ++c) {
        Mat m(kDim * kDim);
        for (int i = 0; i < kDim; ++i)
            for (int j = i; j < kDim; ++j) m[i * kDim + j] = m[j * kDim + i] = rng() % kP;
        out.push_back(m);
    }
    return out;
}

Mat eval(const Tree& t, const std::vector<Mat>& x) {
    if (t->is_leaf()) return x[static_cast<std::size_t>(t->label)];
    return jordan(eval(t->left, x), eval(t->right, x));
}

Mat eval(const TreeCombination& c, const std::vector<Mat>& x) {
    Mat r(kDim * kDim, 0);
    for (const auto& [t, v] : c) {
        const Mat m = eval(t, x);
        const std::uint64_t cv = static_cast<std::uint64_t>((v % kP + kP) % kP);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + cv * m[i]) % kP;
    }
    return r;
}

Tree random_tree(const std::vector<int>& labels, std::mt19937_64& rng) {
    if (labels.size() == 1) return leaf(labels[0]);
    const std::size_t cut = 1 + rng() % (labels.size() - 1);
    return product(random_tree({labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(cut)}, rng),
                   random_tree({labels.begin() + static_cast<std::ptrdiff_t>(cut), labels.end()}, rng));
}

Tree random_multilinear(int n, std::mt19937_64& rng) {
    auto labels = sym::random_permutation(n, rng);
    return random_tree(labels, rng);
}

}  // namespace

TEST(CommTypes, WedderburnEtheringtonCounts) {
    const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23, 46, 98};
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(comm_types(n).size(), expected[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(NormalTypes, FibonacciCounts) {
    const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(normal_types(n).size(), expected[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Trees, MultilinearCountIsDoubleFactorial) {
    const std::vector<std::size_t> expected = {1, 1, 3, 15, 105, 945, 10395};
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(multilinear_trees(n).size(), expected[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Trees, ParsePrintRoundTrip) {
    const auto t = parse_tree("((3 (1 2)) 4)");
    EXPECT_EQ(to_string(t), "(((2 1) 3) 4)");
    EXPECT_EQ(compare(t, parse_tree("(4 (3 (2 1)))")), 0);
    EXPECT_TRUE(is_multilinear(t));
    EXPECT_THROW(parse_tree("((1 2)"), InputError);
}

TEST(Trees, JordanIdentityHoldsForSymmetricMatrices) {
    std::mt19937_64 rng(1);
    const auto x = random_symmetric(4, rng);
    const auto v = eval(base_identity(), x);
    EXPECT_EQ(v, Mat(kDim * kDim, 0));
}

TEST(Straighten, FixesNormalMonomials) {
    std::mt19937_64 rng(2);
    for (int n = 1; n <= 7; ++n) {
        const auto types = normal_types(n);
        for (std::size_t s = 0; s < types.size(); ++s)
            for (int rep = 0; rep < 5; ++rep) {
                const auto m = canonical(NormalMonomial{s, sym::random_permutation(n, rng)}, types[s]);
                const auto e = straighten(to_tree(m, types[s]));
                ASSERT_EQ(e.terms.size(), 1u) << to_string(m, types[s]);
                EXPECT_EQ(e.terms.begin()->first, m);
                EXPECT_EQ(e.terms.begin()->second, 1);
            }
    }
}

TEST(Straighten, CommutativityOnly) {
    // (x2 x3) x1 has head pair {2,3} and tail 1
    const auto e = straighten(parse_tree("((2 3) 1)"));
    ASSERT_EQ(e.terms.size(), 1u);
    const auto& m = e.terms.begin()->first;
    EXPECT_EQ(m.labels, (std::vector<int>{1, 2, 0}));
    EXPECT_EQ(e.terms.begin()->second, 1);
}

TEST(Straighten, DegreeThreeFactorGivesFiveTerms) {
    // (((x1 x2) x3) x4) times a degree-3 factor, after one rewrite
    const auto t = parse_tree("((((1 2) 3) 4) ((5 6) 7))");
    const auto e = straighten(t);
    EXPECT_FALSE(e.is_zero());
    std::mt19937_64 rng(3);
    const auto x = random_symmetric(7, rng);
    TreeCombination c;
    add_term(c, t, 1);
    EXPECT_EQ(eval(c, x), eval(to_trees(e), x));
}

TEST(Straighten, PreservesValueOnSymmetricMatrices) {
    std::mt19937_64 rng(4);
    for (int n = 3; n <= 9; ++n)
        for (int rep = 0; rep < 6; ++rep) {
            const auto t = random_multilinear(n, rng);
            const auto x = random_symmetric(n, rng);
            TreeCombination c;
            add_term(c, t, 1);
            EXPECT_EQ(eval(c, x), eval(to_trees(straighten(t)), x)) << to_string(t);
        }
}

TEST(Straighten, DifferenceLiesInNaiveIdeal) {
    std::mt19937_64 rng(5);
    for (int n = 4; n <= 6; ++n) {
        const auto space = naive_space(n);
        for (const auto& t : space->basis) {
            if (rng() % 4) continue;
            TreeCombination c = to_trees(straighten(t));
            for (auto& [u, v] : c) v = -v;
            add_term(c, t, 1);
            EXPECT_TRUE(space->in_ideal(c)) << to_string(t);
        }
    }
}

TEST(Consequences, CountsAreFactorialOver24) {
    EXPECT_TRUE(consequence_trees(3).empty());
    EXPECT_TRUE(consequences(2).empty());
    for (int n = 4; n <= 7; ++n) EXPECT_EQ(consequence_trees(n).size(), full_consequence_count(n)) << n;
    EXPECT_EQ(full_consequence_count(8), 1680u);
}

TEST(Consequences, TranslatesSpanTheIdeal) {
    for (int n = 4; n <= 5; ++n) {
        const auto space = naive_space(n);
        SparseEchelon e(PrimeField(space->prime), space->basis.size());
        for (const auto& c : consequence_trees(n))
            for (const auto& sigma : sym::all_permutations(n)) e.add(space->to_vector(relabel(c, sigma)));
        EXPECT_EQ(space->basis.size() - e.rank(), static_cast<std::size_t>(kJordDims[static_cast<std::size_t>(n - 1)]));
    }
}

TEST(Naive, DimensionsThroughSix) {
    EXPECT_EQ(naive_dim(1), 1u);
    EXPECT_EQ(naive_dim(2), 1u);
    EXPECT_EQ(naive_dim(3), 3u);
    EXPECT_EQ(naive_dim(4), 11u);
    EXPECT_EQ(naive_dim(5), 55u);
    EXPECT_EQ(naive_dim(6), 330u);
}

TEST(Naive, RefusesAboveBound) {
    try {
        naive_dim(8);
        FAIL() << "expected refusal";
    } catch (const InfeasibleError& e) {
        EXPECT_GT(e.estimate(), 1e5);
    }
    EXPECT_THROW(naive_dim(6, kDefaultPrimes[0], 5), InfeasibleError);
}

TEST(Hentzel, SmallMultiplicities) {
    EXPECT_EQ(multiplicity(Partition::parse("2,1")).multiplicity, 1u);
    EXPECT_EQ(multiplicity(Partition::parse("3")).multiplicity, 1u);
    EXPECT_EQ(multiplicity(Partition::parse("1,1,1")).multiplicity, 0u);
    EXPECT_EQ(multiplicity(Partition::parse("1,1,1,1")).multiplicity, 0u);
    const auto r = multiplicity(Partition::parse("2,2"));
    EXPECT_EQ(r.multiplicity, 2u);
    EXPECT_EQ(r.f_n, 2u);
    EXPECT_EQ(r.d_lambda, 2u);
    EXPECT_EQ(r.j_n, 1u);
    EXPECT_EQ(r.primes.size(), 2u);
}

TEST(Hentzel, ModulesMatchPublishedTablesThroughSeven) {
    for (int n = 1; n <= 7; ++n) {
        const auto mod = jord_module(n);
        std::map<Partition, std::size_t> got;
        for (const auto& r : mod.parts)
            if (r.multiplicity) got[r.lambda] = r.multiplicity;
        std::map<Partition, std::size_t> want;
        for (const auto& [s, m] : jord_tables()[static_cast<std::size_t>(n - 1)]) want[Partition::parse(s)] = static_cast<std::size_t>(m);
        EXPECT_EQ(got, want) << "degree " << n;
        EXPECT_EQ(mod.dimension, kJordDims[static_cast<std::size_t>(n - 1)]);
    }
}

TEST(Hentzel, AgreesWithNaiveOracle) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(jord_module(n).dimension, naive_dim(n)) << n;
}

TEST(Hentzel, IndependentOfPrimesAndPruning) {
    HentzelOptions other;
    other.primes = {kDefaultPrimes[2], kDefaultPrimes[3]};
    HentzelOptions full;
    full.prune = false;
    for (const auto& lam : sym::partitions(6)) {
        const auto a = multiplicity(lam);
        EXPECT_EQ(a.multiplicity, multiplicity(lam, other).multiplicity) << lam;
        EXPECT_EQ(a.multiplicity, multiplicity(lam, full).multiplicity) << lam;
    }
}

TEST(Hentzel, RankCacheRoundTrip) {
    const auto dir = std::filesystem::temp_directory_path() / ("freejord-cache-" + std::to_string(::getpid()));
    HentzelOptions opts;
    opts.cache_dir = dir.string();
    const auto lam = Partition::parse("3,2,1");
    const auto first = multiplicity(lam, opts);
    EXPECT_FALSE(first.cached);
    const auto second = multiplicity(lam, opts);
    EXPECT_TRUE(second.cached);
    EXPECT_EQ(first.multiplicity, second.multiplicity);
    EXPECT_EQ(first.multiplicity, 8u);
    std::filesystem::remove_all(dir);
}

TEST(Hentzel, DegreeEightMatchesPublishedTable) {
    const auto mod = jord_module(8);
    std::map<Partition, std::size_t> got, want;
    for (const auto& r : mod.parts)
        if (r.multiplicity) got[r.lambda] = r.multiplicity;
    for (const auto& [s, m] : jord_tables()[7]) want[Partition::parse(s)] = static_cast<std::size_t>(m);
    EXPECT_EQ(got, want);
    EXPECT_EQ(mod.dimension, 19089);
}

TEST(Hentzel, RefusesOversizedEchelonUpFront) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        jord_module(10);
        FAIL() << "expected refusal";
    } catch (const InfeasibleError& e) {
        EXPECT_GT(e.estimate(), 2.5e9);
    }
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 5.0);
    HentzelOptions small;
    small.max_matrix_bytes = 1e3;
    EXPECT_THROW(multiplicity(Partition({3, 2, 1}), small), InfeasibleError);
}

TEST(Naive, DegreeSevenAgreesWithHentzel) {
    EXPECT_EQ(naive_dim(7), 2345u);
    EXPECT_EQ(jord_module(7).dimension, 2345);
}

TEST(Multidegree, SmallComponents) {
    EXPECT_EQ(multidegree_dim({1, 1}), 1u);
    EXPECT_EQ(multidegree_dim({2, 1}), 2u);
    EXPECT_EQ(multidegree_dim({1, 1, 1}), 3u);
    EXPECT_EQ(monomial_count({1, 1, 1, 1}), 15);
    EXPECT_EQ(monomial_count({9, 1, 1}), 9019);
}

TEST(Multidegree, WeightSpacesOfTheModules) {
    // dim of weight space mu = sum over lambda of mult(lambda) K(lambda, mu)
    for (int n = 2; n <= 7; ++n) {
        const auto mod = jord_module(n);
        for (const auto& mu : sym::partitions(n)) {
            if (mu.length() > 3) continue;
            std::int64_t expected = 0;
            for (const auto& r : mod.parts) expected += static_cast<std::int64_t>(r.multiplicity) * sym::kostka(r.lambda, mu.parts());
            EXPECT_EQ(static_cast<std::int64_t>(multidegree_dim(mu.parts())), expected) << mu;
        }
    }
}

TEST(Multidegree, TreeAndNormalCoordinatesAgree) {
    MultidegreeOptions full;
    full.full_space = true;
    full.max_generators = 6;
    MultidegreeOptions normal = full;
    normal.full_space = false;
    for (const Multidegree& d : std::vector<Multidegree>{{3, 3}, {4, 2}, {2, 2, 2}, {5, 1, 1}, {1, 1, 1, 1, 1, 1}, {4, 2, 1}}) {
        EXPECT_EQ(multidegree_dim(d, full), multidegree_dim(d, normal)) << to_string(d);
    }
}

TEST(Multidegree, Refusals) {
    EXPECT_THROW(multidegree_dim({1, 1, 1, 1}), InputError);
    EXPECT_THROW(multidegree_dim({0, 0}), InputError);
    EXPECT_THROW(multidegree_dim({-1, 2}), InputError);
    try {
        multidegree_dim({8, 8});
        FAIL() << "expected refusal";
    } catch (const InfeasibleError& e) {
        EXPECT_EQ(e.estimate(), 22561232);
    }
}

TEST(Multidegree, NineOneOne) { EXPECT_EQ(multidegree_dim({9, 1, 1}), 55u); }
