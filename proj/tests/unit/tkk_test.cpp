#include <gtest/gtest.h>

#include <random>

#include "freejord/operad/multidegree.hpp"
#include "freejord/special/special_jordan.hpp"
#include "freejord/tkk/tkk.hpp"

using namespace freejord;
using namespace freejord::tkk;

namespace {

AlgebraFD field_algebra() {
    AlgebraFD J(AlgebraKind::jordan, {"1"}, {0});
    J.set_product(0, 0, {{0, 1}});
    return J;
}

AlgebraFD odd_line() {
    AlgebraFD J(AlgebraKind::jordan, {"x"}, {1});
    J.degree = {1};
    return J;
}

AlgebraFD diagonal3() {
    AlgebraFD J(AlgebraKind::jordan, {"u1", "u2", "u3"}, {0, 0, 0});
    for (std::size_t i = 0; i < 3; ++i) J.set_product(i, i, {{static_cast<std::uint32_t>(i), 1}});
    return J;
}

/// 2x2 symmetric matrices under (AB + BA)/2 in the basis E11, E22, S = E12 + E21.
AlgebraFD sym2() {
    AlgebraFD J(AlgebraKind::jordan, {"E11", "E22", "S"}, {0, 0, 0});
    const Rational h = Rational(1) / 2;
    J.set_product(0, 0, {{0, 1}});
    J.set_product(1, 1, {{1, 1}});
    J.set_product(0, 2, {{2, h}});
    J.set_product(2, 0, {{2, h}});
    J.set_product(1, 2, {{2, h}});
    J.set_product(2, 1, {{2, h}});
    J.set_product(2, 2, {{0, 1}, {1, 1}});
    return J;
}

AlgebraFD abelian(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
    return AlgebraFD(AlgebraKind::lie, labels, std::vector<int>(n, 0));
}

RationalVector random_element(const AlgebraFD& J, std::mt19937& rng, int parity = 0) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    RationalVector v;
    for (std::uint32_t i = 0; i < J.dim(); ++i)
        if (J.parity[i] == parity)
            if (const int c = coeff(rng)) v.emplace_back(i, Rational(c));
    return v;
}

}  // namespace

TEST(Algebra, JsonRoundTrip) {
    const auto J = truncated_free_jordan({0, 0}, 3);
    const auto K = algebra_from_json(algebra_to_json(J));
    EXPECT_EQ(K.labels, J.labels);
    EXPECT_EQ(K.degree, J.degree);
    EXPECT_EQ(K.table, J.table);
    nlohmann::json bad = {{"dim", 1}, {"table", {{0, 0, {{5, 1, 1}}}}}};
    EXPECT_THROW(algebra_from_json(bad), InputError);
    nlohmann::json zero_den = {{"dim", 1}, {"table", {{0, 0, {0, 1, 0}}}}};
    EXPECT_THROW(algebra_from_json(zero_den), InputError);
}

TEST(Algebra, Sl2IsLie) {
    const auto L = sl2_algebra();
    EXPECT_NO_THROW(validate(L));
    auto broken = L;
    broken.set_product(1, 0, {{0, 3}});
    EXPECT_THROW(validate(broken), InputError);
}

TEST(InnerDerivations, SmallExamples) {
    EXPECT_EQ(inner_derivations(field_algebra()).rank(), 0u);
    EXPECT_EQ(inner_derivations(diagonal3()).rank(), 0u);
    const auto S = sym2();
    const auto D = inner_derivations(S);
    EXPECT_EQ(D.rank(), 1u);
    for (std::size_t k = 0; k < D.rank(); ++k) EXPECT_TRUE(is_derivation(S, D.basis[k], D.parity[k]));
}

TEST(InnerDerivations, RejectsNonJordanProduct) {
    // a commutative product with (a a) a != a (a a) structure: a^2 = b, a b = a
    AlgebraFD J(AlgebraKind::jordan, {"a", "b"}, {0, 0});
    J.set_product(0, 0, {{1, 1}});
    J.set_product(0, 1, {{0, 1}});
    J.set_product(1, 0, {{0, 1}});
    EXPECT_THROW(inner_derivations(J), InputError);
}

TEST(BSpace, SmallExamples) {
    EXPECT_EQ(b_space(field_algebra()).dim(), 0u);
    const auto B = b_space(odd_line());
    ASSERT_EQ(B.dim(), 1u);
    EXPECT_EQ(B.pair_of(0), std::make_pair(0u, 0u));
    EXPECT_EQ(B.parity[0], 0);
}

TEST(BSpace, TwoGeneratorDimsThroughSix) {
    const auto J = truncated_free_jordan({0, 0}, 6);
    const auto B = b_space(J, 6);
    const auto dims = graded_dims(B, 6);
    const std::vector<std::size_t> expected = {0, 0, 1, 2, 6, 12, 27};
    EXPECT_EQ(dims, expected);
    for (int n = 2; n <= 6; ++n)
        EXPECT_EQ(dims[static_cast<std::size_t>(n)], special::b_dim_two_gen(n).get_ui()) << n;
}

TEST(BSpace, MapsOntoInnerDerivations) {
    for (const auto& J : {sym2(), diagonal3(), truncated_free_jordan({0, 0}, 4)}) {
        const int bound = J.graded() ? 4 : -1;
        const auto B = b_space(J, bound);
        const auto D = inner_derivations(J, bound);
        EXPECT_EQ(verify_b_to_inner(J, B, D), D.rank());
        EXPECT_GE(B.dim(), D.rank());
    }
}

TEST(FreeJordan, GradedDims) {
    EXPECT_EQ(graded_dims(truncated_free_jordan({0, 0}, 3), 3), (std::vector<std::size_t>{2, 3, 6}));
    const auto J1 = truncated_free_jordan({0, 0}, 1);
    EXPECT_EQ(J1.dim(), 2u);
    for (const auto& v : J1.table) EXPECT_TRUE(v.empty());
    const auto J = truncated_free_jordan({0, 0}, 8);
    const auto dims = graded_dims(J, 8);
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(dims[static_cast<std::size_t>(n - 1)], special::reversible_dim(n).get_ui()) << n;
    EXPECT_EQ(graded_dims(truncated_free_jordan({0, 0, 0}, 4), 4), (std::vector<std::size_t>{3, 6, 18, 45}));
    EXPECT_EQ(truncated_free_jordan({1}, 4).dim(), 1u);
}

TEST(FreeJordan, ThreeGeneratorsMatchMultidegrees) {
    const auto dims = graded_dims(truncated_free_jordan({0, 0, 0}, 5), 5);
    for (int n = 1; n <= 5; ++n) {
        Integer sum = 0;
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) {
                operad::Multidegree d{a, b, n - a - b};
                std::erase(d, 0);
                std::sort(d.rbegin(), d.rend());
                sum += operad::multidegree_dim(d);
            }
        EXPECT_EQ(Integer(static_cast<unsigned long>(dims[static_cast<std::size_t>(n - 1)])), sum) << n;
    }
}

TEST(FreeJordan, Refusals) {
    EXPECT_THROW(truncated_free_jordan({0, 0, 0}, 8), InfeasibleError);
    EXPECT_THROW(truncated_free_jordan({0, 1}, 3), InfeasibleError);
    EXPECT_THROW(truncated_free_jordan({}, 3), InputError);
}

TEST(FreeJordan, ProductIsJordan) {
    const auto J = truncated_free_jordan({0, 0, 0}, 4);
    EXPECT_NO_THROW(validate(J));
    EXPECT_NO_THROW(inner_derivations(J));
}

TEST(DerivationIdentities, RandomTriples) {
    const auto J = truncated_free_jordan({0, 0}, 6);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_element(J, rng), b = random_element(J, rng), c = random_element(J, rng);
        const auto x = random_element(J, rng);
        // D_{a,b} + D_{b,a} = 0
        EXPECT_TRUE(axpy(inner_apply(J, a, b, x), 1, inner_apply(J, b, a, x)).empty());
        // D_{ab,c} + D_{bc,a} + D_{ca,b} = 0
        RationalVector s = inner_apply(J, J.multiply(a, b), c, x);
        s = axpy(s, 1, inner_apply(J, J.multiply(b, c), a, x));
        s = axpy(s, 1, inner_apply(J, J.multiply(c, a), b, x));
        EXPECT_TRUE(s.empty());
    }
}

TEST(Tag, FieldGivesSl2) {
    const auto T = tag(field_algebra());
    EXPECT_EQ(T.lie.dim(), 3u);
    EXPECT_EQ(T.b.dim(), 0u);
    // e*1, h*1, f*1 with the sl2 bracket
    EXPECT_EQ(T.lie.product(1, 0), (RationalVector{{0, 2}}));
    EXPECT_EQ(T.lie.product(0, 2), (RationalVector{{1, 1}}));
}

TEST(Tag, OddLineGivesHeisenberg) {
    const auto T = tag(odd_line());
    const auto& L = T.lie;
    ASSERT_EQ(L.dim(), 4u);
    EXPECT_EQ(L.parity, (std::vector<int>{1, 1, 1, 0}));
    // only [a x, b x] is nonzero: half the Killing form times x^x
    const int killing[3][3] = {{0, 0, 4}, {0, 8, 0}, {4, 0, 0}};
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            const auto& v = L.product(a, b);
            if (killing[a][b] == 0) EXPECT_TRUE(v.empty());
            else EXPECT_EQ(v, (RationalVector{{3, Rational(killing[a][b]) / 2}}));
        }
    for (std::size_t a = 0; a < 4; ++a) {
        EXPECT_TRUE(L.product(a, 3).empty());
        EXPECT_TRUE(L.product(3, a).empty());
    }
}

TEST(Tag, JacobiOnTruncatedFreeJordan) {
    EXPECT_NO_THROW(tag(truncated_free_jordan({0, 0}, 3)));
    EXPECT_NO_THROW(tag(sym2()));
    const auto T = tag(truncated_free_jordan({0, 0}, 4), {.max_degree = 4});
    EXPECT_FALSE(jacobi_failure(T.lie, 4).has_value());
}

TEST(Homology, AbelianAndSl2) {
    EXPECT_EQ(ce_homology(abelian(3), 3).dims, (std::vector<std::size_t>{1, 3, 3, 1}));
    EXPECT_EQ(ce_homology(sl2_algebra(), 3).dims, (std::vector<std::size_t>{1, 0, 0, 1}));
    const auto h = ce_homology(tag(field_algebra()).lie, 3);
    EXPECT_EQ(h.dims, (std::vector<std::size_t>{1, 0, 0, 1}));
    const auto d = sl2_decompose(h);
    EXPECT_EQ(d[0], (std::map<int, std::size_t>{{0, 1}}));
    EXPECT_TRUE(d[1].empty());
    EXPECT_EQ(d[3], (std::map<int, std::size_t>{{0, 1}}));
}

TEST(Homology, HeisenbergSuperalgebra) {
    const auto L = tag(odd_line()).lie;
    const auto h = ce_homology(L, 5, {.use_degree = false});
    EXPECT_EQ(h.dims, (std::vector<std::size_t>{1, 3, 5, 7, 9, 11}));
    const auto d = sl2_decompose(h);
    for (int p = 0; p <= 5; ++p) EXPECT_EQ(d[static_cast<std::size_t>(p)], (std::map<int, std::size_t>{{2 * p, 1}})) << p;
}

TEST(Homology, EulerCharacteristic) {
    // even finite-dimensional algebras: the complex stops at the dimension
    for (const auto& L : {sl2_algebra(), abelian(4), tag(sym2()).lie}) {
        const int top = static_cast<int>(L.dim());
        const auto h = ce_homology(L, top);
        long eh = 0, ec = 0;
        for (int k = 0; k <= top; ++k) {
            const long sg = k % 2 ? -1 : 1;
            eh += sg * static_cast<long>(h.dims[static_cast<std::size_t>(k)]);
            ec += sg * static_cast<long>(h.chain_dims[static_cast<std::size_t>(k)]);
        }
        EXPECT_EQ(eh, ec);
    }
}

TEST(Homology, GradingIndependentTotals) {
    const auto L = tag(truncated_free_jordan({0, 0}, 2)).lie;
    const auto graded = ce_homology(L, 3);
    const auto flat = ce_homology(L, 3, {.use_degree = false});
    EXPECT_TRUE(graded.graded);
    EXPECT_EQ(graded.dims, flat.dims);
    EXPECT_NO_THROW(sl2_decompose(graded));
}

TEST(Homology, DetectsBrokenBracket) {
    auto L = sl2_algebra();
    L.set_product(0, 2, {{0, 1}});
    L.set_product(2, 0, {{0, -1}});
    // d^2 needs three generators, so the failure shows up in degree 3
    EXPECT_THROW(ce_homology(L, 3), InputError);
}
