#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/tkk/algebra.hpp"
#include "freejord/tkk/derivations.hpp"

namespace freejord::tkk {

struct TagOptions {
    int max_degree = -1;  // >= 0: quotient by everything of higher degree (graded J only)
    bool verify = true;   // super-antisymmetry and super-Jacobi on all basis triples
};

/// sl2 (x) J + B(J) with basis x (x) a for x in e, h, f, followed by the basis of B.
struct TagAlgebra {
    AlgebraFD lie;
    BSpace b;
    std::vector<std::uint32_t> j_index;  // kept basis elements of J
    std::size_t sl2_part = 0;            // 3 * j_index.size()
};

namespace detail {

inline const std::array<const char*, 3> kSl2Names = {"e", "h", "f"};
inline const std::array<int, 3> kSl2Weights = {2, 0, -2};

/// [x, y] in sl2 as (index, coefficient), index -1 when zero.
inline std::pair<int, int> sl2_bracket(int x, int y) {
    static const std::pair<int, int> table[3][3] = {
        {{-1, 0}, {0, -2}, {1, 1}},
        {{0, 2}, {-1, 0}, {2, -2}},
        {{1, -1}, {2, 2}, {-1, 0}},
    };
    return table[x][y];
}

/// Killing form K(x, y) = tr(ad x ad y); with the trace of the defining representation the
/// bracket below fails Jacobi, K = 4 tr is the normalization that makes it a Lie algebra.
inline int sl2_killing(int x, int y) {
    if (x == 1 && y == 1) return 8;
    if ((x == 0 && y == 2) || (x == 2 && y == 0)) return 4;
    return 0;
}

}  // namespace detail

/// [x(x)a, y(x)b] = [x,y](x)ab + 1/2 K(x,y) a^b, [a^b, x(x)c] = x(x)D_{a,b}(c),
/// [a^b, c^d] = D_{a,b}(c)^d + (-1)^{(|a|+|b|)|c|} c^D_{a,b}(d).
inline TagAlgebra tag(const AlgebraFD& J, const TagOptions& opts = {}) {
    if (J.kind != AlgebraKind::jordan) throw InputError("tag needs a Jordan algebra");
    validate(J);
    if (opts.max_degree >= 0 && !J.graded()) throw InputError("tag: a degree bound needs a graded algebra");
    TagAlgebra T;
    T.b = b_space(J, opts.max_degree);
    std::vector<int> pos(J.dim(), -1);
    for (std::uint32_t a = 0; a < J.dim(); ++a)
        if (opts.max_degree < 0 || J.degree[a] <= opts.max_degree) {
            pos[a] = static_cast<int>(T.j_index.size());
            T.j_index.push_back(a);
        }
    T.sl2_part = 3 * T.j_index.size();
    std::vector<std::string> labels;
    std::vector<int> parity, degree, weight;
    for (auto a : T.j_index)
        for (int x = 0; x < 3; ++x) {
            labels.push_back(std::string(detail::kSl2Names[static_cast<std::size_t>(x)]) + "*" + J.labels[a]);
            parity.push_back(J.parity[a]);
            if (J.graded()) degree.push_back(J.degree[a]);
            weight.push_back(detail::kSl2Weights[static_cast<std::size_t>(x)]);
        }
    for (std::size_t k = 0; k < T.b.dim(); ++k) {
        const auto [i, j] = T.b.pair_of(k);
        labels.push_back(J.labels[i] + "^" + J.labels[j]);
        parity.push_back(T.b.parity[k]);
        if (J.graded()) degree.push_back(T.b.degree[k]);
        weight.push_back(0);
    }
    AlgebraFD L(AlgebraKind::lie, labels, parity);
    L.degree = degree;
    L.weight = weight;
    const auto base = static_cast<std::uint32_t>(T.sl2_part);

    // x (x) v for v in J coordinates, truncated
    auto tensor = [&](int x, const RationalVector& v, const Rational& s) {
        RationalVector out;
        for (const auto& [a, c] : v)
            if (pos[a] >= 0) out.emplace_back(static_cast<std::uint32_t>(3 * pos[a] + x), s * c);
        return out;
    };
    auto b_coords = [&](const RationalVector& w) {
        RationalVector out;
        for (const auto& [k, c] : T.b.coords(w)) out.emplace_back(base + k, c);
        return out;
    };
    auto rep = [&](std::size_t k) {
        const auto [i, j] = T.b.pair_of(k);
        return std::make_pair(basis_vector(i), basis_vector(j));
    };

    const std::size_t m = T.j_index.size();
    for (std::size_t p = 0; p < m; ++p)
        for (int x = 0; x < 3; ++x)
            for (std::size_t q = 0; q < m; ++q)
                for (int y = 0; y < 3; ++y) {
                    const auto a = T.j_index[p], b = T.j_index[q];
                    RationalVector v;
                    const auto [z, c] = detail::sl2_bracket(x, y);
                    if (z >= 0) v = tensor(z, J.product(a, b), c);
                    if (const int t = detail::sl2_killing(x, y))
                        v = axpy(v, Rational(t) / 2, b_coords(wedge(J, T.b, basis_vector(a), basis_vector(b))));
                    L.set_product(3 * p + static_cast<std::size_t>(x), 3 * q + static_cast<std::size_t>(y), std::move(v));
                }
    for (std::size_t k = 0; k < T.b.dim(); ++k) {
        const auto [a, b] = rep(k);
        for (std::size_t q = 0; q < m; ++q) {
            const RationalVector dc = inner_apply(J, a, b, basis_vector(T.j_index[q]));
            const int s = -koszul(T.b.parity[k], J.parity[T.j_index[q]]);
            for (int x = 0; x < 3; ++x) {
                RationalVector v = tensor(x, dc, 1);
                L.set_product(base + k, 3 * q + static_cast<std::size_t>(x), v);
                L.set_product(3 * q + static_cast<std::size_t>(x), base + k, scaled(v, s));
            }
        }
        const int pab = J.parity_of(a) ^ J.parity_of(b);
        for (std::size_t l = 0; l < T.b.dim(); ++l) {
            const auto [c, d] = rep(l);
            RationalVector w = wedge(J, T.b, inner_apply(J, a, b, c), d);
            w = axpy(w, koszul(pab, J.parity_of(c)), wedge(J, T.b, c, inner_apply(J, a, b, d)));
            L.set_product(base + k, base + l, b_coords(w));
        }
    }
    detail::check_shape(L);
    if (opts.verify) {
        if (!symmetry_holds(L)) throw InternalError("tag bracket is not super-antisymmetric");
        if (auto f = jacobi_failure(L, opts.max_degree))
            throw InternalError("tag bracket fails super-Jacobi on " + L.labels[f->i] + ", " + L.labels[f->j] + ", " +
                                L.labels[f->k]);
    }
    T.lie = std::move(L);
    return T;
}

}  // namespace freejord::tkk
