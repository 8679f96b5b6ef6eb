#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/rational_echelon.hpp"
#include "freejord/tkk/algebra.hpp"

namespace freejord::tkk {

/// Linear map on a finite-dimensional algebra, stored by columns: column c is the image of e_c.
using LinearMap = std::vector<RationalVector>;

inline RationalVector apply(const LinearMap& D, const RationalVector& v) {
    RationalAccumulator acc;
    for (const auto& [k, x] : v) acc.add(D[k], x);
    return acc.result();
}

/// D_{a,b}(c) = a(bc) - (-1)^{|a||b|} b(ac) for homogeneous a, b.
inline RationalVector inner_apply(const AlgebraFD& J, const RationalVector& a, const RationalVector& b,
                                  const RationalVector& c) {
    const int s = koszul(J.parity_of(a), J.parity_of(b));
    return axpy(J.multiply(a, J.multiply(b, c)), -s, J.multiply(b, J.multiply(a, c)));
}

inline LinearMap inner_map(const AlgebraFD& J, const RationalVector& a, const RationalVector& b) {
    LinearMap D(J.dim());
    for (std::size_t c = 0; c < J.dim(); ++c) D[c] = inner_apply(J, a, b, {{static_cast<std::uint32_t>(c), Rational(1)}});
    return D;
}

inline RationalVector basis_vector(std::size_t i) { return {{static_cast<std::uint32_t>(i), Rational(1)}}; }

/// D(ab) = D(a) b + (-1)^{|D||a|} a D(b) on all basis pairs.
inline bool is_derivation(const AlgebraFD& J, const LinearMap& D, int parity) {
    for (std::size_t a = 0; a < J.dim(); ++a)
        for (std::size_t b = 0; b < J.dim(); ++b) {
            const RationalVector lhs = apply(D, J.product(a, b));
            const RationalVector rhs = axpy(J.multiply(D[a], basis_vector(b)), koszul(parity, J.parity[a]),
                                            J.multiply(basis_vector(a), D[b]));
            if (lhs != rhs) return false;
        }
    return true;
}

namespace detail {

inline RationalVector flatten(const LinearMap& D, std::size_t n) {
    RationalVector v;
    for (std::size_t c = 0; c < D.size(); ++c)
        for (const auto& [r, x] : D[c]) v.emplace_back(static_cast<std::uint32_t>(c * n + r), x);
    return v;
}

inline bool in_range(const AlgebraFD& J, std::size_t i, std::size_t j, int max_degree) {
    return max_degree < 0 || !J.graded() || J.degree[i] + J.degree[j] <= max_degree;
}

/// [L_a, L_{a^2}] = 0 on even basis elements and sums of two of them.
inline void check_jordan_axiom(const AlgebraFD& J) {
    std::vector<std::size_t> even;
    for (std::size_t i = 0; i < J.dim(); ++i)
        if (!J.parity[i]) even.push_back(i);
    for (std::size_t x = 0; x < even.size(); ++x)
        for (std::size_t y = x; y < even.size(); ++y) {
            RationalVector a = basis_vector(even[x]);
            if (y != x) a = axpy(a, 1, basis_vector(even[y]));
            const RationalVector a2 = J.multiply(a, a);
            for (std::size_t c = 0; c < J.dim(); ++c)
                if (!inner_apply(J, a, a2, basis_vector(c)).empty())
                    throw InputError("not a Jordan algebra: [L_a, L_a^2] != 0 for a = " + J.labels[even[x]] +
                                     (y != x ? " + " + J.labels[even[y]] : std::string()));
        }
}

}  // namespace detail

struct DerivationSpace {
    std::size_t ambient = 0;
    std::vector<LinearMap> basis;                         // independent D_{e_i,e_j}
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i, j) of each basis element
    std::vector<int> parity;
    std::size_t rank() const { return basis.size(); }
};

/// Span of D_{e_i,e_j}; with `max_degree` >= 0 only pairs of total degree at most that bound.
inline DerivationSpace inner_derivations(const AlgebraFD& J, int max_degree = -1) {
    if (J.kind != AlgebraKind::jordan) throw InputError("inner_derivations needs a Jordan algebra");
    detail::check_jordan_axiom(J);
    const std::size_t n = J.dim();
    DerivationSpace out;
    out.ambient = n;
    RationalEchelon span;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (!detail::in_range(J, i, j, max_degree)) continue;
            LinearMap D = inner_map(J, basis_vector(i), basis_vector(j));
            if (!span.add(detail::flatten(D, n))) continue;
            const int p = J.parity[i] ^ J.parity[j];
            if (!is_derivation(J, D, p)) throw InternalError("D_{a,b} failed the derivation law");
            out.basis.push_back(std::move(D));
            out.pairs.emplace_back(i, j);
            out.parity.push_back(p);
        }
    return out;
}

/// Lambda^2 J modulo ab^c + bc^a + ca^b, in the parity-aware sense (symmetric on odd x odd).
struct BSpace {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> wedge_basis;  // i <= j, i == j only for odd i
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> wedge_index;
    RationalEchelon relations;
    std::vector<std::uint32_t> reps;          // wedge indices spanning the quotient
    std::map<std::uint32_t, std::uint32_t> rep_index;
    std::vector<int> parity;
    std::vector<int> degree;                  // empty when J is ungraded
    int max_degree = -1;

    std::size_t dim() const { return reps.size(); }
    std::pair<std::uint32_t, std::uint32_t> pair_of(std::size_t k) const { return wedge_basis[reps[k]]; }

    /// Coordinates in B of an element of Lambda^2 J.
    RationalVector coords(const RationalVector& w) const {
        RationalVector out;
        for (const auto& [c, x] : relations.reduce(w)) out.emplace_back(rep_index.at(c), x);
        return out;
    }
};

/// a ^ b in wedge coordinates; components above `b.max_degree` are dropped.
inline RationalVector wedge(const AlgebraFD& J, const BSpace& B, const RationalVector& a, const RationalVector& b) {
    RationalAccumulator acc;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            if (i == j && !J.parity[i]) continue;
            if (!detail::in_range(J, i, j, B.max_degree)) continue;
            if (i <= j) acc.add(B.wedge_index.at({i, j}), x * y);
            else acc.add(B.wedge_index.at({j, i}), -koszul(J.parity[i], J.parity[j]) * x * y);
        }
    return acc.result();
}

inline BSpace b_space(const AlgebraFD& J, int max_degree = -1) {
    if (J.kind != AlgebraKind::jordan) throw InputError("b_space needs a Jordan algebra");
    const std::size_t n = J.dim();
    BSpace B;
    B.max_degree = max_degree;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) {
            if (i == j && !J.parity[i]) continue;
            if (!detail::in_range(J, i, j, max_degree)) continue;
            B.wedge_index.emplace(std::make_pair(i, j), static_cast<std::uint32_t>(B.wedge_basis.size()));
            B.wedge_basis.emplace_back(i, j);
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (J.product(a, b).empty()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (max_degree >= 0 && J.graded() && J.degree[a] + J.degree[b] + J.degree[c] > max_degree) continue;
                const int pa = J.parity[a], pb = J.parity[b], pc = J.parity[c];
                const auto ea = basis_vector(a), eb = basis_vector(b), ec = basis_vector(c);
                RationalVector r = wedge(J, B, J.product(a, b), ec);
                r = axpy(r, koszul(pa, pb ^ pc), wedge(J, B, J.multiply(eb, ec), ea));
                r = axpy(r, koszul(pc, pa ^ pb), wedge(J, B, J.multiply(ec, ea), eb));
                if (!r.empty()) B.relations.add(r);
            }
        }
    for (std::uint32_t w = 0; w < B.wedge_basis.size(); ++w) {
        if (B.relations.is_pivot(w)) continue;
        B.rep_index.emplace(w, static_cast<std::uint32_t>(B.reps.size()));
        B.reps.push_back(w);
        const auto [i, j] = B.wedge_basis[w];
        B.parity.push_back(J.parity[i] ^ J.parity[j]);
        if (J.graded()) B.degree.push_back(J.degree[i] + J.degree[j]);
    }
    return B;
}

/// Dimension of B per degree 0..max (graded J only).
inline std::vector<std::size_t> graded_dims(const BSpace& B, int max) {
    std::vector<std::size_t> d(static_cast<std::size_t>(max + 1), 0);
    for (int g : B.degree)
        if (g >= 0 && g <= max) ++d[static_cast<std::size_t>(g)];
    return d;
}

/// Checks that every relation maps to the zero derivation and that a ^ b -> D_{a,b}
/// maps B onto Inner(J) in the same degree range; returns the rank of the image.
inline std::size_t verify_b_to_inner(const AlgebraFD& J, const BSpace& B, const DerivationSpace& inner) {
    const std::size_t n = J.dim();
    auto d_of = [&](std::uint32_t w) {
        const auto [i, j] = B.wedge_basis[w];
        return inner_map(J, basis_vector(i), basis_vector(j));
    };
    std::map<std::uint32_t, RationalVector> flat;
    auto flat_of = [&](std::uint32_t w) -> const RationalVector& {
        auto it = flat.find(w);
        if (it == flat.end()) it = flat.emplace(w, detail::flatten(d_of(w), n)).first;
        return it->second;
    };
    for (const auto c : B.relations.pivots()) {
        RationalVector image;
        RationalVector row = B.relations.reduce({{c, Rational(1)}});
        // the relation row is e_c minus its reduction
        row = axpy({{c, Rational(1)}}, -1, row);
        for (const auto& [w, x] : row) image = axpy(image, x, flat_of(w));
        if (!image.empty()) throw InternalError("a defining relation of B does not vanish on derivations");
    }
    RationalEchelon image;
    for (const auto w : B.reps) image.add(flat_of(w));
    if (image.rank() != inner.rank()) throw InternalError("B does not map onto the inner derivations");
    return image.rank();
}

}  // namespace freejord::tkk
