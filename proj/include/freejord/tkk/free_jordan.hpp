#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/rational_echelon.hpp"
#include "freejord/tkk/algebra.hpp"

namespace freejord::tkk {

/// Largest truncation degree for three or more generators: no special identities occur
/// below degree 8, so the special realization is the free Jordan algebra there.
inline constexpr int kSpecialRealizationMaxDegree = 7;
inline constexpr double kFreeJordanMaxWords = 2e5;

namespace detail {

/// Homogeneous element of the free associative (super)algebra; words are base-g codes.
struct AssocPoly {
    std::vector<int> content;
    int len = 0;
    int parity = 0;
    std::map<std::uint64_t, Rational> terms;
};

inline std::uint64_t power(std::uint64_t g, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= g;
    return r;
}

/// a o b = 1/2 (ab + (-1)^{|a||b|} ba).
inline AssocPoly super_jordan_product(const AssocPoly& a, const AssocPoly& b, std::uint64_t g) {
    AssocPoly r;
    r.len = a.len + b.len;
    r.parity = a.parity ^ b.parity;
    r.content = a.content;
    for (std::size_t i = 0; i < r.content.size(); ++i) r.content[i] += b.content[i];
    const std::uint64_t sa = power(g, a.len), sb = power(g, b.len);
    const Rational half = Rational(1) / 2;
    const Rational sign = half * koszul(a.parity, b.parity);
    for (const auto& [u, x] : a.terms)
        for (const auto& [v, y] : b.terms) {
            const Rational c = x * y;
            r.terms[u * sb + v] += half * c;
            r.terms[v * sa + u] += sign * c;
        }
    for (auto it = r.terms.begin(); it != r.terms.end();)
        it = sgn(it->second) ? std::next(it) : r.terms.erase(it);
    return r;
}

}  // namespace detail

/// The free Jordan algebra on generators of the given parities modulo everything of degree
/// above N, realized inside the free associative superalgebra under a o b = (ab + ba)/2.
/// Supported: any number of even generators with N <= 7 (two or fewer: any N), and the
/// single odd generator, where the algebra is the line spanned by x.
inline AlgebraFD truncated_free_jordan(const std::vector<int>& parities, int N) {
    const auto g = parities.size();
    if (g == 0 || N < 1) throw InputError("truncated_free_jordan: need at least one generator and N >= 1");
    int odd = 0;
    for (int p : parities) {
        if (p != 0 && p != 1) throw InputError("truncated_free_jordan: parities must be 0 or 1");
        odd += p;
    }
    if (odd > 0 && !(g == 1 && odd == 1))
        throw InfeasibleError("truncated_free_jordan: odd generators are supported only for the signature (0|1)",
                              std::pow(2.0, N));
    if (odd == 0 && g > 2 && N > kSpecialRealizationMaxDegree)
        throw InfeasibleError("truncated_free_jordan: special realization is exact only up to degree " +
                                  std::to_string(kSpecialRealizationMaxDegree) + " for three or more generators",
                              std::pow(static_cast<double>(g), N));
    double words = 0;
    for (int n = 1; n <= N; ++n) words += std::pow(static_cast<double>(g), n);
    if (words > kFreeJordanMaxWords)
        throw InfeasibleError("truncated_free_jordan: too many associative words", words);

    std::vector<detail::AssocPoly> basis;
    std::vector<std::string> labels;
    std::vector<int> parity, degree;
    // per content: word columns and the echelon of the chosen basis elements
    struct Component {
        std::map<std::uint64_t, std::uint32_t> column;
        RationalEchelon span;
    };
    std::map<std::vector<int>, Component> comps;
    auto to_vector = [&](Component& c, const detail::AssocPoly& p) {
        RationalAccumulator acc;
        for (const auto& [w, x] : p.terms) {
            auto it = c.column.find(w);
            if (it == c.column.end()) it = c.column.emplace(w, static_cast<std::uint32_t>(c.column.size())).first;
            acc.add(it->second, x);
        }
        return acc.result();
    };
    std::vector<std::vector<std::size_t>> by_degree(static_cast<std::size_t>(N + 1));
    for (std::size_t i = 0; i < g; ++i) {
        detail::AssocPoly x;
        x.content.assign(g, 0);
        x.content[i] = 1;
        x.len = 1;
        x.parity = parities[i];
        x.terms[i] = 1;
        auto& comp = comps[x.content];
        comp.span.add(to_vector(comp, x), static_cast<std::uint32_t>(basis.size()));
        by_degree[1].push_back(basis.size());
        labels.push_back("x" + std::to_string(i + 1));
        parity.push_back(parities[i]);
        degree.push_back(1);
        basis.push_back(std::move(x));
    }
    for (int n = 2; n <= N; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (std::size_t i : by_degree[static_cast<std::size_t>(k)])
                for (std::size_t j : by_degree[static_cast<std::size_t>(n - k)]) {
                    if (k == n - k && j < i) continue;
                    auto p = detail::super_jordan_product(basis[i], basis[j], g);
                    if (p.terms.empty()) continue;
                    auto& comp = comps[p.content];
                    if (!comp.span.add(to_vector(comp, p), static_cast<std::uint32_t>(basis.size()))) continue;
                    by_degree[static_cast<std::size_t>(n)].push_back(basis.size());
                    labels.push_back("(" + labels[i] + " " + labels[j] + ")");
                    parity.push_back(p.parity);
                    degree.push_back(n);
                    basis.push_back(std::move(p));
                }
    AlgebraFD J(AlgebraKind::jordan, labels, parity);
    J.degree = degree;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (degree[i] + degree[j] > N) continue;
            auto p = detail::super_jordan_product(basis[i], basis[j], g);
            if (p.terms.empty()) continue;
            auto& comp = comps[p.content];
            RationalVector combo;
            if (!comp.span.reduce(to_vector(comp, p), &combo).empty())
                throw InternalError("truncated_free_jordan: product outside the Jordan span");
            J.set_product(i, j, std::move(combo));
        }
    detail::check_shape(J);
    return J;
}

/// Number of basis elements of each degree 1..max.
inline std::vector<std::size_t> graded_dims(const AlgebraFD& A, int max) {
    std::vector<std::size_t> d(static_cast<std::size_t>(max), 0);
    for (int x : A.degree)
        if (x >= 1 && x <= max) ++d[static_cast<std::size_t>(x - 1)];
    return d;
}

}  // namespace freejord::tkk
