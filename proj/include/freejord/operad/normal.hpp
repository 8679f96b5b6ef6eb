#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/operad/tree.hpp"
#include "freejord/sym/permutation.hpp"

namespace freejord::operad {

/// Shape of a left-normed monomial (...((x x) w_1) w_2 ...) w_m with each w_k of
/// degree 1 or 2. `ops` lists deg w_1, ..., deg w_m. Degree 1 is the bare generator.
struct NormalType {
    int degree = 1;
    std::vector<int> ops;

    /// First position of op k; the head pair occupies positions 0 and 1.
    std::vector<int> op_offsets() const {
        std::vector<int> off;
        int p = 2;
        for (int d : ops) {
            off.push_back(p);
            p += d;
        }
        return off;
    }

    std::string to_string() const {
        if (degree == 1) return "x";
        std::string s = "(x x)";
        for (int d : ops) s = "(" + s + (d == 1 ? " x)" : " (x x))");
        return s;
    }

    friend auto operator<=>(const NormalType&, const NormalType&) = default;
};

namespace detail {

inline void compositions_12(int rest, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int p : {1, 2})
        if (p <= rest) {
            cur.push_back(p);
            compositions_12(rest - p, cur, out);
            cur.pop_back();
        }
}

}  // namespace detail

/// The f_n normal types of degree n (Fibonacci many), in a fixed order.
inline std::vector<NormalType> normal_types(int n) {
    if (n < 1) throw InputError("normal_types: n must be positive");
    if (n == 1) return {NormalType{1, {}}};
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    detail::compositions_12(n - 2, cur, comps);
    std::vector<NormalType> out;
    for (auto& c : comps) out.push_back(NormalType{n, std::move(c)});
    return out;
}

/// Position swaps under which a normal monomial is unchanged as a commutative monomial:
/// the head pair, every pair factor, and (head pair <-> first factor) when that factor is a pair.
inline std::vector<sym::Permutation> type_symmetries(const NormalType& t) {
    std::vector<sym::Permutation> out;
    if (t.degree < 2) return out;
    out.push_back(sym::transposition(t.degree, 0, 1));
    const auto off = t.op_offsets();
    for (std::size_t k = 0; k < t.ops.size(); ++k)
        if (t.ops[k] == 2) out.push_back(sym::transposition(t.degree, off[k], off[k] + 1));
    if (!t.ops.empty() && t.ops[0] == 2) {
        auto h = sym::identity_permutation(t.degree);
        std::swap(h[0], h[2]);
        std::swap(h[1], h[3]);
        out.push_back(std::move(h));
    }
    return out;
}

/// A labelled normal monomial: labels[pos] is the generator at position pos,
/// i.e. the permutation pi in T(pi).
struct NormalMonomial {
    std::size_t type = 0;  // index into normal_types(degree)
    std::vector<int> labels;

    friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
};

/// Canonical representative: pairs sorted, and head pair before an equal-rank pair factor.
inline NormalMonomial canonical(NormalMonomial m, const NormalType& t) {
    auto& L = m.labels;
    if (t.degree >= 2 && L[0] > L[1]) std::swap(L[0], L[1]);
    const auto off = t.op_offsets();
    for (std::size_t k = 0; k < t.ops.size(); ++k) {
        const auto p = static_cast<std::size_t>(off[k]);
        if (t.ops[k] == 2 && L[p] > L[p + 1]) std::swap(L[p], L[p + 1]);
    }
    if (!t.ops.empty() && t.ops[0] == 2 && std::make_pair(L[2], L[3]) < std::make_pair(L[0], L[1])) {
        std::swap(L[0], L[2]);
        std::swap(L[1], L[3]);
    }
    return m;
}

/// Linear combination of normal monomials of one degree.
struct MultilinearElement {
    int degree = 0;
    std::map<NormalMonomial, std::int64_t> terms;

    void add(const NormalMonomial& m, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms.try_emplace(m, c);
        if (!inserted && (it->second += c) == 0) terms.erase(it);
    }
    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const MultilinearElement&, const MultilinearElement&) = default;
};

/// sigma applied to every label.
inline MultilinearElement relabel(const MultilinearElement& e, const sym::Permutation& sigma) {
    MultilinearElement r;
    r.degree = e.degree;
    if (e.terms.empty()) return r;
    const auto types = normal_types(e.degree);
    for (const auto& [m, v] : e.terms) {
        NormalMonomial x{m.type, m.labels};
        for (auto& l : x.labels) l = sigma.at(static_cast<std::size_t>(l));
        r.add(canonical(std::move(x), types[m.type]), v);
    }
    return r;
}

/// The commutative monomial denoted by a normal monomial.
inline Tree to_tree(const NormalMonomial& m, const NormalType& t) {
    const auto& L = m.labels;
    if (t.degree == 1) return leaf(L[0]);
    Tree cur = product(leaf(L[0]), leaf(L[1]));
    std::size_t p = 2;
    for (int d : t.ops) {
        cur = product(cur, d == 1 ? leaf(L[p]) : product(leaf(L[p]), leaf(L[p + 1])));
        p += static_cast<std::size_t>(d);
    }
    return cur;
}

inline std::string to_string(const NormalMonomial& m, const NormalType& t) { return to_string(to_tree(m, t)); }

}  // namespace freejord::operad
