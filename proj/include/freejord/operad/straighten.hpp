#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/operad/normal.hpp"
#include "freejord/operad/tree.hpp"

namespace freejord::operad {

namespace detail {

/// L_{ops.back()} ... L_{ops.front()} (x_base).
struct OpWord {
    int base = 0;
    std::vector<Tree> ops;
};

struct OpWordLess {
    bool operator()(const OpWord& a, const OpWord& b) const {
        if (a.base != b.base) return a.base < b.base;
        if (a.ops.size() != b.ops.size()) return a.ops.size() < b.ops.size();
        for (std::size_t i = 0; i < a.ops.size(); ++i)
            if (int c = compare(a.ops[i], b.ops[i])) return c < 0;
        return false;
    }
};

/// Peels the smaller child off at every node; the larger child continues the spine.
inline OpWord op_form(const Tree& t) {
    OpWord w;
    Tree cur = t;
    std::vector<Tree> outer_to_inner;
    while (!cur->is_leaf()) {
        outer_to_inner.push_back(cur->right);
        cur = cur->left;
    }
    w.base = cur->label;
    w.ops.assign(outer_to_inner.rbegin(), outer_to_inner.rend());
    return w;
}

inline const std::map<std::vector<int>, std::size_t>& type_index(int n) {
    static std::mutex mutex;
    static std::map<int, std::map<std::vector<int>, std::size_t>> cache;
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(n);
    if (inserted) {
        const auto types = normal_types(n);
        for (std::size_t i = 0; i < types.size(); ++i) it->second.emplace(types[i].ops, i);
    }
    return it->second;
}

inline NormalMonomial to_normal(const OpWord& w, int n, const std::vector<NormalType>& types) {
    NormalMonomial m;
    if (w.ops.empty()) {
        m.labels = {w.base};
        return m;
    }
    std::vector<int> ops;
    std::size_t first = 1;
    const Tree& w1 = w.ops[0];
    if (w1->is_leaf()) {
        m.labels = {w.base, w1->label};
    } else {
        m.labels = {w1->left->label, w1->right->label};
        m.labels.push_back(w.base);
        ops.push_back(1);
    }
    for (std::size_t k = first; k < w.ops.size(); ++k) {
        const Tree& op = w.ops[k];
        if (op->is_leaf()) {
            m.labels.push_back(op->label);
            ops.push_back(1);
        } else {
            m.labels.push_back(op->left->label);
            m.labels.push_back(op->right->label);
            ops.push_back(2);
        }
    }
    const auto& idx = type_index(n);
    m.type = idx.at(ops);
    const NormalType& t = types[m.type];
    return canonical(std::move(m), t);
}

/// Rewrites a multilinear commutative monomial as a combination of normal monomials
/// modulo the Jordan identity, using
///   L_{(ac)b} = -L_a L_b L_c - L_c L_b L_a + L_{ac} L_b + L_{ab} L_c + L_{bc} L_a.
/// Each rewrite replaces an operator of degree >= 3 by operators of smaller degree.
inline MultilinearElement rewrite(const TreeCombination& c) {
    MultilinearElement out;
    if (c.empty()) return out;
    const int n = c.begin()->first->size;
    out.degree = n;
    const auto types = normal_types(n);
    using Words = std::map<OpWord, std::int64_t, OpWordLess>;
    Words cur;
    for (const auto& [t, v] : c) {
        if (t->size != n) throw InputError("straighten: mixed degrees");
        cur[op_form(t)] += v;
    }
    while (!cur.empty()) {
        Words next;
        for (auto& [w, v] : cur) {
            if (v == 0) continue;
            std::size_t k = 0;
            while (k < w.ops.size() && w.ops[k]->size < 3) ++k;
            if (k == w.ops.size()) {
                out.add(to_normal(w, n, types), v);
                continue;
            }
            const Tree& op = w.ops[k];
            const Tree& u = op->left;
            const Tree& b = op->right;
            const Tree& a = u->left;
            const Tree& cc = u->right;
            const std::pair<std::vector<Tree>, std::int64_t> repl[5] = {
                {{cc, b, a}, -1}, {{a, b, cc}, -1}, {{b, u}, 1}, {{cc, product(a, b)}, 1}, {{a, product(b, cc)}, 1}};
            for (const auto& [seq, s] : repl) {
                OpWord nw;
                nw.base = w.base;
                nw.ops.assign(w.ops.begin(), w.ops.begin() + static_cast<std::ptrdiff_t>(k));
                nw.ops.insert(nw.ops.end(), seq.begin(), seq.end());
                nw.ops.insert(nw.ops.end(), w.ops.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.ops.end());
                next[std::move(nw)] += s * v;
            }
        }
        cur = std::move(next);
    }
    return out;
}

}  // namespace detail

namespace detail {

/// Children in shape order: larger shape first, labels only break ties.
inline std::pair<Tree, Tree> shape_children(const Tree& t) {
    int c = compare_shape(t->left, t->right);
    if (c == 0) c = compare(t->left, t->right);
    return c >= 0 ? std::make_pair(t->left, t->right) : std::make_pair(t->right, t->left);
}

inline void leaves_in_shape_order(const Tree& t, std::vector<int>& out) {
    if (t->is_leaf()) {
        out.push_back(t->label);
        return;
    }
    const auto [a, b] = shape_children(t);
    leaves_in_shape_order(a, out);
    leaves_in_shape_order(b, out);
}

inline Tree shape_of(const Tree& t) { return t->is_leaf() ? leaf(0) : product(shape_of(t->left), shape_of(t->right)); }

/// The shape with leaves numbered 0, 1, ... in shape order.
inline Tree number_leaves(const Tree& shape, int& next) {
    if (shape->is_leaf()) return leaf(next++);
    Tree a = number_leaves(shape->left, next);
    return product(a, number_leaves(shape->right, next));
}

struct ShapeForm {
    Tree representative;
    MultilinearElement normal;
};

inline const ShapeForm& shape_form(const Tree& shape) {
    static std::mutex mutex;
    static std::map<Tree, ShapeForm, TreeLess> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(shape);
    if (it == cache.end()) {
        int next = 0;
        ShapeForm f;
        f.representative = number_leaves(shape, next);
        TreeCombination c;
        add_term(c, f.representative, 1);
        f.normal = rewrite(c);
        it = cache.emplace(shape, std::move(f)).first;
    }
    return it->second;
}

}  // namespace detail

/// Normal-monomial form of a multilinear monomial, equal to it modulo the Jordan identity.
///
/// The rewriting runs once per shape on a fixed labelling and is transported by
/// relabelling, so straighten(sigma t) = sigma straighten(t) up to tie_relations.
inline MultilinearElement straighten(const Tree& t) {
    std::vector<int> sigma;
    detail::leaves_in_shape_order(t, sigma);
    return relabel(detail::shape_form(detail::shape_of(t)).normal, sigma);
}

inline MultilinearElement straighten(const TreeCombination& c) {
    MultilinearElement out;
    if (c.empty()) return out;
    out.degree = c.begin()->first->size;
    for (const auto& [t, v] : c) {
        if (t->size != out.degree) throw InputError("straighten: mixed degrees");
        for (const auto& [m, w] : straighten(t).terms) out.add(m, v * w);
    }
    return out;
}

/// h straighten(t0) - straighten(t0) for every shape t0 of degree n and every swap h of two
/// identical sibling subtrees. These vanish in Jord(n) and make straighten equivariant.
inline std::vector<MultilinearElement> tie_relations(int n) {
    std::vector<MultilinearElement> out;
    for (const auto& shape : comm_types(n)) {
        const auto& form = detail::shape_form(shape);
        std::function<void(const Tree&, int)> visit = [&](const Tree& s, int offset) {
            if (s->is_leaf()) return;
            visit(s->left, offset);
            visit(s->right, offset + s->left->size);
            if (compare_shape(s->left, s->right) != 0) return;
            auto h = sym::identity_permutation(n);
            const int k = s->left->size;
            for (int i = 0; i < k; ++i) std::swap(h[static_cast<std::size_t>(offset + i)], h[static_cast<std::size_t>(offset + k + i)]);
            MultilinearElement r = relabel(form.normal, h);
            for (const auto& [m, v] : form.normal.terms) r.add(m, -v);
            if (!r.is_zero()) out.push_back(std::move(r));
        };
        visit(shape, 0);
    }
    return out;
}

/// Sum of the trees denoted by the normal monomials.
inline TreeCombination to_trees(const MultilinearElement& e) {
    TreeCombination r;
    if (e.terms.empty()) return r;
    const auto types = normal_types(e.degree);
    for (const auto& [m, v] : e.terms) add_term(r, to_tree(m, types[m.type]), v);
    return r;
}

}  // namespace freejord::operad
