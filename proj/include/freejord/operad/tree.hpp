#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/sym/permutation.hpp"

namespace freejord::operad {

struct Node;
/// Immutable binary commutative tree; children are kept in canonical order.
using Tree = std::shared_ptr<const Node>;

struct Node {
    int label = 0;  // leaf label, unused for products
    int size = 1;
    Tree left, right;

    bool is_leaf() const { return !left; }
};

/// Total order: by size, then leaf label, then children left to right.
inline int compare(const Tree& a, const Tree& b) {
    if (a == b) return 0;
    if (a->size != b->size) return a->size < b->size ? -1 : 1;
    if (a->is_leaf()) return a->label < b->label ? -1 : (a->label > b->label ? 1 : 0);
    if (int c = compare(a->left, b->left)) return c;
    return compare(a->right, b->right);
}

/// The same order ignoring labels, for shapes.
inline int compare_shape(const Tree& a, const Tree& b) {
    if (a->size != b->size) return a->size < b->size ? -1 : 1;
    if (a->is_leaf()) return 0;
    if (int c = compare_shape(a->left, b->left)) return c;
    return compare_shape(a->right, b->right);
}

struct TreeLess {
    bool operator()(const Tree& a, const Tree& b) const { return compare(a, b) < 0; }
};

inline Tree leaf(int label) {
    auto n = std::make_shared<Node>();
    n->label = label;
    return n;
}

/// Commutative product; the larger child is stored on the left.
inline Tree product(Tree a, Tree b) {
    if (compare(a, b) < 0) std::swap(a, b);
    auto n = std::make_shared<Node>();
    n->size = a->size + b->size;
    n->left = std::move(a);
    n->right = std::move(b);
    return n;
}

/// One-based text form, e.g. "((1 2) 3)".
inline std::string to_string(const Tree& t) {
    if (t->is_leaf()) return std::to_string(t->label + 1);
    return "(" + to_string(t->left) + " " + to_string(t->right) + ")";
}

/// Parses the text form of to_string; leaves are one-based labels.
inline Tree parse_tree(const std::string& s) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    };
    std::function<Tree()> rec = [&]() -> Tree {
        skip();
        if (pos >= s.size()) throw InputError("unexpected end of tree '" + s + "'");
        if (s[pos] == '(') {
            ++pos;
            Tree a = rec();
            Tree b = rec();
            skip();
            if (pos >= s.size() || s[pos] != ')') throw InputError("expected ')' in tree '" + s + "'");
            ++pos;
            return product(a, b);
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw InputError("bad token in tree '" + s + "'");
        return leaf(std::stoi(s.substr(start, pos - start)) - 1);
    };
    Tree t = rec();
    skip();
    if (pos != s.size()) throw InputError("trailing text in tree '" + s + "'");
    return t;
}

inline void collect_labels(const Tree& t, std::vector<int>& out) {
    if (t->is_leaf()) {
        out.push_back(t->label);
        return;
    }
    collect_labels(t->left, out);
    collect_labels(t->right, out);
}

/// True when the leaves carry each of 0..size-1 exactly once.
inline bool is_multilinear(const Tree& t) {
    std::vector<int> labels;
    collect_labels(t, labels);
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i)) return false;
    return true;
}

/// Relabels every leaf x by sigma[x] and restores canonical order.
inline Tree relabel(const Tree& t, const sym::Permutation& sigma) {
    if (t->is_leaf()) return leaf(sigma.at(static_cast<std::size_t>(t->label)));
    return product(relabel(t->left, sigma), relabel(t->right, sigma));
}

/// Replaces the leaf with the given label by a subtree.
inline Tree substitute(const Tree& t, int label, const Tree& replacement) {
    if (t->is_leaf()) return t->label == label ? replacement : t;
    return product(substitute(t->left, label, replacement), substitute(t->right, label, replacement));
}

/// Unlabelled commutative binary trees with n leaves (all labels zero), canonical order.
inline std::vector<Tree> comm_types(int n) {
    if (n < 1) throw InputError("comm_types: n must be positive");
    static std::mutex mutex;
    static std::vector<std::vector<Tree>> memo{{}, {leaf(0)}};
    std::lock_guard lock(mutex);
    while (static_cast<int>(memo.size()) <= n) {
        const int m = static_cast<int>(memo.size());
        std::vector<Tree> out;
        for (int i = (m + 1) / 2; i < m; ++i) {
            const int j = m - i;
            const auto& A = memo[static_cast<std::size_t>(i)];
            const auto& B = memo[static_cast<std::size_t>(j)];
            for (std::size_t x = 0; x < A.size(); ++x)
                for (std::size_t y = 0; y < B.size(); ++y) {
                    if (i == j && y > x) break;
                    out.push_back(product(A[x], B[y]));
                }
        }
        std::sort(out.begin(), out.end(), [](const Tree& a, const Tree& b) { return compare_shape(a, b) < 0; });
        memo.push_back(std::move(out));
    }
    return memo[static_cast<std::size_t>(n)];
}

namespace detail {

inline std::vector<Tree> trees_on(const std::vector<int>& labels) {
    if (labels.size() == 1) return {leaf(labels[0])};
    std::vector<Tree> out;
    const std::size_t rest = labels.size() - 1;
    // the first label always lies in X; Y is a nonempty subset of the others
    for (std::uint32_t mask = 1; mask < (1u << rest); ++mask) {
        std::vector<int> X{labels[0]}, Y;
        for (std::size_t i = 0; i < rest; ++i) (mask >> i & 1 ? Y : X).push_back(labels[i + 1]);
        for (const auto& a : trees_on(X))
            for (const auto& b : trees_on(Y)) out.push_back(product(a, b));
    }
    return out;
}

}  // namespace detail

/// All multilinear commutative monomials on labels 0..n-1; there are (2n-3)!! of them.
inline std::vector<Tree> multilinear_trees(int n) {
    if (n < 1) throw InputError("multilinear_trees: n must be positive");
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
    auto out = detail::trees_on(labels);
    std::sort(out.begin(), out.end(), TreeLess{});
    return out;
}

/// Linear combination of trees with integer coefficients.
using TreeCombination = std::map<Tree, std::int64_t, TreeLess>;

inline void add_term(TreeCombination& c, const Tree& t, std::int64_t v) {
    if (v == 0) return;
    auto [it, inserted] = c.try_emplace(t, v);
    if (!inserted && (it->second += v) == 0) c.erase(it);
}

/// The multilinear Jordan identity
///   ((ab)c)d + ((bd)c)a + ((ad)c)b - (ab)(cd) - (ac)(bd) - (ad)(bc).
inline TreeCombination jordan_identity(const Tree& a, const Tree& b, const Tree& c, const Tree& d) {
    TreeCombination r;
    add_term(r, product(product(product(a, b), c), d), 1);
    add_term(r, product(product(product(b, d), c), a), 1);
    add_term(r, product(product(product(a, d), c), b), 1);
    add_term(r, product(product(a, b), product(c, d)), -1);
    add_term(r, product(product(a, c), product(b, d)), -1);
    add_term(r, product(product(a, d), product(b, c)), -1);
    return r;
}

inline TreeCombination substitute(const TreeCombination& c, int label, const Tree& replacement) {
    TreeCombination r;
    for (const auto& [t, v] : c) add_term(r, substitute(t, label, replacement), v);
    return r;
}

inline TreeCombination multiply(const TreeCombination& c, const Tree& factor) {
    TreeCombination r;
    for (const auto& [t, v] : c) add_term(r, product(t, factor), v);
    return r;
}

inline TreeCombination relabel(const TreeCombination& c, const sym::Permutation& sigma) {
    TreeCombination r;
    for (const auto& [t, v] : c) add_term(r, relabel(t, sigma), v);
    return r;
}

}  // namespace freejord::operad
