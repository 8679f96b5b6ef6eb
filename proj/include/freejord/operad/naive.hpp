#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/scalar.hpp"
#include "freejord/kernel/sparse_echelon.hpp"
#include "freejord/operad/consequences.hpp"
#include "freejord/operad/tree.hpp"

namespace freejord::operad {

inline constexpr int kNaiveMaxDegree = 7;

/// The full multilinear commutative space of degree n with the Jordan ideal inside it.
struct NaiveSpace {
    int n = 0;
    std::uint32_t prime = 0;
    std::vector<Tree> basis;  // (2n-3)!! trees, sorted
    std::map<Tree, std::uint32_t, TreeLess> index;
    std::shared_ptr<SparseEchelon> ideal;

    std::size_t quotient_dim() const { return basis.size() - ideal->rank(); }

    SparseVector to_vector(const TreeCombination& c) const {
        const PrimeField F(prime);
        std::map<std::uint32_t, std::uint32_t> acc;
        for (const auto& [t, v] : c) {
            auto it = index.find(t);
            if (it == index.end()) throw InputError("tree " + to_string(t) + " is not multilinear of degree " + std::to_string(n));
            acc[it->second] = F.add(acc[it->second], F.from_int(v));
        }
        SparseVector out;
        for (const auto& [k, v] : acc)
            if (v) out.emplace_back(k, v);
        return out;
    }

    /// True when c lies in the Jordan ideal.
    bool in_ideal(const TreeCombination& c) const { return ideal->contains(to_vector(c)); }
};

namespace detail {

inline std::shared_ptr<NaiveSpace> empty_naive_space(int n, std::uint32_t p) {
    auto s = std::make_shared<NaiveSpace>();
    s->n = n;
    s->prime = p;
    s->basis = multilinear_trees(n);
    for (std::uint32_t i = 0; i < s->basis.size(); ++i) s->index.emplace(s->basis[i], i);
    s->ideal = std::make_shared<SparseEchelon>(PrimeField(p), s->basis.size());
    return s;
}

/// sigma with sigma(n-1) = target and the other points mapped in order onto the rest.
inline sym::Permutation coset_last(int n, int target) {
    sym::Permutation s;
    for (int x = 0; x < n; ++x)
        if (x != target) s.push_back(x);
    s.push_back(target);
    return s;
}

/// sigma with sigma(n-2) = i, sigma(n-1) = j, the other points mapped in order.
inline sym::Permutation coset_last_two(int n, int i, int j) {
    sym::Permutation s;
    for (int x = 0; x < n; ++x)
        if (x != i && x != j) s.push_back(x);
    s.push_back(i);
    s.push_back(j);
    return s;
}

inline std::shared_ptr<const NaiveSpace> build_naive_space(int n, std::uint32_t p);

inline std::shared_ptr<const NaiveSpace> naive_space_cached(int n, std::uint32_t p) {
    static std::mutex mutex;
    static std::map<std::pair<int, std::uint32_t>, std::shared_ptr<const NaiveSpace>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({n, p}); it != cache.end()) return it->second;
    }
    auto s = build_naive_space(n, p);
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(n, p), std::move(s)).first->second;
}

inline std::shared_ptr<const NaiveSpace> build_naive_space(int n, std::uint32_t p) {
    auto s = empty_naive_space(n, p);
    if (n < 4) return s;
    if (n == 4) {
        const auto J = base_identity();
        for (const auto& sigma : sym::all_permutations(4)) s->ideal->add(s->to_vector(relabel(J, sigma)));
        return s;
    }
    // S_{n-1}-invariance of the lower ideal means one coset representative per
    // choice of the labels that land in the new slots.
    const auto lower = naive_space_cached(n - 1, p);
    const Tree last = leaf(n - 2);
    const Tree split = product(leaf(n - 2), leaf(n - 1));
    const Tree fresh = leaf(n - 1);
    std::vector<sym::Permutation> pairs, singles;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back(coset_last_two(n, i, j));
    for (int k = 0; k < n; ++k) singles.push_back(coset_last(n, k));
    for (const auto& row : lower->ideal->rows()) {
        TreeCombination f;
        for (const auto& [k, v] : row) add_term(f, lower->basis[k], v);
        const auto sub = substitute(f, last->label, split);
        const auto ext = multiply(f, fresh);
        for (const auto& sigma : pairs) s->ideal->add(s->to_vector(relabel(sub, sigma)));
        for (const auto& sigma : singles) s->ideal->add(s->to_vector(relabel(ext, sigma)));
    }
    return s;
}

}  // namespace detail

/// The degree-n space with its ideal over GF(p), built degree by degree and cached.
inline std::shared_ptr<const NaiveSpace> naive_space(int n, std::uint32_t p = kDefaultPrimes[0],
                                                     int max_degree = kNaiveMaxDegree) {
    if (n < 1) throw InputError("naive_space: n must be positive");
    if (n > max_degree) {
        double estimate = 1;
        for (int k = 2 * n - 3; k > 1; k -= 2) estimate *= k;
        throw InfeasibleError("naive method refused for degree " + std::to_string(n) + " (bound " +
                                  std::to_string(max_degree) + "): " + std::to_string(static_cast<long long>(estimate)) +
                                  " columns",
                              estimate);
    }
    return detail::naive_space_cached(n, p);
}

/// dim Jord(n) in the full multilinear commutative space.
inline std::size_t naive_dim(int n, std::uint32_t p = kDefaultPrimes[0], int max_degree = kNaiveMaxDegree) {
    return naive_space(n, p, max_degree)->quotient_dim();
}

}  // namespace freejord::operad
