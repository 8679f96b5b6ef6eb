#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/certified_rank.hpp"
#include "freejord/kernel/sparse_echelon.hpp"
#include "freejord/operad/normal.hpp"
#include "freejord/operad/straighten.hpp"
#include "freejord/operad/tree.hpp"

namespace freejord::operad {

/// Degree in each generator; leaf label i of a tree stands for generator i.
using Multidegree = std::vector<int>;

struct MultidegreeOptions {
    std::vector<std::uint32_t> primes{kDefaultPrimes[0], kDefaultPrimes[1]};
    double max_columns = 2.5e5;   // refuse when the monomial space is larger
    std::size_t max_generators = 3;
    bool full_space = false;      // eliminate in all commutative monomials instead of normal ones
};

inline std::string to_string(const Multidegree& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s;
}

namespace detail {

inline int total(const Multidegree& d) { return std::accumulate(d.begin(), d.end(), 0); }

/// Calls f on every sub-multidegree 0 <= a <= d.
inline void for_each_below(const Multidegree& d, const std::function<void(const Multidegree&)>& f) {
    Multidegree a(d.size(), 0);
    while (true) {
        f(a);
        std::size_t i = 0;
        while (i < d.size() && a[i] == d[i]) a[i++] = 0;
        if (i == d.size()) return;
        ++a[i];
    }
}

inline Multidegree minus(const Multidegree& a, const Multidegree& b) {
    Multidegree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace detail

/// Number of commutative monomials of multidegree d.
inline double monomial_count(const Multidegree& d) {
    std::map<Multidegree, double> memo;
    std::function<double(const Multidegree&)> count = [&](const Multidegree& x) -> double {
        const int n = detail::total(x);
        if (n == 0) return 0;
        if (n == 1) return 1;
        if (auto it = memo.find(x); it != memo.end()) return it->second;
        double pairs = 0, diagonal = 0;
        detail::for_each_below(x, [&](const Multidegree& a) {
            const auto b = detail::minus(x, a);
            if (detail::total(a) == 0 || detail::total(b) == 0) return;
            const double ca = count(a);
            pairs += ca * count(b);
            if (a == b) diagonal += ca;
        });
        return memo[x] = (pairs + diagonal) / 2;
    };
    return count(d);
}

/// Commutative monomials of every multidegree, enumerated on demand.
class MonomialTable {
public:
    struct Component {
        std::vector<Tree> basis;  // sorted
        std::map<Tree, std::uint32_t, TreeLess> index;
    };

    const Component& operator()(const Multidegree& d) {
        auto it = comps_.find(d);
        if (it != comps_.end()) return it->second;
        Component c;
        const int n = detail::total(d);
        if (n == 1) {
            for (std::size_t i = 0; i < d.size(); ++i)
                if (d[i]) c.basis.push_back(leaf(static_cast<int>(i)));
        } else if (n > 1) {
            detail::for_each_below(d, [&](const Multidegree& a) {
                const auto b = detail::minus(d, a);
                if (detail::total(a) == 0 || detail::total(b) == 0 || a < b) return;
                const auto& A = (*this)(a).basis;
                const auto& B = (*this)(b).basis;
                for (std::size_t i = 0; i < A.size(); ++i)
                    for (std::size_t j = (a == b ? i : 0); j < B.size(); ++j) c.basis.push_back(product(A[i], B[j]));
            });
            std::sort(c.basis.begin(), c.basis.end(), TreeLess{});
        }
        for (std::uint32_t i = 0; i < c.basis.size(); ++i) c.index.emplace(c.basis[i], i);
        return comps_.emplace(d, std::move(c)).first->second;
    }

private:
    std::map<Multidegree, Component> comps_;
};

namespace detail {

/// Calls f(a, b, c, e) for every Jordan identity instance J(a, b, c, e) on monomials of
/// total multidegree d, with a, b, e running over multisets since J is symmetric in them.
template <class Fn>
void for_each_identity(MonomialTable& mono, const Multidegree& d, Fn&& f) {
    for_each_below(d, [&](const Multidegree& da) {
        if (total(da) == 0) return;
        const auto r1 = minus(d, da);
        for_each_below(r1, [&](const Multidegree& db) {
            if (total(db) == 0 || db < da) return;
            const auto r2 = minus(r1, db);
            for_each_below(r2, [&](const Multidegree& de) {
                const auto dc = minus(r2, de);
                if (total(de) == 0 || total(dc) == 0 || de < db) return;
                const auto& A = mono(da).basis;
                const auto& B = mono(db).basis;
                const auto& E = mono(de).basis;
                const auto& C = mono(dc).basis;
                for (std::size_t i = 0; i < A.size(); ++i)
                    for (std::size_t j = (da == db ? i : 0); j < B.size(); ++j)
                        for (std::size_t k = (db == de ? j : 0); k < E.size(); ++k)
                            for (const auto& c : C) f(A[i], B[j], c, E[k]);
            });
        });
    });
}

/// Sub-multidegrees of d of total degree at least 4, d excluded.
inline std::vector<Multidegree> ideal_degrees_below(const Multidegree& d) {
    std::vector<Multidegree> out;
    for_each_below(d, [&](const Multidegree& a) {
        if (total(a) >= 4 && a != d) out.push_back(a);
    });
    return out;
}

}  // namespace detail

/// Jordan ideal inside the full space of commutative monomials, over GF(p).
///
/// The ideal of multidegree d is spanned by identity instances on monomials and by
/// products of lower ideal elements with monomials.
class MultidegreeTreeSpace {
public:
    explicit MultidegreeTreeSpace(std::uint32_t p) : F_(p) {}

    std::size_t dim(const Multidegree& d) { return mono_(d).basis.size() - ideal(d).rank(); }

private:
    SparseVector to_vector(const MonomialTable::Component& c, const TreeCombination& x) const {
        std::map<std::uint32_t, std::uint32_t> acc;
        for (const auto& [t, v] : x) {
            const auto k = c.index.at(t);
            acc[k] = F_.add(acc[k], F_.from_int(v));
        }
        SparseVector out;
        for (const auto& [k, v] : acc)
            if (v) out.emplace_back(k, v);
        return out;
    }

    const SparseEchelon& ideal(const Multidegree& d) {
        if (auto it = ideals_.find(d); it != ideals_.end()) return *it->second;
        const auto lower = detail::total(d) > 4 ? detail::ideal_degrees_below(d) : std::vector<Multidegree>{};
        for (const auto& a : lower) ideal(a);
        const auto& comp = mono_(d);
        auto e = std::make_unique<SparseEchelon>(F_, comp.basis.size());
        if (detail::total(d) >= 4)
            detail::for_each_identity(mono_, d, [&](const Tree& a, const Tree& b, const Tree& c, const Tree& x) {
                e->add(to_vector(comp, jordan_identity(a, b, c, x)));
            });
        for (const auto& a : lower) {
            const auto& ca = mono_(a);
            const auto& us = mono_(detail::minus(d, a)).basis;
            for (const auto& row : ideals_.at(a)->rows()) {
                TreeCombination f;
                for (const auto& [k, v] : row) add_term(f, ca.basis[k], v);
                for (const auto& u : us) e->add(to_vector(comp, multiply(f, u)));
            }
        }
        return *ideals_.emplace(d, std::move(e)).first->second;
    }

    PrimeField F_;
    MonomialTable mono_;
    std::map<Multidegree, std::unique_ptr<SparseEchelon>> ideals_;
};

/// The same quotient computed in normal-monomial coordinates, over GF(p).
///
/// With NF the straightening map, Jord_d = N_d / NF(I_d), and NF(I_d) is spanned by
/// NF of identity instances, NF(r u) for r in NF(I_a), and NF(t u) - NF(NF(t) u) for
/// monomials t of multidegree a, the last accounting for I_a = ker NF + NF(I_a).
class MultidegreeNormalSpace {
public:
    explicit MultidegreeNormalSpace(std::uint32_t p) : F_(p) {}

    std::size_t dim(const Multidegree& d) { return normals(d).size() - relations(d).rank(); }

    /// Canonical normal monomials whose letters have content d.
    const std::map<NormalMonomial, std::uint32_t>& normals(const Multidegree& d) {
        if (auto it = normals_.find(d); it != normals_.end()) return it->second;
        std::map<NormalMonomial, std::uint32_t> idx;
        const int n = detail::total(d);
        const auto types = normal_types(n);
        std::vector<int> word;
        for (std::size_t g = 0; g < d.size(); ++g) word.insert(word.end(), static_cast<std::size_t>(d[g]), static_cast<int>(g));
        for (std::size_t s = 0; s < types.size(); ++s) {
            auto w = word;
            do idx.emplace(canonical(NormalMonomial{s, w}, types[s]), 0);
            while (std::next_permutation(w.begin(), w.end()));
        }
        std::uint32_t k = 0;
        for (auto& [m, i] : idx) i = k++;
        return normals_.emplace(d, std::move(idx)).first->second;
    }

private:
    const MultilinearElement& nf(const Tree& t) {
        auto it = nf_.find(t);
        if (it != nf_.end()) return it->second;
        TreeCombination c;
        add_term(c, t, 1);
        return nf_.emplace(t, detail::rewrite(c)).first->second;
    }

    void add_nf(MultilinearElement& acc, const TreeCombination& x) {
        for (const auto& [t, v] : x)
            for (const auto& [m, w] : nf(t).terms) acc.add(m, v * w);
    }

    SparseVector to_vector(const Multidegree& d, const MultilinearElement& e) {
        const auto& idx = normals(d);
        std::map<std::uint32_t, std::uint32_t> acc;
        for (const auto& [m, v] : e.terms) {
            const auto k = idx.at(m);
            acc[k] = F_.add(acc[k], F_.from_int(v));
        }
        SparseVector out;
        for (const auto& [k, v] : acc)
            if (v) out.emplace_back(k, v);
        return out;
    }

    TreeCombination as_trees(const Multidegree& a, const SparseVector& row) {
        const auto& idx = normals(a);
        if (inverse_.find(a) == inverse_.end()) {
            auto& inv = inverse_[a];
            inv.resize(idx.size());
            const auto types = normal_types(detail::total(a));
            for (const auto& [m, i] : idx) inv[i] = to_tree(m, types[m.type]);
        }
        const auto& inv = inverse_.at(a);
        TreeCombination f;
        for (const auto& [k, v] : row) add_term(f, inv[k], v);
        return f;
    }

    const SparseEchelon& relations(const Multidegree& d) {
        if (auto it = relations_.find(d); it != relations_.end()) return *it->second;
        const auto lower = detail::total(d) > 4 ? detail::ideal_degrees_below(d) : std::vector<Multidegree>{};
        for (const auto& a : lower) relations(a);
        auto e = std::make_unique<SparseEchelon>(F_, normals(d).size());
        auto push = [&](const TreeCombination& x) {
            MultilinearElement r;
            add_nf(r, x);
            if (!r.is_zero()) e->add(to_vector(d, r));
        };
        if (detail::total(d) >= 4)
            detail::for_each_identity(mono_, d, [&](const Tree& a, const Tree& b, const Tree& c, const Tree& x) {
                push(jordan_identity(a, b, c, x));
            });
        for (const auto& a : lower) {
            const auto& us = mono_(detail::minus(d, a)).basis;
            for (const auto& row : relations_.at(a)->rows()) {
                const auto f = as_trees(a, row);
                for (const auto& u : us) push(multiply(f, u));
            }
            const auto types = normal_types(detail::total(a));
            for (const auto& t : mono_(a).basis) {
                TreeCombination lifted;
                for (const auto& [m, v] : nf(t).terms) add_term(lifted, to_tree(m, types[m.type]), v);
                if (lifted.size() == 1 && lifted.begin()->second == 1 && compare(lifted.begin()->first, t) == 0) continue;
                for (const auto& u : us) {
                    TreeCombination x = multiply(lifted, u);
                    for (auto& [w, v] : x) v = -v;
                    add_term(x, product(t, u), 1);
                    push(x);
                }
            }
        }
        return *relations_.emplace(d, std::move(e)).first->second;
    }

    PrimeField F_;
    MonomialTable mono_;
    std::map<Tree, MultilinearElement, TreeLess> nf_;
    std::map<Multidegree, std::map<NormalMonomial, std::uint32_t>> normals_;
    std::map<Multidegree, std::vector<Tree>> inverse_;
    std::map<Multidegree, std::unique_ptr<SparseEchelon>> relations_;
};

/// Dimension of the multidegree-d component of the free Jordan algebra, certified across primes.
inline std::size_t multidegree_dim(const Multidegree& d, const MultidegreeOptions& opts = {}) {
    if (d.empty() || detail::total(d) < 1) throw InputError("multidegree must have positive total degree");
    for (int x : d)
        if (x < 0) throw InputError("multidegree entries must be non-negative");
    if (d.size() > opts.max_generators)
        throw InputError("multidegree has " + std::to_string(d.size()) + " components; at most " +
                         std::to_string(opts.max_generators) + " allowed");
    const double cols = monomial_count(d);
    if (cols > opts.max_columns)
        throw InfeasibleError("multidegree (" + to_string(d) + ") spans " + std::to_string(static_cast<long long>(cols)) +
                                  " monomials, above the bound " + std::to_string(static_cast<long long>(opts.max_columns)),
                              cols);
    if (opts.primes.empty()) throw InputError("multidegree_dim: no primes given");
    const std::size_t cols_n = static_cast<std::size_t>(cols);
    auto rank_for = [&](std::uint32_t p) {
        if (opts.full_space) return cols_n - MultidegreeTreeSpace(p).dim(d);
        return cols_n - MultidegreeNormalSpace(p).dim(d);
    };
    if (opts.primes.size() == 1) return cols_n - rank_for(opts.primes.front());
    return cols_n - certify_with(opts.primes, rank_for).rank;
}

}  // namespace freejord::operad
