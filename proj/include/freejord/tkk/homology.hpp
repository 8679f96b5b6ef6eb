#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/rational_echelon.hpp"
#include "freejord/tkk/algebra.hpp"

namespace freejord::tkk {

struct HomologyOptions {
    int max_degree = -1;                   // graded L: only chains of total degree <= bound
    std::size_t max_chains = 400000;       // refuse above this many chains in one block
    bool check_square_zero = true;
    bool use_degree = true;                // split by the degree grading when present
    unsigned threads = 0;                  // 0: hardware concurrency
};

/// Block of the chain complex: total degree and total sl2 weight (0 when absent).
using BlockKey = std::pair<int, int>;

struct HomologyResult {
    int kmax = 0;
    std::vector<std::size_t> dims;         // dim H_k, k = 0..kmax
    std::vector<std::size_t> chain_dims;   // dim C_k
    std::map<BlockKey, std::vector<std::size_t>> blocks;  // dim H_k per block
    bool weighted = false;
    bool graded = false;
};

namespace detail {

/// Chains are sorted multisets of basis indices of L; a generator of the chain algebra is
/// odd exactly when the basis element of L is even, so even elements never repeat.
using Chain = std::vector<std::uint32_t>;

struct ChainSpace {
    std::vector<Chain> chains;
    std::map<Chain, std::uint32_t> index;
};

inline int shifted(const AlgebraFD& L, std::uint32_t i) { return 1 - L.parity[i]; }

/// Enumerates k-chains of L grouped by block.
inline void enumerate_chains(const AlgebraFD& L, int k, const HomologyOptions& opts,
                             std::map<BlockKey, ChainSpace>& out) {
    const bool graded = opts.use_degree && L.graded();
    const bool weighted = !L.weight.empty();
    Chain cur;
    std::size_t total = 0;
    auto rec = [&](auto&& self, std::uint32_t start, int deg, int wt) -> void {
        if (static_cast<int>(cur.size()) == k) {
            auto& cs = out[{graded ? deg : 0, weighted ? wt : 0}];
            cs.index.emplace(cur, static_cast<std::uint32_t>(cs.chains.size()));
            cs.chains.push_back(cur);
            if (++total > opts.max_chains)
                throw InfeasibleError("ce_homology: chain space too large", static_cast<double>(total));
            return;
        }
        for (std::uint32_t i = start; i < L.dim(); ++i) {
            const int d = graded ? deg + L.degree[i] : 0;
            if (graded && opts.max_degree >= 0 && d > opts.max_degree) continue;
            cur.push_back(i);
            self(self, shifted(L, i) ? i + 1 : i, d, weighted ? wt + L.weight[i] : 0);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
}

/// Inserts t into the sorted chain c; returns the Koszul sign or 0 when an odd generator repeats.
inline int insert_sorted(const AlgebraFD& L, Chain& c, std::uint32_t t) {
    const auto it = std::lower_bound(c.begin(), c.end(), t);
    if (shifted(L, t) && it != c.end() && *it == t) return 0;
    int passed = 0;
    for (auto p = c.begin(); p != it; ++p) passed += shifted(L, *p);
    c.insert(it, t);
    return (shifted(L, t) && (passed & 1)) ? -1 : 1;
}

/// d(g_1 ... g_k) = sum over positions i < j of the Koszul sign of bringing g_i g_j to the
/// front times (-1)^{|x_i|} s[x_i, x_j] g_1 ... (omit i, j) ... g_k.
inline RationalVector boundary(const AlgebraFD& L, const Chain& c, const ChainSpace& target) {
    RationalAccumulator acc;
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
        int before_i = 0;
        for (std::size_t l = 0; l < i; ++l) before_i += shifted(L, c[l]);
        for (std::size_t j = i + 1; j < k; ++j) {
            const auto& br = L.product(c[i], c[j]);
            if (br.empty()) continue;
            int before_j = 0;
            for (std::size_t l = 0; l < j; ++l)
                if (l != i) before_j += shifted(L, c[l]);
            int sign = ((shifted(L, c[i]) * before_i + shifted(L, c[j]) * before_j) & 1) ? -1 : 1;
            if (L.parity[c[i]]) sign = -sign;
            Chain rest;
            for (std::size_t l = 0; l < k; ++l)
                if (l != i && l != j) rest.push_back(c[l]);
            for (const auto& [t, x] : br) {
                Chain out = rest;
                const int s = insert_sorted(L, out, t);
                if (!s) continue;
                const auto it = target.index.find(out);
                if (it == target.index.end()) throw InternalError("boundary left its block");
                acc.add(it->second, x * (sign * s));
            }
        }
    }
    return acc.result();
}

}  // namespace detail

/// Chevalley-Eilenberg homology with trivial coefficients of a finite-dimensional Lie
/// (super)algebra in degrees 0..kmax, split by degree and sl2 weight when available.
inline HomologyResult ce_homology(const AlgebraFD& L, int kmax, const HomologyOptions& opts = {}) {
    if (L.kind != AlgebraKind::lie) throw InputError("ce_homology needs a Lie algebra");
    if (kmax < 0) throw InputError("ce_homology: kmax must be nonnegative");
    detail::check_shape(L);
    if (!symmetry_holds(L)) throw InputError("ce_homology: bracket is not super-antisymmetric");
    HomologyResult res;
    res.kmax = kmax;
    res.weighted = !L.weight.empty();
    res.graded = opts.use_degree && L.graded();
    std::vector<std::map<BlockKey, detail::ChainSpace>> C(static_cast<std::size_t>(kmax + 2));
    for (int k = 0; k <= kmax + 1; ++k) detail::enumerate_chains(L, k, opts, C[static_cast<std::size_t>(k)]);

    // ranks[k][block] = rank of d_k : C_k -> C_{k-1}
    std::vector<std::map<BlockKey, std::size_t>> ranks(static_cast<std::size_t>(kmax + 2));
    struct Job {
        int k;
        BlockKey key;
    };
    std::vector<Job> jobs;
    for (int k = 2; k <= kmax + 1; ++k)
        for (const auto& [key, cs] : C[static_cast<std::size_t>(k)]) jobs.push_back({k, key});
    std::mutex mutex;
    std::exception_ptr failure;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t n; (n = next++) < jobs.size();) {
            try {
                const auto [k, key] = jobs[n];
                const auto& src = C[static_cast<std::size_t>(k)].at(key);
                const auto tit = C[static_cast<std::size_t>(k - 1)].find(key);
                std::size_t r = 0;
                if (tit != C[static_cast<std::size_t>(k - 1)].end()) {
                    const auto& tgt = tit->second;
                    RationalEchelon image;
                    std::vector<RationalVector> rows;
                    for (const auto& c : src.chains) {
                        auto v = detail::boundary(L, c, tgt);
                        if (v.empty()) continue;
                        image.add(v);
                        if (opts.check_square_zero && k >= 3) rows.push_back(std::move(v));
                    }
                    r = image.rank();
                    if (opts.check_square_zero && k >= 3) {
                        const auto& below = C[static_cast<std::size_t>(k - 2)];
                        const auto bit = below.find(key);
                        std::map<std::uint32_t, RationalVector> memo;
                        for (const auto& v : rows) {
                            if (bit == below.end()) break;
                            RationalAccumulator dd;
                            for (const auto& [i, x] : v) {
                                auto m = memo.find(i);
                                if (m == memo.end()) m = memo.emplace(i, detail::boundary(L, tgt.chains[i], bit->second)).first;
                                dd.add(m->second, x);
                            }
                            if (!dd.result().empty()) throw InputError("ce_homology: d^2 != 0, the bracket is not Lie");
                        }
                    }
                }
                std::lock_guard lock(mutex);
                ranks[static_cast<std::size_t>(k)][key] = r;
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    res.dims.assign(static_cast<std::size_t>(kmax + 1), 0);
    res.chain_dims.assign(static_cast<std::size_t>(kmax + 1), 0);
    for (int k = 0; k <= kmax; ++k)
        for (const auto& [key, cs] : C[static_cast<std::size_t>(k)]) {
            auto rank_of = [&](int kk) -> std::size_t {
                if (kk < 2 || kk > kmax + 1) return 0;
                const auto& m = ranks[static_cast<std::size_t>(kk)];
                const auto it = m.find(key);
                return it == m.end() ? 0 : it->second;
            };
            const std::size_t h = cs.chains.size() - rank_of(k) - rank_of(k + 1);
            auto& b = res.blocks[key];
            b.resize(static_cast<std::size_t>(kmax + 1), 0);
            b[static_cast<std::size_t>(k)] = h;
            res.dims[static_cast<std::size_t>(k)] += h;
            res.chain_dims[static_cast<std::size_t>(k)] += cs.chains.size();
        }
    return res;
}

/// Highest weights (with multiplicity) of each H_k, from weight-space dimensions:
/// mult L(w) = dim H_k[w] - dim H_k[w + 2].
inline std::vector<std::map<int, std::size_t>> sl2_decompose(const HomologyResult& h) {
    if (!h.weighted) throw InputError("sl2_decompose: the Lie algebra carries no sl2 weights");
    std::vector<std::map<int, std::size_t>> out(static_cast<std::size_t>(h.kmax + 1));
    for (int k = 0; k <= h.kmax; ++k) {
        std::map<int, long> by_weight;
        for (const auto& [key, dims] : h.blocks) by_weight[key.second] += static_cast<long>(dims[static_cast<std::size_t>(k)]);
        for (const auto& [w, d] : by_weight) {
            const auto mirror = by_weight.find(-w);
            if (d != (mirror == by_weight.end() ? 0 : mirror->second))
                throw InternalError("sl2_decompose: weight multiplicities are not symmetric");
            if (w < 0) continue;
            const auto up = by_weight.find(w + 2);
            const long m = d - (up == by_weight.end() ? 0 : up->second);
            if (m < 0) throw InternalError("sl2_decompose: weight string is not that of a semisimple module");
            if (m > 0) out[static_cast<std::size_t>(k)][w] = static_cast<std::size_t>(m);
        }
    }
    return out;
}

}  // namespace freejord::tkk
