#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "freejord/clifton/clifton.hpp"
#include "freejord/errors.hpp"
#include "freejord/kernel/certified_rank.hpp"
#include "freejord/kernel/dense_matrix.hpp"
#include "freejord/operad/consequences.hpp"
#include "freejord/operad/normal.hpp"
#include "freejord/sym/characters.hpp"
#include "freejord/version.hpp"

namespace freejord::operad {

using sym::Partition;

struct HentzelOptions {
    std::vector<std::uint32_t> primes{kDefaultPrimes[0], kDefaultPrimes[1]};
    unsigned threads = 0;   // 0: hardware concurrency
    bool prune = true;      // drop identities that add no rank before raising the degree
    std::string cache_dir;  // empty: no rank cache on disk
    double max_matrix_bytes = 2.5e9;  // refuse a partition whose dense echelon would exceed this
};

/// Identities of one degree, as trees and in normal monomials.
struct GeneratorSet {
    int n = 0;
    std::vector<TreeCombination> trees;
    std::vector<MultilinearElement> elements;
    std::uint64_t hash = 0;
};

struct MultiplicityReport {
    int n = 0;
    Partition lambda;
    std::size_t f_n = 0;
    std::size_t j_n = 0;         // n!/24, the unpruned count
    std::size_t generators = 0;  // identities actually used
    std::size_t d_lambda = 0;
    std::size_t rank = 0;
    std::size_t multiplicity = 0;
    std::vector<std::uint32_t> primes;
    bool cached = false;
};

struct SnModule {
    int n = 0;
    std::vector<MultiplicityReport> parts;  // every partition of n, zero multiplicities included
    Integer dimension = 0;
};

/// n!/24 for n >= 4, else 0.
inline std::size_t full_consequence_count(int n) {
    if (n < 4) return 0;
    std::size_t j = 1;
    for (int k = 5; k <= n; ++k) j *= static_cast<std::size_t>(k);
    return j;
}

/// Row space of the left S_n-module spanned by normal-monomial elements, restricted
/// to the isotypic component of one irreducible, over GF(p).
///
/// Each element contributes d rows: the block for type s is sum c A_lambda(pi) over its
/// terms c T_s(pi). The type symmetries enter as blocks A(id) - A(h), followed by the
/// tie relations of straighten.
class LambdaRank {
public:
    LambdaRank(const Partition& lambda, std::uint32_t p)
        : F_(p), n_(lambda.size()), data_(clifton::detail::shape_data(lambda)),
          d_(data_->tableaux->size()), types_(normal_types(lambda.size())),
          echelon_(F_, types_.size() * d_) {
        const auto id = sym::identity_permutation(n_);
        for (std::size_t s = 0; s < types_.size(); ++s)
            for (const auto& h : type_symmetries(types_[s])) {
                Block b = zero_block();
                accumulate(b, s, id, 1);
                accumulate(b, s, h, -1);
                push(std::move(b));
            }
        for (const auto& r : tie_relations(n_)) add(r);
    }

    std::size_t d() const { return d_; }
    std::size_t f() const { return types_.size(); }
    std::size_t cols() const { return echelon_.cols(); }
    std::size_t rank() const { return echelon_.rank(); }
    bool full() const { return echelon_.full(); }

    /// Adds the rows of e; returns true when the rank grew.
    bool add(const MultilinearElement& e) {
        if (full() || e.is_zero()) return false;
        if (e.degree != n_) throw InputError("LambdaRank: element degree does not match the partition");
        Block b = zero_block();
        for (const auto& [m, c] : e.terms) accumulate(b, m.type, m.labels, c);
        return push(std::move(b));
    }

private:
    using Block = std::vector<std::vector<std::uint32_t>>;

    Block zero_block() const { return Block(d_, std::vector<std::uint32_t>(cols(), 0)); }

    void accumulate(Block& b, std::size_t s, const sym::Permutation& pi, std::int64_t c) const {
        const std::uint32_t cp = F_.from_int(c);
        const std::uint32_t cm = F_.neg(cp);
        for (std::size_t j = 0; j < d_; ++j) {
            const std::size_t col = s * d_ + j;
            for (std::size_t i = 0; i < d_; ++i) {
                const int a = clifton::detail::polytabloid_coefficient(data_->row_of[i], data_->columns[j], pi);
                if (a) b[i][col] = F_.add(b[i][col], a > 0 ? cp : cm);
            }
        }
    }

    bool push(Block b) {
        const std::size_t before = echelon_.rank();
        for (auto& row : b) {
            if (echelon_.full()) break;
            echelon_.add(std::move(row));
        }
        return echelon_.rank() > before;
    }

    PrimeField F_;
    int n_;
    std::shared_ptr<const clifton::detail::ShapeData> data_;
    std::size_t d_;
    std::vector<NormalType> types_;
    IncrementalEchelon<PrimeField> echelon_;
};

namespace detail {

inline std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::shared_ptr<GeneratorSet> make_generator_set(int n, std::vector<TreeCombination> trees) {
    auto g = std::make_shared<GeneratorSet>();
    g->n = n;
    g->hash = 14695981039346656037ull;
    for (const auto& c : trees) {
        for (const auto& [t, v] : c) g->hash = fnv1a(g->hash, to_string(t) + "*" + std::to_string(v) + ";");
        g->hash = fnv1a(g->hash, "|");
        g->elements.push_back(straighten(c));
    }
    g->trees = std::move(trees);
    return g;
}

/// Keeps the identities that raise the rank for at least one partition of n.
inline std::vector<TreeCombination> prune(const GeneratorSet& g, std::uint32_t p) {
    std::vector<char> keep(g.trees.size(), 0);
    for (const auto& lambda : sym::partitions(g.n)) {
        LambdaRank r(lambda, p);
        for (std::size_t k = 0; k < g.elements.size() && !r.full(); ++k)
            if (r.add(g.elements[k])) keep[k] = 1;
    }
    std::vector<TreeCombination> out;
    for (std::size_t k = 0; k < g.trees.size(); ++k)
        if (keep[k]) out.push_back(g.trees[k]);
    return out;
}

}  // namespace detail

/// Identities of degree n used for the rank computation, cached per (n, pruning prime).
inline std::shared_ptr<const GeneratorSet> generator_set(int n, bool prune, std::uint32_t prune_prime) {
    if (n < 4) return detail::make_generator_set(n, {});
    static std::mutex mutex;
    static std::map<std::tuple<int, bool, std::uint32_t>, std::shared_ptr<const GeneratorSet>> cache;
    const auto key = std::make_tuple(n, prune, prune ? prune_prime : 0u);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::shared_ptr<const GeneratorSet> g;
    if (!prune || n == 4) {
        g = detail::make_generator_set(n, consequence_trees(n));
    } else {
        const auto lower = generator_set(n - 1, true, prune_prime);
        g = detail::make_generator_set(n, raise(detail::prune(*lower, prune_prime), n));
    }
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(g)).first->second;
}

namespace detail {

inline std::filesystem::path rank_cache_path(const std::string& dir, const Partition& lambda, int n,
                                             std::uint32_t p, std::uint64_t hash) {
    std::ostringstream name;
    name << "operad-v" << kCacheFormat << "-n" << n << "-" << lambda.to_string() << "-p" << p << "-" << std::hex << hash << ".rank";
    return std::filesystem::path(dir) / name.str();
}

inline std::size_t lambda_rank(const Partition& lambda, const GeneratorSet& g, std::uint32_t p,
                               const std::string& cache_dir, bool& cached) {
    std::filesystem::path path;
    if (!cache_dir.empty()) {
        path = rank_cache_path(cache_dir, lambda, g.n, p, g.hash);
        std::ifstream in(path);
        std::size_t r = 0;
        if (in >> r) {
            cached = true;
            return r;
        }
    }
    LambdaRank r(lambda, p);
    for (const auto& e : g.elements) {
        if (r.full()) break;
        r.add(e);
    }
    if (!cache_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cache_dir, ec);
        std::ofstream out(path);
        if (out) out << r.rank() << "\n";
    }
    return r.rank();
}

}  // namespace detail

namespace detail {

/// Refuses a partition whose dense f_n d_lambda square echelon exceeds the memory bound.
inline void check_matrix_size(const Partition& lambda, std::size_t f_n, std::size_t d_lambda, const HentzelOptions& opts) {
    const double cols = static_cast<double>(f_n) * static_cast<double>(d_lambda);
    const double bytes = cols * cols * sizeof(std::uint32_t);
    if (bytes > opts.max_matrix_bytes)
        throw InfeasibleError("multiplicity: the echelon for " + lambda.to_string() + " needs about " +
                                  std::to_string(static_cast<long long>(bytes / 1e6)) + " MB",
                              bytes);
}

}  // namespace detail

/// Multiplicity of V_lambda in Jord(n): f_n d_lambda minus the certified rank.
inline MultiplicityReport multiplicity(const Partition& lambda, const HentzelOptions& opts = {}) {
    const int n = lambda.size();
    if (n < 1) throw InputError("multiplicity: empty partition");
    if (opts.primes.empty()) throw InputError("multiplicity: no primes given");
    MultiplicityReport rep;
    rep.n = n;
    rep.lambda = lambda;
    rep.f_n = normal_types(n).size();
    rep.d_lambda = clifton::standard_tableaux(lambda)->size();
    rep.j_n = full_consequence_count(n);
    detail::check_matrix_size(lambda, rep.f_n, rep.d_lambda, opts);
    const auto g = generator_set(n, opts.prune, opts.primes.front());
    rep.generators = g->trees.size();
    bool any_cached = false;
    auto rank_for = [&](std::uint32_t p) {
        bool cached = false;
        const auto r = detail::lambda_rank(lambda, *g, p, opts.cache_dir, cached);
        any_cached = any_cached || cached;
        return r;
    };
    if (opts.primes.size() == 1) {
        rep.rank = rank_for(opts.primes.front());
        rep.primes = opts.primes;
    } else {
        const auto cert = certify_with(opts.primes, rank_for);
        rep.rank = cert.rank;
        rep.primes = cert.primes;
    }
    rep.cached = any_cached;
    rep.multiplicity = rep.f_n * rep.d_lambda - rep.rank;
    return rep;
}

/// All multiplicities of Jord(n), one worker per partition at a time.
inline SnModule jord_module(int n, const HentzelOptions& opts = {}) {
    if (n < 1) throw InputError("jord_module: n must be positive");
    SnModule mod;
    mod.n = n;
    const auto parts = sym::partitions(n);
    mod.parts.resize(parts.size());
    const std::size_t f_n = normal_types(n).size();
    for (const auto& lam : parts) detail::check_matrix_size(lam, f_n, clifton::standard_tableaux(lam)->size(), opts);
    generator_set(n, opts.prune, opts.primes.empty() ? 0u : opts.primes.front());
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(parts.size()));
    // largest blocks first so the tail is short
    std::vector<std::size_t> order(parts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<std::size_t> dims(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) dims[i] = clifton::standard_tableaux(parts[i])->size();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dims[a] > dims[b]; });
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k; (k = next++) < order.size();) {
            try {
                mod.parts[order[k]] = multiplicity(parts[order[k]], opts);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    for (const auto& r : mod.parts) mod.dimension += Integer(static_cast<unsigned long>(r.multiplicity * r.d_lambda));
    return mod;
}

}  // namespace freejord::operad
