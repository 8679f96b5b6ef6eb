#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/sym/partition.hpp"

namespace freejord::sym {

namespace detail {

struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
        PartitionHash h;
        return h(k.first) * 31 + h(k.second);
    }
};

/// Memo shared by all threads: concurrent readers, exclusive writer.
class CharacterMemo {
public:
    bool find(const std::pair<Partition, Partition>& key, std::int64_t& out) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }
    void store(std::pair<Partition, Partition> key, std::int64_t value) {
        std::unique_lock lock(mutex_);
        table_.emplace(std::move(key), value);
    }

    static CharacterMemo& instance() {
        static CharacterMemo memo;
        return memo;
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::pair<Partition, Partition>, std::int64_t, PairHash> table_;
};

inline std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    auto& memo = CharacterMemo::instance();
    std::pair<Partition, Partition> key{lambda, mu};
    std::int64_t cached;
    if (memo.find(key, cached)) return cached;

    // beta numbers beta_i = lambda_i + (l - 1 - i), strictly decreasing
    const int l = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (l - 1 - i);
    const int r = mu.parts().front();
    const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

    std::int64_t total = 0;
    for (int i = 0; i < l; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > target && x < b) ++between;
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts;
        for (int k = 0; k < l; ++k) {
            const int part = nb[static_cast<std::size_t>(k)] - (l - 1 - k);
            if (part > 0) parts.push_back(part);
        }
        const std::int64_t sub = murnaghan_nakayama(Partition(std::move(parts)), rest);
        total += (between % 2 ? -sub : sub);
    }
    memo.store(std::move(key), total);
    return total;
}

}  // namespace detail

/// Irreducible character chi^lambda evaluated on the class of cycle type mu.
inline std::int64_t character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw InputError("character: partitions of different sizes");
    return detail::murnaghan_nakayama(lambda, mu);
}

/// Character table of S_n; rows lambda, columns mu, both in partitions(n) order.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> classes;  // partitions(n)
    std::vector<std::vector<std::int64_t>> values;
};

inline std::shared_ptr<const CharacterTable> character_table(int n) {
    static std::shared_mutex mutex;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto table = std::make_shared<CharacterTable>();
    table->n = n;
    table->classes = partitions(n);
    for (const auto& lam : table->classes) {
        std::vector<std::int64_t> row;
        for (const auto& mu : table->classes) row.push_back(character(lam, mu));
        table->values.push_back(std::move(row));
    }
    std::unique_lock lock(mutex);
    return cache.emplace(n, std::move(table)).first->second;
}

/// Cycle type of a permutation given in one-line notation on {0..n-1}.
inline Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycles;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        cycles.push_back(len);
    }
    return Partition::from_composition(std::move(cycles));
}

}  // namespace freejord::sym
