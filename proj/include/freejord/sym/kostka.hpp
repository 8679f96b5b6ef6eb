#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/sym/partition.hpp"

namespace freejord::sym {

namespace detail {

inline void horizontal_strips(const Partition& lambda, int size, int row, std::vector<int>& cur,
                              std::vector<Partition>& out) {
    const int l = lambda.length();
    if (row == l) {
        if (size == 0) {
            std::vector<int> parts;
            for (int v : cur)
                if (v > 0) parts.push_back(v);
            out.emplace_back(std::move(parts));
        }
        return;
    }
    // nu_row ranges over [lambda_{row+1}, lambda_row]
    const int hi = lambda[row];
    const int lo = lambda[row + 1];
    for (int v = hi; v >= lo; --v) {
        const int removed = hi - v;
        if (removed > size) break;
        cur.push_back(v);
        horizontal_strips(lambda, size - removed, row + 1, cur, out);
        cur.pop_back();
    }
}

inline std::int64_t kostka_rec(const Partition& lambda, const std::vector<int>& mu, std::size_t k) {
    if (k == 0) return lambda.empty() ? 1 : 0;
    static std::shared_mutex mutex;
    static std::map<std::pair<Partition, std::vector<int>>, std::int64_t> memo;
    std::pair<Partition, std::vector<int>> key{lambda, std::vector<int>(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(k))};
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    std::vector<Partition> strips;
    std::vector<int> cur;
    horizontal_strips(lambda, mu[k - 1], 0, cur, strips);
    std::int64_t total = 0;
    for (const auto& nu : strips) total += kostka_rec(nu, mu, k - 1);
    std::unique_lock lock(mutex);
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

/// Number of semistandard tableaux of shape lambda and content mu (a composition).
///
/// The largest entry occupies a horizontal strip of size mu.back(); peeling strips
/// off in that order keeps the recursion valid for unsorted content.
inline std::int64_t kostka(const Partition& lambda, const std::vector<int>& mu) {
    int total = 0;
    for (int m : mu) {
        if (m < 0) throw InputError("kostka: negative content");
        total += m;
    }
    if (total != lambda.size()) throw InputError("kostka: size mismatch");
    return detail::kostka_rec(lambda, mu, mu.size());
}

}  // namespace freejord::sym
