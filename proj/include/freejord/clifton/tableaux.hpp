#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "freejord/sym/partition.hpp"

namespace freejord::clifton {

using sym::Partition;

/// A standard Young tableau filled with 0..n-1; rows[r] lists row r left to right.
struct StandardTableau {
    std::vector<std::vector<int>> rows;

    int size() const {
        int n = 0;
        for (const auto& r : rows) n += static_cast<int>(r.size());
        return n;
    }

    /// row_of()[x] is the row holding entry x.
    std::vector<int> row_of() const {
        std::vector<int> out(static_cast<std::size_t>(size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int x : rows[r]) out[static_cast<std::size_t>(x)] = static_cast<int>(r);
        return out;
    }

    /// columns()[c] lists column c top to bottom.
    std::vector<std::vector<int>> columns() const {
        std::vector<std::vector<int>> cols(rows.empty() ? 0 : rows[0].size());
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size(); ++c) cols[c].push_back(r[c]);
        return cols;
    }

    /// One-based display, rows separated by '/': "1 2 4/3".
    std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r) s += "/";
            for (std::size_t c = 0; c < rows[r].size(); ++c) s += (c ? " " : "") + std::to_string(rows[r][c] + 1);
        }
        return s;
    }

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

namespace detail {

inline void fill_tableaux(const Partition& lambda, int next, std::vector<int>& filled, StandardTableau& cur,
                          std::vector<StandardTableau>& out) {
    if (next == lambda.size()) {
        out.push_back(cur);
        return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
        const auto ur = static_cast<std::size_t>(r);
        const int c = filled[ur];
        if (c < lambda[r] && (r == 0 || filled[ur - 1] > c)) {
            cur.rows[ur].push_back(next);
            ++filled[ur];
            fill_tableaux(lambda, next + 1, filled, cur, out);
            --filled[ur];
            cur.rows[ur].pop_back();
        }
    }
}

}  // namespace detail

/// All standard tableaux of shape lambda.
///
/// Entries are placed in increasing order, trying the top row first. In this
/// order the matrix of polytabloid-to-tabloid coefficients is lower unitriangular.
inline std::shared_ptr<const std::vector<StandardTableau>> standard_tableaux(const Partition& lambda) {
    static std::shared_mutex mutex;
    static std::map<Partition, std::shared_ptr<const std::vector<StandardTableau>>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(lambda); it != cache.end()) return it->second;
    }
    auto out = std::make_shared<std::vector<StandardTableau>>();
    StandardTableau cur;
    cur.rows.resize(static_cast<std::size_t>(lambda.length()));
    std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
    detail::fill_tableaux(lambda, 0, filled, cur, *out);
    std::unique_lock lock(mutex);
    return cache.emplace(lambda, std::move(out)).first->second;
}

}  // namespace freejord::clifton
