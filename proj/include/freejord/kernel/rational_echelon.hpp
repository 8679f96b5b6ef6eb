#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "freejord/kernel/scalar.hpp"

namespace freejord {

/// Sparse vector over Q, sorted by index, no stored zeros.
using RationalVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// y + a x.
inline RationalVector axpy(const RationalVector& y, const Rational& a, const RationalVector& x) {
    RationalVector r;
    r.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            r.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            r.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Rational v = y[i].second + a * x[j].second;
            if (sgn(v) != 0) r.emplace_back(y[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

inline RationalVector scaled(const RationalVector& x, const Rational& a) {
    if (sgn(a) == 0) return {};
    RationalVector r = x;
    for (auto& [k, v] : r) v *= a;
    return r;
}

/// Accumulates terms in any order and emits a RationalVector.
class RationalAccumulator {
public:
    void add(std::uint32_t k, const Rational& v) {
        if (sgn(v) != 0) terms_[k] += v;
    }
    void add(const RationalVector& x, const Rational& a = 1) {
        for (const auto& [k, v] : x) add(k, a * v);
    }
    RationalVector result() const {
        RationalVector r;
        for (const auto& [k, v] : terms_)
            if (sgn(v) != 0) r.emplace_back(k, v);
        return r;
    }

private:
    std::map<std::uint32_t, Rational> terms_;
};

/// Reduced row echelon basis over Q grown one sparse vector at a time. Every row also
/// records which combination of the inserted vectors (by insertion tag) produced it.
class RationalEchelon {
public:
    std::size_t rank() const { return rows_.size(); }

    bool is_pivot(std::uint32_t c) const { return rows_.count(c) != 0; }

    /// Pivot columns in increasing order.
    std::vector<std::uint32_t> pivots() const {
        std::vector<std::uint32_t> p;
        for (const auto& [c, r] : rows_) p.push_back(c);
        return p;
    }

    /// Remainder of v supported off the pivots; `combo`, when given, receives the
    /// combination of tags with v = remainder + combo.
    RationalVector reduce(RationalVector v, RationalVector* combo = nullptr) const {
        RationalVector acc;
        for (std::size_t k = 0; k < v.size();) {
            auto it = rows_.find(v[k].first);
            if (it == rows_.end()) {
                ++k;
                continue;
            }
            const Rational f = v[k].second;
            v = axpy(v, -f, it->second.vec);
            if (combo) acc = axpy(acc, f, it->second.combo);
        }
        if (combo) *combo = std::move(acc);
        return v;
    }

    /// Adds v tagged as `tag`; returns true when v was independent.
    bool add(const RationalVector& v, std::uint32_t tag = 0) {
        RationalVector combo;
        RationalVector r = reduce(v, &combo);
        if (r.empty()) return false;
        combo = axpy(RationalVector{{tag, Rational(1)}}, -1, combo);
        const Rational inv = 1 / r.front().second;
        r = scaled(r, inv);
        combo = scaled(combo, inv);
        const std::uint32_t c = r.front().first;
        for (auto& [pc, row] : rows_) {
            const auto hit = std::lower_bound(row.vec.begin(), row.vec.end(), c,
                                              [](const auto& e, std::uint32_t x) { return e.first < x; });
            if (hit == row.vec.end() || hit->first != c) continue;
            const Rational f = hit->second;
            row.vec = axpy(row.vec, -f, r);
            row.combo = axpy(row.combo, -f, combo);
        }
        rows_.emplace(c, Row{std::move(r), std::move(combo)});
        return true;
    }

private:
    struct Row {
        RationalVector vec;
        RationalVector combo;
    };
    std::map<std::uint32_t, Row> rows_;
};

}  // namespace freejord
