#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/scalar.hpp"

namespace freejord {

/// Sparse vector over GF(p): (column, value) pairs sorted by column, values nonzero.
using SparseVector = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Echelon basis over GF(p) with sparse rows, keyed by leading column.
///
/// Rows are only reduced below their pivot, so a new vector is cleared by a single
/// left-to-right sweep through a dense accumulator.
class SparseEchelon {
public:
    SparseEchelon(PrimeField field, std::size_t cols)
        : F_(field), cols_(cols), pivot_row_(cols, kNone), acc_(cols, 0) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<SparseVector>& rows() const { return rows_; }

    /// Reduces v; returns the remainder (empty when v lies in the span).
    SparseVector reduce(const SparseVector& v) {
        for (const auto& [c, x] : v) {
            if (c >= cols_) throw InputError("sparse vector index out of range");
            acc_[c] = F_.add(acc_[c], x);
        }
        SparseVector rest;
        for (std::size_t c = v.empty() ? cols_ : v.front().first; c < cols_; ++c) {
            const std::uint32_t x = acc_[c];
            if (x == 0) continue;
            acc_[c] = 0;
            const std::uint32_t r = pivot_row_[c];
            if (r == kNone) {
                rest.emplace_back(static_cast<std::uint32_t>(c), x);
                continue;
            }
            const std::uint32_t f = F_.neg(x);
            const auto& row = rows_[r];
            for (std::size_t k = 1; k < row.size(); ++k) acc_[row[k].first] = F_.add(acc_[row[k].first], F_.mul(f, row[k].second));
        }
        return rest;
    }

    /// Adds v to the span; returns true when it was independent.
    bool add(const SparseVector& v) {
        SparseVector r = reduce(v);
        if (r.empty()) return false;
        const std::uint32_t inv = F_.inv(r.front().second);
        for (auto& e : r) e.second = F_.mul(e.second, inv);
        pivot_row_[r.front().first] = static_cast<std::uint32_t>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    bool contains(const SparseVector& v) { return reduce(v).empty(); }

private:
    static constexpr std::uint32_t kNone = 0xffffffffu;
    PrimeField F_;
    std::size_t cols_;
    std::vector<std::uint32_t> pivot_row_;
    std::vector<std::uint32_t> acc_;
    std::vector<SparseVector> rows_;
};

}  // namespace freejord
