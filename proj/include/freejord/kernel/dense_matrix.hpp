#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/scalar.hpp"

namespace freejord {

/// Row-major dense matrix over a field model (PrimeField or RationalField).
template <class Field>
class DenseMatrix {
public:
    using field_type = Field;
    using value_type = typename Field::value_type;

    explicit DenseMatrix(Field field, std::size_t rows = 0, std::size_t cols = 0)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static DenseMatrix identity(Field field, std::size_t n) {
        DenseMatrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const value_type> r) {
        if (r.size() != cols_) throw InputError("row length does not match column count");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    DenseMatrix transposed() const {
        DenseMatrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
        DenseMatrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const value_type& a = (*this)(i, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
            }
        return r;
    }

    bool operator==(const DenseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && field_.is_zero((*this)(piv, c))) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(piv, j));
            value_type inv = field_.inv((*this)(r, c));
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || field_.is_zero((*this)(i, c))) continue;
                value_type f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(f, (*this)(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

/// Row echelon basis grown one vector at a time.
///
/// Stored rows are normalized (pivot entry one) and each is reduced against
/// all earlier rows, so reduction in insertion order clears every pivot column.
template <class Field>
class IncrementalEchelon {
public:
    using value_type = typename Field::value_type;

    IncrementalEchelon(Field field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<std::vector<value_type>>& rows() const { return rows_; }

    /// Reduces v against the current basis in place.
    void reduce(std::vector<value_type>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::size_t c = pivots_[k];
            if (field_.is_zero(v[c])) continue;
            const value_type f = v[c];
            const auto& r = rows_[k];
            for (std::size_t j = c; j < cols_; ++j)
                if (!field_.is_zero(r[j])) v[j] = field_.sub(v[j], field_.mul(f, r[j]));
        }
    }

    /// Adds v to the span; returns true when it was independent.
    bool add(std::vector<value_type> v) {
        if (v.size() != cols_) throw InputError("vector length does not match echelon width");
        if (full()) return false;
        reduce(v);
        std::size_t c = 0;
        while (c < cols_ && field_.is_zero(v[c])) ++c;
        if (c == cols_) return false;
        const value_type inv = field_.inv(v[c]);
        for (std::size_t j = c; j < cols_; ++j) v[j] = field_.mul(v[j], inv);
        pivots_.push_back(c);
        rows_.push_back(std::move(v));
        return true;
    }

    bool full() const { return pivots_.size() == cols_; }

private:
    Field field_;
    std::size_t cols_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<value_type>> rows_;
};

/// Rank over the field of the matrix; the input is left untouched.
template <class Field>
std::size_t rank(const DenseMatrix<Field>& m) {
    DenseMatrix<Field> copy = m;
    return copy.rref_in_place().size();
}

/// Rank over GF(p); the empty matrix has rank zero.
inline std::size_t rank_mod_p(const DenseMatrix<PrimeField>& m) { return rank(m); }

/// Basis of the right nullspace {x : m x = 0}; its size is cols - rank.
template <class Field>
std::vector<std::vector<typename Field::value_type>> nullspace(const DenseMatrix<Field>& m) {
    const Field& F = m.field();
    DenseMatrix<Field> r = m;
    const auto pivots = r.rref_in_place();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename Field::value_type>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename Field::value_type> v(m.cols(), F.zero());
        v[free] = F.one();
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F.neg(r(k, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<std::vector<std::uint32_t>> nullspace_mod_p(const DenseMatrix<PrimeField>& m) {
    return nullspace(m);
}

/// Entrywise image of a rational matrix in GF(p).
inline DenseMatrix<PrimeField> reduce_mod_p(const DenseMatrix<RationalField>& m, std::uint32_t p) {
    PrimeField F(p);
    DenseMatrix<PrimeField> r(F, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = F.from_rational(m(i, j));
    return r;
}

}  // namespace freejord
