#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "freejord/clifton/tableaux.hpp"
#include "freejord/errors.hpp"
#include "freejord/kernel/dense_matrix.hpp"
#include "freejord/sym/permutation.hpp"

namespace freejord::clifton {

using sym::Permutation;

/// A representation matrix of S_n on the irreducible module of shape lambda.
struct IrrepMatrix {
    Partition lambda;
    Permutation sigma;
    DenseMatrix<RationalField> matrix;
};

namespace detail {

/// Tableau data precomputed once per shape.
struct ShapeData {
    std::shared_ptr<const std::vector<StandardTableau>> tableaux;
    std::vector<std::vector<int>> row_of;                   // per tableau
    std::vector<std::vector<std::vector<int>>> columns;     // per tableau
};

inline std::shared_ptr<const ShapeData> shape_data(const Partition& lambda) {
    static std::shared_mutex mutex;
    static std::map<Partition, std::shared_ptr<const ShapeData>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(lambda); it != cache.end()) return it->second;
    }
    auto data = std::make_shared<ShapeData>();
    data->tableaux = standard_tableaux(lambda);
    for (const auto& t : *data->tableaux) {
        data->row_of.push_back(t.row_of());
        data->columns.push_back(t.columns());
    }
    std::unique_lock lock(mutex);
    return cache.emplace(lambda, std::move(data)).first->second;
}

/// Coefficient of the tabloid with row map `row` in the polytabloid whose columns are `cols`
/// after relabelling entries by sigma.
inline int polytabloid_coefficient(const std::vector<int>& row, const std::vector<std::vector<int>>& cols,
                                   const Permutation& sigma) {
    int sign = 1;
    int target[64];
    for (const auto& col : cols) {
        const int len = static_cast<int>(col.size());
        unsigned used = 0;
        for (int k = 0; k < len; ++k) {
            const int r = row[static_cast<std::size_t>(sigma[static_cast<std::size_t>(col[static_cast<std::size_t>(k)])])];
            if (r >= len || (used >> r) & 1u) return 0;
            used |= 1u << r;
            target[k] = r;
        }
        for (int a = 0; a < len; ++a)
            for (int b = a + 1; b < len; ++b)
                if (target[a] > target[b]) sign = -sign;
    }
    return sign;
}

}  // namespace detail

/// Clifton's matrix A_lambda(sigma) with entries 0 or +-1 in the given field.
///
/// Entry (i, j) is the coefficient of the tabloid {t_i} in the polytabloid
/// e_{sigma t_j}, so A(sigma) = A(id) rho(sigma).
template <class Field>
DenseMatrix<Field> clifton_matrix(const Field& F, const Partition& lambda, const Permutation& sigma) {
    if (static_cast<int>(sigma.size()) != lambda.size() || !sym::is_permutation(sigma))
        throw InputError("clifton_matrix: sigma is not a permutation of |lambda| points");
    if (lambda.length() > 31) throw InputError("clifton_matrix: at most 31 rows supported");
    const auto data = detail::shape_data(lambda);
    const std::size_t d = data->tableaux->size();
    DenseMatrix<Field> A(F, d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            const int c = detail::polytabloid_coefficient(data->row_of[i], data->columns[j], sigma);
            if (c) A(i, j) = F.from_int(c);
        }
    return A;
}

inline IrrepMatrix clifton_matrix(const Partition& lambda, const Permutation& sigma) {
    return {lambda, sigma, clifton_matrix(RationalField{}, lambda, sigma)};
}

/// Inverse of A_lambda(id), cached per (lambda, field).
///
/// A(id) is lower unitriangular in the tableau order, so forward substitution suffices.
template <class Field>
std::shared_ptr<const DenseMatrix<Field>> clifton_identity_inverse(const Field& F, const Partition& lambda) {
    static std::shared_mutex mutex;
    static std::map<std::pair<Partition, std::string>, std::shared_ptr<const DenseMatrix<Field>>> cache;
    const auto key = std::make_pair(lambda, F.name());
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const auto A = clifton_matrix(F, lambda, sym::identity_permutation(lambda.size()));
    const std::size_t d = A.rows();
    for (std::size_t i = 0; i < d; ++i) {
        if (A(i, i) != F.one()) throw InternalError("A(id) has a non-unit diagonal entry");
        for (std::size_t j = i + 1; j < d; ++j)
            if (!F.is_zero(A(i, j))) throw InternalError("A(id) is not lower triangular");
    }
    auto X = std::make_shared<DenseMatrix<Field>>(DenseMatrix<Field>::identity(F, d));
    // X_i = e_i - sum_{k<i} A(i,k) X_k, where X_k is supported on columns <= k
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < i; ++k) {
            const auto a = A(i, k);
            if (F.is_zero(a)) continue;
            for (std::size_t j = 0; j <= k; ++j)
                if (!F.is_zero((*X)(k, j))) (*X)(i, j) = F.sub((*X)(i, j), F.mul(a, (*X)(k, j)));
        }
    std::unique_lock lock(mutex);
    return cache.emplace(key, std::move(X)).first->second;
}

/// The representation matrix rho(sigma) = A(id)^{-1} A(sigma); rho(ab) = rho(a) rho(b).
template <class Field>
DenseMatrix<Field> rep_matrix(const Field& F, const Partition& lambda, const Permutation& sigma) {
    const auto inv = clifton_identity_inverse(F, lambda);
    return *inv * clifton_matrix(F, lambda, sigma);
}

inline IrrepMatrix rep_matrix(const Partition& lambda, const Permutation& sigma) {
    return {lambda, sigma, rep_matrix(RationalField{}, lambda, sigma)};
}

}  // namespace freejord::clifton
