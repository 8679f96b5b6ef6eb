#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/dense_matrix.hpp"
#include "freejord/kernel/scalar.hpp"

namespace freejord {

struct RankCertificate {
    std::size_t rank = 0;
    std::vector<std::uint32_t> primes;  // primes that agreed
    bool exact = false;                 // confirmed by fraction-free elimination over Z
};

/// Rank of an integer matrix by Bareiss fraction-free elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

/// Clears denominators row by row; the rank is unchanged.
inline std::vector<std::vector<Integer>> integer_rows(const DenseMatrix<RationalField>& m) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return out;
}

/// Combines per-prime ranks into a certificate or reports the outlier prime.
inline RankCertificate agree_ranks(std::span<const std::uint32_t> primes,
                                   std::span<const std::size_t> ranks) {
    if (primes.size() < 2) throw InputError("rank certification needs at least two primes");
    const auto hi = *std::max_element(ranks.begin(), ranks.end());
    for (std::size_t k = 0; k < primes.size(); ++k)
        if (ranks[k] != hi)
            throw UnluckyPrimeError("unlucky prime " + std::to_string(primes[k]) + ": rank " +
                                        std::to_string(ranks[k]) + " vs " + std::to_string(hi),
                                    primes[k]);
    return RankCertificate{hi, {primes.begin(), primes.end()}, false};
}

/// Certifies a rank by computing it modulo every prime with a caller-supplied routine.
inline RankCertificate certify_with(std::span<const std::uint32_t> primes,
                                    const std::function<std::size_t(std::uint32_t)>& rank_for) {
    std::vector<std::size_t> ranks;
    ranks.reserve(primes.size());
    for (auto p : primes) ranks.push_back(rank_for(p));
    return agree_ranks(primes, ranks);
}

/// Rank of a rational matrix certified across primes; optionally confirmed exactly.
///
/// A common modular rank is a lower bound on the rational rank. With exact set,
/// fraction-free elimination over the integers settles the value.
inline RankCertificate certified_rank(const DenseMatrix<RationalField>& m,
                                      std::span<const std::uint32_t> primes, bool exact = false) {
    auto cert = certify_with(primes, [&](std::uint32_t p) { return rank_mod_p(reduce_mod_p(m, p)); });
    if (exact) {
        const std::size_t r = bareiss_rank(integer_rows(m));
        if (r != cert.rank)
            throw UnluckyPrimeError("all primes unlucky: modular rank " + std::to_string(cert.rank) +
                                        " below exact rank " + std::to_string(r),
                                    primes.front());
        cert.exact = true;
    }
    return cert;
}

}  // namespace freejord
