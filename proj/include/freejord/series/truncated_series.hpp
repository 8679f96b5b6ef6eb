#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/series/laurent.hpp"

namespace freejord::series {

/// Power series in z truncated after z^N, with Laurent-polynomial coefficients in t.
/// Arithmetic silently discards z-degrees above N.
class TruncatedLaurentSeries {
public:
    explicit TruncatedLaurentSeries(int order) : coeffs_(check(order) + 1) {}

    static TruncatedLaurentSeries one(int order) {
        TruncatedLaurentSeries s(order);
        s.coeffs_[0] = LaurentPoly::constant(1);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const LaurentPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    LaurentPoly& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    friend TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a,
                                            const TruncatedLaurentSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncatedLaurentSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }

    TruncatedLaurentSeries& operator*=(const TruncatedLaurentSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Binary powering inside the truncated ring.
    TruncatedLaurentSeries pow(Integer e) const {
        if (e < 0) throw InputError("negative power of a truncated series");
        TruncatedLaurentSeries result = one(order());
        TruncatedLaurentSeries base = *this;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    /// t-exponents of the z^k coefficient stay within [-k-1, k+1] for the
    /// products used by the predictor (the base factor contributes t^{+-1} at k = 0).
    void assert_exponent_bounds() const {
#ifndef NDEBUG
        for (int k = 0; k <= order(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            assert(coeffs_[k].min_exponent() >= -k - 1 && coeffs_[k].max_exponent() <= k + 1);
        }
#endif
    }

private:
    static int check(int order) {
        if (order < 0) throw InputError("truncation order must be non-negative");
        return order;
    }

    std::vector<LaurentPoly> coeffs_;
};

}  // namespace freejord::series
