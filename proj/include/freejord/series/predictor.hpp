#pragma once

#include <optional>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/series/truncated_series.hpp"

namespace freejord::series {

/// Graded dimensions a_1..a_N for a p-generated algebra.
struct DimSequence {
    int generators = 1;
    std::vector<Integer> dims;  // dims[n-1] = a_n

    int length() const { return static_cast<int>(dims.size()); }
    const Integer& at(int n) const { return dims.at(static_cast<std::size_t>(n - 1)); }
};

/// The degree-independent factor 1 - pz - t + pz t^{-1}.
inline TruncatedLaurentSeries base_factor(int p, int order) {
    TruncatedLaurentSeries s(order);
    s[0] = LaurentPoly{{0, 1}, {1, -1}};
    if (order >= 1) s[1] = LaurentPoly{{0, -p}, {-1, p}};
    return s;
}

/// (1 - z^n (t + t^{-1}) + z^{2n})^{a}, truncated at z^order.
///
/// When 2n exceeds the order only the linear term of the binomial expansion survives,
/// so the factor is 1 - a z^n (t + t^{-1}) exactly.
inline TruncatedLaurentSeries degree_factor(int n, const Integer& a, int order) {
    if (n < 1) throw InputError("factor degree must be positive");
    auto result = TruncatedLaurentSeries::one(order);
    if (a == 0 || n > order) return result;
    if (2 * n > order) {
        result[n] = LaurentPoly{{1, -a}, {-1, -a}};
        return result;
    }
    TruncatedLaurentSeries f = TruncatedLaurentSeries::one(order);
    f[n] = LaurentPoly{{1, -1}, {-1, -1}};
    f[2 * n] += LaurentPoly::constant(1);
    return f.pow(a);
}

/// (1 - pz - t + pz t^{-1}) * prod_{n=1..N} (1 - z^n(t+t^{-1}) + z^{2n})^{a_n}, truncated at z^N.
inline TruncatedLaurentSeries conjecture_series(int p, const DimSequence& dims, int order) {
    if (order < 0) throw InputError("truncation must be non-negative");
    if (dims.length() < order)
        throw InputError("dimension sequence shorter than the truncation order");
    TruncatedLaurentSeries s = base_factor(p, order);
    for (int n = 1; n <= order; ++n) s *= degree_factor(n, dims.at(n), order);
    s.assert_exponent_bounds();
    return s;
}

/// The unique a_1..a_N making every z^n coefficient (n <= N) residue-free.
///
/// Degree n enters the z^n coefficient only through -a_n (t + t^{-1})(1 - t), whose
/// residue is -a_n; so a_n is the residue of the partial product with a_n = 0.
inline DimSequence predict_dims(int p, int order) {
    if (p < 1) throw InputError("generator count must be positive");
    if (order < 1) throw InputError("truncation must be at least one");
    DimSequence out{p, {}};
    TruncatedLaurentSeries partial = base_factor(p, order);
    for (int n = 1; n <= order; ++n) {
        Integer a = partial[n].residue();
        out.dims.push_back(a);
        partial *= degree_factor(n, a, order);
    }
    return out;
}

struct SequenceReport {
    std::vector<Integer> residues;       // residues[n-1] for z^n
    std::optional<int> first_nonzero;    // first degree with nonzero residue
};

/// Residue of each z^n coefficient, n = 1..N, for a candidate dimension sequence.
inline SequenceReport check_sequence(int p, const DimSequence& dims) {
    const int order = dims.length();
    if (order < 1) throw InputError("empty dimension sequence");
    const TruncatedLaurentSeries s = conjecture_series(p, dims, order);
    SequenceReport rep;
    for (int n = 1; n <= order; ++n) {
        rep.residues.push_back(s[n].residue());
        if (!rep.first_nonzero && rep.residues.back() != 0) rep.first_nonzero = n;
    }
    return rep;
}

}  // namespace freejord::series
