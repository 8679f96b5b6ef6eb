#pragma once

#include <map>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/lambda/character.hpp"
#include "freejord/series/predictor.hpp"
#include "freejord/sym/characters.hpp"

namespace freejord::lambda {

/// psi^m: key -> adams(m, key), q -> q^m, degree n -> mn.
template <class Model>
GradedCharacter<Model> adams(int m, const GradedCharacter<Model>& X) {
    if (m < 1) throw InputError("Adams operation index must be positive");
    GradedCharacter<Model> r(X.model(), X.truncation());
    for (int n = 0; n * m <= X.truncation(); ++n)
        for (const auto& [t, v] : X[n]) add_to<Model>(r[n * m], X.model().adams(m, t.first), t.second * m, v);
    return r;
}

namespace detail {

/// Degree-n part of -sum_{m|n} psi^m(X_{n/m}) / m, optionally skipping m = 1.
template <class Model>
Component<Model> log_lambda_component(const GradedCharacter<Model>& X, int n, bool skip_first) {
    Component<Model> g;
    for (int m = skip_first ? 2 : 1; m <= n; ++m) {
        if (n % m) continue;
        const Rational c(-1, m);
        for (const auto& [t, v] : X[n / m]) add_to<Model>(g, X.model().adams(m, t.first), t.second * m, v * c);
    }
    return g;
}

/// F_n = (1/n) sum_{k=1}^n k G_k F_{n-k}.
template <class Model>
Component<Model> exp_step(const Model& model, const std::vector<Component<Model>>& G,
                          const std::vector<Component<Model>>& F, int n) {
    Component<Model> acc;
    for (int k = 1; k <= n; ++k) {
        const auto& g = G[static_cast<std::size_t>(k)];
        const auto& f = F[static_cast<std::size_t>(n - k)];
        if (g.empty() || f.empty()) continue;
        const Rational w = make_rational(k, n);
        for (const auto& [ta, va] : g)
            for (const auto& [tb, vb] : f) add_to<Model>(acc, model.multiply(ta.first, tb.first), ta.second + tb.second, va * vb * w);
    }
    return acc;
}

}  // namespace detail

/// lambda(X) = sum_k (-1)^k Lambda^k X = exp(-sum_m psi^m X / m), truncated at N.
template <class Model>
GradedCharacter<Model> lambda_op(const GradedCharacter<Model>& X) {
    if (!X.in_augmentation_ideal()) throw InputError("lambda_op: class has a degree-0 part");
    const int N = X.truncation();
    std::vector<Component<Model>> G(static_cast<std::size_t>(N) + 1), F(static_cast<std::size_t>(N) + 1);
    F[0][{X.model().unit(), 0}] = 1;
    for (int n = 1; n <= N; ++n) {
        G[static_cast<std::size_t>(n)] = detail::log_lambda_component(X, n, false);
        F[static_cast<std::size_t>(n)] = detail::exp_step(X.model(), G, F, n);
    }
    GradedCharacter<Model> r(X.model(), N);
    for (int n = 0; n <= N; ++n) r[n] = std::move(F[static_cast<std::size_t>(n)]);
    return r;
}

/// Multiplicity class of [L(m)]: coeff(q^m) - coeff(q^{m+2}), returned with q = 0.
template <class Model>
Component<Model> sl2_isotype(const Component<Model>& c, int m) {
    if (m < 0) throw InputError("sl2_isotype: weight must be non-negative");
    Component<Model> r;
    for (const auto& [t, v] : c) {
        if (t.second == m) add_to<Model>(r, t.first, 0, v);
        else if (t.second == m + 2) add_to<Model>(r, t.first, 0, Rational(-v));
    }
    return r;
}

template <class Model>
GradedCharacter<Model> sl2_isotype(const GradedCharacter<Model>& X, int m) {
    GradedCharacter<Model> r(X.model(), X.truncation());
    for (int n = 0; n <= X.truncation(); ++n) r[n] = sl2_isotype<Model>(X[n], m);
    return r;
}

template <class Model>
struct KmPrediction {
    GradedCharacter<Model> a;
    GradedCharacter<Model> b;
};

/// The unique a, b in the augmentation ideal with
///   [lambda(a [L2] + b [L0]) : L(0)] = 1,  [lambda(a [L2] + b [L0]) : L(2)] = -ch V.
///
/// In degree n the unknowns enter lambda only through -(a_n [L2] + b_n [L0]),
/// so each degree is solved from the expansion of the lower ones.
template <class Model>
KmPrediction<Model> km_prediction(const Model& model, int N) {
    if (N < 1) throw InputError("km_prediction: truncation must be at least 1");
    KmPrediction<Model> out{GradedCharacter<Model>(model, N), GradedCharacter<Model>(model, N)};
    GradedCharacter<Model> X(model, N);
    const auto chV = generator_character(model, N);
    std::vector<Component<Model>> G(static_cast<std::size_t>(N) + 1), F(static_cast<std::size_t>(N) + 1);
    F[0][{model.unit(), 0}] = 1;
    for (int n = 1; n <= N; ++n) {
        const auto un = static_cast<std::size_t>(n);
        G[un] = detail::log_lambda_component(X, n, true);
        F[un] = detail::exp_step(model, G, F, n);
        Component<Model> a_n = sl2_isotype<Model>(F[un], 2);
        const Component<Model> b_n = sl2_isotype<Model>(F[un], 0);
        if (n == 1)
            for (const auto& [t, v] : chV[1]) add_to<Model>(a_n, t.first, 0, v);
        for (const auto& [t, v] : a_n)
            for (int e : {-2, 0, 2}) {
                add_to<Model>(X[n], t.first, e, v);
                add_to<Model>(G[un], t.first, e, Rational(-v));
                add_to<Model>(F[un], t.first, e, Rational(-v));
            }
        for (const auto& [t, v] : b_n) {
            add_to<Model>(X[n], t.first, 0, v);
            add_to<Model>(G[un], t.first, 0, Rational(-v));
            add_to<Model>(F[un], t.first, 0, Rational(-v));
        }
        out.a[n] = std::move(a_n);
        out.b[n] = b_n;
    }
    return out;
}

/// Signed multiplicities of s_lambda in the degree-n part, in partitions(n) order, zeros omitted.
using SchurDecomposition = std::vector<std::pair<Partition, Integer>>;

inline SchurDecomposition schur_decompose(const GradedCharacter<PowerSumModel>& X, int n) {
    if (n < 0 || n > X.truncation()) throw InputError("schur_decompose: degree outside truncation");
    if (X.model().variables < n)
        throw InputError("schur_decompose: " + std::to_string(X.model().variables) +
                         " variables cannot separate Schur functions of degree " + std::to_string(n));
    std::map<Partition, Rational> coeffs;
    for (const auto& [t, v] : X[n]) {
        if (t.second != 0) throw InputError("schur_decompose: class carries sl2 weights; extract an isotype first");
        coeffs[t.first] += v;
    }
    const auto table = sym::character_table(n);
    SchurDecomposition out;
    for (std::size_t i = 0; i < table->classes.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < table->classes.size(); ++j) {
            auto it = coeffs.find(table->classes[j]);
            if (it != coeffs.end()) s += it->second * Rational(static_cast<long>(table->values[i][j]));
        }
        if (s.get_den() != 1) throw InternalError("non-integral Schur coefficient for " + table->classes[i].to_string());
        if (sgn(s) != 0) out.emplace_back(table->classes[i], s.get_num());
    }
    return out;
}

/// Power-sum expansion s_lambda = sum_mu chi^lambda(mu) / z_mu p_mu, summed over the input.
inline Component<PowerSumModel> schur_to_power_sum(const SchurDecomposition& s) {
    Component<PowerSumModel> r;
    for (const auto& [lam, c] : s) {
        const int n = lam.size();
        for (const auto& mu : sym::partitions(n)) {
            const auto chi = sym::character(lam, mu);
            if (chi == 0) continue;
            add_to<PowerSumModel>(r, mu, 0, Rational(c) * Rational(static_cast<long>(chi)) / Rational(static_cast<long>(sym::centralizer_order(mu))));
        }
    }
    return r;
}

struct EffectivityReport {
    bool effective = true;
    std::vector<Partition> offending;
};

inline EffectivityReport effectivity_check(const GradedCharacter<PowerSumModel>& X, int n) {
    EffectivityReport rep;
    for (const auto& [lam, c] : schur_decompose(X, n))
        if (c < 0) {
            rep.effective = false;
            rep.offending.push_back(lam);
        }
    return rep;
}

/// Dimensions per degree 1..N after specializing every variable and q to 1.
template <class Model>
series::DimSequence dims_from_character(const GradedCharacter<Model>& X) {
    series::DimSequence d{X.model().variables, {}};
    for (int n = 1; n <= X.truncation(); ++n) {
        Rational s = 0;
        for (const auto& [t, v] : X[n]) s += v * Rational(X.model().at_one(t.first));
        if (s.get_den() != 1) throw InternalError("non-integral dimension in degree " + std::to_string(n));
        d.dims.push_back(s.get_num());
    }
    return d;
}

}  // namespace freejord::lambda
