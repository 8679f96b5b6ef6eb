#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/scalar.hpp"
#include "freejord/lambda/ring_models.hpp"

namespace freejord::lambda {

/// One graded piece: a finite sum of c * key * q^e.
template <class Model>
using Component = std::map<std::pair<typename Model::key_type, int>, Rational>;

template <class Model>
void add_to(Component<Model>& c, const typename Model::key_type& key, int q, const Rational& v) {
    if (sgn(v) == 0) return;
    auto [it, inserted] = c.try_emplace({key, q}, v);
    if (!inserted) {
        it->second += v;
        if (sgn(it->second) == 0) c.erase(it);
    }
}

template <class Model>
Component<Model> multiply(const Model& model, const Component<Model>& a, const Component<Model>& b) {
    Component<Model> r;
    for (const auto& [ta, va] : a)
        for (const auto& [tb, vb] : b) add_to<Model>(r, model.multiply(ta.first, tb.first), ta.second + tb.second, va * vb);
    return r;
}

/// A class in (ring model) tensor (sl2 character ring), graded by polynomial degree
/// and truncated above degree N. Degree 0 is stored but is empty in the augmentation ideal.
template <class Model>
class GradedCharacter {
public:
    using key_type = typename Model::key_type;
    using component_type = Component<Model>;

    GradedCharacter(Model model, int truncation)
        : model_(std::move(model)), parts_(static_cast<std::size_t>(std::max(truncation, 0)) + 1) {
        if (truncation < 0) throw InputError("negative truncation");
    }

    const Model& model() const { return model_; }
    int truncation() const { return static_cast<int>(parts_.size()) - 1; }

    component_type& operator[](int n) { return parts_.at(static_cast<std::size_t>(n)); }
    const component_type& operator[](int n) const { return parts_.at(static_cast<std::size_t>(n)); }

    /// Adds c * key * q^e in the degree of key; terms above the truncation are dropped.
    void add_term(const key_type& key, int q, const Rational& c) {
        const int n = model_.degree(key);
        if (n <= truncation()) add_to<Model>(parts_[static_cast<std::size_t>(n)], key, q, c);
    }

    bool in_augmentation_ideal() const { return parts_[0].empty(); }

    GradedCharacter truncated(int n) const {
        GradedCharacter r(model_, n);
        for (int k = 0; k <= std::min(n, truncation()); ++k) r[k] = (*this)[k];
        return r;
    }

    GradedCharacter& operator+=(const GradedCharacter& o) {
        combine(o, 1);
        return *this;
    }
    GradedCharacter& operator-=(const GradedCharacter& o) {
        combine(o, -1);
        return *this;
    }
    friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) { return a += b; }
    friend GradedCharacter operator-(GradedCharacter a, const GradedCharacter& b) { return a -= b; }

    friend GradedCharacter operator*(const GradedCharacter& a, const GradedCharacter& b) {
        const int n = std::min(a.truncation(), b.truncation());
        GradedCharacter r(a.model_, n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) {
                if (a[i].empty() || b[j].empty()) continue;
                for (const auto& [t, v] : multiply(a.model_, a[i], b[j])) add_to<Model>(r[i + j], t.first, t.second, v);
            }
        return r;
    }

    GradedCharacter scaled(const Rational& c) const {
        GradedCharacter r(model_, truncation());
        if (sgn(c) == 0) return r;
        for (int n = 0; n <= truncation(); ++n)
            for (const auto& [t, v] : (*this)[n]) r[n].emplace(t, v * c);
        return r;
    }

    /// Multiplies every term by the sl2 character sum_e c_e q^e.
    GradedCharacter times_sl2(const std::map<int, Integer>& sl2) const {
        GradedCharacter r(model_, truncation());
        for (int n = 0; n <= truncation(); ++n)
            for (const auto& [t, v] : (*this)[n])
                for (const auto& [e, c] : sl2) add_to<Model>(r[n], t.first, t.second + e, v * Rational(c));
        return r;
    }

    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) { return a.parts_ == b.parts_; }

private:
    void combine(const GradedCharacter& o, int sign) {
        if (o.truncation() < truncation()) parts_.resize(static_cast<std::size_t>(o.truncation()) + 1);
        for (int n = 0; n <= truncation(); ++n)
            for (const auto& [t, v] : o[n]) add_to<Model>(parts_[static_cast<std::size_t>(n)], t.first, t.second, sign > 0 ? v : Rational(-v));
    }

    Model model_;
    std::vector<component_type> parts_;
};

/// [L(m)] = q^m + q^{m-2} + ... + q^{-m} for even or odd m >= 0.
inline std::map<int, Integer> sl2_irrep(int m) {
    if (m < 0) throw InputError("sl2 highest weight must be non-negative");
    std::map<int, Integer> r;
    for (int e = -m; e <= m; e += 2) r[e] = 1;
    return r;
}

/// ch V placed in degree 1.
template <class Model>
GradedCharacter<Model> generator_character(const Model& model, int truncation) {
    GradedCharacter<Model> r(model, truncation);
    for (const auto& k : model.generator_keys()) r.add_term(k, 0, 1);
    return r;
}

}  // namespace freejord::lambda
