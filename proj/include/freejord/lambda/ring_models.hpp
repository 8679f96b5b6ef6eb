#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/scalar.hpp"
#include "freejord/sym/partition.hpp"

namespace freejord::lambda {

using sym::Partition;

/// Symmetric functions in the power-sum basis p_mu. The basis is multiplicative
/// and Adams operations act by p_k -> p_{mk}, so both stay monomial.
///
/// `variables` is only used when specializing (dimensions, Schur-Weyl).
struct PowerSumModel {
    using key_type = Partition;

    int variables = 1;

    key_type unit() const { return {}; }
    int degree(const key_type& k) const { return k.size(); }

    key_type multiply(const key_type& a, const key_type& b) const {
        std::vector<int> parts;
        parts.reserve(a.parts().size() + b.parts().size());
        std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(parts),
                   std::greater<>());
        return Partition(std::move(parts));
    }

    key_type adams(int m, const key_type& k) const {
        std::vector<int> parts = k.parts();
        for (int& p : parts) p *= m;
        return Partition(std::move(parts));
    }

    /// ch V = p_1.
    std::vector<key_type> generator_keys() const { return {Partition({1})}; }

    /// Value at x_1 = ... = x_d = 1: p_mu -> d^{l(mu)}.
    Integer at_one(const key_type& k) const {
        Integer r = 1;
        for (int i = 0; i < k.length(); ++i) r *= variables;
        return r;
    }

    std::string key_string(const key_type& k) const { return "p[" + k.to_string() + "]"; }
};

/// Polynomials in d commuting variables, keys are exponent vectors.
struct VariableModel {
    using key_type = std::vector<int>;

    int variables = 1;

    key_type unit() const { return key_type(static_cast<std::size_t>(variables), 0); }
    int degree(const key_type& k) const {
        int s = 0;
        for (int e : k) s += e;
        return s;
    }

    key_type multiply(const key_type& a, const key_type& b) const {
        key_type r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }

    key_type adams(int m, const key_type& k) const {
        key_type r = k;
        for (int& e : r) e *= m;
        return r;
    }

    /// ch V = x_1 + ... + x_d.
    std::vector<key_type> generator_keys() const {
        std::vector<key_type> out;
        for (int i = 0; i < variables; ++i) {
            key_type k = unit();
            k[static_cast<std::size_t>(i)] = 1;
            out.push_back(std::move(k));
        }
        return out;
    }

    Integer at_one(const key_type&) const { return 1; }

    std::string key_string(const key_type& k) const {
        std::string s;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i + 1);
            if (k[i] > 1) s += "^" + std::to_string(k[i]);
        }
        return s.empty() ? "1" : s;
    }
};

}  // namespace freejord::lambda
