#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "freejord/errors.hpp"

namespace freejord::sym {

/// Integer partition stored as a weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw InputError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
        }
    }

    /// Sorts a composition (dropping zero parts) into a partition.
    static Partition from_composition(std::vector<int> comp) {
        std::erase(comp, 0);
        for (int c : comp)
            if (c < 0) throw InputError("negative composition part");
        std::sort(comp.begin(), comp.end(), std::greater<>());
        return Partition(std::move(comp));
    }

    /// Parses "3,2,1", "2^2,1^3" or "" (the empty partition).
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::erase(tok, ' ');
            if (tok.empty()) continue;
            const auto caret = tok.find('^');
            try {
                const int part = std::stoi(tok.substr(0, caret));
                const int mult = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
                if (mult < 0) throw InputError("negative multiplicity in partition '" + text + "'");
                parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
            } catch (const std::logic_error&) {
                throw InputError("cannot parse partition '" + text + "'");
            }
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    Partition conjugate() const {
        std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
        return Partition(std::move(c));
    }

    /// Multiplicity of each part size.
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int p : parts_) ++m[p];
        return m;
    }

    /// Comma separated parts, e.g. "3,2,1,1".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s;
    }

    /// Exponential notation as in "3,2^2,1^3".
    std::string to_exponent_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            if (!s.empty()) s += ",";
            s += std::to_string(parts_[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << "(" << p.to_string() << ")"; }

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), (n-2,2), ...
inline std::vector<Partition> partitions(int n) {
    if (n < 0) throw InputError("partitions of a negative integer");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        // rightmost part larger than one
        int k = static_cast<int>(a.size()) - 1;
        int ones = 0;
        while (k >= 0 && a[static_cast<std::size_t>(k)] == 1) {
            ++ones;
            --k;
        }
        if (k < 0) break;
        const int v = --a[static_cast<std::size_t>(k)];
        a.resize(static_cast<std::size_t>(k) + 1);
        int rest = ones + 1;
        while (rest > 0) {
            const int part = std::min(v, rest);
            a.push_back(part);
            rest -= part;
        }
    }
    return out;
}

/// Index of a partition within partitions(n).
inline std::size_t partition_index(const Partition& p) {
    const auto all = partitions(p.size());
    const auto it = std::find(all.begin(), all.end(), p);
    return static_cast<std::size_t>(it - all.begin());
}

/// Number of standard tableaux of shape lambda by the hook length formula.
inline std::int64_t dim_irrep(const Partition& lambda) {
    const int n = lambda.size();
    if (n > 20) throw InputError("dim_irrep supports n <= 20");
    const Partition conj = lambda.conjugate();
    // n! / prod hooks, done with cancellation-safe 128-bit arithmetic
    unsigned __int128 num = 1;
    for (int k = 2; k <= n; ++k) num *= static_cast<unsigned>(k);
    unsigned __int128 den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) den *= static_cast<unsigned>(lambda[i] - j + conj[j] - i - 1);
    return static_cast<std::int64_t>(num / den);
}

/// Order of the centralizer of a permutation with cycle type mu: prod_i i^{m_i} m_i!.
inline std::int64_t centralizer_order(const Partition& mu) {
    std::int64_t z = 1;
    for (const auto& [part, mult] : mu.multiplicities())
        for (int k = 1; k <= mult; ++k) z *= static_cast<std::int64_t>(part) * k;
    return z;
}

}  // namespace freejord::sym
