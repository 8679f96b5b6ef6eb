#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "freejord/errors.hpp"

namespace freejord::sym {

/// Permutation of {0..n-1} in one-line notation: p[i] is the image of i.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

/// (a * b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw InputError("composing permutations of different degrees");
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
    return r;
}

inline Permutation inverse(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return r;
}

inline int sign(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

/// Transposition of i and j in S_n.
inline Permutation transposition(int n, int i, int j) {
    Permutation p = identity_permutation(n);
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    return p;
}

template <class Rng>
Permutation random_permutation(int n, Rng& rng) {
    Permutation p = identity_permutation(n);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = identity_permutation(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Parses one-based one-line notation "2 1 3" or "2,1,3".
inline Permutation parse_permutation(const std::string& text) {
    Permutation p;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        try {
            p.push_back(std::stoi(tok) - 1);
        } catch (const std::logic_error&) {
            throw InputError("cannot parse permutation '" + text + "'");
        }
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') flush();
        else tok += c;
    }
    flush();
    if (!is_permutation(p)) throw InputError("not a permutation: '" + text + "'");
    return p;
}

}  // namespace freejord::sym
