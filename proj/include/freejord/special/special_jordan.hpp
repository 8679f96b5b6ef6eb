#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "freejord/errors.hpp"
#include "freejord/kernel/dense_matrix.hpp"
#include "freejord/kernel/scalar.hpp"
#include "freejord/operad/normal.hpp"

namespace freejord::special {

/// A word in two letters, stored 0-based; printed as 1s and 2s.
using Word = std::vector<int>;

inline Word reversal(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline std::string to_string(const Word& w) {
    std::string s;
    for (int x : w) s += static_cast<char>('1' + x);
    return s;
}

inline Word parse_word(const std::string& s) {
    Word w;
    for (char c : s) {
        if (c != '1' && c != '2') throw InputError("word letters must be 1 or 2: '" + s + "'");
        w.push_back(c - '1');
    }
    return w;
}

namespace detail {

/// Bit i of the mask is the letter at position i.
inline std::uint32_t reverse_mask(std::uint32_t w, int n) {
    std::uint32_t r = 0;
    for (int i = 0; i < n; ++i)
        if (w >> i & 1u) r |= 1u << (n - 1 - i);
    return r;
}

inline Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace detail

/// Dimension of the reversal-fixed subspace of the degree-n free associative algebra, (2^n + 2^ceil(n/2)) / 2.
inline Integer reversible_dim(int n) {
    if (n < 1) throw InputError("reversible_dim: n must be positive");
    return (detail::pow2(static_cast<unsigned long>(n)) + detail::pow2(static_cast<unsigned long>((n + 1) / 2))) / 2;
}

/// The same dimension from an explicit basis w + rev(w); every basis vector is checked fixed.
inline std::size_t reversible_dim_explicit(int n) {
    if (n < 1 || n > 24) throw InputError("reversible_dim_explicit: need 1 <= n <= 24");
    std::size_t count = 0;
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
        const std::uint32_t r = detail::reverse_mask(w, n);
        if (r < w) continue;
        // the vector e_w + e_r is fixed because reversal swaps its two entries
        if (detail::reverse_mask(r, n) != w) throw InternalError("reversal is not an involution");
        ++count;
    }
    return count;
}

inline Integer necklace_count(int n) {
    if (n < 1) throw InputError("necklace_count: n must be positive");
    Integer s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int phi = 0;
        for (int k = 1; k <= d; ++k)
            if (std::gcd(k, d) == 1) ++phi;
        s += Integer(phi) * detail::pow2(static_cast<unsigned long>(n / d));
    }
    return s / n;
}

inline Integer bracelet_count(int n) {
    const Integer N = necklace_count(n);
    if (n % 2) return (N + detail::pow2(static_cast<unsigned long>((n + 1) / 2))) / 2;
    return (2 * N + 3 * detail::pow2(static_cast<unsigned long>(n / 2))) / 4;
}

/// 2^n - dim Jord(x1,x2)_n - necklaces + bracelets, with dim Jord(x1,x2)_n = reversible_dim(n).
inline Integer b_dim_two_gen(int n) {
    return detail::pow2(static_cast<unsigned long>(n)) - reversible_dim(n) - necklace_count(n) + bracelet_count(n);
}

inline constexpr int kJordanSpanMaxDegree = 14;

namespace detail {

/// Element of the free associative algebra on two letters, one length, mod p.
struct Poly {
    int len = 0;
    std::map<std::uint32_t, std::uint32_t> terms;
};

/// 2 a o b = ab + ba; the factor 2 does not change spans.
inline Poly jordan2(const Poly& a, const Poly& b, const PrimeField& F) {
    Poly r;
    r.len = a.len + b.len;
    for (const auto& [u, x] : a.terms)
        for (const auto& [v, y] : b.terms) {
            const std::uint32_t c = F.mul(x, y);
            auto& s1 = r.terms[u | (v << a.len)];
            s1 = F.add(s1, c);
            auto& s2 = r.terms[v | (u << b.len)];
            s2 = F.add(s2, c);
        }
    for (auto it = r.terms.begin(); it != r.terms.end();)
        it = it->second ? std::next(it) : r.terms.erase(it);
    return r;
}

inline Poly letter(int x) {
    Poly p;
    p.len = 1;
    p.terms[static_cast<std::uint32_t>(x)] = 1;
    return p;
}

}  // namespace detail

/// Dimension of the span in degree n of all Jordan monomials in x1, x2 under the symmetrized
/// product. Computed per multidegree over GF(p); every component stops once it reaches the
/// number of reversible words of that content, which bounds it from above.
inline Integer jordan_span_dim(int n, std::uint32_t p = kDefaultPrimes[0], int max_degree = kJordanSpanMaxDegree) {
    if (n < 1) throw InputError("jordan_span_dim: n must be positive");
    if (n > max_degree)
        throw InfeasibleError("jordan_span_dim refused above degree " + std::to_string(max_degree),
                              static_cast<double>(1u << std::min(n, 30)));
    const PrimeField F(p);
    const auto types = operad::normal_types(n);
    Integer total = 0;
    for (int a = 0; a <= n; ++a) {
        // reversible words with a copies of the second letter, as orbit columns
        std::map<std::uint32_t, std::size_t> column;
        for (std::uint32_t w = 0; w < (1u << n); ++w) {
            if (std::popcount(w) != a) continue;
            const std::uint32_t r = detail::reverse_mask(w, n);
            if (r >= w) column.emplace(w, column.size());
        }
        auto orbit = [&](std::uint32_t w) {
            const std::uint32_t r = detail::reverse_mask(w, n);
            return column.at(std::min(w, r));
        };
        IncrementalEchelon<PrimeField> span(F, column.size());
        Word letters(static_cast<std::size_t>(n - a), 0);
        letters.insert(letters.end(), static_cast<std::size_t>(a), 1);
        for (std::size_t s = 0; s < types.size() && !span.full(); ++s) {
            std::map<std::vector<int>, bool> seen;
            auto w = letters;
            do {
                const auto m = operad::canonical(operad::NormalMonomial{s, w}, types[s]);
                if (!seen.emplace(m.labels, true).second) continue;
                const auto& L = m.labels;
                detail::Poly cur = n == 1 ? detail::letter(L[0]) : detail::jordan2(detail::letter(L[0]), detail::letter(L[1]), F);
                std::size_t pos = 2;
                for (int d : types[s].ops) {
                    const detail::Poly f = d == 1 ? detail::letter(L[pos]) : detail::jordan2(detail::letter(L[pos]), detail::letter(L[pos + 1]), F);
                    cur = detail::jordan2(cur, f, F);
                    pos += static_cast<std::size_t>(d);
                }
                std::vector<std::uint32_t> v(column.size(), 0);
                for (const auto& [word, c] : cur.terms) {
                    // symmetric elements carry equal coefficients on w and rev(w)
                    const std::uint32_t r = detail::reverse_mask(word, n);
                    if (word <= r) v[orbit(word)] = c;
                }
                span.add(std::move(v));
            } while (!span.full() && std::next_permutation(w.begin(), w.end()));
        }
        total += Integer(static_cast<unsigned long>(span.rank()));
    }
    return total;
}

}  // namespace freejord::special
