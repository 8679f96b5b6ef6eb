#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "freejord/errors.hpp"

namespace freejord {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den (lowest terms, positive denominator).
inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Prime pool above 2^30; all fit in 31 bits so products fit in 64 bits.
inline constexpr std::array<std::uint32_t, 6> kDefaultPrimes = {
    2147483647u, 2147483629u, 2147483587u, 1073741827u, 1073741831u, 1073741833u};

/// The field with p elements, p a prime below 2^31. Elements are residues in [0, p).
struct PrimeField {
    using value_type = std::uint32_t;

    std::uint32_t p;

    explicit PrimeField(std::uint32_t prime) : p(prime) {
        if (prime < 2 || prime >= (1u << 31)) throw InputError("prime must lie in [2, 2^31)");
    }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }

    value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p);
    }
    value_type pow(value_type a, std::uint64_t e) const {
        value_type r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    value_type inv(value_type a) const {
        if (a == 0) throw InputError("inverse of zero in prime field");
        return pow(a, p - 2);
    }

    value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<value_type>(r);
    }
    value_type from_integer(const Integer& v) const {
        Integer r = v % p;
        if (r < 0) r += p;
        return static_cast<value_type>(r.get_ui());
    }
    /// Reduction of a rational; the denominator must be a unit mod p.
    value_type from_rational(const Rational& q) const {
        value_type den = from_integer(q.get_den());
        if (den == 0) throw InputError("denominator divisible by prime " + std::to_string(p));
        return mul(from_integer(q.get_num()), inv(den));
    }

    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

/// The rational numbers with GMP arithmetic.
struct RationalField {
    using value_type = Rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (sgn(a) == 0) throw InputError("inverse of zero rational");
        return 1 / a;
    }
    value_type from_int(long long v) const { return Rational(static_cast<long>(v)); }
    value_type from_integer(const Integer& v) const { return Rational(v); }
    value_type from_rational(const Rational& q) const { return q; }

    std::string name() const { return "QQ"; }
};

}  // namespace freejord
