#pragma once

#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "freejord/kernel/scalar.hpp"

namespace freejord::series {

/// Laurent polynomial in t with integer coefficients; zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<int, Integer>;

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<const int, Integer>> terms) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }
    static LaurentPoly constant(const Integer& c) { return monomial(0, c); }
    static LaurentPoly monomial(int exponent, const Integer& c) {
        LaurentPoly p;
        p.add_term(exponent, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Coefficient of t^{-1}.
    Integer residue() const { return coefficient(-1); }

    int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    void add_term(int exponent, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const Integer& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& kv : terms_) kv.second *= s;
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Integer& s) { return a *= s; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Sum of coefficients (the value at t = 1).
    Integer at_one() const {
        Integer s = 0;
        for (const auto& kv : terms_) s += kv.second;
        return s;
    }

    /// Human readable form, highest exponent first: "-1218t^9 + 2t^-1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Integer c = it->second;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            if (c < 0) c = -c;
            first = false;
            const int e = it->first;
            if (e == 0 || c != 1) os << c.get_str();
            if (e == 1) os << "t";
            else if (e != 0) os << "t^" << e;
        }
        return os.str();
    }

private:
    Terms terms_;
};

/// Coefficient of t^{-1}.
inline Integer residue(const LaurentPoly& f) { return f.residue(); }

}  // namespace freejord::series
