#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "freejord/errors.hpp"
#include "freejord/kernel/rational_echelon.hpp"

namespace freejord::tkk {

enum class AlgebraKind { jordan, lie };

inline std::string to_string(AlgebraKind k) { return k == AlgebraKind::jordan ? "jordan" : "lie"; }

/// Finite-dimensional (super)algebra by structure constants over Q.
///
/// `degree` and `weight` are optional gradings (empty when absent); `weight` is the
/// eigenvalue of h for an sl2 acting by derivations.
struct AlgebraFD {
    AlgebraKind kind = AlgebraKind::jordan;
    std::vector<std::string> labels;
    std::vector<int> parity;
    std::vector<int> degree;
    std::vector<int> weight;
    std::vector<RationalVector> table;  // product of e_i and e_j at i * dim + j

    AlgebraFD() = default;
    AlgebraFD(AlgebraKind k, std::vector<std::string> names, std::vector<int> parities)
        : kind(k), labels(std::move(names)), parity(std::move(parities)), table(labels.size() * labels.size()) {
        if (parity.size() != labels.size()) throw InputError("AlgebraFD: parity list does not match dimension");
    }

    std::size_t dim() const { return labels.size(); }
    bool graded() const { return !degree.empty(); }

    const RationalVector& product(std::size_t i, std::size_t j) const { return table[i * dim() + j]; }
    void set_product(std::size_t i, std::size_t j, RationalVector v) { table[i * dim() + j] = std::move(v); }

    RationalVector multiply(const RationalVector& a, const RationalVector& b) const {
        RationalAccumulator acc;
        for (const auto& [i, x] : a)
            for (const auto& [j, y] : b) acc.add(product(i, j), x * y);
        return acc.result();
    }

    RationalVector multiply_basis(std::size_t i, const RationalVector& b) const {
        RationalAccumulator acc;
        for (const auto& [j, y] : b) acc.add(product(i, j), y);
        return acc.result();
    }

    /// Parity of a homogeneous vector; throws on mixed parity.
    int parity_of(const RationalVector& v) const {
        if (v.empty()) return 0;
        const int p = parity[v.front().first];
        for (const auto& [k, x] : v)
            if (parity[k] != p) throw InputError("vector is not parity homogeneous");
        return p;
    }
};

inline int koszul(int a, int b) { return (a & b & 1) ? -1 : 1; }

namespace detail {

inline void check_shape(const AlgebraFD& A) {
    const std::size_t n = A.dim();
    if (A.parity.size() != n || A.table.size() != n * n) throw InputError("AlgebraFD: inconsistent sizes");
    if (!A.degree.empty() && A.degree.size() != n) throw InputError("AlgebraFD: degree list does not match dimension");
    if (!A.weight.empty() && A.weight.size() != n) throw InputError("AlgebraFD: weight list does not match dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : A.product(i, j)) {
                if (k >= n) throw InputError("AlgebraFD: structure constant index out of range");
                if (A.parity[k] != (A.parity[i] ^ A.parity[j])) throw InputError("AlgebraFD: product does not respect parity");
                if (A.graded() && A.degree[k] != A.degree[i] + A.degree[j])
                    throw InputError("AlgebraFD: product does not respect the degree");
                if (!A.weight.empty() && A.weight[k] != A.weight[i] + A.weight[j])
                    throw InputError("AlgebraFD: product does not respect the weight");
            }
}

}  // namespace detail

/// Super-commutativity (jordan) or super-antisymmetry (lie) of the table.
inline bool symmetry_holds(const AlgebraFD& A) {
    const int s = A.kind == AlgebraKind::jordan ? 1 : -1;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = i; j < A.dim(); ++j)
            if (A.product(i, j) != scaled(A.product(j, i), s * koszul(A.parity[i], A.parity[j]))) return false;
    return true;
}

struct JacobiFailure {
    std::size_t i, j, k;
};

/// Super-Jacobi on basis triples i <= j <= k; triples whose degree exceeds `max_degree`
/// (when nonnegative) are skipped because every term vanishes there.
inline std::optional<JacobiFailure> jacobi_failure(const AlgebraFD& L, int max_degree = -1) {
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (max_degree >= 0 && L.graded() && L.degree[i] + L.degree[j] > max_degree) continue;
            const auto& ij = L.product(i, j);
            for (std::size_t k = j; k < n; ++k) {
                if (max_degree >= 0 && L.graded() && L.degree[i] + L.degree[j] + L.degree[k] > max_degree) continue;
                // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
                RationalVector lhs = L.multiply_basis(i, L.product(j, k));
                RationalAccumulator rhs;
                for (const auto& [m, x] : ij) rhs.add(L.product(m, k), x);
                rhs.add(L.multiply_basis(j, L.product(i, k)), koszul(L.parity[i], L.parity[j]));
                if (lhs != rhs.result()) return JacobiFailure{i, j, k};
            }
        }
    return std::nullopt;
}

/// Checks the structural axioms of the declared kind; throws InputError on failure.
inline void validate(const AlgebraFD& A) {
    detail::check_shape(A);
    if (!symmetry_holds(A))
        throw InputError(A.kind == AlgebraKind::jordan ? "product is not super-commutative"
                                                       : "bracket is not super-antisymmetric");
    if (A.kind == AlgebraKind::lie)
        if (auto f = jacobi_failure(A))
            throw InputError("super-Jacobi fails on " + A.labels[f->i] + ", " + A.labels[f->j] + ", " + A.labels[f->k]);
}

/// sl2 with basis e, h, f and [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline AlgebraFD sl2_algebra() {
    AlgebraFD L(AlgebraKind::lie, {"e", "h", "f"}, {0, 0, 0});
    L.weight = {2, 0, -2};
    L.set_product(1, 0, {{0, 2}});
    L.set_product(0, 1, {{0, -2}});
    L.set_product(1, 2, {{2, -2}});
    L.set_product(2, 1, {{2, 2}});
    L.set_product(0, 2, {{1, 1}});
    L.set_product(2, 0, {{1, -1}});
    return L;
}

// JSON structure-constant files:
// {"kind": "jordan"|"lie", "dim": n, "labels": [...], "parity": [0/1...], "degree": [...]?,
//  "weight": [...]?, "table": [[i, j, [k, num, den], ...], ...]}
// Numerators and denominators are integers or decimal strings.

namespace detail {

inline Integer json_integer(const nlohmann::json& v) {
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    if (v.is_string()) return Integer(v.get<std::string>());
    throw InputError("structure constant must be an integer or a decimal string");
}

inline nlohmann::json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

}  // namespace detail

inline AlgebraFD algebra_from_json(const nlohmann::json& j) {
    try {
        const auto n = j.at("dim").get<std::size_t>();
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        else
            for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
        std::vector<int> parity(n, 0);
        if (j.contains("parity")) parity = j.at("parity").get<std::vector<int>>();
        if (labels.size() != n || parity.size() != n) throw InputError("labels/parity length differ from dim");
        for (int p : parity)
            if (p != 0 && p != 1) throw InputError("parity entries must be 0 or 1");
        const std::string kind = j.value("kind", "jordan");
        if (kind != "jordan" && kind != "lie") throw InputError("kind must be jordan or lie");
        AlgebraFD A(kind == "jordan" ? AlgebraKind::jordan : AlgebraKind::lie, labels, parity);
        if (j.contains("degree")) A.degree = j.at("degree").get<std::vector<int>>();
        if (j.contains("weight")) A.weight = j.at("weight").get<std::vector<int>>();
        for (const auto& entry : j.at("table")) {
            if (!entry.is_array() || entry.size() < 2) throw InputError("table entry must be [i, j, terms...]");
            const auto a = entry.at(0).get<std::size_t>();
            const auto b = entry.at(1).get<std::size_t>();
            if (a >= n || b >= n) throw InputError("table index out of range");
            RationalAccumulator acc;
            for (std::size_t t = 2; t < entry.size(); ++t) {
                const auto& term = entry.at(t);
                if (!term.is_array() || term.size() != 3) throw InputError("term must be [k, num, den]");
                const auto k = term.at(0).get<std::size_t>();
                if (k >= n) throw InputError("table index out of range");
                const Integer den = detail::json_integer(term.at(2));
                if (den == 0) throw InputError("zero denominator");
                acc.add(static_cast<std::uint32_t>(k), make_rational(detail::json_integer(term.at(1)), den));
            }
            A.set_product(a, b, acc.result());
        }
        detail::check_shape(A);
        return A;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed algebra JSON: ") + e.what());
    }
}

inline nlohmann::json algebra_to_json(const AlgebraFD& A) {
    nlohmann::json j;
    j["kind"] = to_string(A.kind);
    j["dim"] = A.dim();
    j["labels"] = A.labels;
    j["parity"] = A.parity;
    if (A.graded()) j["degree"] = A.degree;
    if (!A.weight.empty()) j["weight"] = A.weight;
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t b = 0; b < A.dim(); ++b) {
            const auto& v = A.product(a, b);
            if (v.empty()) continue;
            nlohmann::json entry = {a, b};
            for (const auto& [k, c] : v)
                entry.push_back({k, detail::integer_json(c.get_num()), detail::integer_json(c.get_den())});
            table.push_back(entry);
        }
    j["table"] = table;
    return j;
}

inline AlgebraFD load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return algebra_from_json(j);
}

}  // namespace freejord::tkk
