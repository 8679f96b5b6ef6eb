#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "freejord/app/reference_data.hpp"
#include "freejord/clifton/clifton.hpp"
#include "freejord/errors.hpp"
#include "freejord/lambda/lambda_ops.hpp"
#include "freejord/lambda/ring_models.hpp"
#include "freejord/operad/hentzel.hpp"
#include "freejord/operad/multidegree.hpp"
#include "freejord/operad/naive.hpp"
#include "freejord/series/predictor.hpp"
#include "freejord/special/special_jordan.hpp"
#include "freejord/sym/characters.hpp"
#include "freejord/tkk/tkk.hpp"

namespace freejord::app {

using sym::Partition;

/// One verified value. `source` says where the expected value comes from:
/// "published", "closed form", "definition" or "cross-check".
struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    std::string source;
    bool pass = false;
    double seconds = 0;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
};

struct SuiteOptions {
    int max_degree = -1;       // suite specific; -1 keeps the default
    bool long_running = false;
    unsigned threads = 0;
    std::string cache_dir;
};

inline nlohmann::json to_json(const Check& c) {
    return {{"name", c.name},     {"expected", c.expected}, {"computed", c.computed},
            {"source", c.source}, {"pass", c.pass},         {"seconds", c.seconds}};
}

inline nlohmann::json to_json(const SuiteResult& s) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : s.checks) checks.push_back(to_json(c));
    return {{"suite", s.suite}, {"pass", s.pass()}, {"failures", s.failures()}, {"seconds", s.seconds}, {"checks", checks}};
}

namespace detail {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

/// Runs `compute`, compares its rendering with `expected`, records time; exceptions fail the check.
inline void check(SuiteResult& r, const std::string& name, const std::string& expected, const std::string& source,
                  const std::function<std::string()>& compute) {
    Check c{name, expected, "", source, false, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.computed = compute();
        c.pass = c.computed == expected;
    } catch (const InfeasibleError& e) {
        c.computed = std::string("refused: ") + e.what() + " (estimate " + std::to_string(e.estimate()) + ")";
    } catch (const std::exception& e) {
        c.computed = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.checks.push_back(std::move(c));
}

inline std::string decomposition_string(const std::map<Partition, long>& m) {
    std::vector<std::string> parts;
    for (const auto& [lam, c] : m)
        if (c) parts.push_back("[" + lam.to_string() + "]:" + std::to_string(c));
    return join(parts, " ");
}

inline std::map<Partition, long> published_table(int n) {
    std::map<Partition, long> m;
    for (const auto& [s, c] : jord_tables().at(static_cast<std::size_t>(n - 1))) m[Partition::parse(s)] = c;
    return m;
}

inline std::map<Partition, long> module_map(const operad::SnModule& mod) {
    std::map<Partition, long> m;
    for (const auto& r : mod.parts)
        if (r.multiplicity) m[r.lambda] = static_cast<long>(r.multiplicity);
    return m;
}

inline operad::HentzelOptions hentzel_options(const SuiteOptions& o) {
    operad::HentzelOptions h;
    h.threads = o.threads;
    if (!o.cache_dir.empty()) h.cache_dir = o.cache_dir + "/ranks";
    return h;
}

inline std::string integer_list(const std::vector<Integer>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.get_str());
    return join(s);
}

template <class T>
std::vector<T> prefix(const std::vector<T>& v, std::size_t n) {
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

}  // namespace detail

inline SuiteResult suite_counterexample(const SuiteOptions&) {
    SuiteResult r{"counterexample", {}, 0};
    const auto predicted = series::predict_dims(2, 19);
    detail::check(r, "predicted two-generator dims, degrees 1..18", detail::join(detail::prefix(kTwoGenDims, 18)),
                  "published", [&] { return detail::integer_list(detail::prefix(predicted.dims, 18)); });
    detail::check(r, "predicted two-generator dim, degree 19", std::to_string(kPredictedTwoGenA19), "published",
                  [&] { return predicted.at(19).get_str(); });
    series::DimSequence actual{2, {}};
    for (long v : kTwoGenDims) actual.dims.emplace_back(v);
    const auto rep = series::check_sequence(2, actual);
    detail::check(r, "residues of the 20-term sequence, degrees 1..18", detail::join(std::vector<int>(18, 0)),
                  "published", [&] { return detail::integer_list(detail::prefix(rep.residues, 18)); });
    detail::check(r, "degree 19 residue", "degree 19 residue = 2, predicted 262658 vs actual 262656", "published", [&] {
        return "degree 19 residue = " + rep.residues.at(18).get_str() + ", predicted " + predicted.at(19).get_str() +
               " vs actual " + std::to_string(kTwoGenDims[18]);
    });
    const auto s = series::conjecture_series(2, series::DimSequence{2, detail::prefix(actual.dims, 19)}, 19);
    for (const auto& [e, v] : kZ19Monomials)
        detail::check(r, "z^19 coefficient of t^" + std::to_string(e), std::to_string(v), "published",
                      [&, e = e] { return s[19].coefficient(e).get_str(); });
    return r;
}

inline SuiteResult suite_tables(const SuiteOptions& o) {
    SuiteResult r{"tables", {}, 0};
    const int N = o.max_degree > 0 ? std::min(o.max_degree, 10) : 10;
    const auto p = lambda::km_prediction(lambda::PowerSumModel{N}, N);
    for (int n = 1; n <= N; ++n) {
        detail::check(r, "predicted Jord(" + std::to_string(n) + ") decomposition",
                      detail::decomposition_string(detail::published_table(n)), "published", [&] {
                          std::map<Partition, long> m;
                          for (const auto& [lam, c] : lambda::schur_decompose(p.a, n)) m[lam] = c.get_si();
                          return detail::decomposition_string(m);
                      });
        detail::check(r, "predicted dim Jord(" + std::to_string(n) + ")", std::to_string(kJordDims[static_cast<std::size_t>(n - 1)]),
                      "published", [&] {
                          Integer d = 0;
                          for (const auto& [lam, c] : lambda::schur_decompose(p.a, n)) d += c * sym::dim_irrep(lam);
                          return d.get_str();
                      });
    }
    return r;
}

inline SuiteResult suite_pipelines(const SuiteOptions& o) {
    SuiteResult r{"pipelines", {}, 0};
    const int N = o.max_degree > 0 ? o.max_degree : 14;
    const auto universal = lambda::km_prediction(lambda::PowerSumModel{N}, N);
    for (int d = 1; d <= 3; ++d) {
        const auto series = series::predict_dims(d, N);
        const std::string expected = detail::integer_list(series.dims);
        detail::check(r, "character dims in " + std::to_string(d) + " variables vs series, N = " + std::to_string(N), expected,
                      "cross-check", [&] {
                          return detail::integer_list(lambda::dims_from_character(lambda::km_prediction(lambda::VariableModel{d}, N).a).dims);
                      });
        detail::check(r, "Schur-Weyl dims for d = " + std::to_string(d) + " vs series, N = " + std::to_string(N), expected,
                      "cross-check", [&] {
                          lambda::GradedCharacter<lambda::PowerSumModel> spec(lambda::PowerSumModel{d}, N);
                          spec += universal.a;
                          return detail::integer_list(lambda::dims_from_character(spec).dims);
                      });
    }
    return r;
}

inline SuiteResult suite_operad(const SuiteOptions& o) {
    SuiteResult r{"operad", {}, 0};
    const int N = o.max_degree > 0 ? std::min(o.max_degree, 10) : (o.long_running ? 8 : 7);
    const auto opts = detail::hentzel_options(o);
    for (int n = 1; n <= N; ++n) {
        operad::SnModule mod;
        detail::check(r, "Jord(" + std::to_string(n) + ") decomposition", detail::decomposition_string(detail::published_table(n)),
                      "published", [&] {
                          mod = operad::jord_module(n, opts);
                          return detail::decomposition_string(detail::module_map(mod));
                      });
        detail::check(r, "dim Jord(" + std::to_string(n) + ")", std::to_string(kJordDims[static_cast<std::size_t>(n - 1)]),
                      "published", [&] { return mod.dimension.get_str(); });
        if (n <= 6)
            detail::check(r, "naive dim Jord(" + std::to_string(n) + ") vs sum of mult * dim", mod.dimension.get_str(),
                          "cross-check", [&] { return std::to_string(operad::naive_dim(n)); });
    }
    return r;
}

inline SuiteResult suite_two_gen(const SuiteOptions& o) {
    SuiteResult r{"two-gen", {}, 0};
    const int span_max = o.max_degree > 0 ? std::min(o.max_degree, special::kJordanSpanMaxDegree) : 12;
    std::vector<std::string> rev;
    detail::check(r, "reversible dims, degrees 1..20", detail::join(kTwoGenDims), "published", [&] {
        std::vector<std::string> v;
        for (int n = 1; n <= 20; ++n) v.push_back(special::reversible_dim(n).get_str());
        return detail::join(v);
    });
    detail::check(r, "reversible dim, degree 19", "262656", "published", [] { return special::reversible_dim(19).get_str(); });
    detail::check(r, "Jordan span = reversible dims, degrees 1..." + std::to_string(span_max), "", "closed form", [&] {
        std::vector<std::string> bad;
        for (int n = 1; n <= span_max; ++n)
            if (special::jordan_span_dim(n) != special::reversible_dim(n)) bad.push_back(std::to_string(n));
        return bad.empty() ? std::string() : "mismatch in degrees " + detail::join(bad);
    });
    detail::check(r, "B dims, degrees 1..20", detail::join(kTwoGenBDims), "published", [] {
        std::vector<std::string> v;
        for (int n = 1; n <= 20; ++n) v.push_back(special::b_dim_two_gen(n).get_str());
        return detail::join(v);
    });
    const auto p = lambda::km_prediction(lambda::VariableModel{2}, 20);
    const auto pb = lambda::dims_from_character(p.b);
    detail::check(r, "predicted b dim, degree 20", std::to_string(kPredictedTwoGenB20), "published",
                  [&] { return pb.at(20).get_str(); });
    detail::check(r, "b mismatch at degree 20", "3", "published",
                  [&] { return Integer(pb.at(20) - special::b_dim_two_gen(20)).get_str(); });
    return r;
}

namespace detail {

inline Rational trace(const DenseMatrix<RationalField>& m) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

inline tkk::AlgebraFD odd_line() {
    tkk::AlgebraFD J(tkk::AlgebraKind::jordan, {"x"}, {1});
    return J;
}

inline std::string weight_list(const std::vector<std::map<int, std::size_t>>& d) {
    std::vector<std::string> out;
    for (const auto& m : d) {
        std::vector<std::string> w;
        for (const auto& [hw, mult] : m)
            for (std::size_t i = 0; i < mult; ++i) w.push_back(std::to_string(hw));
        out.push_back("{" + join(w) + "}");
    }
    return join(out);
}

}  // namespace detail

inline SuiteResult suite_homology(const SuiteOptions& o) {
    SuiteResult r{"homology", {}, 0};
    const int kmax = o.max_degree > 0 ? o.max_degree : 5;
    tkk::HomologyResult h;
    std::vector<std::string> dims, weights;
    for (int p = 0; p <= kmax; ++p) {
        dims.push_back(std::to_string(2 * p + 1));
        weights.push_back("{" + std::to_string(2 * p) + "}");
    }
    detail::check(r, "Heisenberg superalgebra homology dims, k = 0.." + std::to_string(kmax), detail::join(dims), "published", [&] {
        h = tkk::ce_homology(tkk::tag(detail::odd_line()).lie, kmax, {.threads = o.threads});
        return detail::join(h.dims);
    });
    detail::check(r, "Heisenberg superalgebra sl2 highest weights", detail::join(weights), "published",
                  [&] { return detail::weight_list(tkk::sl2_decompose(h)); });
    detail::check(r, "sl2 homology dims", "1,0,0,1", "closed form",
                  [&] { return detail::join(tkk::ce_homology(tkk::sl2_algebra(), 3).dims); });
    return r;
}

inline SuiteResult suite_structure(const SuiteOptions& o) {
    SuiteResult r{"structure", {}, 0};
    const int N = o.max_degree > 0 ? o.max_degree : 5;
    detail::check(r, "super-Jacobi for TAG of Jord(x1,x2) truncated at degree " + std::to_string(N), "holds", "definition", [&] {
        const auto T = tkk::tag(tkk::truncated_free_jordan({0, 0}, N), {.max_degree = N, .verify = false});
        if (!tkk::symmetry_holds(T.lie)) return std::string("antisymmetry fails");
        if (auto f = tkk::jacobi_failure(T.lie, N)) return "fails on " + T.lie.labels[f->i] + ", " + T.lie.labels[f->j] + ", " + T.lie.labels[f->k];
        return std::string("holds");
    });
    detail::check(r, "derivation identities on random triples", "holds", "definition", [&] {
        const auto J = tkk::truncated_free_jordan({0, 0}, 6);
        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> coeff(-3, 3);
        auto random = [&] {
            RationalVector v;
            for (std::uint32_t i = 0; i < J.dim(); ++i)
                if (const int c = coeff(rng)) v.emplace_back(i, Rational(c));
            return v;
        };
        for (int t = 0; t < 8; ++t) {
            const auto a = random(), b = random(), c = random(), d = random(), x = random();
            if (!axpy(tkk::inner_apply(J, a, b, x), 1, tkk::inner_apply(J, b, a, x)).empty())
                return std::string("D_{a,b} + D_{b,a} != 0");
            RationalVector s = tkk::inner_apply(J, J.multiply(a, b), c, x);
            s = axpy(s, 1, tkk::inner_apply(J, J.multiply(b, c), a, x));
            s = axpy(s, 1, tkk::inner_apply(J, J.multiply(c, a), b, x));
            if (!s.empty()) return std::string("D_{ab,c} + D_{bc,a} + D_{ca,b} != 0");
            // [D, D_{a,b}] = D_{D a, b} + D_{a, D b} for D = D_{c,d}
            auto D = [&](const RationalVector& y) { return tkk::inner_apply(J, c, d, y); };
            RationalVector lhs = axpy(D(tkk::inner_apply(J, a, b, x)), -1, tkk::inner_apply(J, a, b, D(x)));
            RationalVector rhs = axpy(tkk::inner_apply(J, D(a), b, x), 1, tkk::inner_apply(J, a, D(b), x));
            if (lhs != rhs) return std::string("[D, D_{a,b}] != D_{Da,b} + D_{a,Db}");
        }
        return std::string("holds");
    });
    detail::check(r, "lambda operations are multiplicative", "holds", "definition", [&] {
        using VM = lambda::VariableModel;
        std::mt19937 rng(17);
        for (int trial = 0; trial < 6; ++trial) {
            lambda::GradedCharacter<VM> X(VM{2}, 6), Y(VM{2}, 6);
            for (int k = 0; k < 4; ++k) {
                const int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
                if (a + b == 0) continue;
                const int q = 2 * static_cast<int>(rng() % 3) - 2;
                X.add_term({a, b}, q, static_cast<long>(rng() % 5) - 2);
                Y.add_term({b, a + 1}, -q, static_cast<long>(rng() % 5) - 2);
            }
            if (!(lambda::lambda_op(X + Y) == lambda::lambda_op(X) * lambda::lambda_op(Y))) return std::string("fails");
        }
        return std::string("holds");
    });
    detail::check(r, "irreducible matrices: trace = character, n <= 6, every permutation", "holds", "definition", [] {
        for (int n = 1; n <= 6; ++n)
            for (const auto& lam : sym::partitions(n))
                for (const auto& sigma : sym::all_permutations(n))
                    if (detail::trace(clifton::rep_matrix(lam, sigma).matrix) != sym::character(lam, sym::cycle_type(sigma)))
                        return "fails for " + lam.to_string();
        return std::string("holds");
    });
    // rho(a s) = rho(a) rho(s) for every a and every adjacent transposition s implies
    // rho(ab) = rho(a) rho(b) for all pairs, since the s generate S_n
    detail::check(r, "irreducible matrices are homomorphisms, n <= 6, exhaustive", "holds", "definition", [] {
        for (int n = 1; n <= 6; ++n)
            for (const auto& lam : sym::partitions(n)) {
                std::vector<DenseMatrix<RationalField>> gens;
                for (int i = 0; i + 1 < n; ++i) gens.push_back(clifton::rep_matrix(lam, sym::transposition(n, i, i + 1)).matrix);
                for (const auto& a : sym::all_permutations(n)) {
                    const auto ra = clifton::rep_matrix(lam, a).matrix;
                    for (int i = 0; i + 1 < n; ++i)
                        if (clifton::rep_matrix(lam, sym::compose(a, sym::transposition(n, i, i + 1))).matrix !=
                            ra * gens[static_cast<std::size_t>(i)])
                            return "fails for " + lam.to_string();
                }
            }
        return std::string("holds");
    });
    return r;
}

inline SuiteResult suite_effectivity(const SuiteOptions& o) {
    SuiteResult r{"effectivity", {}, 0};
    const int N = o.max_degree > 0 ? o.max_degree : 14;
    const auto p = lambda::km_prediction(lambda::PowerSumModel{N}, N);
    for (int n = 1; n <= N; ++n)
        detail::check(r, "predicted class a is effective in degree " + std::to_string(n), "effective", "published", [&] {
            const auto rep = lambda::effectivity_check(p.a, n);
            if (rep.effective) return std::string("effective");
            std::vector<std::string> bad;
            for (const auto& lam : rep.offending) bad.push_back("[" + lam.to_string() + "]");
            return "negative on " + detail::join(bad, " ");
        });
    return r;
}

inline SuiteResult suite_extended(const SuiteOptions& o) {
    SuiteResult r{"extended", {}, 0};
    for (const auto& [d, v] : kMultidegreeDims)
        detail::check(r, "multidegree " + operad::to_string(d), std::to_string(v), "published",
                      [&, d = d] { return std::to_string(operad::multidegree_dim(d)); });
    const auto opts = detail::hentzel_options(o);
    for (int n : {9, 10}) {
        operad::SnModule mod;
        detail::check(r, "Jord(" + std::to_string(n) + ") decomposition", detail::decomposition_string(detail::published_table(n)),
                      "published", [&] {
                          mod = operad::jord_module(n, opts);
                          return detail::decomposition_string(detail::module_map(mod));
                      });
    }
    return r;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s = {
        {"counterexample", suite_counterexample}, {"tables", suite_tables},       {"pipelines", suite_pipelines},
        {"operad", suite_operad},                 {"two-gen", suite_two_gen},     {"homology", suite_homology},
        {"structure", suite_structure},           {"effectivity", suite_effectivity}, {"extended", suite_extended},
    };
    return s;
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
    for (const auto& [n, fn] : suites())
        if (n == name) {
            const auto t0 = std::chrono::steady_clock::now();
            SuiteResult r = fn(o);
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return r;
        }
    throw InputError("unknown suite '" + name + "'");
}

}  // namespace freejord::app
