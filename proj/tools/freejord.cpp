// freejord: command line front end for the prediction, operad, special Jordan,
// TAG/homology and verification modules.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "freejord/app/cache.hpp"
#include "freejord/app/suites.hpp"
#include "freejord/version.hpp"

using namespace freejord;
using nlohmann::json;

namespace {

enum class Format { text, json, csv };

/// Exit statuses.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kRefused = 3;

/// Result of one subcommand: a JSON document plus a flat table for text and CSV output.
struct Output {
    json doc;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;  // text mode only, printed after the table
    bool ok = true;
};

struct Globals {
    bool json = false;
    bool csv = false;
    std::string cache_dir = app::default_cache_dir();
    unsigned threads = 0;
    std::vector<std::uint32_t> primes;
};

json integer(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void print(const Output& out, Format fmt) {
    if (fmt == Format::json) {
        std::cout << out.doc.dump(2) << "\n";
        return;
    }
    if (fmt == Format::csv) {
        for (std::size_t i = 0; i < out.columns.size(); ++i) std::cout << (i ? "," : "") << csv_field(out.columns[i]);
        std::cout << "\n";
        for (const auto& r : out.rows) {
            for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csv_field(r[i]);
            std::cout << "\n";
        }
        return;
    }
    std::vector<std::size_t> width(out.columns.size());
    for (std::size_t i = 0; i < out.columns.size(); ++i) width[i] = out.columns[i].size();
    for (const auto& r : out.rows)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::cout << (i ? "  " : "");
            if (i + 1 < r.size()) std::cout << std::left << std::setw(static_cast<int>(width[i]));
            std::cout << r[i];
        }
        std::cout << "\n";
    };
    if (!out.columns.empty()) line(out.columns);
    for (const auto& r : out.rows) line(r);
    for (const auto& n : out.notes) std::cout << n << "\n";
}

std::vector<Integer> read_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    // one term per line ("a" or "n a", '#' comments), or comma/space separated terms
    std::vector<Integer> terms;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const bool indexed = tok.size() == 2 && tok[0] == std::to_string(terms.size() + 1);
        for (std::size_t i = indexed ? 1 : 0; i < tok.size(); ++i) {
            Integer z;
            if (z.set_str(tok[i], 10) != 0) throw InputError("not an integer: '" + tok[i] + "' in " + path);
            terms.push_back(z);
        }
    }
    if (terms.empty()) throw InputError(path + " holds no terms");
    return terms;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> v;
    std::string t;
    std::istringstream in(s);
    while (std::getline(in, t, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(t, &used));
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw InputError(std::string("bad ") + what + " '" + s + "'");
        }
    }
    if (v.empty()) throw InputError(std::string("empty ") + what);
    return v;
}

// predict-dims

struct PredictDimsArgs {
    int generators = 2;
    int degree = 20;
    std::string check_file;
};

Output predict_dims(const PredictDimsArgs& a) {
    if (a.generators < 1) throw InputError("--generators must be positive");
    if (a.degree < 1) throw InputError("--degree must be positive");
    Output out;
    const auto pred = series::predict_dims(a.generators, a.degree);
    out.doc = {{"command", "predict-dims"}, {"generators", a.generators}, {"degree", a.degree}};
    json dims = json::array();
    for (const auto& d : pred.dims) dims.push_back(integer(d));
    out.doc["dims"] = dims;
    out.columns = {"n", "predicted"};
    if (a.check_file.empty()) {
        for (int n = 1; n <= a.degree; ++n) out.rows.push_back({std::to_string(n), pred.at(n).get_str()});
        return out;
    }
    series::DimSequence actual{a.generators, read_sequence(a.check_file)};
    if (actual.length() > a.degree) actual.dims.resize(static_cast<std::size_t>(a.degree));
    const auto rep = series::check_sequence(a.generators, actual);
    out.columns = {"n", "predicted", "actual", "residue"};
    json residues = json::array();
    for (int n = 1; n <= actual.length(); ++n) {
        residues.push_back(integer(rep.residues.at(static_cast<std::size_t>(n - 1))));
        out.rows.push_back({std::to_string(n), pred.at(n).get_str(), actual.at(n).get_str(),
                            rep.residues.at(static_cast<std::size_t>(n - 1)).get_str()});
    }
    out.doc["residues"] = residues;
    out.doc["first_nonzero"] = rep.first_nonzero ? json(*rep.first_nonzero) : json(nullptr);
    out.ok = !rep.first_nonzero;
    if (rep.first_nonzero) {
        const int n = *rep.first_nonzero;
        out.notes.push_back("first nonzero residue in degree " + std::to_string(n) + ": " +
                            rep.residues.at(static_cast<std::size_t>(n - 1)).get_str() + ", predicted " +
                            pred.at(n).get_str() + " vs actual " + actual.at(n).get_str());
    } else {
        out.notes.push_back("all residues vanish through degree " + std::to_string(actual.length()));
    }
    return out;
}

// predict-modules

struct PredictModulesArgs {
    int degree = 8;
    int variables = 0;
};

Output predict_modules(const PredictModulesArgs& a) {
    if (a.degree < 1) throw InputError("--degree must be positive");
    if (a.variables < 0) throw InputError("--variables must be nonnegative");
    Output out;
    out.doc = {{"command", "predict-modules"}, {"degree", a.degree}};
    if (a.variables > 0) {
        const auto p = lambda::km_prediction(lambda::VariableModel{a.variables}, a.degree);
        const auto da = lambda::dims_from_character(p.a), db = lambda::dims_from_character(p.b);
        out.doc["variables"] = a.variables;
        json dims = json::array();
        out.columns = {"n", "dim_a", "dim_b"};
        for (int n = 1; n <= a.degree; ++n) {
            dims.push_back({{"n", n}, {"a", integer(da.at(n))}, {"b", integer(db.at(n))}});
            out.rows.push_back({std::to_string(n), da.at(n).get_str(), db.at(n).get_str()});
        }
        out.doc["dims"] = dims;
        return out;
    }
    const auto p = lambda::km_prediction(lambda::PowerSumModel{a.degree}, a.degree);
    json degrees = json::array();
    out.columns = {"n", "class", "partition", "multiplicity"};
    for (int n = 1; n <= a.degree; ++n) {
        json entry{{"n", n}};
        for (const auto& [name, X] : {std::pair{"a", &p.a}, std::pair{"b", &p.b}}) {
            json parts = json::array();
            Integer dim = 0;
            for (const auto& [lam, c] : lambda::schur_decompose(*X, n)) {
                parts.push_back({{"partition", lam.to_exponent_string()}, {"multiplicity", integer(c)}});
                out.rows.push_back({std::to_string(n), name, lam.to_exponent_string(), c.get_str()});
                dim += c * sym::dim_irrep(lam);
            }
            entry[name] = {{"modules", parts}, {"dim", integer(dim)}};
        }
        const auto eff = lambda::effectivity_check(p.a, n);
        entry["a_effective"] = eff.effective;
        if (!eff.effective) out.notes.push_back("class a is not effective in degree " + std::to_string(n));
        degrees.push_back(entry);
    }
    out.doc["degrees"] = degrees;
    return out;
}

// operad

struct OperadArgs {
    int degree = 0;
    std::string partition;
    bool no_prune = false;
    bool naive = false;
};

json report_json(const operad::MultiplicityReport& r) {
    return {{"n", r.n},
            {"lambda", r.lambda.to_exponent_string()},
            {"f_n", r.f_n},
            {"j_n", r.j_n},
            {"generators", r.generators},
            {"d_lambda", r.d_lambda},
            {"rank", r.rank},
            {"multiplicity", r.multiplicity},
            {"primes", r.primes},
            {"cached", r.cached}};
}

std::vector<std::string> report_row(const operad::MultiplicityReport& r) {
    std::vector<std::string> primes;
    for (auto p : r.primes) primes.push_back(std::to_string(p));
    return {r.lambda.to_exponent_string(), std::to_string(r.f_n),       std::to_string(r.j_n),
            std::to_string(r.generators), std::to_string(r.d_lambda),  std::to_string(r.rank),
            std::to_string(r.multiplicity), app::detail::join(primes, " "), r.cached ? "yes" : "no"};
}

Output operad_cmd(const OperadArgs& a, const Globals& g) {
    if (a.degree < 1 && a.partition.empty()) throw InputError("give --degree or --partition");
    operad::HentzelOptions opts;
    opts.threads = g.threads;
    opts.prune = !a.no_prune;
    if (!g.primes.empty()) opts.primes = g.primes;
    if (!g.cache_dir.empty()) opts.cache_dir = g.cache_dir + "/ranks";
    Output out;
    out.columns = {"lambda", "f_n", "j_n", "generators", "d_lambda", "rank", "multiplicity", "primes", "cached"};
    out.doc = {{"command", "operad"}};
    if (!a.partition.empty()) {
        const auto lam = sym::Partition(parse_int_list(a.partition, "partition"));
        if (a.degree > 0 && lam.size() != a.degree) throw InputError("--partition is not a partition of --degree");
        const auto r = operad::multiplicity(lam, opts);
        out.doc["n"] = r.n;
        out.doc["parts"] = json::array({report_json(r)});
        out.rows.push_back(report_row(r));
        return out;
    }
    const auto mod = operad::jord_module(a.degree, opts);
    json parts = json::array();
    for (const auto& r : mod.parts) {
        parts.push_back(report_json(r));
        out.rows.push_back(report_row(r));
    }
    out.doc["n"] = a.degree;
    out.doc["parts"] = parts;
    out.doc["dimension"] = integer(mod.dimension);
    out.notes.push_back("dim Jord(" + std::to_string(a.degree) + ") = " + mod.dimension.get_str());
    if (a.naive) {
        const auto nd = operad::naive_dim(a.degree);
        out.doc["naive_dimension"] = nd;
        out.ok = Integer(static_cast<unsigned long>(nd)) == mod.dimension;
        out.notes.push_back("direct elimination: " + std::to_string(nd) + (out.ok ? " (agrees)" : " (DISAGREES)"));
    }
    return out;
}

// multidegree

struct MultidegreeArgs {
    std::string delta;
    bool full_space = false;
};

Output multidegree_cmd(const MultidegreeArgs& a, const Globals& g) {
    const operad::Multidegree d = parse_int_list(a.delta, "multidegree");
    operad::MultidegreeOptions opts;
    opts.full_space = a.full_space;
    if (!g.primes.empty()) opts.primes = g.primes;
    app::ResultCache cache(g.cache_dir);
    const json params{{"delta", d}, {"primes", opts.primes}, {"full_space", a.full_space}};
    Output out;
    bool cached = false;
    std::size_t dim = 0;
    if (auto hit = cache.get("multidegree", params)) {
        dim = hit->get<std::size_t>();
        cached = true;
    } else {
        dim = operad::multidegree_dim(d, opts);
        cache.put("multidegree", params, dim);
    }
    out.doc = {{"command", "multidegree"}, {"delta", d}, {"dim", dim}, {"primes", opts.primes}, {"cached", cached}};
    out.columns = {"delta", "dim", "cached"};
    out.rows.push_back({operad::to_string(d), std::to_string(dim), cached ? "yes" : "no"});
    return out;
}

// two-gen

struct TwoGenArgs {
    int max_degree = 20;
    int span = 0;
};

Output two_gen(const TwoGenArgs& a) {
    if (a.max_degree < 1) throw InputError("--max-degree must be positive");
    if (a.span > special::kJordanSpanMaxDegree)
        throw InfeasibleError("two-gen: --span above " + std::to_string(special::kJordanSpanMaxDegree),
                              std::pow(2.0, a.span));
    const auto pa = series::predict_dims(2, a.max_degree);
    const auto pb = lambda::dims_from_character(lambda::km_prediction(lambda::VariableModel{2}, a.max_degree).b);
    Output out;
    out.columns = {"n", "reversible", "b", "predicted_a", "predicted_b"};
    if (a.span > 0) out.columns.push_back("jordan_span");
    json rows = json::array();
    for (int n = 1; n <= a.max_degree; ++n) {
        const auto rev = special::reversible_dim(n), b = special::b_dim_two_gen(n);
        json row{{"n", n}, {"reversible", integer(rev)}, {"b", integer(b)}, {"predicted_a", integer(pa.at(n))},
                 {"predicted_b", integer(pb.at(n))}};
        std::vector<std::string> r{std::to_string(n), rev.get_str(), b.get_str(), pa.at(n).get_str(), pb.at(n).get_str()};
        if (n <= a.span) {
            const auto s = special::jordan_span_dim(n);
            row["jordan_span"] = integer(s);
            r.push_back(s.get_str());
            if (s != rev) out.ok = false;
        } else if (a.span > 0) {
            r.push_back("");
        }
        if (pa.at(n) != rev) out.notes.push_back("degree " + std::to_string(n) + ": predicted a differs by " + Integer(pa.at(n) - rev).get_str());
        if (pb.at(n) != b) out.notes.push_back("degree " + std::to_string(n) + ": predicted b differs by " + Integer(pb.at(n) - b).get_str());
        rows.push_back(row);
        out.rows.push_back(r);
    }
    out.doc = {{"command", "two-gen"}, {"max_degree", a.max_degree}, {"rows", rows}};
    return out;
}

// tag

struct TagArgs {
    std::string input;
    std::string free;
    int truncate = 0;
    int homology = -1;
    bool sl2 = false;
    int max_degree = -1;
    std::string emit;
};

Output tag_cmd(const TagArgs& a, const Globals& g) {
    if (a.input.empty() == a.free.empty()) throw InputError("give exactly one of --input and --free");
    tkk::AlgebraFD J;
    int bound = a.max_degree;
    json source;
    if (!a.input.empty()) {
        J = tkk::load_algebra(a.input);
        source = {{"input", a.input}};
    } else {
        if (a.truncate < 1) throw InputError("--free needs --truncate N");
        const auto parities = parse_int_list(a.free, "parity list");
        J = tkk::truncated_free_jordan(parities, a.truncate);
        source = {{"free", parities}, {"truncate", a.truncate}};
    }
    const auto T = tkk::tag(J, {.max_degree = bound, .verify = true});
    Output out;
    out.doc = {{"command", "tag"}, {"source", source}, {"max_degree", bound}, {"dim_j", J.dim()},
               {"dim_b", T.b.dim()}, {"dim_tag", T.lie.dim()}};
    out.columns = {"quantity", "value"};
    out.rows = {{"dim J", std::to_string(J.dim())}, {"dim B", std::to_string(T.b.dim())},
                {"dim TAG", std::to_string(T.lie.dim())}};
    if (J.graded()) {
        int top = 0;
        for (int d : T.lie.degree) top = std::max(top, d);
        // both lists are indexed by degree, starting at 0
        auto jd = tkk::graded_dims(J, top);
        jd.insert(jd.begin(), 0);
        const auto bd = tkk::graded_dims(T.b, top);
        out.doc["graded_dims_j"] = jd;
        out.doc["graded_dims_b"] = bd;
        out.rows.push_back({"graded dims J", app::detail::join(jd)});
        out.rows.push_back({"graded dims B", app::detail::join(bd)});
    }
    if (!a.emit.empty()) {
        std::ofstream f(a.emit);
        if (!f) throw InputError("cannot write " + a.emit);
        f << tkk::algebra_to_json(T.lie).dump(1) << "\n";
    }
    if (a.homology >= 0) {
        app::ResultCache cache(g.cache_dir);
        const json params{{"algebra", tkk::algebra_to_json(T.lie)}, {"kmax", a.homology}, {"max_degree", bound}};
        tkk::HomologyResult h;
        json hj;
        bool cached = false;
        if (auto hit = cache.get("homology", params); hit && !a.sl2) {
            hj = *hit;
            cached = true;
        } else {
            h = tkk::ce_homology(T.lie, a.homology, {.max_degree = bound, .threads = g.threads});
            hj = {{"dims", h.dims}, {"chain_dims", h.chain_dims}};
            cache.put("homology", params, hj);
        }
        hj["cached"] = cached;
        out.rows.push_back({"homology dims", app::detail::join(hj["dims"].get<std::vector<std::size_t>>())});
        if (a.sl2) {
            json hw = json::array();
            for (const auto& m : tkk::sl2_decompose(h)) {
                json k = json::array();
                for (const auto& [w, mult] : m) k.push_back({{"highest_weight", w}, {"multiplicity", mult}});
                hw.push_back(k);
            }
            hj["sl2"] = hw;
            out.rows.push_back({"sl2 highest weights", app::detail::weight_list(tkk::sl2_decompose(h))});
        }
        out.doc["homology"] = hj;
    }
    return out;
}

// verify

struct VerifyArgs {
    std::vector<std::string> suites;
    bool long_running = false;
    int max_degree = -1;
};

Output verify(const VerifyArgs& a, const Globals& g) {
    std::vector<std::string> names = a.suites;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) {
        names.clear();
        for (const auto& [n, fn] : app::suites())
            if (n != "extended" || a.long_running) names.push_back(n);
    }
    app::SuiteOptions opts{a.max_degree, a.long_running, g.threads, g.cache_dir};
    Output out;
    out.columns = {"suite", "check", "expected", "computed", "source", "pass", "seconds"};
    json suites = json::array();
    std::size_t failures = 0, total = 0;
    for (const auto& name : names) {
        const auto r = app::run_suite(name, opts);
        suites.push_back(app::to_json(r));
        failures += r.failures();
        total += r.checks.size();
        for (const auto& c : r.checks) {
            std::ostringstream t;
            t << std::fixed << std::setprecision(2) << c.seconds;
            out.rows.push_back({name, c.name, c.expected, c.computed, c.source, c.pass ? "PASS" : "FAIL", t.str()});
        }
    }
    out.ok = failures == 0;
    out.doc = {{"command", "verify"}, {"pass", out.ok}, {"checks", total}, {"failures", failures}, {"suites", suites}};
    out.notes.push_back(std::to_string(total - failures) + "/" + std::to_string(total) + " checks passed");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"freejord: free Jordan algebra dimensions, modules and TKK homology"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Print a JSON document");
    app.add_flag("--csv", g.csv, "Print a CSV table");
    app.add_option("--cache-dir", g.cache_dir, std::string("Result cache directory (default: $") + app::kCacheEnv + ")");
    app.add_option("--threads", g.threads, "Worker threads (0: all cores)");
    app.add_option("--primes", g.primes, "Primes for modular ranks")->delimiter(',');

    PredictDimsArgs pd;
    auto* c_pd = app.add_subcommand("predict-dims", "Graded dimensions predicted by the product formula");
    c_pd->add_option("-g,--generators", pd.generators, "Number of generators")->capture_default_str();
    c_pd->add_option("-N,--degree", pd.degree, "Highest degree")->capture_default_str();
    c_pd->add_option("--check", pd.check_file, "Sequence file to test against the formula")->check(CLI::ExistingFile);

    PredictModulesArgs pm;
    auto* c_pm = app.add_subcommand("predict-modules", "Predicted GL(V) / S_n module structure");
    c_pm->add_option("-N,--degree", pm.degree, "Highest degree")->capture_default_str();
    c_pm->add_option("-d,--variables", pm.variables, "Specialize to d generators and report dimensions");

    OperadArgs op;
    auto* c_op = app.add_subcommand("operad", "S_n-module structure of the multilinear free Jordan algebra");
    c_op->add_option("-n,--degree", op.degree, "Degree n");
    c_op->add_option("-l,--partition", op.partition, "Single partition, e.g. 3,2,1");
    c_op->add_flag("--no-prune", op.no_prune, "Use every identity instance");
    c_op->add_flag("--naive", op.naive, "Cross-check the dimension by direct elimination (n <= 7)");

    MultidegreeArgs md;
    auto* c_md = app.add_subcommand("multidegree", "Dimension of a multihomogeneous component");
    c_md->add_option("-d,--delta", md.delta, "Multidegree, e.g. 9,1,1")->required();
    c_md->add_flag("--full-space", md.full_space, "Eliminate in all commutative monomials");

    TwoGenArgs tg;
    auto* c_tg = app.add_subcommand("two-gen", "Two-generator special Jordan algebra and its B space");
    c_tg->add_option("-N,--max-degree", tg.max_degree, "Highest degree")->capture_default_str();
    c_tg->add_option("--span", tg.span, "Also compute the Jordan span directly up to this degree");

    TagArgs ta;
    auto* c_ta = app.add_subcommand("tag", "TKK algebra of a Jordan superalgebra and its homology");
    c_ta->add_option("-i,--input", ta.input, "Jordan algebra JSON file")->check(CLI::ExistingFile);
    c_ta->add_option("--free", ta.free, "Generator parities of a free Jordan algebra, e.g. 0,0");
    c_ta->add_option("--truncate", ta.truncate, "Truncation degree for --free");
    c_ta->add_option("--homology", ta.homology, "Compute H_k for k = 0..K");
    c_ta->add_flag("--sl2", ta.sl2, "Decompose homology into sl2 highest weights");
    c_ta->add_option("--max-degree", ta.max_degree, "Quotient by everything above this degree");
    c_ta->add_option("--emit", ta.emit, "Write the Lie algebra as JSON");

    VerifyArgs ve;
    auto* c_ve = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> suite_choices{"all"};
    for (const auto& [n, fn] : app::suites()) suite_choices.push_back(n);
    c_ve->add_option("-s,--suite", ve.suites, "Suite names (default: all)")->check(CLI::IsMember(suite_choices));
    c_ve->add_flag("--long", ve.long_running, "Include long-running checks");
    c_ve->add_option("--max-degree", ve.max_degree, "Override the suite's degree bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (g.json && g.csv) {
        std::cerr << "error: --json and --csv are exclusive\n";
        return kUsage;
    }
    const Format fmt = g.json ? Format::json : g.csv ? Format::csv : Format::text;
    try {
        Output out;
        if (*c_pd) out = predict_dims(pd);
        else if (*c_pm) out = predict_modules(pm);
        else if (*c_op) out = operad_cmd(op, g);
        else if (*c_md) out = multidegree_cmd(md, g);
        else if (*c_tg) out = two_gen(tg);
        else if (*c_ta) out = tag_cmd(ta, g);
        else out = verify(ve, g);
        out.doc["ok"] = out.ok;
        print(out, fmt);
        return out.ok ? kOk : kCheckFailed;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InfeasibleError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        std::cerr << "estimate: " << e.estimate() << "\n";
        if (fmt == Format::json)
            std::cout << json{{"ok", false}, {"refused", e.what()}, {"estimate", e.estimate()}}.dump(2) << "\n";
        return kRefused;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kCheckFailed;
    }
}
