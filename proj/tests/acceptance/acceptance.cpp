// Acceptance suite: one PASS/FAIL line per criterion. Criterion 9 and the degree 8
// operad check run only with --long.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "freejord/app/cache.hpp"
#include "freejord/app/suites.hpp"

using namespace freejord;

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* suite;
    std::optional<double> budget;  // seconds
    bool long_only;
};

const std::vector<Criterion> kCriteria = {
    {1, "counterexample reproduction", "counterexample", 10, false},
    {2, "prediction tables", "tables", 300, false},
    {3, "cross-pipeline agreement", "pipelines", 120, false},
    {4, "operad ground truth", "operad", 1800, false},
    {5, "two-generator suite", "two-gen", 300, false},
    {6, "homology", "homology", 60, false},
    {7, "structural properties", "structure", std::nullopt, false},
    {8, "effectivity", "effectivity", 600, false},
    {9, "extended multidegrees and Jord(9), Jord(10)", "extended", std::nullopt, true},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"freejord acceptance suite"};
    bool long_running = false, verbose = false;
    std::vector<int> only;
    std::string cache_dir = app::default_cache_dir();
    unsigned threads = 0;
    app.add_flag("--long", long_running, "Run long-running checks (criterion 9, Jord(8))");
    app.add_flag("-v,--verbose", verbose, "Print every check");
    app.add_option("--only", only, "Run only these criteria")->delimiter(',')->check(CLI::Range(1, 9));
    app.add_option("--cache-dir", cache_dir, "Result cache directory");
    app.add_option("--threads", threads, "Worker threads (0: all cores)");
    CLI11_PARSE(app, argc, argv);

    const std::set<int> selected(only.begin(), only.end());
    int failed = 0;
    for (const auto& c : kCriteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        if (c.long_only && !long_running) {
            std::printf("criterion %d: SKIP  %s (needs --long)\n", c.id, c.title);
            continue;
        }
        app::SuiteOptions opts;
        opts.long_running = long_running;
        opts.threads = threads;
        opts.cache_dir = cache_dir;
        const auto r = app::run_suite(c.suite, opts);
        const bool in_time = !c.budget || r.seconds <= *c.budget;
        const bool pass = r.pass() && in_time;
        failed += pass ? 0 : 1;
        std::printf("criterion %d: %s  %s (%zu/%zu checks, %.1f s", c.id, pass ? "PASS" : "FAIL", c.title,
                    r.checks.size() - r.failures(), r.checks.size(), r.seconds);
        if (c.budget) std::printf(", budget %.0f s", *c.budget);
        std::printf(")\n");
        for (const auto& k : r.checks)
            if (verbose || !k.pass)
                std::printf("    %s %s [%s]: expected %s, computed %s\n", k.pass ? "ok  " : "FAIL", k.name.c_str(),
                            k.source.c_str(), k.expected.c_str(), k.computed.c_str());
        if (!in_time) std::printf("    FAIL runtime %.1f s exceeds budget %.0f s\n", r.seconds, *c.budget);
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
