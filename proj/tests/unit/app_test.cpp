#include <gtest/gtest.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "freejord/app/cache.hpp"
#include "freejord/app/suites.hpp"

using namespace freejord;
using namespace freejord::app;

namespace {

struct TempDir {
    std::filesystem::path path =
        std::filesystem::temp_directory_path() / ("freejord-app-" + std::to_string(::getpid()));
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST(ResultCache, DisabledWithoutDirectory) {
    ResultCache cache("");
    EXPECT_FALSE(cache.enabled());
    cache.put("op", {{"x", 1}}, 5);
    EXPECT_FALSE(cache.get("op", {{"x", 1}}));
}

TEST(ResultCache, RoundTripAndKeying) {
    TempDir tmp;
    ResultCache cache(tmp.path.string());
    const nlohmann::json params{{"delta", {9, 1, 1}}};
    EXPECT_FALSE(cache.get("multidegree", params));
    cache.put("multidegree", params, 55);
    ASSERT_TRUE(cache.get("multidegree", params));
    EXPECT_EQ(*cache.get("multidegree", params), 55);
    EXPECT_FALSE(cache.get("multidegree", {{"delta", {8, 2, 1}}}));
    EXPECT_FALSE(cache.get("homology", params));
}

TEST(ResultCache, StaleAndCorruptEntriesAreMisses) {
    TempDir tmp;
    ResultCache cache(tmp.path.string());
    const nlohmann::json params{{"n", 3}};
    const auto path = cache.path_for("op", params);
    cache.put("op", params, 1);
    {
        std::ofstream out(path);
        out << nlohmann::json{{"key", {{"op", "op"}, {"params", params}, {"format", kCacheFormat + 1}}}, {"result", 1}}.dump();
    }
    EXPECT_FALSE(cache.get("op", params));
    {
        std::ofstream out(path);
        out << "{not json";
    }
    EXPECT_FALSE(cache.get("op", params));
    cache.put("op", params, 2);
    EXPECT_EQ(*cache.get("op", params), 2);
}

TEST(ResultCache, DefaultDirectoryFromEnvironment) {
    ::setenv(kCacheEnv, "/tmp/somewhere", 1);
    EXPECT_EQ(default_cache_dir(), "/tmp/somewhere");
    ::unsetenv(kCacheEnv);
    EXPECT_EQ(default_cache_dir(), "");
}

TEST(Suites, NamesAndDispatch) {
    std::vector<std::string> names;
    for (const auto& [n, fn] : suites()) names.push_back(n);
    EXPECT_EQ(names, (std::vector<std::string>{"counterexample", "tables", "pipelines", "operad", "two-gen", "homology",
                                               "structure", "effectivity", "extended"}));
    EXPECT_THROW(run_suite("nope", {}), InputError);
}

TEST(Suites, CounterexamplePasses) {
    const auto r = run_suite("counterexample", {});
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.checks.size(), 7u);
    const auto j = to_json(r);
    EXPECT_EQ(j["failures"], 0);
    EXPECT_EQ(j["checks"][3]["computed"], "degree 19 residue = 2, predicted 262658 vs actual 262656");
}

TEST(Suites, FailuresAndRefusalsAreRecorded) {
    SuiteResult r{"t", {}, 0};
    detail::check(r, "mismatch", "1", "definition", [] { return std::string("2"); });
    detail::check(r, "refusal", "1", "definition", []() -> std::string { throw InfeasibleError("too big", 42); });
    detail::check(r, "error", "1", "definition", []() -> std::string { throw InputError("bad"); });
    EXPECT_EQ(r.failures(), 3u);
    EXPECT_FALSE(r.pass());
    EXPECT_NE(r.checks[1].computed.find("refused: too big"), std::string::npos);
    EXPECT_NE(r.checks[2].computed.find("error: bad"), std::string::npos);
    EXPECT_FALSE(SuiteResult{}.pass());
}
