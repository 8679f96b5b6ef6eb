#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "freejord/version.hpp"

namespace freejord::app {

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheEnv = "FREEJORD_CACHE_DIR";

inline std::string default_cache_dir() {
    const char* v = std::getenv(kCacheEnv);
    return v ? std::string(v) : std::string();
}

/// Content-addressed JSON results keyed by (operation, canonical parameters, cache format).
/// An empty directory disables the cache.
class ResultCache {
public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }
    const std::string& dir() const { return dir_; }

    std::filesystem::path path_for(const std::string& op, const nlohmann::json& params) const {
        std::ostringstream name;
        name << op << "-" << std::hex << hash(key(op, params).dump()) << ".json";
        return std::filesystem::path(dir_) / name.str();
    }

    /// Stored result, or nothing on a miss; entries from another cache format or with a
    /// different key are misses, unreadable entries are reported and treated as misses.
    std::optional<nlohmann::json> get(const std::string& op, const nlohmann::json& params) const {
        if (!enabled()) return std::nullopt;
        std::lock_guard lock(mutex_);
        const auto path = path_for(op, params);
        std::ifstream in(path);
        if (!in) return std::nullopt;
        try {
            nlohmann::json entry;
            in >> entry;
            if (entry.at("key") != key(op, params)) return std::nullopt;
            return entry.at("result");
        } catch (const nlohmann::json::exception&) {
            std::cerr << "warning: ignoring corrupt cache entry " << path.string() << "\n";
            return std::nullopt;
        }
    }

    void put(const std::string& op, const nlohmann::json& params, const nlohmann::json& result) const {
        if (!enabled()) return;
        std::lock_guard lock(mutex_);
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        const auto path = path_for(op, params);
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) {
                std::cerr << "warning: cannot write cache entry " << path.string() << "\n";
                return;
            }
            out << nlohmann::json{{"key", key(op, params)}, {"result", result}}.dump() << "\n";
        }
        std::filesystem::rename(tmp, path, ec);
    }

private:
    static nlohmann::json key(const std::string& op, const nlohmann::json& params) {
        return {{"op", op}, {"params", params}, {"format", kCacheFormat}};
    }

    static std::uint64_t hash(const std::string& s) {
        std::uint64_t h = 14695981039346656037ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

    std::string dir_;
    mutable std::mutex mutex_;
};

}  // namespace freejord::app
