#pragma once

namespace freejord {

inline constexpr const char* kVersion = "1.0.0";

/// Bumped whenever a cached result could change meaning; older cache entries are ignored.
inline constexpr int kCacheFormat = 1;

}  // namespace freejord
