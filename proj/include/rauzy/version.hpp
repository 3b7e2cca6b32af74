#pragma once

namespace rauzy {

inline constexpr const char* kVersion = "0.1.0";

// Bumped whenever a serialized format (diagram JSON, report JSON) changes;
// stale cache entries are ignored by version mismatch.
inline constexpr int kCacheVersion = 1;

}
