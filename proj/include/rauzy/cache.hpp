#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rauzy/errors.hpp"
#include "rauzy/version.hpp"

namespace rauzy {

inline uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

// Content-addressed store of JSON payloads.  Entries carry the full key, a
// format version and a payload checksum; anything stale, truncated or
// colliding reads as a miss.  Writes go through a temp file and rename so a
// crash never leaves a half-written entry behind.
class DiskCache {
 public:
  DiskCache() = default;
  explicit DiskCache(std::filesystem::path dir, bool enabled = true)
      : dir_(std::move(dir)), enabled_(enabled) {}

  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<nlohmann::json> get(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json entry;
    try {
      entry = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception&) {
      return std::nullopt;
    }
    if (!entry.is_object()) return std::nullopt;
    if (entry.value("key", "") != key) return std::nullopt;
    if (entry.value("version", -1) != kCacheVersion) return std::nullopt;
    if (!entry.contains("payload") || !entry.contains("checksum"))
      return std::nullopt;
    std::string body = entry["payload"].dump();
    if (entry["checksum"].get<std::string>() != hex64(fnv1a64(body)))
      return std::nullopt;
    return entry["payload"];
  }

  // Best effort: cache misses are always recoverable, so IO failures here
  // must never surface.
  void put(const std::string& key, const nlohmann::json& payload) const {
    if (!enabled_) return;
    try {
      std::error_code ec;
      std::filesystem::create_directories(dir_, ec);
      if (ec) return;
      nlohmann::ordered_json entry;
      entry["key"] = key;
      entry["version"] = kCacheVersion;
      entry["checksum"] = hex64(fnv1a64(payload.dump()));
      entry["payload"] = payload;
      std::filesystem::path final_path = path_for(key);
      std::filesystem::path tmp = final_path;
      tmp += ".tmp";
      {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << entry.dump();
        if (!out) {
          out.close();
          std::filesystem::remove(tmp, ec);
          return;
        }
      }
      std::filesystem::rename(tmp, final_path, ec);
      if (ec) std::filesystem::remove(tmp, ec);
    } catch (...) {
    }
  }

 private:
  std::filesystem::path path_for(const std::string& key) const {
    return dir_ / (hex64(fnv1a64(key)) + ".json");
  }

  std::filesystem::path dir_;
  bool enabled_ = false;
};

// Precedence: explicit flag, then the environment override, then a local
// default next to wherever the tool runs.
inline DiskCache resolve_cache(const std::string& flag_dir, bool disabled) {
  if (disabled) return DiskCache{};
  if (!flag_dir.empty()) return DiskCache{flag_dir};
  if (const char* env = std::getenv("RAUZY_CACHE_DIR"))
    if (*env) return DiskCache{env};
  return DiskCache{".rauzy-cache"};
}

inline std::string diagram_cache_key(const std::string& mode,
                                     const std::string& seed_key) {
  return "diag|" + std::to_string(kCacheVersion) + "|" + mode + "|" + seed_key;
}

inline std::string verify_cache_key(const std::string& seed_key) {
  return "verify|" + std::to_string(kCacheVersion) + "|" + seed_key;
}

}
