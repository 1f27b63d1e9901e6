#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mumford/serialize.hpp"

namespace mumford {

// FNV-1a over the bytes; used for cache file names and payload checksums.
std::string fnv1a_hex(const std::string& bytes);

/*
 * Persistent result cache. The directory comes from the MUMFORD_CACHE_DIR
 * environment variable, overridable per run; with neither set the cache is
 * disabled. Keys bake in the engine version, so version bumps invalidate
 * everything. Writes go through a temp file and rename, and payloads carry
 * a checksum validated on read.
 */
class Cache {
 public:
  // override wins over the environment; empty string means "not given".
  explicit Cache(const std::string& dir_override = "");

  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }

  // Key from the request coordinates; engine version included.
  static std::string make_key(const std::string& command, int genus,
                              const std::string& variant);

  std::optional<json> lookup(const std::string& key) const;
  std::filesystem::path store(const std::string& key, const json& payload) const;

 private:
  std::filesystem::path path_for(const std::string& key) const;
  bool enabled_ = false;
  std::filesystem::path dir_;
};

}  // namespace mumford
