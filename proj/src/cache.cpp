#include "mumford/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>

#include "mumford/version.hpp"

namespace mumford {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Cache::Cache(const std::string& dir_override) {
  std::string dir = dir_override;
  if (dir.empty()) {
    const char* env = std::getenv("MUMFORD_CACHE_DIR");
    if (env) dir = env;
  }
  if (dir.empty()) return;
  dir_ = dir;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  enabled_ = !ec;
}

std::string Cache::make_key(const std::string& command, int genus,
                            const std::string& variant) {
  return command + ":g" + std::to_string(genus) + ":" + variant + ":v" + kEngineVersion;
}

std::filesystem::path Cache::path_for(const std::string& key) const {
  return dir_ / (fnv1a_hex(key) + ".json");
}

std::optional<json> Cache::lookup(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  json doc;
  try {
    in >> doc;
    if (doc.at("key") != key) return std::nullopt;  // hash collision or stale
    std::string payload = doc.at("payload").dump();
    if (doc.at("checksum") != fnv1a_hex(payload)) return std::nullopt;
    return doc.at("payload");
  } catch (...) {
    return std::nullopt;  // corrupt entries are treated as misses
  }
}

std::filesystem::path Cache::store(const std::string& key, const json& payload) const {
  if (!enabled_) return {};
  json doc;
  doc["key"] = key;
  doc["engine_version"] = kEngineVersion;
  doc["checksum"] = fnv1a_hex(payload.dump());
  doc["payload"] = payload;
  std::filesystem::path final_path = path_for(key);
  std::filesystem::path tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, final_path);
  return final_path;
}

}  // namespace mumford
