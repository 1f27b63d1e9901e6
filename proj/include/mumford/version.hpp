#pragma once

namespace mumford {

// Engine version. Bumping this invalidates every cache entry, since it is
// part of each cache key.
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace mumford
