#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pel::cache {

/// Bump to invalidate all cached results when computation changes.
inline constexpr const char* kEngineVersion = "1";

/// Resolved from PEL_CACHE_DIR; defaults to ~/.cache/pel (or ./.pel-cache
/// when HOME is unset). The sentinel value "none" disables caching
/// entirely, in which case this returns nullopt.
std::optional<std::string> directory();

/// Stable key for one invariant of one (spec, prime) pair; incorporates
/// the engine version.
std::string key_for(const std::string& canonical_spec, uint64_t prime,
                    const std::string& invariant);

std::optional<std::string> lookup(const std::string& key);

/// Best-effort: serialization failures are swallowed (caches are advisory).
void store(const std::string& key, const std::string& value);

/// Removes every cached entry. Returns number of entries removed.
uint64_t clear();

}  // namespace pel::cache
