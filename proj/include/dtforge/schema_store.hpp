#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "dtforge/error.hpp"
#include "dtforge/identifier.hpp"
#include "dtforge/schema_model.hpp"

namespace dtforge {

struct StoreConfig {
  std::string bundle_dir;  // empty: use the compiled-in schema catalogue
  std::string cache_dir;   // empty: in-memory session cache only
  bool offline = false;
  std::map<Registry, std::string> registry_endpoints = default_registry_endpoints();

  static std::map<Registry, std::string> default_registry_endpoints();
};

struct FetchStats {
  std::uint64_t static_hits = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t remote_fetches = 0;
};

/// True when DTFORGE_OFFLINE is set to anything but "" or "0". The variable
/// forces offline mode regardless of StoreConfig.
bool offline_env_forced();

/// Parses one schema document (the static-file and registry wire format).
/// Throws Error{MalformedDocument} on anything structurally wrong.
SchemaDef parse_schema_document(const std::string& text);

/// Supplies schema definitions: static bundle first, then the session cache,
/// then a remote registry fetch. Safe for concurrent callers; any id causes
/// at most one remote fetch per session, failures included.
class SchemaStore {
 public:
  SchemaStore() : SchemaStore(StoreConfig{}) {}
  explicit SchemaStore(StoreConfig config);

  SchemaDef get_schema(const SchemaId& id);

  /// parse -> get_schema -> close_over: the bundle whose members are
  /// constructible instances.
  SchemaBundle load_datatype(std::string_view url);

  FetchStats stats() const;
  const StoreConfig& config() const noexcept { return config_; }
  bool offline() const noexcept { return offline_; }

 private:
  struct CacheEntry {
    std::optional<SchemaDef> def;  // empty: cached failure
    ErrorCode error = ErrorCode::SchemaNotFound;
    std::string error_message;
  };

  std::optional<SchemaDef> lookup_static(const SchemaId& id) const;
  std::optional<SchemaDef> lookup_disk_cache(const SchemaId& id) const;
  SchemaDef fetch_remote(const SchemaId& id) const;

  StoreConfig config_;
  bool offline_ = false;
  mutable std::mutex mutex_;
  std::map<std::string, CacheEntry> cache_;  // keyed by canonical URL
  FetchStats stats_;
};

}  // namespace dtforge
