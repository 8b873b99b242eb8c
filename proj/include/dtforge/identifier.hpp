#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dtforge {

enum class Registry { Epic, Orkg };

const char* to_string(Registry registry) noexcept;

/// A parsed persistent identifier for a registered data type. The handle
/// prefix selects the registry namespace (empty for ORKG template ids) and
/// the suffix is opaque.
struct SchemaId {
  Registry registry = Registry::Epic;
  std::string prefix;
  std::string suffix;

  friend bool operator==(const SchemaId&, const SchemaId&) = default;
  friend auto operator<=>(const SchemaId&, const SchemaId&) = default;
};

/// Host-to-registry routing is data, not code, so further registries can be
/// hooked in without touching the parser.
struct RoutingTable {
  std::vector<std::pair<std::string, Registry>> hosts;

  static const RoutingTable& built_in();
};

SchemaId parse_schema_identifier(std::string_view url);
SchemaId parse_schema_identifier(std::string_view url, const RoutingTable& table);

/// Deterministic canonical URL: https://doi.org/<prefix>/<suffix> for ePIC
/// handles, https://orkg.org/template/<suffix> for ORKG templates.
std::string canonicalize(const SchemaId& id);

}  // namespace dtforge
