#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "dtforge/instance.hpp"

namespace dtforge {

/// A declarative build recipe: which schema to load and the field tree to
/// assign. The body mirrors instance fields; `$type` names a constructor for
/// nested objects, `$uri` marks a linked-data reference, `$table` carries
/// columns and rows. Manifests are plain JSON (and therefore also valid YAML).
struct Manifest {
  std::string schema_url;
  nlohmann::json body;
};

Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::filesystem::path& path);

/// Constructs the instance tree the manifest describes. Errors carry the JSON
/// pointer of the offending manifest entry.
InstancePtr build_from_manifest(const Manifest& manifest, const SchemaBundle& bundle);

}  // namespace dtforge
