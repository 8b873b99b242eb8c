#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dtforge/instance.hpp"

namespace dtforge {

/// A rendered linked-data document plus any lint warnings produced while
/// rendering (e.g. terms whose property URI had to be synthesized).
struct JsonLdDocument {
  nlohmann::ordered_json root;
  std::vector<std::string> warnings;

  /// Canonical bytes: 2-space indent, lexicographic @context, trailing newline.
  std::string canonical_text() const;
};

/// Renders an instance tree as a self-contained JSON-LD document. The @context
/// collects every term reachable from the root; two reachable terms with the
/// same name must map to the same URI.
JsonLdDocument to_jsonld(const InstancePtr& root);

/// Renders a results table as a typed node (columns, then row-major cells).
nlohmann::ordered_json serialize_table(const ResultTable& table, const SchemaId& type);

/// Writes canonical document bytes to `path`, creating parent directories.
void write_document(const JsonLdDocument& doc, const std::filesystem::path& path);

}  // namespace dtforge
