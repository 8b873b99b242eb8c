#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtforge/identifier.hpp"

namespace dtforge {

enum class TargetKind { Scalar, Uri, Nested, Table };

const char* to_string(TargetKind kind) noexcept;

/// One field of a registered data type. For Nested fields, nested_ids lists
/// the admissible schemata (empty means any instance is accepted); for Table
/// fields it carries the table type the value serializes with.
struct FieldDescriptor {
  std::string name;
  TargetKind kind = TargetKind::Scalar;
  std::vector<SchemaId> nested_ids;
  std::string property_uri;  // empty: synthesized from the schema URL at serialization
  bool repeatable = false;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

struct SchemaDef {
  SchemaId id;
  std::string constructor_name;
  std::string label;
  std::vector<FieldDescriptor> fields;

  const FieldDescriptor* find_field(std::string_view name) const;

  friend bool operator==(const SchemaDef&, const SchemaDef&) = default;
};

/// A root schema plus every schema transitively reachable through its nested
/// field targets, keyed by constructor name.
struct SchemaBundle {
  SchemaId root;
  std::map<std::string, SchemaDef> members;

  const SchemaDef* find(std::string_view constructor) const;
  const SchemaDef* find_by_id(const SchemaId& id) const;
  const SchemaDef& root_def() const;

  friend bool operator==(const SchemaBundle&, const SchemaBundle&) = default;
};

using SchemaResolver = std::function<SchemaDef(const SchemaId&)>;

/// Breadth-first closure from root; every referenced id is resolved exactly
/// once and cycles are tolerated via a visited set.
SchemaBundle close_over(const SchemaDef& root, const SchemaResolver& resolver);

const std::vector<FieldDescriptor>& list_fields(const SchemaDef& def);

/// The registered table type tabular values are typed with. Table fields
/// parsed from schema documents reference it implicitly.
const SchemaId& table_schema_id();

inline constexpr std::size_t kSuggestionQuestionCount = 5;

const std::array<std::string_view, kSuggestionQuestionCount>& suggestion_questions();

/// First yes wins over the fixed question sequence; nullopt means no specific
/// schema applies and the caller should fall back to generic data_analysis.
std::optional<std::string> suggest_schema(
    const std::array<bool, kSuggestionQuestionCount>& answers);

}  // namespace dtforge
