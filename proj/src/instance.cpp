#include "dtforge/instance.hpp"

#include <algorithm>
#include <set>

#include "dtforge/error.hpp"
#include "dtforge/identifier.hpp"

namespace dtforge {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ", ";
    out += parts[i];
  }
  return out;
}

// Checks a single (non-list) value against a field, recursing into list items
// first so the caller only ever sees leaf shapes here.
void check_single(const SchemaDef& schema, const FieldDescriptor& field,
                  const FieldValue& value) {
  if (value.is_many()) {
    raise(ErrorCode::TypeMismatch,
          "field '" + field.name + "' of '" + schema.constructor_name +
              "': nested lists are not allowed");
  }
  switch (field.kind) {
    case TargetKind::Scalar:
      if (!value.is_scalar()) {
        raise(ErrorCode::TypeMismatch,
              "field '" + field.name + "' of '" + schema.constructor_name +
                  "' expects a scalar, got " + value.kind_name());
      }
      return;
    case TargetKind::Uri:
      if (!value.is_uri()) {
        raise(ErrorCode::TypeMismatch,
              "field '" + field.name + "' of '" + schema.constructor_name +
                  "' expects a URI, got " + value.kind_name());
      }
      return;
    case TargetKind::Table:
      if (!value.is_table()) {
        raise(ErrorCode::TypeMismatch,
              "field '" + field.name + "' of '" + schema.constructor_name +
                  "' expects a table, got " + value.kind_name());
      }
      return;
    case TargetKind::Nested:
      break;
  }
  if (!value.is_nested() || !value.nested()) {
    raise(ErrorCode::TypeMismatch,
          "field '" + field.name + "' of '" + schema.constructor_name +
              "' expects a nested instance, got " + value.kind_name());
  }
  if (field.nested_ids.empty()) return;
  const SchemaId& actual = value.nested()->schema().id;
  if (std::find(field.nested_ids.begin(), field.nested_ids.end(), actual) !=
      field.nested_ids.end()) {
    return;
  }
  std::vector<std::string> admissible;
  admissible.reserve(field.nested_ids.size());
  for (const SchemaId& id : field.nested_ids) admissible.push_back(canonicalize(id));
  raise(ErrorCode::TypeMismatch,
        "field '" + field.name + "' of '" + schema.constructor_name + "' accepts [" +
            join(admissible) + "], got an instance of " + canonicalize(actual));
}

// Validates `value` against `field` and wraps single values of repeatable
// fields into a one-element list so storage is uniform.
FieldValue check_and_normalize(const SchemaDef& schema, const FieldDescriptor& field,
                               FieldValue value) {
  if (value.is_many()) {
    if (!field.repeatable) {
      raise(ErrorCode::TypeMismatch,
            "field '" + field.name + "' of '" + schema.constructor_name +
                "' is not repeatable and cannot hold a list");
    }
    for (const FieldValue& item : value.items()) check_single(schema, field, item);
    return value;
  }
  check_single(schema, field, value);
  if (field.repeatable) {
    FieldValue::Items items;
    items.push_back(std::move(value));
    return FieldValue::many(std::move(items));
  }
  return value;
}

}  // namespace

ResultTable table_from_rows(std::vector<std::string> columns,
                            std::vector<std::vector<Cell>> rows) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].empty()) {
      raise(ErrorCode::EmptyColumnName,
            "column " + std::to_string(i) + " has an empty name");
    }
    if (!seen.insert(columns[i]).second) {
      raise(ErrorCode::DuplicateColumn, "duplicate column name '" + columns[i] + "'");
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns.size()) {
      raise(ErrorCode::RaggedRows,
            "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                " cells but the table has " + std::to_string(columns.size()) +
                " columns");
    }
  }
  return ResultTable{std::move(columns), std::move(rows)};
}

FieldValue FieldValue::many(Items items) {
  for (const FieldValue& item : items) {
    if (item.is_many()) {
      raise(ErrorCode::TypeMismatch, "lists of values cannot be nested inside lists");
    }
  }
  return FieldValue(ManyTag{}, std::move(items));
}

const char* FieldValue::kind_name() const noexcept {
  switch (storage_.index()) {
    case 0: {
      switch (std::get<Scalar>(storage_).index()) {
        case 0: return "text";
        case 1: return "integer";
        case 2: return "number";
        default: return "boolean";
      }
    }
    case 1: return "uri";
    case 2: return "nested instance";
    case 3: return "table";
    default: return "list";
  }
}

void Instance::set_field(std::string_view name, FieldValue value) {
  const FieldDescriptor* field = schema_.find_field(name);
  if (field == nullptr) {
    std::vector<std::string> names;
    names.reserve(schema_.fields.size());
    for (const FieldDescriptor& f : schema_.fields) names.push_back("'" + f.name + "'");
    raise(ErrorCode::UnknownField,
          "'" + schema_.constructor_name + "' has no field '" + std::string(name) +
              "' (fields: " + join(names) + ")");
  }
  FieldValue normalized = check_and_normalize(schema_, *field, std::move(value));
  values_.insert_or_assign(std::string(name), std::move(normalized));
}

std::optional<FieldValue> Instance::get_field(std::string_view name) const {
  if (schema_.find_field(name) == nullptr) {
    raise(ErrorCode::UnknownField,
          "'" + schema_.constructor_name + "' has no field '" + std::string(name) + "'");
  }
  auto it = values_.find(std::string(name));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

InstancePtr new_instance(const SchemaBundle& bundle, std::string_view constructor,
                         std::span<const Assignment> assignments) {
  const SchemaDef* def = bundle.find(constructor);
  if (def == nullptr) {
    std::vector<std::string> names;
    names.reserve(bundle.members.size());
    for (const auto& [name, member] : bundle.members) names.push_back("'" + name + "'");
    raise(ErrorCode::UnknownConstructor,
          "no constructor '" + std::string(constructor) + "' in the loaded bundle (have: " +
              join(names) + ")");
  }
  auto instance = std::make_shared<Instance>(*def);
  for (const Assignment& assignment : assignments) {
    instance->set_field(assignment.first, assignment.second);
  }
  return instance;
}

InstancePtr new_instance(const SchemaBundle& bundle, std::string_view constructor,
                         std::initializer_list<Assignment> assignments) {
  return new_instance(bundle, constructor,
                      std::span<const Assignment>(assignments.begin(), assignments.size()));
}

}  // namespace dtforge
