#include "dtforge/jsonld.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <system_error>
#include <utility>

#include "dtforge/error.hpp"
#include "dtforge/identifier.hpp"

namespace dtforge {

namespace {

using nlohmann::ordered_json;

struct RenderState {
  std::map<std::string, std::string> context;
  std::vector<std::string> warnings;
  std::vector<const Instance*> stack;

  void bind(const std::string& term, const std::string& uri) {
    auto [it, inserted] = context.try_emplace(term, uri);
    if (!inserted && it->second != uri) {
      raise(ErrorCode::ContextCollision,
            "term '" + term + "' maps to both " + it->second + " and " + uri);
    }
  }
};

ordered_json render_instance(const InstancePtr& instance, RenderState& state);

// Non-finite numbers have no JSON representation; encode them as strings so
// the output stays byte-stable instead of degrading to null.
ordered_json double_to_json(double value) {
  if (std::isnan(value)) return "NaN";
  if (std::isinf(value)) return value > 0 ? "Inf" : "-Inf";
  return value;
}

ordered_json scalar_to_json(const Scalar& value) {
  switch (value.index()) {
    case 0: return std::get<std::string>(value);
    case 1: return std::get<std::int64_t>(value);
    case 2: return double_to_json(std::get<double>(value));
    default: return std::get<bool>(value);
  }
}

ordered_json cell_to_json(const Cell& cell) {
  switch (cell.index()) {
    case 0: return nullptr;
    case 1: return std::get<std::string>(cell);
    case 2: return std::get<std::int64_t>(cell);
    case 3: return double_to_json(std::get<double>(cell));
    default: return std::get<bool>(cell);
  }
}

const SchemaId& table_type_of(const FieldDescriptor& field) {
  static const SchemaId fallback = table_schema_id();
  return field.nested_ids.empty() ? fallback : field.nested_ids.front();
}

void bind_table_terms(RenderState& state, const SchemaId& type) {
  const std::string base = canonicalize(type) + "#";
  for (const char* term : {"column", "columns", "index", "name", "rows", "value"}) {
    state.bind(term, base + term);
  }
}

ordered_json render_value(const FieldValue& value, const FieldDescriptor& field,
                          RenderState& state) {
  if (value.is_scalar()) return scalar_to_json(value.scalar());
  if (value.is_uri()) {
    ordered_json ref;
    ref["@id"] = value.uri().value;
    return ref;
  }
  if (value.is_table()) {
    const SchemaId& type = table_type_of(field);
    bind_table_terms(state, type);
    return serialize_table(value.table(), type);
  }
  if (value.is_nested()) return render_instance(value.nested(), state);
  ordered_json array = ordered_json::array();
  for (const FieldValue& item : value.items()) {
    array.push_back(render_value(item, field, state));
  }
  return array;
}

ordered_json render_instance(const InstancePtr& instance, RenderState& state) {
  const Instance* raw = instance.get();
  if (std::find(state.stack.begin(), state.stack.end(), raw) != state.stack.end()) {
    raise(ErrorCode::TypeMismatch,
          "instance tree contains a reference cycle through '" +
              instance->schema().constructor_name + "'");
  }
  state.stack.push_back(raw);
  const SchemaDef& schema = instance->schema();
  ordered_json node;
  node["@type"] = canonicalize(schema.id);
  for (const auto& [name, value] : instance->values()) {
    const FieldDescriptor* field = schema.find_field(name);
    std::string uri = field->property_uri;
    if (uri.empty()) {
      uri = canonicalize(schema.id) + "#" + name;
      if (!state.context.contains(name)) {
        state.warnings.push_back("field '" + name + "' of '" + schema.constructor_name +
                                 "' has no property URI; synthesized " + uri);
      }
    }
    state.bind(name, uri);
    node[name] = render_value(value, *field, state);
  }
  state.stack.pop_back();
  return node;
}

}  // namespace

std::string JsonLdDocument::canonical_text() const { return root.dump(2) + "\n"; }

JsonLdDocument to_jsonld(const InstancePtr& root) {
  if (!root) raise(ErrorCode::TypeMismatch, "cannot serialize a null instance");
  RenderState state;
  ordered_json body = render_instance(root, state);
  ordered_json context = ordered_json::object();
  for (const auto& [term, uri] : state.context) context[term] = uri;
  ordered_json doc;
  doc["@context"] = std::move(context);
  for (auto& [key, value] : body.items()) doc[key] = std::move(value);
  return JsonLdDocument{std::move(doc), std::move(state.warnings)};
}

nlohmann::ordered_json serialize_table(const ResultTable& table, const SchemaId& type) {
  ordered_json node;
  node["@type"] = canonicalize(type);
  ordered_json columns = ordered_json::array();
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    ordered_json column;
    column["index"] = static_cast<std::int64_t>(i);
    column["name"] = table.columns[i];
    columns.push_back(std::move(column));
  }
  node["columns"] = std::move(columns);
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json out_row = ordered_json::array();
    for (std::size_t c = 0; c < row.size(); ++c) {
      ordered_json cell;
      cell["column"] = table.columns[c];
      cell["value"] = cell_to_json(row[c]);
      out_row.push_back(std::move(cell));
    }
    rows.push_back(std::move(out_row));
  }
  node["rows"] = std::move(rows);
  return node;
}

void write_document(const JsonLdDocument& doc, const std::filesystem::path& path) {
  const std::filesystem::path parent = path.parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
    if (ec) {
      raise(ErrorCode::IoError, "cannot create " + parent.string() + ": " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << doc.canonical_text();
  out.flush();
  if (!out) raise(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace dtforge
