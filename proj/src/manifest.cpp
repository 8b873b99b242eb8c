#include "dtforge/manifest.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "dtforge/error.hpp"

namespace dtforge {

namespace {

using nlohmann::json;

// RFC 6901 token escaping, so loci stay unambiguous for odd field names.
std::string escape_pointer_token(const std::string& token) {
  std::string out;
  out.reserve(token.size());
  for (char c : token) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

[[noreturn]] void fail(const std::string& message, const std::string& pointer) {
  raise(ErrorCode::ManifestError, message + " at " + pointer);
}

std::int64_t to_int64(const json& value, const std::string& pointer) {
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    fail("integer is too large", pointer);
  }
  return value.get<std::int64_t>();
}

Cell to_cell(const json& value, const std::string& pointer) {
  if (value.is_null()) return std::monostate{};
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>();
  if (value.is_number_integer()) return to_int64(value, pointer);
  if (value.is_number_float()) return value.get<double>();
  fail("table cells must be null, text, numbers, or booleans", pointer);
}

ResultTable to_table(const json& spec, const std::string& pointer) {
  if (!spec.is_object()) fail("'$table' must be an object", pointer);
  for (const auto& [key, ignored] : spec.items()) {
    if (key != "columns" && key != "rows") {
      fail("'$table' allows only 'columns' and 'rows', not '" + key + "'", pointer);
    }
  }
  if (!spec.contains("columns") || !spec["columns"].is_array()) {
    fail("'$table' needs a 'columns' array", pointer);
  }
  if (!spec.contains("rows") || !spec["rows"].is_array()) {
    fail("'$table' needs a 'rows' array", pointer);
  }
  std::vector<std::string> columns;
  for (std::size_t i = 0; i < spec["columns"].size(); ++i) {
    const json& column = spec["columns"][i];
    if (!column.is_string()) {
      fail("column names must be text", pointer + "/columns/" + std::to_string(i));
    }
    columns.push_back(column.get<std::string>());
  }
  std::vector<std::vector<Cell>> rows;
  for (std::size_t r = 0; r < spec["rows"].size(); ++r) {
    const json& row = spec["rows"][r];
    const std::string row_pointer = pointer + "/rows/" + std::to_string(r);
    if (!row.is_array()) fail("each row must be an array", row_pointer);
    std::vector<Cell> cells;
    for (std::size_t c = 0; c < row.size(); ++c) {
      cells.push_back(to_cell(row[c], row_pointer + "/" + std::to_string(c)));
    }
    rows.push_back(std::move(cells));
  }
  try {
    return table_from_rows(std::move(columns), std::move(rows));
  } catch (const Error& e) {
    raise(e.code(), e.detail() + " at " + pointer);
  }
}

InstancePtr build_node(const SchemaBundle& bundle, const std::string& constructor,
                       const json& object, const std::string& pointer);

FieldValue to_value(const SchemaBundle& bundle, const json& value,
                    const std::string& pointer) {
  if (value.is_null()) {
    fail("null is not a field value; omit the field instead", pointer);
  }
  if (value.is_string()) return FieldValue::text(value.get<std::string>());
  if (value.is_boolean()) return FieldValue::boolean(value.get<bool>());
  if (value.is_number_integer()) return FieldValue::integer(to_int64(value, pointer));
  if (value.is_number_float()) return FieldValue::number(value.get<double>());
  if (value.is_array()) {
    FieldValue::Items items;
    for (std::size_t i = 0; i < value.size(); ++i) {
      const std::string item_pointer = pointer + "/" + std::to_string(i);
      if (value[i].is_array()) fail("arrays cannot nest inside arrays", item_pointer);
      items.push_back(to_value(bundle, value[i], item_pointer));
    }
    return FieldValue::many(std::move(items));
  }
  // Objects: a $uri reference, a $table, or a nested $type'd instance.
  if (value.contains("$uri")) {
    if (value.size() != 1) fail("'$uri' objects take no other keys", pointer);
    if (!value["$uri"].is_string()) fail("'$uri' must be text", pointer);
    return FieldValue::uri(value["$uri"].get<std::string>());
  }
  if (value.contains("$table")) {
    if (value.size() != 1) fail("'$table' objects take no other keys", pointer);
    return FieldValue::table(to_table(value["$table"], pointer + "/$table"));
  }
  if (!value.contains("$type")) {
    fail("nested objects need a '$type' naming a constructor", pointer);
  }
  if (!value["$type"].is_string()) fail("'$type' must be text", pointer);
  return FieldValue::nested(
      build_node(bundle, value["$type"].get<std::string>(), value, pointer));
}

InstancePtr build_node(const SchemaBundle& bundle, const std::string& constructor,
                       const json& object, const std::string& pointer) {
  InstancePtr instance;
  try {
    instance = new_instance(bundle, constructor);
  } catch (const Error& e) {
    raise(e.code(), e.detail() + " at " + pointer);
  }
  for (const auto& [key, value] : object.items()) {
    if (key == "$type") continue;
    if (!key.empty() && key.front() == '$') {
      fail("unknown directive '" + key + "'", pointer);
    }
    const std::string field_pointer = pointer + "/" + escape_pointer_token(key);
    FieldValue converted = to_value(bundle, value, field_pointer);
    try {
      instance->set_field(key, std::move(converted));
    } catch (const Error& e) {
      raise(e.code(), e.detail() + " at " + field_pointer);
    }
  }
  return instance;
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::ManifestError, std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!parsed.is_object()) {
    raise(ErrorCode::ManifestError, "manifest must be a JSON object");
  }
  for (const auto& [key, ignored] : parsed.items()) {
    if (key != "schema_url" && key != "body") {
      raise(ErrorCode::ManifestError,
            "manifest allows only 'schema_url' and 'body', not '" + key + "'");
    }
  }
  if (!parsed.contains("schema_url") || !parsed["schema_url"].is_string()) {
    raise(ErrorCode::ManifestError, "manifest needs a 'schema_url' text entry");
  }
  if (!parsed.contains("body") || !parsed["body"].is_object()) {
    raise(ErrorCode::ManifestError, "manifest needs a 'body' object");
  }
  return Manifest{parsed["schema_url"].get<std::string>(), parsed["body"]};
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot read manifest " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str());
}

InstancePtr build_from_manifest(const Manifest& manifest, const SchemaBundle& bundle) {
  std::string constructor;
  if (manifest.body.contains("$type")) {
    if (!manifest.body["$type"].is_string()) {
      raise(ErrorCode::ManifestError, "'$type' must be text at /body");
    }
    constructor = manifest.body["$type"].get<std::string>();
  } else {
    constructor = bundle.root_def().constructor_name;
  }
  return build_node(bundle, constructor, manifest.body, "/body");
}

}  // namespace dtforge
