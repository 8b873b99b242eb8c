#include "dtforge/schema_store.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "dtforge/bundled_schemata.hpp"
#include "dtforge/error.hpp"

namespace dtforge {

namespace {

using nlohmann::json;

std::optional<std::string> read_file_if_exists(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SchemaId parse_pid(const json& value, const std::string& what) {
  if (!value.is_string()) {
    raise(ErrorCode::MalformedDocument, what + " must be a schema URL string");
  }
  try {
    return parse_schema_identifier(value.get<std::string>());
  } catch (const Error& e) {
    raise(ErrorCode::MalformedDocument, what + " is not a schema URL: " + e.what());
  }
}

FieldDescriptor parse_field(const json& field) {
  if (!field.is_object()) {
    raise(ErrorCode::MalformedDocument, "field entries must be objects");
  }
  FieldDescriptor descriptor;
  if (!field.contains("name") || !field["name"].is_string() ||
      field["name"].get<std::string>().empty()) {
    raise(ErrorCode::MalformedDocument, "field entry is missing a non-empty 'name'");
  }
  descriptor.name = field["name"].get<std::string>();

  if (!field.contains("target")) {
    raise(ErrorCode::MalformedDocument, "field '" + descriptor.name + "' has no 'target'");
  }
  const json& target = field["target"];
  if (target.is_string()) {
    const std::string text = target.get<std::string>();
    if (text == "scalar") {
      descriptor.kind = TargetKind::Scalar;
    } else if (text == "uri") {
      descriptor.kind = TargetKind::Uri;
    } else if (text == "table") {
      descriptor.kind = TargetKind::Table;
      descriptor.nested_ids.push_back(table_schema_id());
    } else {
      descriptor.kind = TargetKind::Nested;
      descriptor.nested_ids.push_back(
          parse_pid(target, "target of field '" + descriptor.name + "'"));
    }
  } else if (target.is_array()) {
    descriptor.kind = TargetKind::Nested;
    for (const json& entry : target) {
      descriptor.nested_ids.push_back(
          parse_pid(entry, "target of field '" + descriptor.name + "'"));
    }
    if (descriptor.nested_ids.empty()) {
      raise(ErrorCode::MalformedDocument,
            "field '" + descriptor.name + "' has an empty target list");
    }
  } else {
    raise(ErrorCode::MalformedDocument,
          "target of field '" + descriptor.name + "' must be a string or a list of schema URLs");
  }

  if (field.contains("property_uri")) {
    if (!field["property_uri"].is_string()) {
      raise(ErrorCode::MalformedDocument,
            "property_uri of field '" + descriptor.name + "' must be a string");
    }
    descriptor.property_uri = field["property_uri"].get<std::string>();
  }
  if (field.contains("repeatable")) {
    if (!field["repeatable"].is_boolean()) {
      raise(ErrorCode::MalformedDocument,
            "repeatable of field '" + descriptor.name + "' must be a boolean");
    }
    descriptor.repeatable = field["repeatable"].get<bool>();
  }
  return descriptor;
}

}  // namespace

std::map<Registry, std::string> StoreConfig::default_registry_endpoints() {
  return {
      {Registry::Epic, "https://typeregistry.pidconsortium.net"},
      {Registry::Orkg, "https://orkg.org"},
  };
}

bool offline_env_forced() {
  const char* value = std::getenv("DTFORGE_OFFLINE");
  return value != nullptr && value[0] != '\0' && std::string_view(value) != "0";
}

SchemaDef parse_schema_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::MalformedDocument, std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    raise(ErrorCode::MalformedDocument, "document root must be an object");
  }
  if (!doc.contains("pid")) {
    raise(ErrorCode::MalformedDocument, "document has no 'pid'");
  }

  SchemaDef def;
  def.id = parse_pid(doc["pid"], "pid");
  if (!doc.contains("constructor_name") || !doc["constructor_name"].is_string() ||
      doc["constructor_name"].get<std::string>().empty()) {
    raise(ErrorCode::MalformedDocument, "document has no non-empty 'constructor_name'");
  }
  def.constructor_name = doc["constructor_name"].get<std::string>();
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) {
      raise(ErrorCode::MalformedDocument, "'label' must be a string");
    }
    def.label = doc["label"].get<std::string>();
  }

  if (doc.contains("fields")) {
    if (!doc["fields"].is_array()) {
      raise(ErrorCode::MalformedDocument, "'fields' must be an array");
    }
    std::set<std::string> seen;
    for (const json& field : doc["fields"]) {
      FieldDescriptor descriptor = parse_field(field);
      if (!seen.insert(descriptor.name).second) {
        raise(ErrorCode::MalformedDocument,
              "duplicate field '" + descriptor.name + "' in schema '" + def.constructor_name +
                  "'");
      }
      def.fields.push_back(std::move(descriptor));
    }
  }
  return def;
}

SchemaStore::SchemaStore(StoreConfig config)
    : config_(std::move(config)), offline_(config_.offline || offline_env_forced()) {}

std::optional<SchemaDef> SchemaStore::lookup_static(const SchemaId& id) const {
  if (!config_.bundle_dir.empty()) {
    const std::filesystem::path path =
        std::filesystem::path(config_.bundle_dir) / (id.suffix + ".json");
    const auto text = read_file_if_exists(path);
    if (!text) return std::nullopt;
    SchemaDef def = parse_schema_document(*text);
    if (def.id != id) return std::nullopt;
    return def;
  }
  const bundled::BundledDocument* doc = bundled::find_by_suffix(id.suffix);
  if (doc == nullptr) return std::nullopt;
  SchemaDef def = parse_schema_document(std::string(doc->text));
  if (def.id != id) return std::nullopt;
  return def;
}

std::optional<SchemaDef> SchemaStore::lookup_disk_cache(const SchemaId& id) const {
  if (config_.cache_dir.empty()) return std::nullopt;
  const std::filesystem::path path =
      std::filesystem::path(config_.cache_dir) / (id.suffix + ".json");
  const auto text = read_file_if_exists(path);
  if (!text) return std::nullopt;
  try {
    SchemaDef def = parse_schema_document(*text);
    if (def.id != id) return std::nullopt;
    return def;
  } catch (const Error&) {
    return std::nullopt;  // stale or truncated cache file, ignore
  }
}

SchemaDef SchemaStore::fetch_remote(const SchemaId& id) const {
  const auto endpoint = config_.registry_endpoints.find(id.registry);
  if (endpoint == config_.registry_endpoints.end()) {
    raise(ErrorCode::RemoteError,
          std::string("no endpoint configured for registry '") + to_string(id.registry) + "'");
  }
  std::string path;
  switch (id.registry) {
    case Registry::Epic: path = "/" + id.prefix + "/" + id.suffix; break;
    case Registry::Orkg: path = "/template/" + id.suffix; break;
  }
  const std::string url = endpoint->second + path;

  httplib::Client client(endpoint->second);
  client.set_connection_timeout(std::chrono::seconds(5));
  client.set_read_timeout(std::chrono::seconds(15));
  client.set_follow_location(true);

  httplib::Result result = client.Get(path);
  if (!result) {
    raise(ErrorCode::RemoteError,
          "transport failure fetching " + url + ": " + httplib::to_string(result.error()));
  }
  if (result->status == 404) {
    raise(ErrorCode::SchemaNotFound, "registry has no schema " + canonicalize(id) + " (HTTP 404)");
  }
  if (result->status != 200) {
    raise(ErrorCode::RemoteError,
          "transport failure fetching " + url + ": HTTP " + std::to_string(result->status));
  }
  try {
    SchemaDef def = parse_schema_document(result->body);
    if (def.id != id) {
      raise(ErrorCode::MalformedDocument, "document pid " + canonicalize(def.id) +
                                              " does not match the requested " + canonicalize(id));
    }
    return def;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedDocument) {
      raise(ErrorCode::RemoteError, "malformed document from " + url + ": " + e.what());
    }
    throw;
  }
}

SchemaDef SchemaStore::get_schema(const SchemaId& id) {
  const std::string key = canonicalize(id);
  std::lock_guard<std::mutex> lock(mutex_);

  if (auto def = lookup_static(id)) {
    ++stats_.static_hits;
    return *def;
  }

  if (const auto it = cache_.find(key); it != cache_.end()) {
    ++stats_.cache_hits;
    if (it->second.def) return *it->second.def;
    throw Error(it->second.error, it->second.error_message);
  }

  if (auto def = lookup_disk_cache(id)) {
    ++stats_.cache_hits;
    cache_[key] = CacheEntry{*def, ErrorCode::SchemaNotFound, {}};
    return *def;
  }

  if (offline_) {
    raise(ErrorCode::NetworkDisabled,
          key + " is not in the static bundle and offline mode forbids registry requests");
  }

  ++stats_.remote_fetches;
  try {
    SchemaDef def = fetch_remote(id);
    cache_[key] = CacheEntry{def, ErrorCode::SchemaNotFound, {}};
    if (!config_.cache_dir.empty()) {
      const std::filesystem::path path =
          std::filesystem::path(config_.cache_dir) / (id.suffix + ".json");
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
      std::ofstream out(path, std::ios::binary);
      if (out) {
        // Cache the document in the bundle-directory layout so a cache dir
        // can be promoted to a bundle dir by renaming it.
        nlohmann::ordered_json doc;
        doc["pid"] = canonicalize(def.id);
        doc["constructor_name"] = def.constructor_name;
        doc["label"] = def.label;
        doc["fields"] = nlohmann::ordered_json::array();
        for (const FieldDescriptor& field : def.fields) {
          nlohmann::ordered_json entry;
          entry["name"] = field.name;
          switch (field.kind) {
            case TargetKind::Scalar: entry["target"] = "scalar"; break;
            case TargetKind::Uri: entry["target"] = "uri"; break;
            case TargetKind::Table: entry["target"] = "table"; break;
            case TargetKind::Nested:
              if (field.nested_ids.size() == 1) {
                entry["target"] = canonicalize(field.nested_ids.front());
              } else {
                auto list = nlohmann::ordered_json::array();
                for (const SchemaId& ref : field.nested_ids) list.push_back(canonicalize(ref));
                entry["target"] = std::move(list);
              }
              break;
          }
          if (!field.property_uri.empty()) entry["property_uri"] = field.property_uri;
          if (field.repeatable) entry["repeatable"] = true;
          doc["fields"].push_back(std::move(entry));
        }
        out << doc.dump(2) << "\n";
      }
    }
    return def;
  } catch (const Error& e) {
    cache_[key] = CacheEntry{std::nullopt, e.code(), e.detail()};
    throw;
  }
}

SchemaBundle SchemaStore::load_datatype(std::string_view url) {
  const SchemaId root_id = parse_schema_identifier(url);
  SchemaDef root = get_schema(root_id);
  return close_over(root, [this](const SchemaId& ref) { return get_schema(ref); });
}

FetchStats SchemaStore::stats() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return stats_;
}

}  // namespace dtforge
