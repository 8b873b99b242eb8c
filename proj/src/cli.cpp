#include "dtforge/cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI/CLI.hpp>
#include <nlohmann/json.hpp>

#include "dtforge/bundled_schemata.hpp"
#include "dtforge/error.hpp"
#include "dtforge/identifier.hpp"
#include "dtforge/jsonld.hpp"
#include "dtforge/manifest.hpp"
#include "dtforge/schema_store.hpp"

namespace dtforge {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedIdentifier:
    case ErrorCode::UnknownRegistry:
    case ErrorCode::ManifestError:
      return 2;
    case ErrorCode::SchemaNotFound:
    case ErrorCode::NetworkDisabled:
    case ErrorCode::RemoteError:
    case ErrorCode::MalformedDocument:
    case ErrorCode::DanglingReference:
    case ErrorCode::DuplicateConstructor:
    case ErrorCode::BindError:
      return 3;
    case ErrorCode::UnknownConstructor:
    case ErrorCode::UnknownField:
    case ErrorCode::TypeMismatch:
    case ErrorCode::RaggedRows:
    case ErrorCode::DuplicateColumn:
    case ErrorCode::EmptyColumnName:
    case ErrorCode::ContextCollision:
      return 4;
    case ErrorCode::IoError:
      return 5;
  }
  return 1;
}

int usage_error(const std::string& message) {
  std::cerr << "dtforge: " << message << "\n";
  return 2;
}

bool apply_registry_overrides(StoreConfig& config, const std::vector<std::string>& overrides,
                              std::string& problem) {
  for (const std::string& entry : overrides) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
      problem = "--registry expects tag=base-url, got '" + entry + "'";
      return false;
    }
    const std::string tag = entry.substr(0, eq);
    const std::string url = entry.substr(eq + 1);
    if (tag == "epic") {
      config.registry_endpoints[Registry::Epic] = url;
    } else if (tag == "orkg") {
      config.registry_endpoints[Registry::Orkg] = url;
    } else {
      problem = "--registry tag must be 'epic' or 'orkg', got '" + tag + "'";
      return false;
    }
  }
  return true;
}

std::string render_target(const SchemaBundle& bundle, const FieldDescriptor& field) {
  switch (field.kind) {
    case TargetKind::Scalar:
      return "scalar";
    case TargetKind::Uri:
      return "uri";
    case TargetKind::Table:
      return "table";
    case TargetKind::Nested:
      break;
  }
  if (field.nested_ids.empty()) return "nested<any>";
  std::string out = "nested<";
  for (std::size_t i = 0; i < field.nested_ids.size(); ++i) {
    if (i != 0) out += " | ";
    const SchemaDef* member = bundle.find_by_id(field.nested_ids[i]);
    out += member != nullptr ? member->constructor_name : canonicalize(field.nested_ids[i]);
  }
  out += ">";
  return out;
}

void print_schema(const SchemaBundle& bundle, const SchemaDef& def) {
  std::cout << def.constructor_name << " " << canonicalize(def.id) << "\n";
  if (def.fields.empty()) {
    std::cout << "  (no fields)\n";
  }
  for (const FieldDescriptor& field : def.fields) {
    std::cout << "  " << field.name << ": " << render_target(bundle, field);
    if (field.repeatable) std::cout << " [repeatable]";
    std::cout << "\n";
  }
}

int cmd_show_fields(SchemaStore& store, const std::string& url) {
  const SchemaBundle bundle = store.load_datatype(url);
  const SchemaDef& root = bundle.root_def();
  print_schema(bundle, root);
  for (const auto& [name, def] : bundle.members) {
    if (name == root.constructor_name) continue;
    std::cout << "\n";
    print_schema(bundle, def);
  }
  return 0;
}

bool parse_answer_char(char c, bool& out) {
  switch (c) {
    case 'y':
    case 'Y':
      out = true;
      return true;
    case 'n':
    case 'N':
      out = false;
      return true;
    default:
      return false;
  }
}

int cmd_suggest(const std::string& answers_flag) {
  std::array<bool, kSuggestionQuestionCount> answers{};
  if (!answers_flag.empty()) {
    if (answers_flag.size() != kSuggestionQuestionCount) {
      return usage_error("--answers needs exactly " +
                         std::to_string(kSuggestionQuestionCount) + " y/n characters");
    }
    for (std::size_t i = 0; i < answers_flag.size(); ++i) {
      if (!parse_answer_char(answers_flag[i], answers[i])) {
        return usage_error("--answers accepts only 'y' and 'n', got '" +
                           std::string(1, answers_flag[i]) + "'");
      }
    }
  } else {
    const auto& questions = suggestion_questions();
    for (std::size_t i = 0; i < questions.size(); ++i) {
      std::cout << questions[i] << " [y/n] " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        return usage_error("need an answer for every question");
      }
      // trim
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
        line.pop_back();
      }
      std::size_t start = 0;
      while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) {
        ++start;
      }
      line.erase(0, start);
      std::transform(line.begin(), line.end(), line.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      if (line == "y" || line == "yes") {
        answers[i] = true;
      } else if (line == "n" || line == "no") {
        answers[i] = false;
      } else {
        return usage_error("answers must be y or n, got '" + line + "'");
      }
    }
  }

  const std::optional<std::string> suggestion = suggest_schema(answers);
  if (suggestion) {
    const bundled::BundledDocument* doc = bundled::find_by_constructor(*suggestion);
    std::cout << *suggestion << " " << canonicalize(bundled::id_of(*doc)) << "\n";
    return 0;
  }
  const bundled::BundledDocument* general = bundled::find_by_constructor("data_analysis");
  std::cout << "no schema matched; the general-purpose container fits any analysis:\n";
  std::cout << "data_analysis " << canonicalize(bundled::id_of(*general)) << "\n";
  return 0;
}

int cmd_build(SchemaStore& store, const std::string& manifest_path,
              const std::string& out_path) {
  const Manifest manifest = load_manifest(manifest_path);
  const SchemaBundle bundle = store.load_datatype(manifest.schema_url);
  InstancePtr instance;
  try {
    instance = build_from_manifest(manifest, bundle);
  } catch (const Error& e) {
    raise(e.code(), e.detail() + " in " + manifest_path);
  }
  const JsonLdDocument doc = to_jsonld(instance);
  for (const std::string& warning : doc.warnings) {
    std::cerr << "dtforge: warning: " << warning << "\n";
  }
  write_document(doc, out_path);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

// --- validate -----------------------------------------------------------

std::set<std::string> known_type_urls(const std::string& bundle_dir) {
  std::set<std::string> urls;
  if (bundle_dir.empty()) {
    for (const bundled::BundledDocument& doc : bundled::documents()) {
      urls.insert(canonicalize(bundled::id_of(doc)));
    }
    return urls;
  }
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(bundle_dir, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    if (!in) continue;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) continue;
    if (doc.contains("pid") && doc["pid"].is_string()) {
      urls.insert(doc["pid"].get<std::string>());
    }
  }
  return urls;
}

void collect_findings(const nlohmann::json& node, const std::set<std::string>& context_terms,
                      const std::set<std::string>& known_types, const std::string& pointer,
                      std::vector<std::string>& findings) {
  if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      collect_findings(node[i], context_terms, known_types,
                       pointer + "/" + std::to_string(i), findings);
    }
    return;
  }
  if (!node.is_object()) return;
  for (const auto& [key, value] : node.items()) {
    if (key == "@type") {
      if (!value.is_string() || known_types.count(value.get<std::string>()) == 0) {
        findings.push_back("unknown-type: @type " + value.dump() + " at " +
                           (pointer.empty() ? "/" : pointer) +
                           " is not a known schema");
      }
      continue;
    }
    if (!key.empty() && key.front() == '@') continue;
    if (context_terms.count(key) == 0) {
      findings.push_back("context-closure: key '" + key + "' at " +
                         (pointer.empty() ? "/" : pointer) + " is not mapped in @context");
    }
  }
  if (node.contains("columns") && node["columns"].is_array() && node.contains("rows") &&
      node["rows"].is_array()) {
    const std::size_t width = node["columns"].size();
    for (std::size_t r = 0; r < node["rows"].size(); ++r) {
      if (node["rows"][r].is_array() && node["rows"][r].size() != width) {
        findings.push_back("table-arity: row " + std::to_string(r) + " at " +
                           (pointer.empty() ? "/" : pointer) + " has " +
                           std::to_string(node["rows"][r].size()) + " cells, expected " +
                           std::to_string(width));
      }
    }
  }
  for (const auto& [key, value] : node.items()) {
    if (!key.empty() && key.front() == '@') continue;
    collect_findings(value, context_terms, known_types, pointer + "/" + key, findings);
  }
}

int cmd_validate(const std::string& file, const std::string& bundle_dir) {
  std::ifstream in(file, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot read " + file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    return usage_error(file + " is not valid JSON: " + e.what());
  }

  std::vector<std::string> findings;
  std::set<std::string> context_terms;
  if (!doc.is_object()) {
    findings.push_back("context-closure: document root is not an object");
  } else {
    if (doc.contains("@context") && doc["@context"].is_object()) {
      for (const auto& [term, uri] : doc["@context"].items()) context_terms.insert(term);
    } else {
      findings.push_back("context-closure: document has no @context map");
    }
    if (!doc.contains("@type")) {
      findings.push_back("unknown-type: root node carries no @type");
    }
    collect_findings(doc, context_terms, known_type_urls(bundle_dir), "", findings);
  }

  if (findings.empty()) {
    std::cout << "ok: " << file << " passed validation\n";
    return 0;
  }
  for (const std::string& finding : findings) std::cout << finding << "\n";
  std::cerr << "dtforge: " << findings.size() << " finding(s) in " << file << "\n";
  return 6;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Build, inspect, and serialize data-analysis records from registered schemata"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand as well

  StoreConfig config;
  std::vector<std::string> registry_overrides;
  app.add_flag("--offline", config.offline, "Forbid registry network requests");
  app.add_option("--bundle-dir", config.bundle_dir,
                 "Directory of schema documents overriding the embedded catalogue");
  app.add_option("--registry", registry_overrides,
                 "Override a registry endpoint as tag=base-url (tags: epic, orkg)");

  auto* show = app.add_subcommand(
      "show-fields", "List constructors and fields for a schema and its references");
  std::string show_url;
  show->add_option("url", show_url, "Schema PID URL")->required();

  auto* suggest =
      app.add_subcommand("suggest", "Suggest an analysis schema from five yes/no answers");
  std::string answers;
  suggest->add_option("--answers", answers,
                      "Five y/n characters answering the questions in order");

  auto* build = app.add_subcommand(
      "build", "Build an instance tree from a manifest and write a JSON-LD document");
  std::string manifest_path;
  std::string out_path;
  build->add_option("manifest", manifest_path, "Manifest file (JSON)")->required();
  build->add_option("-o,--out", out_path, "Output document path")->required();

  auto* validate =
      app.add_subcommand("validate", "Check a JSON-LD document against known schemata");
  std::string validate_file;
  validate->add_option("file", validate_file, "Document to check")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string problem;
  if (!apply_registry_overrides(config, registry_overrides, problem)) {
    return usage_error(problem);
  }

  try {
    if (show->parsed()) {
      SchemaStore store(config);
      return cmd_show_fields(store, show_url);
    }
    if (suggest->parsed()) {
      return cmd_suggest(answers);
    }
    if (build->parsed()) {
      SchemaStore store(config);
      return cmd_build(store, manifest_path, out_path);
    }
    if (validate->parsed()) {
      return cmd_validate(validate_file, config.bundle_dir);
    }
  } catch (const Error& e) {
    std::cerr << "dtforge: error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "dtforge: unexpected error: " << e.what() << "\n";
    return 1;
  }
  return usage_error("no subcommand given");
}

}  // namespace dtforge
