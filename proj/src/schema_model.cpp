#include "dtforge/schema_model.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dtforge/error.hpp"

namespace dtforge {

const char* to_string(TargetKind kind) noexcept {
  switch (kind) {
    case TargetKind::Scalar: return "scalar";
    case TargetKind::Uri: return "uri";
    case TargetKind::Nested: return "nested";
    case TargetKind::Table: return "table";
  }
  return "unknown";
}

const FieldDescriptor* SchemaDef::find_field(std::string_view name) const {
  const auto it = std::find_if(fields.begin(), fields.end(),
                               [&](const FieldDescriptor& f) { return f.name == name; });
  return it == fields.end() ? nullptr : &*it;
}

const SchemaDef* SchemaBundle::find(std::string_view constructor) const {
  const auto it = members.find(std::string(constructor));
  return it == members.end() ? nullptr : &it->second;
}

const SchemaDef* SchemaBundle::find_by_id(const SchemaId& id) const {
  for (const auto& [name, def] : members) {
    if (def.id == id) return &def;
  }
  return nullptr;
}

const SchemaDef& SchemaBundle::root_def() const {
  const SchemaDef* def = find_by_id(root);
  if (def == nullptr) {
    raise(ErrorCode::DanglingReference, "bundle has no member for its root " + canonicalize(root));
  }
  return *def;
}

namespace {

void insert_member(SchemaBundle& bundle, SchemaDef def) {
  const auto it = bundle.members.find(def.constructor_name);
  if (it != bundle.members.end()) {
    raise(ErrorCode::DuplicateConstructor,
          "constructor '" + def.constructor_name + "' provided by both " +
              canonicalize(it->second.id) + " and " + canonicalize(def.id));
  }
  bundle.members.emplace(def.constructor_name, std::move(def));
}

}  // namespace

SchemaBundle close_over(const SchemaDef& root, const SchemaResolver& resolver) {
  SchemaBundle bundle;
  bundle.root = root.id;

  std::set<SchemaId> visited{root.id};
  std::deque<std::pair<SchemaId, std::string>> pending;  // (id, referring constructor)

  const auto enqueue_references = [&](const SchemaDef& def) {
    for (const FieldDescriptor& field : def.fields) {
      if (field.kind != TargetKind::Nested && field.kind != TargetKind::Table) continue;
      for (const SchemaId& ref : field.nested_ids) {
        if (visited.insert(ref).second) {
          pending.emplace_back(ref, def.constructor_name);
        }
      }
    }
  };

  insert_member(bundle, root);
  enqueue_references(root);

  while (!pending.empty()) {
    const auto [id, referrer] = pending.front();
    pending.pop_front();
    SchemaDef def;
    try {
      def = resolver(id);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SchemaNotFound) {
        raise(ErrorCode::DanglingReference, "schema '" + referrer + "' references " +
                                                canonicalize(id) +
                                                ", which cannot be resolved (" + e.what() + ")");
      }
      throw;
    }
    enqueue_references(def);
    insert_member(bundle, std::move(def));
  }
  return bundle;
}

const std::vector<FieldDescriptor>& list_fields(const SchemaDef& def) { return def.fields; }

const SchemaId& table_schema_id() {
  static const SchemaId id{Registry::Epic, "21.T11969", "5daf532b42329de1731a"};
  return id;
}

const std::array<std::string_view, kSuggestionQuestionCount>& suggestion_questions() {
  static const std::array<std::string_view, kSuggestionQuestionCount> questions = {
      "Is the method a benchmark-based model evaluation?",
      "Is the model hierarchical, mixed, or nested?",
      "Does the method compare means within or between groups?",
      "Is the method a clustering task?",
      "Is the method a classification or logistic/ordinal regression task?",
  };
  return questions;
}

std::optional<std::string> suggest_schema(
    const std::array<bool, kSuggestionQuestionCount>& answers) {
  static constexpr std::array<const char*, kSuggestionQuestionCount> schemata = {
      "algorithm_evaluation", "multilevel_analysis", "group_comparison",
      "class_discovery",      "class_prediction",
  };
  for (std::size_t i = 0; i < answers.size(); ++i) {
    if (answers[i]) return schemata[i];
  }
  return std::nullopt;
}

}  // namespace dtforge
