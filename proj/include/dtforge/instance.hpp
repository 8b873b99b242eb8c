#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dtforge/schema_model.hpp"

namespace dtforge {

using Scalar = std::variant<std::string, std::int64_t, double, bool>;

/// A value serialized as a linked-data reference rather than a literal.
struct Uri {
  std::string value;

  friend bool operator==(const Uri&, const Uri&) = default;
};

/// One table cell; monostate is a missing value.
using Cell = std::variant<std::monostate, std::string, std::int64_t, double, bool>;

/// Named columns and typed cell rows, the shape of an analysis-results frame.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  friend bool operator==(const ResultTable&, const ResultTable&) = default;
};

ResultTable table_from_rows(std::vector<std::string> columns,
                            std::vector<std::vector<Cell>> rows);

class Instance;
using InstancePtr = std::shared_ptr<Instance>;

/// A field value: scalar, URI, nested instance, table, or an ordered list of
/// values for repeatable fields. Nested instances are shared, so mutating a
/// retrieved one is visible from the parent.
class FieldValue {
 public:
  using Items = std::vector<FieldValue>;
  using Storage = std::variant<Scalar, Uri, InstancePtr, ResultTable, Items>;

  FieldValue(Scalar scalar) : storage_(std::move(scalar)) {}
  FieldValue(Uri uri) : storage_(std::move(uri)) {}
  FieldValue(InstancePtr nested) : storage_(std::move(nested)) {}
  FieldValue(ResultTable table) : storage_(std::move(table)) {}

  static FieldValue text(std::string value) { return FieldValue(Scalar(std::move(value))); }
  static FieldValue integer(std::int64_t value) { return FieldValue(Scalar(value)); }
  static FieldValue number(double value) { return FieldValue(Scalar(value)); }
  static FieldValue boolean(bool value) { return FieldValue(Scalar(value)); }
  static FieldValue uri(std::string value) { return FieldValue(Uri{std::move(value)}); }
  static FieldValue nested(InstancePtr value) { return FieldValue(std::move(value)); }
  static FieldValue table(ResultTable value) { return FieldValue(std::move(value)); }
  static FieldValue many(Items items);

  bool is_scalar() const noexcept { return std::holds_alternative<Scalar>(storage_); }
  bool is_uri() const noexcept { return std::holds_alternative<Uri>(storage_); }
  bool is_nested() const noexcept { return std::holds_alternative<InstancePtr>(storage_); }
  bool is_table() const noexcept { return std::holds_alternative<ResultTable>(storage_); }
  bool is_many() const noexcept { return std::holds_alternative<Items>(storage_); }

  const Scalar& scalar() const { return std::get<Scalar>(storage_); }
  const Uri& uri() const { return std::get<Uri>(storage_); }
  const InstancePtr& nested() const { return std::get<InstancePtr>(storage_); }
  const ResultTable& table() const { return std::get<ResultTable>(storage_); }
  const Items& items() const { return std::get<Items>(storage_); }

  const char* kind_name() const noexcept;

 private:
  struct ManyTag {};
  FieldValue(ManyTag, Items items) : storage_(std::move(items)) {}

  Storage storage_;
};

/// A mutable record bound to one schema. Unset fields are absent; set-then-get
/// returns the last value set.
class Instance {
 public:
  explicit Instance(SchemaDef schema) : schema_(std::move(schema)) {}

  const SchemaDef& schema() const noexcept { return schema_; }

  void set_field(std::string_view name, FieldValue value);
  std::optional<FieldValue> get_field(std::string_view name) const;

  const std::map<std::string, FieldValue>& values() const noexcept { return values_; }

 private:
  SchemaDef schema_;
  std::map<std::string, FieldValue> values_;
};

using Assignment = std::pair<std::string, FieldValue>;

InstancePtr new_instance(const SchemaBundle& bundle, std::string_view constructor,
                         std::span<const Assignment> assignments = {});
InstancePtr new_instance(const SchemaBundle& bundle, std::string_view constructor,
                         std::initializer_list<Assignment> assignments);

}  // namespace dtforge
