#pragma once

#include <stdexcept>
#include <string>

namespace dtforge {

enum class ErrorCode {
  MalformedIdentifier,
  UnknownRegistry,
  SchemaNotFound,
  NetworkDisabled,
  RemoteError,
  MalformedDocument,
  DanglingReference,
  DuplicateConstructor,
  UnknownConstructor,
  UnknownField,
  TypeMismatch,
  RaggedRows,
  DuplicateColumn,
  EmptyColumnName,
  ContextCollision,
  ManifestError,
  IoError,
  BindError,
};

const char* to_string(ErrorCode code) noexcept;

/// All failures surface as this exception; code() tells callers which
/// contract was violated without parsing the message. what() carries the
/// code name as a prefix, detail() the bare message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace dtforge
