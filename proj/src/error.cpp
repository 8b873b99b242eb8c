#include "dtforge/error.hpp"

namespace dtforge {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedIdentifier: return "malformed-identifier";
    case ErrorCode::UnknownRegistry: return "unknown-registry";
    case ErrorCode::SchemaNotFound: return "schema-not-found";
    case ErrorCode::NetworkDisabled: return "network-disabled";
    case ErrorCode::RemoteError: return "remote-error";
    case ErrorCode::MalformedDocument: return "malformed-document";
    case ErrorCode::DanglingReference: return "dangling-reference";
    case ErrorCode::DuplicateConstructor: return "duplicate-constructor";
    case ErrorCode::UnknownConstructor: return "unknown-constructor";
    case ErrorCode::UnknownField: return "unknown-field";
    case ErrorCode::TypeMismatch: return "type-mismatch";
    case ErrorCode::RaggedRows: return "ragged-rows";
    case ErrorCode::DuplicateColumn: return "duplicate-column";
    case ErrorCode::EmptyColumnName: return "empty-column-name";
    case ErrorCode::ContextCollision: return "context-collision";
    case ErrorCode::ManifestError: return "manifest-error";
    case ErrorCode::IoError: return "io-error";
    case ErrorCode::BindError: return "bind-error";
  }
  return "unknown-error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(message) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace dtforge
