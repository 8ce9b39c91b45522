#pragma once

#include <stdexcept>
#include <string>

namespace opcat {

enum class ErrorCode {
    MalformedTable,
    NotComposable,
    MissingEntry,
    MalformedSpan,
    NotACocone,
    InconsistentCocone,
    UnresolvedReference,
    InterfaceMismatch,
    UnknownBox,
    MissingChoice,
    WrongBoxFiller,
    EmptyDesignSpace,
    UnknownTarget,
    MalformedPlan,
    InvalidPlan,
    ParseError,
    SchemaVersionMismatch,
    CyclicDecomposition,
    UsageError,
};

const char* error_code_name(ErrorCode code);

/// Thrown for broken preconditions and unresolvable references.
/// Law and wiring failures are collected in ValidationReport instead.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

} // namespace opcat
