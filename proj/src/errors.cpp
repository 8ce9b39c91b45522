#include "opcat/errors.hpp"

namespace opcat {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::MissingEntry: return "MissingEntry";
    case ErrorCode::MalformedSpan: return "MalformedSpan";
    case ErrorCode::NotACocone: return "NotACocone";
    case ErrorCode::InconsistentCocone: return "InconsistentCocone";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::InterfaceMismatch: return "InterfaceMismatch";
    case ErrorCode::UnknownBox: return "UnknownBox";
    case ErrorCode::MissingChoice: return "MissingChoice";
    case ErrorCode::WrongBoxFiller: return "WrongBoxFiller";
    case ErrorCode::EmptyDesignSpace: return "EmptyDesignSpace";
    case ErrorCode::UnknownTarget: return "UnknownTarget";
    case ErrorCode::MalformedPlan: return "MalformedPlan";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorCode::CyclicDecomposition: return "CyclicDecomposition";
    case ErrorCode::UsageError: return "UsageError";
    }
    return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

} // namespace opcat
