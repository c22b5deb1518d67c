#include "support/error.hpp"

namespace provaud {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::IdConflict: return "IdConflict";
        case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownPrefix: return "UnknownPrefix";
        case ErrorCode::MissingVarNamespace: return "MissingVarNamespace";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::UnknownTopic: return "UnknownTopic";
        case ErrorCode::ScenarioParseError: return "ScenarioParseError";
        case ErrorCode::SchemaViolation: return "SchemaViolation";
        case ErrorCode::StorageError: return "StorageError";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::UnknownQuestion: return "UnknownQuestion";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace provaud
