#pragma once

#include <stdexcept>
#include <string>

namespace provaud {

enum class ErrorCode {
    IdConflict,
    DanglingEndpoint,
    KindMismatch,
    SyntaxError,
    UnknownPrefix,
    MissingVarNamespace,
    UnboundVariable,
    TypeMismatch,
    UnknownTopic,
    ScenarioParseError,
    SchemaViolation,
    StorageError,
    OutOfRange,
    UnknownQuestion,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// Domain error. `line`/`column` are 1-based and 0 when not applicable.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, int line = 0, int column = 0)
        : std::runtime_error(std::move(message)), code_(code), line_(line), column_(column) {}

    ErrorCode code() const { return code_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorCode code_;
    int line_;
    int column_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message, int line = 0, int column = 0) {
    throw Error(code, std::move(message), line, column);
}

} // namespace provaud
