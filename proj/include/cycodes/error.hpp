#pragma once

#include <stdexcept>
#include <string>

namespace cycodes {

enum class ErrorKind {
    NotAPrime,
    BadDegree,
    CapExceeded,
    DivisionByZero,
    ZeroArgument,
    BadE,
    WrongE,
    IndexOutOfRange,
    NoDecomposition,
    SignResolutionFailure,
    NotSemiprimitive,
    EmptyIndexSet,
    DuplicateElement,
    NotInSet,
    OddLength,
    EvenLength,
    DimensionMismatch,
    BudgetExceeded,
    ContextMismatch,
    ParseError,
    Internal,
};

const char* to_string(ErrorKind k);

/// Library error carrying a machine-checkable kind next to the message.
/// Legitimate negative answers (no square root, no feasible scaling) are
/// returned as empty optionals instead; throwing is reserved for violated
/// preconditions, exceeded work caps, and internal invariant failures.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

}  // namespace cycodes
