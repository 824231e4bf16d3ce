#include "cycodes/error.hpp"

namespace cycodes {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotAPrime: return "NotAPrime";
        case ErrorKind::BadDegree: return "BadDegree";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ZeroArgument: return "ZeroArgument";
        case ErrorKind::BadE: return "BadE";
        case ErrorKind::WrongE: return "WrongE";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NoDecomposition: return "NoDecomposition";
        case ErrorKind::SignResolutionFailure: return "SignResolutionFailure";
        case ErrorKind::NotSemiprimitive: return "NotSemiprimitive";
        case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
        case ErrorKind::DuplicateElement: return "DuplicateElement";
        case ErrorKind::NotInSet: return "NotInSet";
        case ErrorKind::OddLength: return "OddLength";
        case ErrorKind::EvenLength: return "EvenLength";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace cycodes
