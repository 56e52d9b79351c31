#include "tracelink/error.hpp"

namespace tracelink {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Load: return "load error";
        case ErrorKind::Validation: return "validation error";
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::Config: return "config error";
        case ErrorKind::Build: return "build error";
        case ErrorKind::Lookup: return "lookup error";
        case ErrorKind::Numeric: return "numeric error";
        case ErrorKind::Evaluation: return "evaluation error";
    }
    return "error";
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Load:
        case ErrorKind::Validation:
        case ErrorKind::Parse:
        case ErrorKind::Config:
            return 2;
        default:
            return 1;
    }
}

}  // namespace tracelink
