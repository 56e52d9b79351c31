#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tracelink {

enum class ErrorKind {
    Load,        // missing or unreadable file
    Validation,  // dataset or configuration contents are inconsistent
    Parse,       // malformed input file
    Config,      // bad command-line / run configuration
    Build,       // matrix construction failed
    Lookup,      // unknown document id
    Numeric,     // SVD did not converge and similar
    Evaluation,  // metric preconditions violated (e.g. empty oracle)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Same kind, message prefixed with a context tag such as a stage name.
    Error with_context(std::string_view context) const {
        return Error(kind_, std::string(context) + ": " + what());
    }

private:
    ErrorKind kind_;
};

std::string_view to_string(ErrorKind kind);

// 2 for configuration/validation problems, 1 for runtime/numeric failures.
int exit_code_for(ErrorKind kind);

}  // namespace tracelink
