#pragma once

#include <string_view>

#include "tracelink/corpus.hpp"

namespace tracelink::corpus {

// Lexical scan of Java or C source. Recognizes class/struct/interface/enum
// declarations, method and function signatures with their parameters, field
// declarations at type or file scope, invocations, and comments.
CodeParts scan_code(std::string_view source);

}  // namespace tracelink::corpus
