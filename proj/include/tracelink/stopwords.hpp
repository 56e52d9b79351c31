#pragma once

#include <string_view>

namespace tracelink::corpus {

// Bundled English stopword list; expects a lowercase word.
bool is_stopword(std::string_view word);

std::size_t stopword_count();

}  // namespace tracelink::corpus
