#pragma once

#include <string>
#include <string_view>

namespace tracelink::corpus {

// The Porter (1980) suffix-stripping stemmer, following the reference C
// implementation (including its "bli" -> "ble" and "logi" -> "log" rules).
// Input must be lowercase ASCII letters; words of length <= 2 are returned as is.
std::string porter_stem(std::string_view word);

}  // namespace tracelink::corpus
