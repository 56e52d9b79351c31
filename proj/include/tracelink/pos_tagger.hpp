#pragma once

#include <optional>
#include <string_view>

#include "tracelink/corpus.hpp"

namespace tracelink::corpus {

// Coarse part-of-speech guess from a small lexicon plus suffix rules.
// Stopwords and closed-class words are Other; tokens containing digits are
// left untagged.
std::optional<PosTag> tag_word(std::string_view word);

}  // namespace tracelink::corpus
