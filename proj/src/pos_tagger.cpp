#include "tracelink/pos_tagger.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "tracelink/stopwords.hpp"

namespace tracelink::corpus {
namespace {

// Sorted lexicons. Words found here take precedence over suffix rules.
constexpr std::array kOther = std::to_array<std::string_view>({
    "able", "according", "although", "am", "an", "are", "be", "been", "being", "but", "can",
    "could", "did", "do", "does", "each", "either", "every", "from", "had", "has", "have", "how",
    "if", "into", "is", "it", "its", "may", "might", "must", "neither", "not", "of", "or", "shall",
    "should", "than", "that", "the", "their", "then", "these", "this", "those", "to", "was",
    "were", "what", "when", "where", "which", "while", "who", "whom", "whose", "why", "will",
    "with", "would", "yes",
});

constexpr std::array kVerbs = std::to_array<std::string_view>({
    "accept", "access", "activate", "add", "allow", "apply", "assign", "build", "cancel", "change",
    "check", "choose", "click", "close", "compute", "configure", "connect", "contain", "create",
    "define", "delete", "deploy", "disable", "display", "edit", "enable", "enter", "execute",
    "fly", "generate", "handle", "hover", "ignore", "include", "initialize", "launch", "load",
    "log", "maintain", "manage", "modify", "monitor", "notify", "open", "perform", "plan",
    "prevent", "print", "provide", "read", "receive", "register", "remove", "render", "request",
    "require", "reset", "respond", "return", "run", "save", "schedule", "select", "send", "set",
    "show", "specify", "start", "stop", "store", "submit", "support", "track", "transmit",
    "update", "upload", "use", "validate", "verify", "view", "write",
});

constexpr std::array kAdjectives = std::to_array<std::string_view>({
    "active", "available", "current", "default", "different", "emergency", "empty", "entire",
    "external", "final", "first", "flight", "full", "good", "high", "internal", "invalid", "large",
    "last", "left", "local", "low", "main", "manual", "new", "next", "old", "previous", "real",
    "remote", "right", "safe", "same", "selected", "separate", "simple", "single", "small",
    "valid", "virtual",
});

bool in(std::span<const std::string_view> sorted, std::string_view word) {
    return std::binary_search(sorted.begin(), sorted.end(), word);
}

bool ends_with(std::string_view word, std::string_view suffix) {
    return word.size() > suffix.size() + 1 && word.ends_with(suffix);
}

}  // namespace

std::optional<PosTag> tag_word(std::string_view raw) {
    if (raw.empty()) return std::nullopt;
    if (std::any_of(raw.begin(), raw.end(), [](unsigned char c) { return std::isdigit(c); })) {
        return std::nullopt;
    }
    if (!std::all_of(raw.begin(), raw.end(), [](unsigned char c) { return std::isalpha(c); })) {
        return PosTag::Other;
    }

    const bool all_upper = raw.size() > 1 &&
        std::all_of(raw.begin(), raw.end(), [](unsigned char c) { return std::isupper(c); });

    std::string word(raw);
    std::transform(word.begin(), word.end(), word.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    if (in(kOther, word) || is_stopword(word)) return PosTag::Other;
    if (all_upper) return PosTag::Noun;  // acronyms such as UAV
    if (in(kVerbs, word)) return PosTag::Verb;
    if (in(kAdjectives, word)) return PosTag::Adjective;

    // Inflected forms of known verbs.
    for (std::string_view suffix : {"s", "es", "ed", "d", "ing"}) {
        if (word.size() > suffix.size() && word.ends_with(suffix)) {
            const auto base = std::string_view(word).substr(0, word.size() - suffix.size());
            if (in(kVerbs, base)) return PosTag::Verb;
            if (suffix == "ing" && in(kVerbs, std::string(base) + "e")) return PosTag::Verb;
        }
    }

    for (std::string_view suffix : {"able", "ible", "ous", "ful", "less", "ive", "ic", "ical",
                                    "al", "ary"}) {
        if (ends_with(word, suffix)) return PosTag::Adjective;
    }
    for (std::string_view suffix : {"tion", "tions", "sion", "ment", "ments", "ness", "ity",
                                    "ance", "ence", "er", "ers", "or", "ors", "ism", "ist"}) {
        if (ends_with(word, suffix)) return PosTag::Noun;
    }
    for (std::string_view suffix : {"ize", "ise", "ify", "ate", "ed", "ing"}) {
        if (ends_with(word, suffix)) return PosTag::Verb;
    }
    return PosTag::Noun;
}

}  // namespace tracelink::corpus

namespace tracelink::corpus {
static_assert(std::is_sorted(kOther.begin(), kOther.end()));
static_assert(std::is_sorted(kVerbs.begin(), kVerbs.end()));
static_assert(std::is_sorted(kAdjectives.begin(), kAdjectives.end()));
}  // namespace tracelink::corpus
