#include "tracelink/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "tracelink/code_scanner.hpp"
#include "tracelink/error.hpp"
#include "tracelink/porter_stemmer.hpp"
#include "tracelink/pos_tagger.hpp"
#include "tracelink/stopwords.hpp"

namespace tracelink::corpus {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string_view to_string(Level level) {
    switch (level) {
        case Level::Source: return "source";
        case Level::Intermediate: return "intermediate";
        case Level::Target: return "target";
    }
    return "?";
}

std::string_view to_string(Kind kind) {
    return kind == Kind::Code ? "code" : "nl";
}

std::string_view to_string(PosTag tag) {
    switch (tag) {
        case PosTag::Noun: return "noun";
        case PosTag::Verb: return "verb";
        case PosTag::Adjective: return "adjective";
        case PosTag::Other: return "other";
    }
    return "?";
}

TermBag Document::term_frequencies() const {
    TermBag out = terms;
    for (const auto& [term, weight] : added_biterm_terms) out[term] += weight;
    return out;
}

const Artifact* Dataset::find(std::string_view id) const {
    for (const auto* list : {&sources, &intermediates, &targets}) {
        for (const auto& a : *list) {
            if (a.id == id) return &a;
        }
    }
    return nullptr;
}

std::vector<std::string> Dataset::ids(Level level) const {
    const auto& list = level == Level::Source         ? sources
                       : level == Level::Intermediate ? intermediates
                                                      : targets;
    std::vector<std::string> out;
    out.reserve(list.size());
    for (const auto& a : list) out.push_back(a.id);
    return out;
}

std::vector<const Artifact*> Dataset::all() const {
    std::vector<const Artifact*> out;
    for (const auto* list : {&sources, &intermediates, &targets}) {
        for (const auto& a : *list) out.push_back(&a);
    }
    return out;
}

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Load, "cannot read file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Kind parse_kind(const std::string& s, const fs::path& manifest) {
    if (s == "nl" || s == "natural" || s == "text") return Kind::NaturalLanguage;
    if (s == "code") return Kind::Code;
    throw Error(ErrorKind::Validation,
                "unknown artifact kind '" + s + "' in '" + manifest.string() + "'");
}

LinkSet parse_links(const json& array, const std::string& field) {
    if (!array.is_array()) throw Error(ErrorKind::Parse, "'" + field + "' must be a list of pairs");
    LinkSet links;
    for (const auto& pair : array) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
            throw Error(ErrorKind::Parse, "'" + field + "' entries must be [from_id, to_id]");
        }
        links.emplace(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return links;
}

// Abbreviations whose trailing period does not end a sentence.
constexpr std::array kAbbreviations = std::to_array<std::string_view>({
    "al", "approx", "cf", "dr", "e.g", "eg", "eq", "etc", "fig", "i.e", "ie", "mr", "mrs", "ms",
    "no", "sec", "vs",
});

bool is_abbreviation(std::string_view text, std::size_t period) {
    std::size_t begin = period;
    while (begin > 0 && (is_alnum(text[begin - 1]) || text[begin - 1] == '.')) --begin;
    const std::string word = lowercase(text.substr(begin, period - begin));
    return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) != kAbbreviations.end();
}

std::vector<std::string_view> split_sentences(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '.' && c != '?' && c != '!') continue;
        const bool at_boundary =
            i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])) != 0;
        if (!at_boundary) continue;
        if (c == '.' && is_abbreviation(text, i)) continue;
        out.push_back(text.substr(start, i + 1 - start));
        start = i + 1;
    }
    if (start < text.size()) out.push_back(text.substr(start));
    return out;
}

}  // namespace

std::vector<std::string> split_identifier(std::string_view identifier) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) tokens.push_back(lowercase(current));
        current.clear();
    };
    for (std::size_t i = 0; i < identifier.size(); ++i) {
        const char c = identifier[i];
        if (!is_alnum(c)) {
            flush();
            continue;
        }
        if (!current.empty()) {
            const char prev = current.back();
            const bool lower_to_upper = is_lower(prev) && is_upper(c);
            const bool letter_digit = is_digit(prev) != is_digit(c);
            // "AFInfo": split before the last capital of a run once a lowercase follows
            const bool acronym_end = is_upper(prev) && is_upper(c) && i + 1 < identifier.size() &&
                                     is_lower(identifier[i + 1]);
            if (lower_to_upper || letter_digit || acronym_end) flush();
        }
        current.push_back(c);
    }
    flush();
    return tokens;
}

std::vector<std::string> word_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_alnum(text[i])) {
            ++i;
            continue;
        }
        const std::size_t begin = i;
        while (i < text.size() && is_alnum(text[i])) ++i;
        out.emplace_back(text.substr(begin, i - begin));
    }
    return out;
}

std::optional<std::string> normalize_term(std::string_view token) {
    if (token.empty()) return std::nullopt;
    if (!std::all_of(token.begin(), token.end(), is_alnum)) return std::nullopt;
    if (std::none_of(token.begin(), token.end(),
                     [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; })) {
        return std::nullopt;
    }
    std::string term = lowercase(token);
    if (is_stopword(term)) return std::nullopt;
    // Porter is not idempotent on every stem ("agreed" -> "agre" -> "agr"), so
    // iterate to a fixed point to keep preprocessing idempotent.
    for (std::string next = porter_stem(term); next != term; next = porter_stem(term)) {
        term = std::move(next);
    }
    if (term.empty() || is_stopword(term)) return std::nullopt;
    return term;
}

TermBag preprocess(std::span<const std::string> tokens) {
    TermBag bag;
    for (const auto& token : tokens) {
        if (auto term = normalize_term(token)) ++bag[*term];
    }
    return bag;
}

std::vector<Sentence> tokenize_natural(std::string_view text) {
    std::vector<Sentence> sentences;
    for (std::string_view piece : split_sentences(text)) {
        Sentence sentence;
        for (auto& word : word_tokens(piece)) {
            auto tag = tag_word(word);
            sentence.push_back(Token{std::move(word), tag});
        }
        if (!sentence.empty()) sentences.push_back(std::move(sentence));
    }
    return sentences;
}

Artifact make_artifact(std::string id, Level level, Kind kind, std::string raw) {
    Artifact a;
    a.id = std::move(id);
    a.level = level;
    a.kind = kind;
    a.raw = std::move(raw);
    if (kind == Kind::NaturalLanguage) {
        a.sentences = tokenize_natural(a.raw);
    } else {
        a.code_parts = scan_code(a.raw);
    }
    return a;
}

Document build_document(const Artifact& artifact) {
    std::vector<std::string> tokens;
    auto add_sentences = [&](const std::vector<Sentence>& sentences) {
        for (const auto& s : sentences) {
            for (const auto& t : s) tokens.push_back(t.text);
        }
    };
    if (artifact.kind == Kind::NaturalLanguage) {
        add_sentences(artifact.sentences);
    } else {
        const CodeParts& parts = artifact.code_parts;
        // Invoked method names feed biterm extraction only, not the document text.
        for (const auto* list : {&parts.class_names, &parts.method_names, &parts.field_type_names,
                                 &parts.field_names, &parts.parameter_type_names,
                                 &parts.parameter_names}) {
            for (const auto& ident : *list) tokens.insert(tokens.end(), ident.begin(), ident.end());
        }
        add_sentences(parts.comments);
    }
    return Document{artifact.id, preprocess(tokens), {}};
}

void validate(const Dataset& dataset) {
    std::unordered_set<std::string> seen;
    for (const auto* a : dataset.all()) {
        if (a->id.empty()) throw Error(ErrorKind::Validation, "artifact with empty id");
        if (!seen.insert(a->id).second) {
            throw Error(ErrorKind::Validation, "duplicate artifact id '" + a->id + "'");
        }
    }
    auto check = [&](const LinkSet& links, Level from, Level to, std::string_view name) {
        for (const auto& [a, b] : links) {
            const Artifact* fa = dataset.find(a);
            const Artifact* fb = dataset.find(b);
            if (fa == nullptr || fa->level != from) {
                throw Error(ErrorKind::Validation, std::string(name) + " references unknown " +
                                                       std::string(to_string(from)) + " id '" + a + "'");
            }
            if (fb == nullptr || fb->level != to) {
                throw Error(ErrorKind::Validation, std::string(name) + " references unknown " +
                                                       std::string(to_string(to)) + " id '" + b + "'");
            }
        }
    };
    check(dataset.oracle_st, Level::Source, Level::Target, "oracle_st");
    if (dataset.oracle_si) check(*dataset.oracle_si, Level::Source, Level::Intermediate, "oracle_si");
    if (dataset.oracle_it) check(*dataset.oracle_it, Level::Intermediate, Level::Target, "oracle_it");
}

Dataset load_dataset(const fs::path& manifest_path) {
    if (!fs::exists(manifest_path)) {
        throw Error(ErrorKind::Load, "manifest not found: '" + manifest_path.string() + "'");
    }
    json manifest;
    try {
        manifest = json::parse(read_file(manifest_path));
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse,
                    "manifest '" + manifest_path.string() + "' is not valid JSON: " + e.what());
    }
    if (!manifest.is_object()) {
        throw Error(ErrorKind::Parse, "manifest '" + manifest_path.string() + "' must be an object");
    }

    const fs::path base = manifest_path.parent_path();
    Dataset dataset;
    auto load_level = [&](const char* field, Level level, std::vector<Artifact>& out) {
        if (!manifest.contains(field)) return;
        const json& list = manifest.at(field);
        if (!list.is_array()) throw Error(ErrorKind::Parse, std::string("'") + field + "' must be a list");
        for (const auto& entry : list) {
            if (!entry.is_object() || !entry.contains("id") || !entry.contains("path")) {
                throw Error(ErrorKind::Parse, std::string("entries of '") + field +
                                                  "' need 'id' and 'path'");
            }
            const std::string id = entry.at("id").get<std::string>();
            const fs::path path = base / entry.at("path").get<std::string>();
            const Kind kind = parse_kind(entry.value("kind", std::string("nl")), manifest_path);
            if (!fs::exists(path)) {
                throw Error(ErrorKind::Load, "artifact '" + id + "': file not found '" +
                                                 path.string() + "'");
            }
            out.push_back(make_artifact(id, level, kind, read_file(path)));
        }
    };
    try {
        load_level("sources", Level::Source, dataset.sources);
        load_level("intermediates", Level::Intermediate, dataset.intermediates);
        load_level("targets", Level::Target, dataset.targets);
        if (manifest.contains("oracle_st")) dataset.oracle_st = parse_links(manifest["oracle_st"], "oracle_st");
        if (manifest.contains("oracle_si")) dataset.oracle_si = parse_links(manifest["oracle_si"], "oracle_si");
        if (manifest.contains("oracle_it")) dataset.oracle_it = parse_links(manifest["oracle_it"], "oracle_it");
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, "manifest '" + manifest_path.string() + "': " + e.what());
    }
    validate(dataset);
    return dataset;
}

}  // namespace tracelink::corpus
