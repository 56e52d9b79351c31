#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tracelink::corpus {

enum class Level { Source, Intermediate, Target };
enum class Kind { NaturalLanguage, Code };
enum class PosTag { Noun, Verb, Adjective, Other };

std::string_view to_string(Level level);
std::string_view to_string(Kind kind);
std::string_view to_string(PosTag tag);

struct Token {
    std::string text;
    std::optional<PosTag> tag;  // absent when the tagger has no opinion

    bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

// Lowercased pieces of one split identifier, e.g. {"assign", "route", "icon"}.
using IdentifierTokens = std::vector<std::string>;

struct CodeParts {
    std::vector<IdentifierTokens> class_names;
    std::vector<IdentifierTokens> method_names;
    std::vector<IdentifierTokens> invoked_method_names;
    std::vector<IdentifierTokens> field_type_names;
    std::vector<IdentifierTokens> field_names;
    std::vector<IdentifierTokens> parameter_type_names;
    std::vector<IdentifierTokens> parameter_names;
    // Comment text, segmented and tagged like natural-language prose.
    std::vector<Sentence> comments;

    bool operator==(const CodeParts&) const = default;
};

struct Artifact {
    std::string id;
    Level level = Level::Source;
    Kind kind = Kind::NaturalLanguage;
    std::string raw;
    std::vector<Sentence> sentences;  // NaturalLanguage only
    CodeParts code_parts;             // Code only
};

// Multiset of terms: term -> multiplicity (or weight for compound terms).
using TermBag = std::map<std::string, int>;

struct Document {
    std::string artifact_id;
    TermBag terms;
    TermBag added_biterm_terms;

    // Combined term frequencies, base terms plus compound-term weights.
    TermBag term_frequencies() const;
    bool empty() const { return terms.empty() && added_biterm_terms.empty(); }
};

using Link = std::pair<std::string, std::string>;
using LinkSet = std::set<Link>;

struct Dataset {
    std::vector<Artifact> sources;
    std::vector<Artifact> intermediates;
    std::vector<Artifact> targets;
    LinkSet oracle_st;
    std::optional<LinkSet> oracle_si;
    std::optional<LinkSet> oracle_it;

    const Artifact* find(std::string_view id) const;
    std::vector<std::string> ids(Level level) const;
    std::vector<const Artifact*> all() const;
};

// Reads a JSON manifest; artifact paths are resolved relative to it.
Dataset load_dataset(const std::filesystem::path& manifest_path);

// Checks id uniqueness and oracle referential integrity; throws Validation.
void validate(const Dataset& dataset);

// Builds an artifact from raw text, running the NL tokenizer or code scanner.
Artifact make_artifact(std::string id, Level level, Kind kind, std::string raw);

// CamelCase / snake_case / letter-digit splitting, lowercased.
std::vector<std::string> split_identifier(std::string_view identifier);

// Maximal runs of ASCII letters and digits.
std::vector<std::string> word_tokens(std::string_view text);

// Lowercase, drop special tokens and stopwords, Porter-stem.
TermBag preprocess(std::span<const std::string> tokens);

// Single-token form of preprocess; nullopt when the token is removed.
std::optional<std::string> normalize_term(std::string_view token);

std::vector<Sentence> tokenize_natural(std::string_view text);

// Base document terms for an artifact (no biterms yet).
Document build_document(const Artifact& artifact);

}  // namespace tracelink::corpus
