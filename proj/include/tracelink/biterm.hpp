#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tracelink/corpus.hpp"

namespace tracelink::biterm {

// Canonical unordered pair of stems, first <= second.
using Pair = std::pair<std::string, std::string>;

struct Biterm {
    std::string a;
    std::string b;
    int count = 1;
};

// Orders the two stems; nullopt for self-pairs or empty stems.
std::optional<Pair> canonical_pair(std::string x, std::string y);

// "a_b", the compound vocabulary term used when enriching documents.
std::string compound_term(const Pair& pair);

struct BitermSet {
    std::string artifact_id;
    std::map<Pair, int> biterms;

    void add(const Pair& pair, int count = 1) { biterms[pair] += count; }
    bool contains(const Pair& pair) const { return biterms.count(pair) != 0; }
    int count(const Pair& pair) const;
    std::size_t size() const { return biterms.size(); }
    bool empty() const { return biterms.empty(); }
    std::vector<Biterm> list() const;
};

// Sliding window over content words (noun/verb/adjective) within a sentence.
inline constexpr std::size_t kNlWindow = 3;

// Windowed pairs for a list of tagged sentences; counts are occurrences.
std::map<Pair, int> sentence_pairs(std::span<const corpus::Sentence> sentences);

BitermSet extract_nl_biterms(const corpus::Artifact& artifact);

// Importance counts: +2 per class/method-name occurrence, +1 per comment
// occurrence, and a flat +1 if the pair shows up in any invoked-method,
// field or parameter identifier.
BitermSet extract_code_biterms(const corpus::Artifact& artifact);

BitermSet extract_biterms(const corpus::Artifact& artifact);

// Dependency labels whose pairs are kept when importing external parses.
bool accepted_dependency_label(std::string_view label);

// Tab-separated "label<TAB>term1<TAB>term2" records, one per line.
BitermSet parse_parsed_pairs(const std::string& artifact_id, std::istream& in,
                             const std::string& source_name = "<stream>");
BitermSet import_parsed_pairs(const std::string& artifact_id, const std::filesystem::path& pairs_file);

struct FilteredSets {
    std::vector<BitermSet> sources;
    std::vector<BitermSet> intermediates;
    std::vector<BitermSet> targets;
};

// Keeps source/target pairs that occur in some intermediate set, and
// intermediate pairs that occur in some source or target set.
FilteredSets consensual_filter(std::span<const BitermSet> sources,
                               std::span<const BitermSet> intermediates,
                               std::span<const BitermSet> targets);

// {"a b": count, ...}
nlohmann::json to_json(const BitermSet& set);

}  // namespace tracelink::biterm
