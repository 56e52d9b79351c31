#include "tracelink/biterm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "tracelink/error.hpp"
#include "tracelink/pos_tagger.hpp"

namespace tracelink::biterm {

using corpus::Artifact;
using corpus::Kind;
using corpus::PosTag;

std::optional<Pair> canonical_pair(std::string x, std::string y) {
    if (x.empty() || y.empty() || x == y) return std::nullopt;
    if (y < x) std::swap(x, y);
    return Pair{std::move(x), std::move(y)};
}

std::string compound_term(const Pair& pair) { return pair.first + "_" + pair.second; }

int BitermSet::count(const Pair& pair) const {
    auto it = biterms.find(pair);
    return it == biterms.end() ? 0 : it->second;
}

std::vector<Biterm> BitermSet::list() const {
    std::vector<Biterm> out;
    out.reserve(biterms.size());
    for (const auto& [pair, count] : biterms) out.push_back({pair.first, pair.second, count});
    return out;
}

namespace {

bool content_tag(const std::optional<PosTag>& tag) {
    return tag && (*tag == PosTag::Noun || *tag == PosTag::Verb || *tag == PosTag::Adjective);
}

// Distinct pairs among the preprocessed tokens of one identifier.
std::set<Pair> identifier_pairs(const corpus::IdentifierTokens& tokens) {
    std::vector<std::string> stems;
    for (const auto& t : tokens) {
        if (auto s = corpus::normalize_term(t)) stems.push_back(std::move(*s));
    }
    std::set<Pair> out;
    for (std::size_t i = 0; i < stems.size(); ++i) {
        for (std::size_t j = i + 1; j < stems.size(); ++j) {
            if (auto p = canonical_pair(stems[i], stems[j])) out.insert(std::move(*p));
        }
    }
    return out;
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \r\n\t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \r\n\t");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::map<Pair, int> sentence_pairs(std::span<const corpus::Sentence> sentences) {
    std::map<Pair, int> out;
    for (const auto& sentence : sentences) {
        std::vector<const corpus::Token*> content;
        for (const auto& token : sentence) {
            if (content_tag(token.tag)) content.push_back(&token);
        }
        std::vector<std::optional<std::string>> stems;
        stems.reserve(content.size());
        for (const auto* token : content) stems.push_back(corpus::normalize_term(token->text));
        for (std::size_t i = 0; i < content.size(); ++i) {
            for (std::size_t j = i + 1; j < content.size() && j - i < kNlWindow; ++j) {
                if (!stems[i] || !stems[j]) continue;
                if (auto p = canonical_pair(*stems[i], *stems[j])) ++out[*p];
            }
        }
    }
    return out;
}

BitermSet extract_nl_biterms(const Artifact& artifact) {
    BitermSet set{artifact.id, {}};
    for (auto& [pair, count] : sentence_pairs(artifact.sentences)) set.add(pair, count);
    return set;
}

BitermSet extract_code_biterms(const Artifact& artifact) {
    const corpus::CodeParts& parts = artifact.code_parts;
    std::map<Pair, int> names;     // class and method name occurrences
    std::set<Pair> secondary;      // invoked methods, fields, parameters
    for (const auto* list : {&parts.class_names, &parts.method_names}) {
        for (const auto& ident : *list) {
            for (const auto& p : identifier_pairs(ident)) ++names[p];
        }
    }
    for (const auto* list : {&parts.invoked_method_names, &parts.field_type_names, &parts.field_names,
                             &parts.parameter_type_names, &parts.parameter_names}) {
        for (const auto& ident : *list) {
            for (auto& p : identifier_pairs(ident)) secondary.insert(std::move(p));
        }
    }
    const auto comments = sentence_pairs(parts.comments);

    BitermSet set{artifact.id, {}};
    for (const auto& [pair, n] : names) set.add(pair, 2 * n);
    for (const auto& [pair, n] : comments) set.add(pair, n);
    for (const auto& pair : secondary) set.add(pair, 1);
    return set;
}

BitermSet extract_biterms(const Artifact& artifact) {
    return artifact.kind == Kind::Code ? extract_code_biterms(artifact) : extract_nl_biterms(artifact);
}

bool accepted_dependency_label(std::string_view label) {
    // Subject, object and modifier relations. Coordination, punctuation,
    // determiners, auxiliaries and case markers are rejected.
    static constexpr std::array kAccepted = std::to_array<std::string_view>({
        "acl", "advmod", "amod", "compound", "csubj", "dobj", "iobj", "nmod", "nn", "nsubj",
        "nsubjpass", "obj", "obl", "pobj", "xcomp",
    });
    std::string base = lowercase(label);
    if (auto colon = base.find(':'); colon != std::string::npos) base.resize(colon);
    return std::find(kAccepted.begin(), kAccepted.end(), base) != kAccepted.end();
}

BitermSet parse_parsed_pairs(const std::string& artifact_id, std::istream& in,
                             const std::string& source_name) {
    BitermSet set{artifact_id, {}};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, '\t');) fields.push_back(trim(f));
        if (fields.size() != 3 || fields[0].empty() || fields[1].empty() || fields[2].empty()) {
            throw Error(ErrorKind::Parse, source_name + ":" + std::to_string(line_no) +
                                              ": expected 'label<TAB>term1<TAB>term2'");
        }
        if (!accepted_dependency_label(fields[0])) continue;
        if (!content_tag(corpus::tag_word(fields[1])) || !content_tag(corpus::tag_word(fields[2]))) continue;
        auto a = corpus::normalize_term(fields[1]);
        auto b = corpus::normalize_term(fields[2]);
        if (!a || !b) continue;
        if (auto p = canonical_pair(std::move(*a), std::move(*b))) set.add(*p);
    }
    return set;
}

BitermSet import_parsed_pairs(const std::string& artifact_id, const std::filesystem::path& pairs_file) {
    std::ifstream in(pairs_file);
    if (!in) throw Error(ErrorKind::Load, "cannot read pairs file '" + pairs_file.string() + "'");
    return parse_parsed_pairs(artifact_id, in, pairs_file.string());
}

FilteredSets consensual_filter(std::span<const BitermSet> sources,
                               std::span<const BitermSet> intermediates,
                               std::span<const BitermSet> targets) {
    std::set<Pair> intermediate_pairs;
    for (const auto& s : intermediates) {
        for (const auto& [p, c] : s.biterms) intermediate_pairs.insert(p);
    }
    std::set<Pair> outer_pairs;
    for (auto group : {sources, targets}) {
        for (const auto& s : group) {
            for (const auto& [p, c] : s.biterms) outer_pairs.insert(p);
        }
    }
    auto keep = [](std::span<const BitermSet> sets, const std::set<Pair>& allowed) {
        std::vector<BitermSet> out;
        out.reserve(sets.size());
        for (const auto& s : sets) {
            BitermSet kept{s.artifact_id, {}};
            for (const auto& [p, c] : s.biterms) {
                if (allowed.count(p) != 0) kept.biterms.emplace(p, c);
            }
            out.push_back(std::move(kept));
        }
        return out;
    };
    return FilteredSets{keep(sources, intermediate_pairs), keep(intermediates, outer_pairs),
                        keep(targets, intermediate_pairs)};
}

nlohmann::json to_json(const BitermSet& set) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [p, c] : set.biterms) out[p.first + " " + p.second] = c;
    return out;
}

}  // namespace tracelink::biterm
