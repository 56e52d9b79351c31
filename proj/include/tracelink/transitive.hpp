#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tracelink/corpus.hpp"
#include "tracelink/enrich.hpp"
#include "tracelink/irmodels.hpp"

namespace tracelink::transitive {

enum class LinkKind { Outer, Inner };

std::string_view to_string(LinkKind kind);

// Thresholds after n hops: m' = m + 0.1 n, t' = max(1, t - n).
struct HopState {
    int hops = 0;
    double m_eff = 0.5;
    int t_eff = 3;

    static HopState initial(const enrich::EnrichmentConfig& config);
    HopState advance(const enrich::EnrichmentConfig& config) const;
    static HopState after(const enrich::EnrichmentConfig& config, int hops);
};

struct TransitiveLink {
    std::string from;
    std::string to;
    LinkKind kind = LinkKind::Outer;
    double score = 0.0;

    bool operator==(const TransitiveLink&) const = default;
};

struct TransitivePath {
    std::vector<std::string> nodes;
    std::vector<TransitiveLink> links;
    double bonus = 0.0;  // product of link scores

    const std::string& source() const { return nodes.front(); }
    const std::string& target() const { return nodes.back(); }
    bool has_inner() const;
    bool operator==(const TransitivePath&) const = default;
};

struct LevelIds {
    std::vector<std::string> sources;
    std::vector<std::string> intermediates;
    std::vector<std::string> targets;

    static LevelIds from(const corpus::Dataset& dataset);
};

struct PathOptions {
    bool inner = true;  // allow one inner-transitive link per path
};

// Pool members ranked by similarity to `from` (ties by id); at most t_eff are
// kept, each with similarity >= m_eff * max. `from` itself is skipped.
std::vector<TransitiveLink> candidate_links(const std::string& from, std::span<const std::string> pool,
                                            const ir::SimilarityTable& table, const HopState& state,
                                            LinkKind kind);

// Paths from one source in this order: S->I->T, then S->S'->I->T, then S->I->I'->T.
std::vector<TransitivePath> form_paths(const std::string& source, const LevelIds& levels,
                                       const ir::SimilarityTable& table,
                                       const enrich::EnrichmentConfig& config,
                                       const PathOptions& options = {});

// IR' = IR * prod(1 + bonus) over every path joining the pair.
ir::RankedLists adjust_scores(const ir::RankedLists& candidates, std::span<const TransitivePath> paths);

// Hop count, level sequence, one-inner rule, no repeated node, bonus product.
bool is_valid_path(const TransitivePath& path, const LevelIds& levels);

}  // namespace tracelink::transitive
