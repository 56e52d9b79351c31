#include "tracelink/enrich.hpp"

#include <algorithm>
#include <set>

#include "tracelink/error.hpp"

namespace tracelink::enrich {

void EnrichmentConfig::validate() const {
    if (!(m > 0.0 && m <= 1.0)) {
        throw Error(ErrorKind::Config, "threshold m must lie in (0, 1], got " + std::to_string(m));
    }
    if (t < 1) throw Error(ErrorKind::Config, "cap t must be at least 1, got " + std::to_string(t));
}

std::vector<std::string> select_related_intermediates(const std::string& artifact,
                                                      std::span<const std::string> intermediates,
                                                      const ir::SimilarityTable& table,
                                                      const EnrichmentConfig& config) {
    ir::RankedList ranked;
    for (const auto& id : intermediates) {
        if (id != artifact) ranked.push_back({id, table.get(artifact, id)});
    }
    ir::sort_ranked(ranked);
    std::vector<std::string> out;
    if (ranked.empty() || ranked.front().score <= 0.0) return out;
    const double cutoff = config.m * ranked.front().score;
    for (const auto& c : ranked) {
        if (out.size() >= static_cast<std::size_t>(config.t) || c.score < cutoff) break;
        out.push_back(c.id);
    }
    return out;
}

corpus::Document add_own_biterms(corpus::Document doc, const biterm::BitermSet& own) {
    for (const auto& [pair, count] : own.biterms) doc.added_biterm_terms[biterm::compound_term(pair)] += count;
    return doc;
}

corpus::Document enrich_artifact(corpus::Document doc, std::span<const biterm::BitermSet> related) {
    std::set<biterm::Pair> distinct;
    for (const auto& set : related) {
        for (const auto& [pair, count] : set.biterms) distinct.insert(pair);
    }
    for (const auto& pair : distinct) doc.added_biterm_terms[biterm::compound_term(pair)] += 1;
    return doc;
}

}  // namespace tracelink::enrich
