#pragma once

#include <span>
#include <string>
#include <vector>

#include "tracelink/biterm.hpp"
#include "tracelink/corpus.hpp"
#include "tracelink/irmodels.hpp"

namespace tracelink::enrich {

// Relative similarity threshold m and per-step cap t. The same pair drives
// intermediate selection and transitive-link filtering.
struct EnrichmentConfig {
    double m = 0.5;
    int t = 3;

    void validate() const;  // 0 < m <= 1, t >= 1; throws Config
};

// At most t intermediates, best first (ties by id), each with similarity
// >= m * (best similarity). Empty when the best similarity is 0.
std::vector<std::string> select_related_intermediates(const std::string& artifact,
                                                      std::span<const std::string> intermediates,
                                                      const ir::SimilarityTable& table,
                                                      const EnrichmentConfig& config);

// Adds the artifact's own consensual biterms as compound terms weighted by
// their importance counts.
corpus::Document add_own_biterms(corpus::Document doc, const biterm::BitermSet& own);

// Adds every distinct biterm of the related intermediates once, weight 1.
corpus::Document enrich_artifact(corpus::Document doc, std::span<const biterm::BitermSet> related);

}  // namespace tracelink::enrich
