#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tracelink/biterm.hpp"
#include "tracelink/corpus.hpp"
#include "tracelink/enrich.hpp"
#include "tracelink/irmodels.hpp"
#include "tracelink/transitive.hpp"

namespace tracelink::pipeline {

// Which components a run switches on: b (biterm enrichment), o (outer
// links), i (inner links).
struct Mode {
    bool biterms = false;
    bool outer = false;
    bool inner = false;

    std::string name() const;  // "ir-only", "b", "o", "b+o", "o+i", "b+o+i"
    bool operator==(const Mode&) const = default;
};

Mode parse_mode(std::string_view name);  // throws Config
std::vector<Mode> parse_modes(std::string_view comma_separated);  // throws Config on empty
const std::vector<Mode>& all_modes();

struct RunParameters {
    ir::Model model = ir::Model::VSM;
    enrich::EnrichmentConfig thresholds;
    std::optional<std::size_t> lsi_rank;
};

// Everything that does not depend on the mode: documents and biterms.
struct Prepared {
    corpus::Dataset dataset;
    transitive::LevelIds levels;
    std::vector<corpus::Document> base_documents;  // sources, intermediates, targets
    std::vector<biterm::BitermSet> raw_biterms;    // same order
    biterm::FilteredSets consensual;
};

// Optional parsed-pairs directory: "<dir>/<artifact id>.pairs" replaces the
// heuristic NL extraction for that artifact.
Prepared prepare(corpus::Dataset dataset, const std::optional<std::filesystem::path>& pairs_dir = std::nullopt);

struct RunResult {
    Mode mode;
    std::vector<corpus::Document> documents;  // as scored, after any enrichment
    std::map<std::string, std::vector<std::string>> related_intermediates;
    ir::SimilarityTable table;
    ir::RankedLists ir_ranked;
    ir::RankedLists adjusted;
    std::map<std::string, std::vector<transitive::TransitivePath>> paths;  // per source
};

RunResult run(const Prepared& prepared, const Mode& mode, const RunParameters& params);

const biterm::BitermSet* consensual_set(const Prepared& prepared, std::string_view artifact_id);

}  // namespace tracelink::pipeline
