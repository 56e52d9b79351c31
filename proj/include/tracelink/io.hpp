#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "tracelink/ablation.hpp"
#include "tracelink/irmodels.hpp"
#include "tracelink/metrics.hpp"
#include "tracelink/pipeline.hpp"
#include "tracelink/stats.hpp"
#include "tracelink/transitive.hpp"

namespace tracelink::io {

std::string format_score(double value);  // fixed, 6 decimals
double round6(double value);

// source_id,target_id,score sorted by (source, -score, target).
void write_ranked_links(std::ostream& out, const ir::RankedLists& lists);
ir::RankedLists read_ranked_links(std::istream& in, const std::string& source_name = "<stream>");
ir::RankedLists read_ranked_links(const std::filesystem::path& path);

nlohmann::json paths_to_json(const std::map<std::string, std::vector<transitive::TransitivePath>>& paths);
nlohmann::json enriched_corpus_to_json(std::span<const corpus::Document> documents);
nlohmann::json biterms_to_json(const biterm::FilteredSets& sets);
nlohmann::json report_to_json(const eval::EvalReport& report);
nlohmann::json comparison_to_json(const eval::StatComparison& comparison);

void write_pr_curve(std::ostream& out, std::span<const eval::PrPoint> curve);
void write_summary(std::ostream& out, std::span<const eval::ModeReport> reports);
void write_plot_data(std::ostream& out, std::span<const eval::ModeReport> reports);

void write_text(const std::filesystem::path& path, const std::string& contents);
void write_json(const std::filesystem::path& path, const nlohmann::json& value);

}  // namespace tracelink::io
