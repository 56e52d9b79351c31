#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tracelink/corpus.hpp"
#include "tracelink/irmodels.hpp"

namespace tracelink::eval {

// One candidate trace link with its (possibly adjusted) score.
struct RankedLink {
    std::string source;
    std::string target;
    double score = 0.0;
};

// All source-target pairs in one list: descending score, then source id,
// then target id.
std::vector<RankedLink> global_ranking(const ir::RankedLists& lists);

// Percentages at every cutoff k = 1..N.
struct PrPoint {
    double recall = 0.0;
    double precision = 0.0;
};

// Harmonic mean of precision and recall; 0 when both are 0.
double f_measure(double precision, double recall);

std::vector<PrPoint> precision_recall(std::span<const RankedLink> ranked, const corpus::LinkSet& oracle);

// Sum of precision at each relevant rank over |oracle|, as a percentage.
double average_precision(std::span<const RankedLink> ranked, const corpus::LinkSet& oracle);

// Mean of per-source APs. Sources without relevant targets are left out of
// the mean; per_query receives every included AP when non-null.
double mean_average_precision(const ir::RankedLists& lists, const corpus::LinkSet& oracle,
                              std::map<std::string, double>* per_query = nullptr);

inline constexpr int kRecallLevels = 100;

// F at recall levels 1..100 percent: precision taken at the smallest cutoff
// whose recall reaches the level, recall taken as the level itself. Levels
// the list never reaches get F = 0.
std::vector<double> f_at_recall_levels(std::span<const PrPoint> curve);

struct EvalReport {
    std::vector<PrPoint> pr_curve;
    std::vector<double> f_at_recall;
    double ap = 0.0;
    double map = 0.0;
    std::map<std::string, double> per_query_ap;
};

EvalReport evaluate(const ir::RankedLists& lists, const corpus::LinkSet& oracle);

}  // namespace tracelink::eval
