#include "tracelink/metrics.hpp"

#include <algorithm>

#include "tracelink/error.hpp"

namespace tracelink::eval {

std::vector<RankedLink> global_ranking(const ir::RankedLists& lists) {
    std::vector<RankedLink> out;
    for (const auto& [source, list] : lists) {
        for (const auto& c : list) out.push_back({source, c.id, c.score});
    }
    std::sort(out.begin(), out.end(), [](const RankedLink& x, const RankedLink& y) {
        if (x.score != y.score) return x.score > y.score;
        if (x.source != y.source) return x.source < y.source;
        return x.target < y.target;
    });
    return out;
}

double f_measure(double precision, double recall) {
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

namespace {

void require_oracle(const corpus::LinkSet& oracle) {
    if (oracle.empty()) throw Error(ErrorKind::Evaluation, "the oracle contains no true links");
}

bool relevant(const corpus::LinkSet& oracle, const RankedLink& link) {
    return oracle.count({link.source, link.target}) != 0;
}

}  // namespace

std::vector<PrPoint> precision_recall(std::span<const RankedLink> ranked, const corpus::LinkSet& oracle) {
    require_oracle(oracle);
    std::vector<PrPoint> curve;
    curve.reserve(ranked.size());
    std::size_t hits = 0;
    for (std::size_t k = 0; k < ranked.size(); ++k) {
        if (relevant(oracle, ranked[k])) ++hits;
        curve.push_back({100.0 * static_cast<double>(hits) / static_cast<double>(oracle.size()),
                         100.0 * static_cast<double>(hits) / static_cast<double>(k + 1)});
    }
    return curve;
}

double average_precision(std::span<const RankedLink> ranked, const corpus::LinkSet& oracle) {
    require_oracle(oracle);
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t k = 0; k < ranked.size(); ++k) {
        if (!relevant(oracle, ranked[k])) continue;
        ++hits;
        sum += static_cast<double>(hits) / static_cast<double>(k + 1);
    }
    return 100.0 * sum / static_cast<double>(oracle.size());
}

double mean_average_precision(const ir::RankedLists& lists, const corpus::LinkSet& oracle,
                              std::map<std::string, double>* per_query) {
    double total = 0.0;
    std::size_t queries = 0;
    for (const auto& [source, unsorted] : lists) {
        ir::RankedList list = unsorted;
        ir::sort_ranked(list);
        std::size_t relevant_count = 0;
        for (const auto& [s, t] : oracle) {
            if (s == source) ++relevant_count;
        }
        if (relevant_count == 0) continue;
        double sum = 0.0;
        std::size_t hits = 0;
        for (std::size_t k = 0; k < list.size(); ++k) {
            if (oracle.count({source, list[k].id}) == 0) continue;
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(k + 1);
        }
        const double ap = 100.0 * sum / static_cast<double>(relevant_count);
        if (per_query != nullptr) (*per_query)[source] = ap;
        total += ap;
        ++queries;
    }
    if (queries == 0) throw Error(ErrorKind::Evaluation, "no query has a relevant target");
    return total / static_cast<double>(queries);
}

std::vector<double> f_at_recall_levels(std::span<const PrPoint> curve) {
    std::vector<double> out(kRecallLevels, 0.0);
    std::size_t k = 0;
    for (int level = 1; level <= kRecallLevels; ++level) {
        const double r = static_cast<double>(level);
        // Recall is non-decreasing along the curve, so the cursor only moves forward.
        // A small slack absorbs rounding in hits / |oracle| * 100.
        while (k < curve.size() && curve[k].recall + 1e-9 < r) ++k;
        if (k == curve.size()) break;
        out[static_cast<std::size_t>(level - 1)] = f_measure(curve[k].precision, r);
    }
    return out;
}

EvalReport evaluate(const ir::RankedLists& lists, const corpus::LinkSet& oracle) {
    require_oracle(oracle);
    EvalReport report;
    const auto ranked = global_ranking(lists);
    report.pr_curve = precision_recall(ranked, oracle);
    report.f_at_recall = f_at_recall_levels(report.pr_curve);
    report.ap = average_precision(ranked, oracle);
    report.map = mean_average_precision(lists, oracle, &report.per_query_ap);
    return report;
}

}  // namespace tracelink::eval
