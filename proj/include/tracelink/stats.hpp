#pragma once

#include <span>
#include <string_view>

namespace tracelink::eval {

// Samples with n1 + n2 at or below this size get the exact permutation
// distribution; larger ones use the tie-corrected normal approximation.
inline constexpr std::size_t kExactRankSumLimit = 30;

// Two-sided Wilcoxon rank-sum p-value with midranks for ties.
double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b);

// Two-sided Wilcoxon signed-rank p-value for paired samples (normal
// approximation, zero differences dropped, tie-corrected variance).
double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);

enum class EffectSize { Negligible, Small, Medium, Large };

std::string_view to_string(EffectSize size);

// |#(x1 > x2) - #(x1 < x2)| / (n1 n2)
double cliffs_delta(std::span<const double> a, std::span<const double> b);

// Cut points 0.15, 0.33 and 0.47.
EffectSize categorize_delta(double delta);

struct StatComparison {
    double p_value = 1.0;
    double delta = 0.0;
    EffectSize category = EffectSize::Negligible;
};

StatComparison compare_samples(std::span<const double> a, std::span<const double> b, bool paired = false);

}  // namespace tracelink::eval
