#include "tracelink/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tracelink/error.hpp"

namespace tracelink::eval {

namespace {

void require_nonempty(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw Error(ErrorKind::Evaluation, "statistical test needs two nonempty samples");
}

// Doubled midranks (integers) of `values`, plus the tie-group sizes.
std::vector<std::int64_t> doubled_midranks(std::span<const double> values, std::vector<std::size_t>* ties) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
    std::vector<std::int64_t> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // ranks i+1 .. j+1 share the midrank (i + j + 2) / 2
        const auto twice = static_cast<std::int64_t>(i + j + 2);
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = twice;
        if (ties != nullptr) ties->push_back(j - i + 1);
        i = j + 1;
    }
    return ranks;
}

double tie_term(const std::vector<std::size_t>& ties) {
    double sum = 0.0;
    for (std::size_t t : ties) {
        const double d = static_cast<double>(t);
        sum += d * d * d - d;
    }
    return sum;
}

double exact_rank_sum_p(const std::vector<std::int64_t>& ranks, std::size_t n1, std::int64_t observed) {
    // `observed` and the subset sums are doubled rank sums.
    const std::size_t n = ranks.size();
    const std::int64_t max_sum = std::accumulate(ranks.begin(), ranks.end(), std::int64_t{0});
    // ways[j][s]: subsets of size j with doubled-rank sum s
    std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = static_cast<std::size_t>(ranks[i]);
        for (std::size_t j = std::min(n1, i + 1); j >= 1; --j) {
            auto& to = ways[j];
            const auto& from = ways[j - 1];
            for (std::size_t s = static_cast<std::size_t>(max_sum); s >= r; --s) {
                if (from[s - r] != 0.0) to[s] += from[s - r];
                if (s == r) break;
            }
        }
    }
    const auto mean2 = static_cast<std::int64_t>(n1 * (n + 1));  // 2 * E[W] in doubled units
    const std::int64_t observed_dev = std::llabs(observed - mean2);
    double extreme = 0.0, total = 0.0;
    for (std::size_t s = 0; s < ways[n1].size(); ++s) {
        const double w = ways[n1][s];
        if (w == 0.0) continue;
        total += w;
        if (std::llabs(static_cast<std::int64_t>(s) - mean2) >= observed_dev) extreme += w;
    }
    return std::min(1.0, extreme / total);
}

}  // namespace

double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b) {
    require_nonempty(a, b);
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::vector<std::size_t> ties;
    const auto ranks = doubled_midranks(pooled, &ties);
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;
    std::int64_t w2 = 0;  // doubled rank sum of sample a
    for (std::size_t i = 0; i < n1; ++i) w2 += ranks[i];

    if (ties.size() == 1) return 1.0;  // every value identical
    if (n <= kExactRankSumLimit) return exact_rank_sum_p(ranks, n1, w2);

    const double dn = static_cast<double>(n);
    const double mean = static_cast<double>(n1) * (dn + 1.0) / 2.0;
    const double variance = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                            ((dn + 1.0) - tie_term(ties) / (dn * (dn - 1.0)));
    if (variance <= 0.0) return 1.0;
    const double z = (static_cast<double>(w2) / 2.0 - mean) / std::sqrt(variance);
    return std::clamp(std::erfc(std::abs(z) / std::sqrt(2.0)), 0.0, 1.0);
}

double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b) {
    require_nonempty(a, b);
    if (a.size() != b.size()) throw Error(ErrorKind::Evaluation, "signed-rank test needs paired samples of equal size");
    std::vector<double> magnitudes;
    std::vector<bool> positive;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d == 0.0) continue;
        magnitudes.push_back(std::abs(d));
        positive.push_back(d > 0.0);
    }
    if (magnitudes.empty()) return 1.0;
    std::vector<std::size_t> ties;
    const auto ranks = doubled_midranks(magnitudes, &ties);
    double w_plus = 0.0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (positive[i]) w_plus += static_cast<double>(ranks[i]) / 2.0;
    }
    const double n = static_cast<double>(magnitudes.size());
    const double mean = n * (n + 1.0) / 4.0;
    const double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term(ties) / 48.0;
    if (variance <= 0.0) return 1.0;
    const double z = (w_plus - mean) / std::sqrt(variance);
    return std::clamp(std::erfc(std::abs(z) / std::sqrt(2.0)), 0.0, 1.0);
}

std::string_view to_string(EffectSize size) {
    switch (size) {
        case EffectSize::Negligible: return "negligible";
        case EffectSize::Small: return "small";
        case EffectSize::Medium: return "medium";
        case EffectSize::Large: return "large";
    }
    return "?";
}

double cliffs_delta(std::span<const double> a, std::span<const double> b) {
    require_nonempty(a, b);
    std::vector<double> sorted(b.begin(), b.end());
    std::sort(sorted.begin(), sorted.end());
    std::int64_t balance = 0;
    for (double x : a) {
        const auto below = std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
        const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), x);
        balance += below - above;
    }
    return static_cast<double>(std::llabs(balance)) /
           (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

EffectSize categorize_delta(double delta) {
    if (delta < 0.15) return EffectSize::Negligible;
    if (delta < 0.33) return EffectSize::Small;
    if (delta < 0.47) return EffectSize::Medium;
    return EffectSize::Large;
}

StatComparison compare_samples(std::span<const double> a, std::span<const double> b, bool paired) {
    StatComparison c;
    c.p_value = paired ? wilcoxon_signed_rank(a, b) : wilcoxon_rank_sum(a, b);
    c.delta = cliffs_delta(a, b);
    c.category = categorize_delta(c.delta);
    return c;
}

}  // namespace tracelink::eval
