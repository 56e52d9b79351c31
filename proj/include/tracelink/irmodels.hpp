#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tracelink/corpus.hpp"
#include "tracelink/svd.hpp"

namespace tracelink::ir {

enum class Model { VSM, LSI, JS };

std::string_view to_string(Model model);
Model parse_model(std::string_view name);  // "vsm" | "lsi" | "js", case-insensitive

enum class TfScheme {
    Raw,        // tf = count
    Sublinear,  // tf = 1 + ln(count)
};

using SparseVector = std::vector<std::pair<std::size_t, double>>;  // (term index, weight), sorted

// tf-idf weighted term-by-document matrix. idf = ln(N / df).
struct TermDocMatrix {
    std::vector<std::string> vocabulary;  // sorted
    std::vector<std::string> doc_ids;
    std::vector<double> idf;              // per vocabulary entry
    std::vector<SparseVector> columns;    // per document

    std::size_t doc_index(std::string_view id) const;  // throws Lookup
    const SparseVector& column(std::string_view id) const { return columns[doc_index(id)]; }
    DenseMatrix dense() const;  // terms x documents
};

TermDocMatrix build_matrix(std::span<const corpus::Document> documents, TfScheme tf = TfScheme::Raw);

double cosine(const SparseVector& a, const SparseVector& b);

double similarity_vsm(const TermDocMatrix& matrix, std::string_view a, std::string_view b);

// Documents projected onto the top-k right singular vectors scaled by the
// singular values.
class LsiSpace {
public:
    LsiSpace(const TermDocMatrix& matrix, std::size_t k);

    static std::size_t default_rank(std::size_t documents);

    std::size_t rank() const { return k_; }
    const std::vector<double>& singular_values() const { return sigma_; }
    std::vector<double> coordinates(std::string_view id) const;
    // Raw cosine, may be negative.
    double cosine(std::string_view a, std::string_view b) const;
    double cosine_at(std::size_t i, std::size_t j) const;  // by position in the matrix

private:
    std::vector<std::string> doc_ids_;
    std::size_t k_;
    std::vector<double> sigma_;
    std::vector<std::vector<double>> coords_;  // per document, length k
    std::size_t index(std::string_view id) const;
};

// Cosine in the rank-k LSI space, negative values clamped to 0.
double similarity_lsi(const TermDocMatrix& matrix, std::size_t k, std::string_view a, std::string_view b);

inline constexpr double kJsSmoothing = 1e-9;

// 1 - Jensen-Shannon divergence (base 2) of the smoothed term distributions.
double similarity_js(const corpus::Document& a, const corpus::Document& b);

// Symmetric pairwise similarities in [0, 1].
class SimilarityTable {
public:
    explicit SimilarityTable(Model model = Model::VSM) : model_(model) {}

    Model model() const { return model_; }
    void set(const std::string& a, const std::string& b, double score);  // clamps to [0, 1]
    double get(std::string_view a, std::string_view b) const;           // throws Lookup
    bool contains(std::string_view a, std::string_view b) const;
    std::size_t size() const { return scores_.size(); }
    const std::map<std::pair<std::string, std::string>, double>& entries() const { return scores_; }

private:
    Model model_;
    std::map<std::pair<std::string, std::string>, double> scores_;  // key: (min id, max id)
};

struct SimilarityOptions {
    std::optional<std::size_t> lsi_rank;
    TfScheme tf = TfScheme::Raw;
};

// All unordered pairs over the given documents; the tf-idf universe is the
// whole document list.
SimilarityTable compute_similarities(Model model, std::span<const corpus::Document> documents,
                                     const SimilarityOptions& options = {});

struct ScoredTarget {
    std::string id;
    double score = 0.0;

    bool operator==(const ScoredTarget&) const = default;
};

using RankedList = std::vector<ScoredTarget>;
using RankedLists = std::map<std::string, RankedList>;  // source id -> ranked targets

// Descending score, ascending id on ties.
void sort_ranked(RankedList& list);

RankedLists rank_candidates(const SimilarityTable& table, std::span<const std::string> sources,
                            std::span<const std::string> targets);

}  // namespace tracelink::ir
