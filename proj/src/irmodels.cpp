#include "tracelink/irmodels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <unordered_map>

#include "tracelink/error.hpp"

namespace tracelink::ir {

std::string_view to_string(Model model) {
    switch (model) {
        case Model::VSM: return "vsm";
        case Model::LSI: return "lsi";
        case Model::JS: return "js";
    }
    return "?";
}

Model parse_model(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "vsm") return Model::VSM;
    if (lower == "lsi") return Model::LSI;
    if (lower == "js") return Model::JS;
    throw Error(ErrorKind::Config, "unknown IR model '" + std::string(name) + "' (expected vsm, lsi or js)");
}

std::size_t TermDocMatrix::doc_index(std::string_view id) const {
    for (std::size_t i = 0; i < doc_ids.size(); ++i) {
        if (doc_ids[i] == id) return i;
    }
    throw Error(ErrorKind::Lookup, "document '" + std::string(id) + "' is not in the matrix");
}

DenseMatrix TermDocMatrix::dense() const {
    DenseMatrix out(vocabulary.size(), doc_ids.size());
    for (std::size_t d = 0; d < columns.size(); ++d) {
        for (const auto& [t, w] : columns[d]) out.at(t, d) = w;
    }
    return out;
}

TermDocMatrix build_matrix(std::span<const corpus::Document> documents, TfScheme tf) {
    if (documents.empty()) throw Error(ErrorKind::Build, "cannot build a matrix without documents");
    TermDocMatrix m;
    std::vector<corpus::TermBag> bags;
    bags.reserve(documents.size());
    std::set<std::string> ids;
    std::set<std::string> vocab;
    for (const auto& doc : documents) {
        if (!ids.insert(doc.artifact_id).second) {
            throw Error(ErrorKind::Build, "duplicate document id '" + doc.artifact_id + "'");
        }
        m.doc_ids.push_back(doc.artifact_id);
        bags.push_back(doc.term_frequencies());
        for (const auto& [term, count] : bags.back()) {
            if (count > 0) vocab.insert(term);
        }
    }
    if (vocab.empty()) throw Error(ErrorKind::Build, "empty vocabulary: every document is empty");
    m.vocabulary.assign(vocab.begin(), vocab.end());

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < m.vocabulary.size(); ++i) index.emplace(m.vocabulary[i], i);

    std::vector<std::size_t> df(m.vocabulary.size(), 0);
    for (const auto& bag : bags) {
        for (const auto& [term, count] : bag) {
            if (count > 0) ++df[index.at(term)];
        }
    }
    const double n = static_cast<double>(documents.size());
    m.idf.resize(df.size());
    for (std::size_t i = 0; i < df.size(); ++i) {
        m.idf[i] = df[i] == documents.size() ? 0.0 : std::log(n / static_cast<double>(df[i]));
    }

    m.columns.resize(bags.size());
    for (std::size_t d = 0; d < bags.size(); ++d) {
        for (const auto& [term, count] : bags[d]) {
            if (count <= 0) continue;
            const std::size_t t = index.at(term);
            const double c = static_cast<double>(count);
            const double weight = (tf == TfScheme::Raw ? c : 1.0 + std::log(c)) * m.idf[t];
            m.columns[d].emplace_back(t, weight);
        }
        // bag iteration is sorted by term, and the vocabulary is sorted too
    }
    return m;
}

double cosine(const SparseVector& a, const SparseVector& b) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [t, w] : a) na += w * w;
    for (const auto& [t, w] : b) nb += w * w;
    if (na == 0.0 || nb == 0.0) return 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            dot += a[i].second * b[j].second;
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            ++i;
        } else {
            ++j;
        }
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

double similarity_vsm(const TermDocMatrix& matrix, std::string_view a, std::string_view b) {
    return std::clamp(cosine(matrix.column(a), matrix.column(b)), 0.0, 1.0);
}

std::size_t LsiSpace::default_rank(std::size_t documents) {
    return std::max<std::size_t>(2, static_cast<std::size_t>(std::floor(0.3 * static_cast<double>(documents))));
}

LsiSpace::LsiSpace(const TermDocMatrix& matrix, std::size_t k) : doc_ids_(matrix.doc_ids), k_(k) {
    const std::size_t max_rank = std::min(matrix.vocabulary.size(), matrix.doc_ids.size());
    if (k < 1 || k > max_rank) {
        throw Error(ErrorKind::Config, "LSI rank " + std::to_string(k) + " outside [1, " +
                                           std::to_string(max_rank) + "]");
    }
    const SvdResult svd = jacobi_svd(matrix.dense());
    sigma_.assign(svd.singular_values.begin(), svd.singular_values.begin() + static_cast<std::ptrdiff_t>(k));
    coords_.assign(doc_ids_.size(), std::vector<double>(k, 0.0));
    for (std::size_t d = 0; d < doc_ids_.size(); ++d) {
        // A zero column maps to the origin; rotation noise must not give it a direction.
        const bool zero = std::all_of(matrix.columns[d].begin(), matrix.columns[d].end(),
                                      [](const auto& e) { return e.second == 0.0; });
        if (zero) continue;
        for (std::size_t r = 0; r < k; ++r) coords_[d][r] = svd.right_vectors.at(d, r) * sigma_[r];
    }
}

std::size_t LsiSpace::index(std::string_view id) const {
    for (std::size_t i = 0; i < doc_ids_.size(); ++i) {
        if (doc_ids_[i] == id) return i;
    }
    throw Error(ErrorKind::Lookup, "document '" + std::string(id) + "' is not in the LSI space");
}

std::vector<double> LsiSpace::coordinates(std::string_view id) const { return coords_[index(id)]; }

double LsiSpace::cosine(std::string_view a, std::string_view b) const {
    return cosine_at(index(a), index(b));
}

double LsiSpace::cosine_at(std::size_t i, std::size_t j) const {
    const auto& x = coords_[i];
    const auto& y = coords_[j];
    double dot = 0.0, nx = 0.0, ny = 0.0;
    for (std::size_t r = 0; r < k_; ++r) {
        dot += x[r] * y[r];
        nx += x[r] * x[r];
        ny += y[r] * y[r];
    }
    if (nx == 0.0 || ny == 0.0) return 0.0;
    return dot / (std::sqrt(nx) * std::sqrt(ny));
}

double similarity_lsi(const TermDocMatrix& matrix, std::size_t k, std::string_view a, std::string_view b) {
    return std::clamp(LsiSpace(matrix, k).cosine(a, b), 0.0, 1.0);
}

double similarity_js(const corpus::Document& a, const corpus::Document& b) {
    const corpus::TermBag ta = a.term_frequencies();
    const corpus::TermBag tb = b.term_frequencies();
    double total_a = 0.0, total_b = 0.0;
    for (const auto& [t, c] : ta) total_a += c;
    for (const auto& [t, c] : tb) total_b += c;
    if (total_a <= 0.0 || total_b <= 0.0) return 0.0;

    std::set<std::string> union_terms;
    for (const auto& [t, c] : ta) union_terms.insert(t);
    for (const auto& [t, c] : tb) union_terms.insert(t);
    const double norm = 1.0 + kJsSmoothing * static_cast<double>(union_terms.size());

    auto prob = [&](const corpus::TermBag& bag, double total, const std::string& term) {
        auto it = bag.find(term);
        const double c = it == bag.end() ? 0.0 : it->second;
        return (c / total + kJsSmoothing) / norm;
    };
    double jsd = 0.0;
    for (const auto& term : union_terms) {
        const double p = prob(ta, total_a, term);
        const double q = prob(tb, total_b, term);
        const double mid = 0.5 * (p + q);
        jsd += 0.5 * p * std::log2(p / mid) + 0.5 * q * std::log2(q / mid);
    }
    return std::clamp(1.0 - jsd, 0.0, 1.0);
}

namespace {
std::pair<std::string, std::string> key(std::string_view a, std::string_view b) {
    return a <= b ? std::pair{std::string(a), std::string(b)} : std::pair{std::string(b), std::string(a)};
}
}  // namespace

void SimilarityTable::set(const std::string& a, const std::string& b, double score) {
    scores_[key(a, b)] = std::isnan(score) ? 0.0 : std::clamp(score, 0.0, 1.0);
}

double SimilarityTable::get(std::string_view a, std::string_view b) const {
    auto it = scores_.find(key(a, b));
    if (it == scores_.end()) {
        throw Error(ErrorKind::Lookup, "no similarity for pair ('" + std::string(a) + "', '" +
                                           std::string(b) + "')");
    }
    return it->second;
}

bool SimilarityTable::contains(std::string_view a, std::string_view b) const {
    return scores_.count(key(a, b)) != 0;
}

SimilarityTable compute_similarities(Model model, std::span<const corpus::Document> documents,
                                     const SimilarityOptions& options) {
    SimilarityTable table(model);
    if (documents.size() < 2) return table;
    auto for_each_pair = [&](auto&& score) {
        for (std::size_t i = 0; i < documents.size(); ++i) {
            for (std::size_t j = i + 1; j < documents.size(); ++j) {
                table.set(documents[i].artifact_id, documents[j].artifact_id, score(i, j));
            }
        }
    };
    switch (model) {
        case Model::VSM: {
            const TermDocMatrix m = build_matrix(documents, options.tf);
            for_each_pair([&](std::size_t i, std::size_t j) { return cosine(m.columns[i], m.columns[j]); });
            break;
        }
        case Model::LSI: {
            const TermDocMatrix m = build_matrix(documents, options.tf);
            const std::size_t max_rank = std::min(m.vocabulary.size(), m.doc_ids.size());
            const std::size_t k = options.lsi_rank.value_or(std::min(LsiSpace::default_rank(documents.size()), max_rank));
            const LsiSpace space(m, k);
            for_each_pair([&](std::size_t i, std::size_t j) { return space.cosine_at(i, j); });
            break;
        }
        case Model::JS:
            for_each_pair([&](std::size_t i, std::size_t j) { return similarity_js(documents[i], documents[j]); });
            break;
    }
    return table;
}

void sort_ranked(RankedList& list) {
    std::sort(list.begin(), list.end(), [](const ScoredTarget& x, const ScoredTarget& y) {
        if (x.score != y.score) return x.score > y.score;
        return x.id < y.id;
    });
}

RankedLists rank_candidates(const SimilarityTable& table, std::span<const std::string> sources,
                            std::span<const std::string> targets) {
    RankedLists out;
    for (const auto& s : sources) {
        RankedList list;
        list.reserve(targets.size());
        for (const auto& t : targets) list.push_back({t, table.get(s, t)});
        sort_ranked(list);
        out.emplace(s, std::move(list));
    }
    return out;
}

}  // namespace tracelink::ir
