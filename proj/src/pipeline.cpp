#include "tracelink/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "tracelink/error.hpp"

namespace tracelink::pipeline {

std::string Mode::name() const {
    if (!biterms && !outer && !inner) return "ir-only";
    std::string out;
    auto append = [&](const char* part) {
        if (!out.empty()) out += "+";
        out += part;
    };
    if (biterms) append("b");
    if (outer) append("o");
    if (inner) append("i");
    return out;
}

const std::vector<Mode>& all_modes() {
    static const std::vector<Mode> modes = {
        {false, false, false}, {true, false, false}, {false, true, false},
        {true, true, false},   {false, true, true},  {true, true, true},
    };
    return modes;
}

Mode parse_mode(std::string_view name) {
    for (const auto& m : all_modes()) {
        if (m.name() == name) return m;
    }
    throw Error(ErrorKind::Config, "invalid mode '" + std::string(name) +
                                       "' (expected ir-only, b, o, b+o, o+i or b+o+i)");
}

std::vector<Mode> parse_modes(std::string_view list) {
    std::vector<Mode> out;
    std::stringstream ss{std::string(list)};
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (item.empty()) continue;
        const Mode m = parse_mode(item);
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    if (out.empty()) throw Error(ErrorKind::Config, "no ablation modes given");
    return out;
}

namespace {

template <typename F>
auto staged(std::string_view stage, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        throw e.with_context("stage '" + std::string(stage) + "'");
    }
}

}  // namespace

Prepared prepare(corpus::Dataset dataset, const std::optional<std::filesystem::path>& pairs_dir) {
    Prepared p;
    p.levels = transitive::LevelIds::from(dataset);
    p.dataset = std::move(dataset);
    staged("extract", [&] {
        for (const auto* artifact : p.dataset.all()) {
            try {
                p.base_documents.push_back(corpus::build_document(*artifact));
                const auto pairs = pairs_dir ? *pairs_dir / (artifact->id + ".pairs") : std::filesystem::path{};
                if (pairs_dir && std::filesystem::exists(pairs)) {
                    p.raw_biterms.push_back(biterm::import_parsed_pairs(artifact->id, pairs));
                } else {
                    p.raw_biterms.push_back(biterm::extract_biterms(*artifact));
                }
            } catch (const Error& e) {
                throw e.with_context("artifact '" + artifact->id + "'");
            }
        }
        return 0;
    });
    const std::size_t ns = p.dataset.sources.size();
    const std::size_t ni = p.dataset.intermediates.size();
    const std::span<const biterm::BitermSet> all(p.raw_biterms);
    p.consensual = biterm::consensual_filter(all.subspan(0, ns), all.subspan(ns, ni), all.subspan(ns + ni));
    return p;
}

const biterm::BitermSet* consensual_set(const Prepared& prepared, std::string_view artifact_id) {
    for (const auto* group : {&prepared.consensual.sources, &prepared.consensual.intermediates,
                              &prepared.consensual.targets}) {
        for (const auto& s : *group) {
            if (s.artifact_id == artifact_id) return &s;
        }
    }
    return nullptr;
}

RunResult run(const Prepared& prepared, const Mode& mode, const RunParameters& params) {
    params.thresholds.validate();
    RunResult result;
    result.mode = mode;
    ir::SimilarityOptions sim_options;
    sim_options.lsi_rank = params.lsi_rank;
    const auto& levels = prepared.levels;

    if (mode.biterms) {
        // Step 1: every artifact carries its own consensual biterms.
        std::vector<corpus::Document> step1;
        step1.reserve(prepared.base_documents.size());
        for (const auto& doc : prepared.base_documents) {
            const auto* own = consensual_set(prepared, doc.artifact_id);
            step1.push_back(own != nullptr ? enrich::add_own_biterms(doc, *own) : doc);
        }
        const auto pre = staged("similarity (pre-enrichment)",
                                [&] { return ir::compute_similarities(params.model, step1, sim_options); });

        // Step 3: sources and targets borrow biterms from related intermediates.
        staged("enrich", [&] {
            for (auto& doc : step1) {
                const corpus::Artifact* artifact = prepared.dataset.find(doc.artifact_id);
                if (artifact->level == corpus::Level::Intermediate) continue;
                auto related = enrich::select_related_intermediates(doc.artifact_id, levels.intermediates, pre,
                                                                    params.thresholds);
                std::vector<biterm::BitermSet> sets;
                for (const auto& id : related) sets.push_back(*consensual_set(prepared, id));
                doc = enrich::enrich_artifact(std::move(doc), sets);
                result.related_intermediates.emplace(doc.artifact_id, std::move(related));
            }
            return 0;
        });
        result.documents = std::move(step1);
    } else {
        result.documents = prepared.base_documents;
    }

    result.table = staged("similarity",
                          [&] { return ir::compute_similarities(params.model, result.documents, sim_options); });
    result.ir_ranked = staged("rank", [&] { return ir::rank_candidates(result.table, levels.sources, levels.targets); });

    if (mode.outer) {
        std::vector<transitive::TransitivePath> all_paths;
        staged("transitive", [&] {
            for (const auto& source : levels.sources) {
                auto paths = transitive::form_paths(source, levels, result.table, params.thresholds,
                                                    transitive::PathOptions{mode.inner});
                all_paths.insert(all_paths.end(), paths.begin(), paths.end());
                result.paths.emplace(source, std::move(paths));
            }
            return 0;
        });
        result.adjusted = transitive::adjust_scores(result.ir_ranked, all_paths);
    } else {
        result.adjusted = result.ir_ranked;
    }
    return result;
}

}  // namespace tracelink::pipeline
