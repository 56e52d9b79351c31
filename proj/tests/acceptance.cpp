// Acceptance checks. Prints one PASS/FAIL/SKIP line per criterion and exits
// nonzero if any gating criterion fails. An optional argument runs one check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "random_tables.hpp"
#include "test_support.hpp"
#include "tracelink/ablation.hpp"
#include "tracelink/biterm.hpp"
#include "tracelink/io.hpp"
#include "tracelink/metrics.hpp"
#include "tracelink/pipeline.hpp"
#include "tracelink/stats.hpp"

using namespace tracelink;
namespace fs = std::filesystem;

namespace {

// Tolerances and time budgets.
constexpr double kVsmTolerance = 1e-10;
constexpr double kLsiTolerance = 1e-8;
constexpr double kJsTolerance = 1e-9;
constexpr double kMetricTolerance = 1e-12;
constexpr double kWilcoxonTolerance = 1e-9;
constexpr double kMotivatingSeconds = 1.0;
constexpr double kSimilaritySeconds = 10.0;
constexpr double kTransitiveSeconds = 30.0;
constexpr double kMetricSeconds = 10.0;

enum class Outcome { Pass, Fail, Skip };

struct Result {
    Outcome outcome = Outcome::Pass;
    std::string detail;
};

Result fail(std::string why) { return {Outcome::Fail, std::move(why)}; }

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Result timed(const Timer& t, double budget, std::string detail) {
    const double s = t.seconds();
    char buf[64];
    std::snprintf(buf, sizeof buf, " in %.3fs (budget %.0fs)", s, budget);
    if (s >= budget) return fail(detail + buf);
    return {Outcome::Pass, detail + buf};
}

const fs::path kMotivating = testsupport::repo_dir() / "data" / "motivating" / "manifest.json";

std::size_t rank_of(const ir::RankedList& list, const std::string& id) {
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i].id == id) return i + 1;
    }
    return 0;
}

Result motivating() {
    const Timer timer;
    const auto prepared = pipeline::prepare(corpus::load_dataset(kMotivating));
    pipeline::RunParameters params;
    params.model = ir::Model::VSM;
    params.thresholds = {0.5, 3};
    const auto full = pipeline::run(prepared, pipeline::parse_mode("b+o+i"), params);
    const auto base = pipeline::run(prepared, pipeline::parse_mode("ir-only"), params);

    const auto* box = pipeline::consensual_set(prepared, "AFInfoBox");
    if (box == nullptr || box->size() != 1 || !box->contains({"assign", "rout"})) {
        return fail("AFInfoBox filtered biterms are not exactly {(assign, rout)}");
    }
    std::set<std::vector<std::string>> paths;
    for (const auto& p : full.paths.at("RE-691")) paths.insert(p.nodes);
    for (const std::vector<std::string> want : {std::vector<std::string>{"RE-691", "DD-694", "AFEmergencyComponent"},
                                                std::vector<std::string>{"RE-691", "DD-694", "DD-647", "AFInfoBox"}}) {
        if (!paths.count(want)) return fail("missing path " + want.front() + "->...->" + want.back());
    }
    const auto before = rank_of(base.adjusted.at("RE-691"), "AFInfoBox");
    const auto after = rank_of(full.adjusted.at("RE-691"), "AFInfoBox");
    if (!(after < before)) {
        return fail("AFInfoBox rank for RE-691: ir-only " + std::to_string(before) + ", b+o+i " + std::to_string(after));
    }
    return timed(timer, kMotivatingSeconds,
                 "AFInfoBox rank " + std::to_string(before) + " -> " + std::to_string(after) + ", both paths present");
}

Result biterm_conformance() {
    const auto box = biterm::extract_code_biterms(
        corpus::make_artifact("AFInfoBox", corpus::Level::Target, corpus::Kind::Code, "public class AFInfoBox {}"));
    const std::map<biterm::Pair, int> want{{{"af", "info"}, 2}, {{"af", "box"}, 2}, {{"box", "info"}, 2}};
    if (box.biterms != want) return fail("AFInfoBox class-name biterms differ");

    corpus::Artifact a;
    a.id = "C";
    a.level = corpus::Level::Target;
    a.kind = corpus::Kind::Code;
    a.code_parts.class_names = {{"flight", "plan"}};
    a.code_parts.comments = corpus::tokenize_natural("Flight plan. Flight plan.");
    a.code_parts.parameter_type_names = {{"flight", "plan"}, {"flight", "plan"}, {"flight", "plan"}};
    const int count = biterm::extract_code_biterms(a).count({"flight", "plan"});
    if (count != 5) return fail("composite importance is " + std::to_string(count) + ", expected 5");
    return {Outcome::Pass, "class-name pairs x2, composite importance 5"};
}

Result similarity_oracles() {
    const Timer timer;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> docs_n(2, 20), terms_n(1, 50);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    double vsm_err = 0, lsi_err = 0, js_err = 0;
    for (int round = 0; round < 50; ++round) {
        const auto bags = oracle::random_bags(rng, docs_n(rng), terms_n(rng), density(rng));
        std::vector<corpus::Document> docs;
        for (std::size_t i = 0; i < bags.size(); ++i) docs.push_back(testsupport::doc("d" + std::to_string(i), bags[i]));
        const auto want = oracle::vsm(bags);
        bool has_terms = false;
        for (const auto& b : bags) has_terms = has_terms || !b.empty();
        if (!has_terms) continue;
        const auto vsm = ir::compute_similarities(ir::Model::VSM, docs);
        const auto matrix = ir::build_matrix(docs);
        ir::SimilarityOptions full;
        full.lsi_rank = std::min(matrix.vocabulary.size(), matrix.doc_ids.size());
        const auto lsi = ir::compute_similarities(ir::Model::LSI, docs, full);
        const auto js = ir::compute_similarities(ir::Model::JS, docs);
        for (std::size_t i = 0; i < docs.size(); ++i) {
            for (std::size_t j = i + 1; j < docs.size(); ++j) {
                const auto& a = docs[i].artifact_id;
                const auto& b = docs[j].artifact_id;
                vsm_err = std::max(vsm_err, std::abs(vsm.get(a, b) - want[i][j]));
                lsi_err = std::max(lsi_err, std::abs(lsi.get(a, b) - vsm.get(a, b)));
                const double js_want = bags[i].empty() || bags[j].empty()
                                           ? 0.0
                                           : std::clamp(oracle::js(bags[i], bags[j], ir::kJsSmoothing), 0.0, 1.0);
                js_err = std::max(js_err, std::abs(js.get(a, b) - js_want));
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "max error vsm %.2e, lsi %.2e, js %.2e", vsm_err, lsi_err, js_err);
    if (vsm_err > kVsmTolerance || lsi_err > kLsiTolerance || js_err > kJsTolerance) return fail(buf);
    return timed(timer, kSimilaritySeconds, buf);
}

Result transitive_oracle() {
    const Timer timer;
    std::mt19937_64 rng(8);
    std::size_t compared = 0;
    for (int round = 0; round < 100; ++round) {
        const auto r = testsupport::random_levels(rng, 8);
        const auto ir_lists = ir::rank_candidates(r.table, r.levels.sources, r.levels.targets);
        std::vector<transitive::TransitivePath> all;
        for (const auto& s : r.levels.sources) {
            const auto outer = transitive::form_paths(s, r.levels, r.table, {}, {false});
            const auto both = transitive::form_paths(s, r.levels, r.table, {}, {true});
            std::set<std::vector<std::string>> got_o, got_oi, want_o, want_oi;
            for (const auto& p : outer) got_o.insert(p.nodes);
            for (const auto& p : both) got_oi.insert(p.nodes);
            for (const auto& p : oracle::all_paths(s, r.levels, r.table, 0.5, 3, false)) want_o.insert(p.nodes);
            for (const auto& p : oracle::all_paths(s, r.levels, r.table, 0.5, 3, true)) want_oi.insert(p.nodes);
            if (got_o != want_o || got_oi != want_oi) return fail("path sets differ in round " + std::to_string(round));
            if (!std::includes(got_oi.begin(), got_oi.end(), got_o.begin(), got_o.end())) {
                return fail("mode o paths not contained in mode o+i paths");
            }
            all.insert(all.end(), both.begin(), both.end());
            compared += want_oi.size();
        }
        const auto adjusted = transitive::adjust_scores(ir_lists, all);
        for (const auto& [s, list] : ir_lists) {
            for (const auto& c : list) {
                const auto& adj = adjusted.at(s);
                const auto it = std::find_if(adj.begin(), adj.end(), [&](const auto& x) { return x.id == c.id; });
                if (it == adj.end() || it->score < c.score) return fail("adjusted score below IR score");
            }
        }
    }
    return timed(timer, kTransitiveSeconds, std::to_string(compared) + " paths matched over 100 datasets");
}

Result hop_state() {
    const enrich::EnrichmentConfig cfg{0.5, 3};
    const auto one = transitive::HopState::after(cfg, 1);
    const auto two = transitive::HopState::initial(cfg).advance(cfg).advance(cfg);
    if (one.m_eff != 0.6 || one.t_eff != 2 || two.m_eff != 0.7 || two.t_eff != 1) {
        return fail("hop states differ from (0.6, 2) and (0.7, 1)");
    }
    return {Outcome::Pass, "(0.6, 2) then (0.7, 1)"};
}

Result metric_oracles() {
    const Timer timer;
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> qn(1, 5), tn(1, 4), grid(0, 10);
    std::bernoulli_distribution rel(0.35);
    double ap_err = 0, map_err = 0;
    for (int round = 0; round < 100; ++round) {
        ir::RankedLists lists;
        std::map<std::string, std::vector<std::pair<std::string, double>>> plain;
        std::vector<std::pair<std::pair<std::string, std::string>, double>> flat;
        std::set<std::pair<std::string, std::string>> truth;
        const int q = qn(rng), t = tn(rng);
        for (int i = 0; i < q; ++i) {
            const std::string s = "Q" + std::to_string(i);
            for (int j = 0; j < t; ++j) {
                const std::string id = "T" + std::to_string(j);
                const double v = grid(rng) / 10.0;
                lists[s].push_back({id, v});
                plain[s].push_back({id, v});
                flat.push_back({{s, id}, v});
                if (rel(rng)) truth.insert({s, id});
            }
        }
        if (truth.empty()) truth.insert({"Q0", "T0"});
        const auto report = eval::evaluate(lists, truth);
        ap_err = std::max(ap_err, std::abs(report.ap - oracle::ap_direct(flat, truth)));
        map_err = std::max(map_err, std::abs(report.map - oracle::map_direct(plain, truth)));
    }

    std::uniform_int_distribution<int> n(1, 8), v(0, 6);
    double w_err = 0;
    for (int round = 0; round < 200; ++round) {
        std::vector<double> a(n(rng)), b(n(rng));
        for (auto& x : a) x = v(rng);
        for (auto& x : b) x = v(rng);
        if (eval::cliffs_delta(a, b) != oracle::cliffs_direct(a, b)) return fail("Cliff's delta differs from pair count");
        std::set<double> distinct(a.begin(), a.end());
        distinct.insert(b.begin(), b.end());
        const double want = distinct.size() == 1 ? 1.0 : oracle::rank_sum_exhaustive(a, b);
        w_err = std::max(w_err, std::abs(eval::wilcoxon_rank_sum(a, b) - want));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "max error ap %.2e, map %.2e, wilcoxon %.2e; cliff exact", ap_err, map_err, w_err);
    if (ap_err > kMetricTolerance || map_err > kMetricTolerance || w_err > kWilcoxonTolerance) return fail(buf);
    return timed(timer, kMetricSeconds, buf);
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(TRACELINK_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Result determinism() {
    const auto root = testsupport::scratch("acceptance_determinism");
    for (const char* run : {"a", "b"}) {
        if (run_cli("ablate --manifest " + kMotivating.string() + " --out " + (root / run).string()) != 0) {
            return fail("ablate run failed");
        }
    }
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(root / "a")) {
        const auto other = root / "b" / e.path().filename();
        if (!fs::exists(other) || testsupport::slurp(e.path()) != testsupport::slurp(other)) {
            return fail("outputs differ: " + e.path().filename().string());
        }
        ++files;
    }
    std::size_t files_b = std::distance(fs::directory_iterator(root / "b"), fs::directory_iterator{});
    if (files != files_b || files == 0) return fail("output file sets differ");
    return {Outcome::Pass, std::to_string(files) + " files byte-identical across two runs"};
}

Result ebt_stretch() {
    const auto manifest = testsupport::repo_dir() / "data" / "ebt" / "manifest.json";
    if (!fs::exists(manifest)) return {Outcome::Skip, "no dataset at data/ebt/manifest.json"};
    const auto prepared = pipeline::prepare(corpus::load_dataset(manifest));
    const std::vector<pipeline::Mode> modes{pipeline::parse_mode("b+o+i")};
    const auto reports = eval::run_ablation(prepared, modes, {});
    char buf[160];
    std::snprintf(buf, sizeof buf, "AP %.2f (reference 23.04), MAP %.2f (reference 38.10); informational",
                  reports[0].report.ap, reports[0].report.map);
    return {Outcome::Skip, buf};
}

struct Criterion {
    const char* name;
    std::function<Result()> check;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {"motivating_example", motivating},   {"biterm_conformance", biterm_conformance},
        {"similarity_oracles", similarity_oracles}, {"transitive_oracle", transitive_oracle},
        {"hop_state", hop_state},             {"metric_oracles", metric_oracles},
        {"determinism", determinism},         {"ebt_stretch", ebt_stretch},
    };
    const std::string only = argc > 1 ? argv[1] : "";
    int failures = 0, ran = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && only != c.name) continue;
        ++ran;
        Result r;
        try {
            r = c.check();
        } catch (const std::exception& e) {
            r = fail(std::string("exception: ") + e.what());
        }
        const char* tag = r.outcome == Outcome::Pass ? "PASS" : r.outcome == Outcome::Fail ? "FAIL" : "SKIP";
        std::cout << tag << " " << c.name << ": " << r.detail << std::endl;
        failures += r.outcome == Outcome::Fail;
    }
    if (ran == 0) {
        std::cerr << "unknown criterion '" << only << "'\n";
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
