#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tracelink/ablation.hpp"
#include "tracelink/corpus.hpp"
#include "tracelink/error.hpp"
#include "tracelink/io.hpp"
#include "tracelink/pipeline.hpp"
#include "tracelink/stats.hpp"

namespace fs = std::filesystem;
using tracelink::Error;
using tracelink::ErrorKind;

namespace {

struct RunConfig {
    std::string manifest;
    std::string model = "vsm";
    std::string mode = "b+o+i";
    std::string modes = "ir-only,b,o,b+o,o+i,b+o+i";
    double m = 0.5;
    int t = 3;
    std::optional<std::size_t> lsi_rank;
    std::string pairs_dir;
    std::string out = "tracelink-out";
};

// Values seen on the command line; they win over the config file.
struct Flags {
    std::string config_file;
    RunConfig values;
    CLI::App* app = nullptr;
    std::size_t lsi_rank = 0;

    bool given(const std::string& name) const {
        const auto* opt = app->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    }
};

void add_run_flags(CLI::App* sub, Flags& f, bool with_modes) {
    sub->add_option("--config", f.config_file, "JSON run configuration; flags override it");
    sub->add_option("--manifest", f.values.manifest, "dataset manifest (JSON)");
    sub->add_option("--model", f.values.model, "vsm | lsi | js");
    sub->add_option("--mode", f.values.mode, "ir-only | b | o | b+o | o+i | b+o+i");
    sub->add_option("--m", f.values.m, "relative threshold (default 0.5)");
    sub->add_option("--t", f.values.t, "candidate cap (default 3)");
    sub->add_option("--lsi-rank", f.lsi_rank, "LSI rank (default max(2, 0.3 * documents))");
    sub->add_option("--pairs-dir", f.values.pairs_dir, "directory of <id>.pairs dependency files");
    sub->add_option("--out", f.values.out, "output directory");
    if (with_modes) sub->add_option("--modes", f.values.modes, "comma-separated ablation modes");
    f.app = sub;
}

template <typename T>
void take(const nlohmann::json& j, const char* key, T& target) {
    if (!j.contains(key)) return;
    try {
        target = j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(ErrorKind::Config, std::string("config key '") + key + "' has the wrong type");
    }
}

RunConfig resolve(const Flags& f) {
    RunConfig cfg;
    if (!f.config_file.empty()) {
        std::ifstream in(f.config_file);
        if (!in) throw Error(ErrorKind::Load, "cannot open config '" + f.config_file + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorKind::Parse, "config '" + f.config_file + "': " + e.what());
        }
        if (!j.is_object()) throw Error(ErrorKind::Config, "config must be a JSON object");
        take(j, "manifest", cfg.manifest);
        take(j, "model", cfg.model);
        take(j, "mode", cfg.mode);
        take(j, "modes", cfg.modes);
        take(j, "m", cfg.m);
        take(j, "t", cfg.t);
        take(j, "pairs_dir", cfg.pairs_dir);
        take(j, "out", cfg.out);
        if (j.contains("lsi_rank") && !j["lsi_rank"].is_null()) {
            std::size_t k = 0;
            take(j, "lsi_rank", k);
            cfg.lsi_rank = k;
        }
        // Relative paths in a config file resolve against the file itself.
        const fs::path base = fs::path(f.config_file).parent_path();
        for (auto* p : {&cfg.manifest, &cfg.pairs_dir, &cfg.out}) {
            if (!p->empty() && fs::path(*p).is_relative()) *p = (base / *p).string();
        }
    }
    const RunConfig& v = f.values;
    if (f.given("--manifest")) cfg.manifest = v.manifest;
    if (f.given("--model")) cfg.model = v.model;
    if (f.given("--mode")) cfg.mode = v.mode;
    if (f.given("--modes")) cfg.modes = v.modes;
    if (f.given("--m")) cfg.m = v.m;
    if (f.given("--t")) cfg.t = v.t;
    if (f.given("--lsi-rank")) cfg.lsi_rank = f.lsi_rank;
    if (f.given("--pairs-dir")) cfg.pairs_dir = v.pairs_dir;
    if (f.given("--out")) cfg.out = v.out;
    if (cfg.manifest.empty()) throw Error(ErrorKind::Config, "no dataset manifest given (--manifest)");
    return cfg;
}

tracelink::pipeline::RunParameters parameters(const RunConfig& cfg) {
    tracelink::pipeline::RunParameters p;
    p.model = tracelink::ir::parse_model(cfg.model);
    p.thresholds.m = cfg.m;
    p.thresholds.t = cfg.t;
    p.thresholds.validate();
    p.lsi_rank = cfg.lsi_rank;
    return p;
}

tracelink::pipeline::Prepared prepare(const RunConfig& cfg) {
    auto dataset = tracelink::corpus::load_dataset(cfg.manifest);
    std::optional<fs::path> pairs;
    if (!cfg.pairs_dir.empty()) {
        if (!fs::is_directory(cfg.pairs_dir)) {
            throw Error(ErrorKind::Load, "pairs directory '" + cfg.pairs_dir + "' does not exist");
        }
        pairs = cfg.pairs_dir;
    }
    return tracelink::pipeline::prepare(std::move(dataset), pairs);
}

std::string ranked_csv(const tracelink::ir::RankedLists& lists) {
    std::ostringstream s;
    tracelink::io::write_ranked_links(s, lists);
    return s.str();
}

int cmd_trace(const Flags& f) {
    const RunConfig cfg = resolve(f);
    const auto params = parameters(cfg);
    const auto mode = tracelink::pipeline::parse_mode(cfg.mode);
    const auto prepared = prepare(cfg);
    const auto result = tracelink::pipeline::run(prepared, mode, params);
    const fs::path out = cfg.out;
    tracelink::io::write_text(out / "ranked_links.csv", ranked_csv(result.adjusted));
    tracelink::io::write_json(out / "paths.json", tracelink::io::paths_to_json(result.paths));
    tracelink::io::write_json(out / "biterms.json", tracelink::io::biterms_to_json(prepared.consensual));
    tracelink::io::write_json(out / "enriched_corpus.json", tracelink::io::enriched_corpus_to_json(result.documents));
    std::cout << "wrote " << (out / "ranked_links.csv").string() << " and " << (out / "paths.json").string() << "\n";
    return 0;
}

struct EvalFlags {
    std::string ranked;
    std::string baseline_ranked;
    std::string baseline_mode;
    bool paired = false;
};

int cmd_eval(const Flags& f, const EvalFlags& e) {
    const RunConfig cfg = resolve(f);
    const auto params = parameters(cfg);
    auto dataset = tracelink::corpus::load_dataset(cfg.manifest);
    if (dataset.oracle_st.empty()) throw Error(ErrorKind::Config, "manifest has no oracle_st links");
    const auto oracle = dataset.oracle_st;

    std::optional<tracelink::pipeline::Prepared> prepared;
    auto run_mode = [&](const std::string& name) {
        const auto mode = tracelink::pipeline::parse_mode(name);
        if (!prepared) prepared = prepare(cfg);
        return tracelink::pipeline::run(*prepared, mode, params).adjusted;
    };

    const auto lists = e.ranked.empty() ? run_mode(cfg.mode) : tracelink::io::read_ranked_links(e.ranked);
    const auto report = tracelink::eval::evaluate(lists, oracle);
    const fs::path out = cfg.out;
    tracelink::io::write_json(out / "report.json", tracelink::io::report_to_json(report));
    std::ostringstream curve;
    tracelink::io::write_pr_curve(curve, report.pr_curve);
    tracelink::io::write_text(out / "pr_curve.csv", curve.str());

    std::optional<tracelink::ir::RankedLists> baseline;
    if (!e.baseline_ranked.empty()) baseline = tracelink::io::read_ranked_links(e.baseline_ranked);
    if (!e.baseline_mode.empty()) baseline = run_mode(e.baseline_mode);
    std::printf("AP %s  MAP %s\n", tracelink::io::format_score(report.ap).c_str(),
                tracelink::io::format_score(report.map).c_str());
    if (baseline) {
        const auto base_report = tracelink::eval::evaluate(*baseline, oracle);
        const auto cmp = tracelink::eval::compare_samples(report.f_at_recall, base_report.f_at_recall, e.paired);
        auto j = tracelink::io::comparison_to_json(cmp);
        j["test"] = e.paired ? "wilcoxon-signed-rank" : "wilcoxon-rank-sum";
        j["ap"] = tracelink::io::round6(report.ap);
        j["baseline_ap"] = tracelink::io::round6(base_report.ap);
        tracelink::io::write_json(out / "comparison.json", j);
        std::printf("p %s  delta %s (%s)\n", tracelink::io::format_score(cmp.p_value).c_str(),
                    tracelink::io::format_score(cmp.delta).c_str(), std::string(to_string(cmp.category)).c_str());
    }
    return 0;
}

int cmd_ablate(const Flags& f) {
    const RunConfig cfg = resolve(f);
    const auto params = parameters(cfg);
    const auto modes = tracelink::pipeline::parse_modes(cfg.modes);
    const auto prepared = prepare(cfg);
    const auto reports = tracelink::eval::run_ablation(prepared, modes, params);
    const fs::path out = cfg.out;
    for (const auto& r : reports) {
        tracelink::io::write_json(out / ("report_" + r.mode.name() + ".json"), tracelink::io::report_to_json(r.report));
    }
    std::ostringstream summary, plot;
    tracelink::io::write_summary(summary, reports);
    tracelink::io::write_plot_data(plot, reports);
    tracelink::io::write_text(out / "summary.csv", summary.str());
    tracelink::io::write_text(out / "pr_curves.csv", plot.str());
    std::cout << summary.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Traceability link recovery through intermediate artifacts"};
    app.require_subcommand(1);

    Flags trace_flags, eval_flags, ablate_flags;
    EvalFlags eval_extra;
    auto* trace = app.add_subcommand("trace", "rank candidate links and write path traces");
    add_run_flags(trace, trace_flags, false);
    auto* eval = app.add_subcommand("eval", "evaluate a ranking against the manifest oracle");
    add_run_flags(eval, eval_flags, false);
    eval->add_option("--ranked", eval_extra.ranked, "ranked-links CSV to evaluate instead of running");
    eval->add_option("--baseline-ranked", eval_extra.baseline_ranked, "second ranked-links CSV to compare against");
    eval->add_option("--baseline-mode", eval_extra.baseline_mode, "mode to run as the comparison baseline");
    eval->add_flag("--paired", eval_extra.paired, "use the signed-rank test instead of rank-sum");
    auto* ablate = app.add_subcommand("ablate", "run several modes and summarize AP/MAP");
    add_run_flags(ablate, ablate_flags, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*trace) return cmd_trace(trace_flags);
        if (*eval) return cmd_eval(eval_flags, eval_extra);
        if (*ablate) return cmd_ablate(ablate_flags);
    } catch (const Error& e) {
        std::cerr << "tracelink: " << to_string(e.kind()) << " error: " << e.what() << "\n";
        return tracelink::exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "tracelink: error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
