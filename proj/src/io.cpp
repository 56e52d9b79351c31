#include "tracelink/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "tracelink/error.hpp"

namespace tracelink::io {

std::string format_score(double value) {
    if (value == 0.0) value = 0.0;  // no "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

double round6(double value) {
    const double r = std::round(value * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;
}

void write_ranked_links(std::ostream& out, const ir::RankedLists& lists) {
    out << "source_id,target_id,score\n";
    for (const auto& [source, list] : lists) {
        ir::RankedList sorted = list;
        ir::sort_ranked(sorted);
        for (const auto& t : sorted) out << source << ',' << t.id << ',' << format_score(t.score) << '\n';
    }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

ir::RankedLists read_ranked_links(std::istream& in, const std::string& source_name) {
    ir::RankedLists lists;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::Parse, source_name + ":" + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != "source_id,target_id,score") fail("expected header 'source_id,target_id,score'");
            continue;
        }
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 3) fail("expected 3 fields, got " + std::to_string(fields.size()));
        if (fields[0].empty() || fields[1].empty()) fail("empty artifact id");
        double score = 0.0;
        std::size_t used = 0;
        try {
            score = std::stod(fields[2], &used);
        } catch (const std::exception&) {
            fail("invalid score '" + fields[2] + "'");
        }
        if (used != fields[2].size() || !std::isfinite(score)) fail("invalid score '" + fields[2] + "'");
        lists[fields[0]].push_back({fields[1], score});
    }
    if (line_no == 0) throw Error(ErrorKind::Parse, source_name + ":1: empty file");
    for (auto& [source, list] : lists) ir::sort_ranked(list);
    return lists;
}

ir::RankedLists read_ranked_links(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Load, "cannot open ranked links '" + path.string() + "'");
    return read_ranked_links(in, path.string());
}

nlohmann::json paths_to_json(const std::map<std::string, std::vector<transitive::TransitivePath>>& paths) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [source, list] : paths) {
        for (const auto& p : list) {
            nlohmann::json links = nlohmann::json::array();
            for (const auto& l : p.links) {
                links.push_back({{"from", l.from},
                                 {"to", l.to},
                                 {"kind", std::string(transitive::to_string(l.kind))},
                                 {"score", round6(l.score)}});
            }
            out.push_back({{"source", source}, {"nodes", p.nodes}, {"links", links}, {"bonus", round6(p.bonus)}});
        }
    }
    return out;
}

nlohmann::json enriched_corpus_to_json(std::span<const corpus::Document> documents) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& doc : documents) {
        nlohmann::json base = nlohmann::json::object();
        nlohmann::json added = nlohmann::json::object();
        for (const auto& [term, weight] : doc.terms) base[term] = weight;
        for (const auto& [term, weight] : doc.added_biterm_terms) added[term] = weight;
        out.push_back({{"id", doc.artifact_id}, {"terms", base}, {"biterms", added}});
    }
    return out;
}

nlohmann::json biterms_to_json(const biterm::FilteredSets& sets) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto* group : {&sets.sources, &sets.intermediates, &sets.targets}) {
        for (const auto& s : *group) out[s.artifact_id] = biterm::to_json(s);
    }
    return out;
}

nlohmann::json report_to_json(const eval::EvalReport& report) {
    nlohmann::json curve = nlohmann::json::array();
    for (const auto& p : report.pr_curve) curve.push_back({round6(p.recall), round6(p.precision)});
    nlohmann::json f = nlohmann::json::array();
    for (double v : report.f_at_recall) f.push_back(round6(v));
    nlohmann::json per_query = nlohmann::json::object();
    for (const auto& [q, ap] : report.per_query_ap) per_query[q] = round6(ap);
    return {{"ap", round6(report.ap)},
            {"map", round6(report.map)},
            {"per_query_ap", per_query},
            {"f_at_recall", f},
            {"pr_curve", curve}};
}

nlohmann::json comparison_to_json(const eval::StatComparison& c) {
    return {{"p_value", round6(c.p_value)},
            {"delta", round6(c.delta)},
            {"category", std::string(eval::to_string(c.category))}};
}

void write_pr_curve(std::ostream& out, std::span<const eval::PrPoint> curve) {
    out << "recall,precision\n";
    for (const auto& p : curve) out << format_score(p.recall) << ',' << format_score(p.precision) << '\n';
}

void write_summary(std::ostream& out, std::span<const eval::ModeReport> reports) {
    out << "mode,ap,map\n";
    for (const auto& r : reports) {
        out << r.mode.name() << ',' << format_score(r.report.ap) << ',' << format_score(r.report.map) << '\n';
    }
}

void write_plot_data(std::ostream& out, std::span<const eval::ModeReport> reports) {
    out << "mode,recall,precision\n";
    for (const auto& r : reports) {
        for (const auto& p : r.report.pr_curve) {
            out << r.mode.name() << ',' << format_score(p.recall) << ',' << format_score(p.precision) << '\n';
        }
    }
}

void write_text(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Load, "cannot write '" + path.string() + "'");
    out << contents;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& value) {
    write_text(path, value.dump(2) + "\n");
}

}  // namespace tracelink::io
