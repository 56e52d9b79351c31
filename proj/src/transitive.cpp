#include "tracelink/transitive.hpp"

#include <algorithm>
#include <set>

#include "tracelink/error.hpp"

namespace tracelink::transitive {

std::string_view to_string(LinkKind kind) { return kind == LinkKind::Outer ? "outer" : "inner"; }

HopState HopState::initial(const enrich::EnrichmentConfig& config) { return after(config, 0); }

HopState HopState::advance(const enrich::EnrichmentConfig& config) const { return after(config, hops + 1); }

HopState HopState::after(const enrich::EnrichmentConfig& config, int hops) {
    HopState s;
    s.hops = hops;
    // (10m + n) / 10 rounds once, so 0.5 + 0.1 * 2 comes out as exactly 0.7.
    s.m_eff = (10.0 * config.m + static_cast<double>(hops)) / 10.0;
    s.t_eff = std::max(1, config.t - hops);
    return s;
}

bool TransitivePath::has_inner() const {
    return std::any_of(links.begin(), links.end(), [](const TransitiveLink& l) { return l.kind == LinkKind::Inner; });
}

LevelIds LevelIds::from(const corpus::Dataset& dataset) {
    return LevelIds{dataset.ids(corpus::Level::Source), dataset.ids(corpus::Level::Intermediate),
                    dataset.ids(corpus::Level::Target)};
}

std::vector<TransitiveLink> candidate_links(const std::string& from, std::span<const std::string> pool,
                                            const ir::SimilarityTable& table, const HopState& state,
                                            LinkKind kind) {
    ir::RankedList ranked;
    for (const auto& id : pool) {
        if (id != from) ranked.push_back({id, table.get(from, id)});
    }
    ir::sort_ranked(ranked);
    std::vector<TransitiveLink> out;
    if (ranked.empty() || ranked.front().score <= 0.0) return out;
    const double cutoff = state.m_eff * ranked.front().score;
    for (const auto& c : ranked) {
        if (out.size() >= static_cast<std::size_t>(state.t_eff) || c.score < cutoff) break;
        out.push_back({from, c.id, kind, c.score});
    }
    return out;
}

namespace {

TransitivePath make_path(std::vector<TransitiveLink> links) {
    TransitivePath p;
    p.nodes.push_back(links.front().from);
    p.bonus = 1.0;
    for (const auto& l : links) {
        p.nodes.push_back(l.to);
        p.bonus *= l.score;
    }
    p.links = std::move(links);
    return p;
}

}  // namespace

std::vector<TransitivePath> form_paths(const std::string& source, const LevelIds& levels,
                                       const ir::SimilarityTable& table,
                                       const enrich::EnrichmentConfig& config, const PathOptions& options) {
    std::vector<TransitivePath> paths;
    const HopState start = HopState::initial(config);
    const HopState one = start.advance(config);
    const HopState two = one.advance(config);

    const auto first_hops = candidate_links(source, levels.intermediates, table, start, LinkKind::Outer);

    // S -> I -> T
    for (const auto& si : first_hops) {
        for (const auto& it : candidate_links(si.to, levels.targets, table, one, LinkKind::Outer)) {
            paths.push_back(make_path({si, it}));
        }
    }
    if (!options.inner) return paths;

    // S -> S' -> I -> T
    for (const auto& ss : candidate_links(source, levels.sources, table, start, LinkKind::Inner)) {
        for (const auto& si : candidate_links(ss.to, levels.intermediates, table, one, LinkKind::Outer)) {
            for (const auto& it : candidate_links(si.to, levels.targets, table, two, LinkKind::Outer)) {
                paths.push_back(make_path({ss, si, it}));
            }
        }
    }
    // S -> I -> I' -> T
    for (const auto& si : first_hops) {
        for (const auto& ii : candidate_links(si.to, levels.intermediates, table, one, LinkKind::Inner)) {
            for (const auto& it : candidate_links(ii.to, levels.targets, table, two, LinkKind::Outer)) {
                paths.push_back(make_path({si, ii, it}));
            }
        }
    }
    return paths;
}

ir::RankedLists adjust_scores(const ir::RankedLists& candidates, std::span<const TransitivePath> paths) {
    std::map<std::pair<std::string, std::string>, double> factor;
    for (const auto& p : paths) {
        auto [it, inserted] = factor.try_emplace({p.source(), p.target()}, 1.0);
        it->second *= 1.0 + p.bonus;
    }
    ir::RankedLists out = candidates;
    for (auto& [source, list] : out) {
        for (auto& c : list) {
            auto it = factor.find({source, c.id});
            if (it != factor.end()) c.score *= it->second;
        }
        ir::sort_ranked(list);
    }
    return out;
}

bool is_valid_path(const TransitivePath& path, const LevelIds& levels) {
    auto in = [](const std::vector<std::string>& ids, const std::string& id) {
        return std::find(ids.begin(), ids.end(), id) != ids.end();
    };
    const auto& n = path.nodes;
    if (path.links.size() + 1 != n.size()) return false;
    if (n.size() != 3 && n.size() != 4) return false;
    if (!in(levels.sources, n.front()) || !in(levels.targets, n.back())) return false;
    if (std::set<std::string>(n.begin(), n.end()).size() != n.size()) return false;

    double bonus = 1.0;
    int inner = 0;
    for (std::size_t i = 0; i < path.links.size(); ++i) {
        const auto& l = path.links[i];
        if (l.from != n[i] || l.to != n[i + 1]) return false;
        if (l.score < 0.0 || l.score > 1.0) return false;
        bonus *= l.score;
        if (l.kind == LinkKind::Inner) ++inner;
    }
    if (bonus != path.bonus) return false;

    if (n.size() == 3) {
        return inner == 0 && in(levels.intermediates, n[1]);
    }
    if (inner != 1) return false;
    const bool source_inner = in(levels.sources, n[1]) && in(levels.intermediates, n[2]) &&
                              path.links[0].kind == LinkKind::Inner;
    const bool intermediate_inner = in(levels.intermediates, n[1]) && in(levels.intermediates, n[2]) &&
                                    path.links[1].kind == LinkKind::Inner;
    return source_inner || intermediate_inner;
}

}  // namespace tracelink::transitive
