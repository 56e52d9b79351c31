#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "random_tables.hpp"
#include "tracelink/transitive.hpp"

using namespace tracelink;
using namespace tracelink::transitive;

namespace {

using PathKey = std::vector<std::string>;

std::set<PathKey> keys(const std::vector<TransitivePath>& paths) {
    std::set<PathKey> out;
    for (const auto& p : paths) out.insert(p.nodes);
    return out;
}

// The motivating example's similarities, shaped after its narrative.
struct Motivating {
    LevelIds levels{{"RE-691", "RE-695"}, {"DD-647", "DD-694"}, {"AFEmergencyComponent", "AFInfoBox"}};
    ir::SimilarityTable table;
    Motivating() {
        table.set("RE-691", "DD-694", 0.50);
        table.set("RE-691", "DD-647", 0.17);
        table.set("RE-691", "RE-695", 0.25);
        table.set("RE-695", "DD-694", 0.44);
        table.set("RE-695", "DD-647", 0.0);
        table.set("DD-694", "DD-647", 0.03);
        table.set("DD-694", "AFEmergencyComponent", 0.10);
        table.set("DD-694", "AFInfoBox", 0.01);
        table.set("DD-647", "AFInfoBox", 0.50);
        table.set("DD-647", "AFEmergencyComponent", 0.02);
        for (const auto* s : {"RE-691", "RE-695"}) {
            table.set(s, "AFInfoBox", 0.0);
            table.set(s, "AFEmergencyComponent", 0.0);
        }
    }
};

}  // namespace

TEST_CASE("hop state after one and two hops") {
    const enrich::EnrichmentConfig cfg{0.5, 3};
    const auto one = HopState::initial(cfg).advance(cfg);
    const auto two = one.advance(cfg);
    CHECK(one.m_eff == 0.6);
    CHECK(one.t_eff == 2);
    CHECK(two.m_eff == 0.7);
    CHECK(two.t_eff == 1);
    CHECK(HopState::after({0.5, 1}, 3).t_eff == 1);
}

TEST_CASE("candidate links apply the relative threshold and cap") {
    ir::SimilarityTable t;
    t.set("S", "a", 1.0);
    t.set("S", "b", 0.6);
    t.set("S", "c", 0.59);
    t.set("S", "d", 0.7);
    const std::vector<std::string> pool{"a", "b", "c", "d", "S"};
    const auto one = HopState::after({}, 1);
    const auto links = candidate_links("S", pool, t, one, LinkKind::Outer);
    REQUIRE(links.size() == 2);
    CHECK(links[0].to == "a");
    CHECK(links[1].to == "d");
}

TEST_CASE("motivating example paths") {
    const Motivating mx;
    const auto paths = form_paths("RE-691", mx.levels, mx.table, {});
    const std::set<PathKey> expected{{"RE-691", "DD-694", "AFEmergencyComponent"},
                                     {"RE-691", "DD-694", "DD-647", "AFInfoBox"},
                                     {"RE-691", "RE-695", "DD-694", "AFEmergencyComponent"}};
    CHECK(keys(paths) == expected);
    for (const auto& p : paths) CHECK(is_valid_path(p, mx.levels));
    const auto outer_only = form_paths("RE-691", mx.levels, mx.table, {}, PathOptions{false});
    CHECK(keys(outer_only) == std::set<PathKey>{{"RE-691", "DD-694", "AFEmergencyComponent"}});
}

TEST_CASE("bonus is the product of link scores and scores only grow") {
    const Motivating mx;
    const auto paths = form_paths("RE-691", mx.levels, mx.table, {});
    for (const auto& p : paths) {
        double b = 1.0;
        for (const auto& l : p.links) b *= l.score;
        CHECK(p.bonus == b);
    }
    ir::RankedLists ir{{"RE-691", {{"AFEmergencyComponent", 0.2}, {"AFInfoBox", 0.1}}}};
    const auto adjusted = adjust_scores(ir, paths);
    const auto& list = adjusted.at("RE-691");
    const double via_694 = 0.5 * 0.1, via_695 = 0.25 * 0.44 * 0.1, via_647 = 0.5 * 0.03 * 0.5;
    CHECK(list[0].id == "AFEmergencyComponent");
    CHECK(list[0].score == doctest::Approx(0.2 * (1 + via_694) * (1 + via_695)));
    CHECK(list[1].score == doctest::Approx(0.1 * (1 + via_647)));
}

TEST_CASE("no intermediates means no paths") {
    LevelIds levels{{"S1", "S2"}, {}, {"T1"}};
    ir::SimilarityTable t;
    t.set("S1", "S2", 0.9);
    t.set("S1", "T1", 0.3);
    t.set("S2", "T1", 0.3);
    CHECK(form_paths("S1", levels, t, {}).empty());
}

TEST_CASE("form_paths equals exhaustive enumeration on random tables") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 30; ++round) {
        const auto r = testsupport::random_levels(rng, 5);
        for (const auto& s : r.levels.sources) {
            for (bool inner : {false, true}) {
                const auto got = form_paths(s, r.levels, r.table, {}, PathOptions{inner});
                const auto want = oracle::all_paths(s, r.levels, r.table, 0.5, 3, inner);
                CHECK(keys(got) == keys(want));
                CHECK(got.size() == keys(got).size());
            }
        }
    }
}

TEST_CASE("invalid paths are rejected") {
    const LevelIds levels{{"S"}, {"I", "J"}, {"T"}};
    TransitivePath p;
    p.nodes = {"S", "T", "I"};
    p.links = {{"S", "T", LinkKind::Outer, 0.5}, {"T", "I", LinkKind::Outer, 0.5}};
    p.bonus = 0.25;
    CHECK_FALSE(is_valid_path(p, levels));
    p.nodes = {"S", "I", "J", "T"};
    p.links = {{"S", "I", LinkKind::Outer, 0.5}, {"I", "J", LinkKind::Outer, 0.5}, {"J", "T", LinkKind::Outer, 0.5}};
    p.bonus = 0.125;
    CHECK_FALSE(is_valid_path(p, levels));  // the middle hop must be inner
    p.links[1].kind = LinkKind::Inner;
    CHECK(is_valid_path(p, levels));
}

TEST_CASE("bonus arithmetic") {
    TransitivePath p;
    p.nodes = {"S", "I", "T"};
    p.links = {{"S", "I", LinkKind::Outer, 0.6}, {"I", "T", LinkKind::Outer, 0.7}};
    p.bonus = 0.6 * 0.7;
    const ir::RankedLists ir{{"S", {{"T", 0.2}, {"U", 0.3}}}};
    const std::vector<TransitivePath> one{p};
    const auto a = adjust_scores(ir, one);
    CHECK(a.at("S")[0].id == "U");
    CHECK(a.at("S")[0].score == 0.3);
    CHECK(a.at("S")[1].score == doctest::Approx(0.284).epsilon(1e-12));

    TransitivePath q = p, r = p;
    q.bonus = 0.1;
    r.bonus = 0.2;
    const std::vector<TransitivePath> two{q, r};
    CHECK(adjust_scores(ir, two).at("S")[1].score == doctest::Approx(0.2 * 1.1 * 1.2));
}
