#include <doctest.h>

#include "test_support.hpp"
#include "tracelink/enrich.hpp"
#include "tracelink/error.hpp"

using namespace tracelink;
using namespace tracelink::enrich;
using testsupport::doc;

namespace {

biterm::BitermSet bs(const std::string& id, std::map<biterm::Pair, int> b) {
    biterm::BitermSet s;
    s.artifact_id = id;
    s.biterms = std::move(b);
    return s;
}

ir::SimilarityTable table(std::initializer_list<std::tuple<const char*, const char*, double>> rows) {
    ir::SimilarityTable t;
    for (const auto& [a, b, s] : rows) t.set(a, b, s);
    return t;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(EnrichmentConfig{}.validate());
    CHECK_THROWS_AS((EnrichmentConfig{0.0, 3}.validate()), Error);
    CHECK_THROWS_AS((EnrichmentConfig{1.5, 3}.validate()), Error);
    CHECK_THROWS_AS((EnrichmentConfig{0.5, 0}.validate()), Error);
}

TEST_CASE("related intermediates respect m and t") {
    const std::vector<std::string> inter{"I1", "I2", "I3", "I4", "I5"};
    const auto t = table({{"S", "I1", 0.8}, {"S", "I2", 0.5}, {"S", "I3", 0.39}, {"S", "I4", 0.45}, {"S", "I5", 0.4}});
    CHECK(select_related_intermediates("S", inter, t, {}) == std::vector<std::string>{"I1", "I2", "I4"});
    CHECK(select_related_intermediates("S", inter, t, {0.5, 2}) == std::vector<std::string>{"I1", "I2"});
    CHECK(select_related_intermediates("S", inter, t, {0.9, 3}) == std::vector<std::string>{"I1"});
}

TEST_CASE("ties at the cap break by id") {
    const std::vector<std::string> inter{"Ib", "Ia", "Ic"};
    const auto t = table({{"S", "Ia", 0.5}, {"S", "Ib", 0.5}, {"S", "Ic", 0.5}});
    CHECK(select_related_intermediates("S", inter, t, {0.5, 2}) == std::vector<std::string>{"Ia", "Ib"});
}

TEST_CASE("no related intermediates when all scores are zero") {
    const std::vector<std::string> inter{"I1"};
    const auto t = table({{"S", "I1", 0.0}});
    CHECK(select_related_intermediates("S", inter, t, {}).empty());
}

TEST_CASE("own biterms carry their importance count") {
    const auto d = add_own_biterms(doc("T", {{"box", 1}}), bs("T", {{{"assign", "rout"}, 3}}));
    CHECK(d.added_biterm_terms == corpus::TermBag{{"assign_rout", 3}});
    CHECK(d.terms == corpus::TermBag{{"box", 1}});
}

TEST_CASE("foreign biterms are added once with weight one") {
    const std::vector<biterm::BitermSet> related{bs("I1", {{{"select", "uav"}, 4}, {{"assign", "rout"}, 2}}),
                                                 bs("I2", {{{"select", "uav"}, 1}})};
    auto d = add_own_biterms(doc("T", {}), bs("T", {{{"assign", "rout"}, 3}}));
    d = enrich_artifact(std::move(d), related);
    CHECK(d.added_biterm_terms == corpus::TermBag{{"assign_rout", 4}, {"select_uav", 1}});
}

TEST_CASE("enrichment never removes terms") {
    const auto before = doc("T", {{"a", 1}, {"b", 2}});
    const std::vector<biterm::BitermSet> related{bs("I", {{{"c", "d"}, 1}})};
    const auto after = enrich_artifact(before, related);
    for (const auto& [term, n] : before.terms) CHECK(after.terms.at(term) == n);
}

TEST_CASE("the cap keeps the first t ids among equal scores") {
    const std::vector<std::string> inter{"I4", "I2", "I3", "I1"};
    const auto t = table({{"S", "I1", 0.8}, {"S", "I2", 0.8}, {"S", "I3", 0.8}, {"S", "I4", 0.8}});
    CHECK(select_related_intermediates("S", inter, t, {}) == std::vector<std::string>{"I1", "I2", "I3"});
}

TEST_CASE("no related sets leaves only own biterms") {
    const auto own = add_own_biterms(doc("T", {{"box", 1}}), bs("T", {{{"assign", "rout"}, 2}}));
    const auto after = enrich_artifact(own, {});
    CHECK(after.terms == own.terms);
    CHECK(after.added_biterm_terms == own.added_biterm_terms);
}
