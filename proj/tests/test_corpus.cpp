#include <doctest.h>

#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "tracelink/code_scanner.hpp"
#include "tracelink/corpus.hpp"
#include "tracelink/error.hpp"
#include "tracelink/porter_stemmer.hpp"
#include "tracelink/pos_tagger.hpp"
#include "tracelink/stopwords.hpp"

using namespace tracelink;
using namespace tracelink::corpus;
using Strings = std::vector<std::string>;

TEST_CASE("split_identifier handles camel case, acronyms, digits and underscores") {
    CHECK(split_identifier("assignRouteIcon") == Strings{"assign", "route", "icon"});
    CHECK(split_identifier("AFInfoBox") == Strings{"af", "info", "box"});
    CHECK(split_identifier("getAssignRouteResource") == Strings{"get", "assign", "route", "resource"});
    CHECK(split_identifier("max_hop_count") == Strings{"max", "hop", "count"});
    CHECK(split_identifier("UAVState2D") == Strings{"uav", "state", "2", "d"});
    CHECK(split_identifier("parseHTTPResponse") == Strings{"parse", "http", "response"});
    CHECK(split_identifier("__init__").empty() == false);
    CHECK(split_identifier("").empty());
}

TEST_CASE("porter stemmer matches the reference vocabulary") {
    std::ifstream in(testsupport::data_dir() / "porter_vocabulary.tsv");
    REQUIRE(in);
    std::string line;
    int checked = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        const std::string word = line.substr(0, tab);
        const std::string stem = line.substr(tab + 1);
        INFO(word);
        CHECK(porter_stem(word) == stem);
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("porter stemmer leaves short words alone") {
    CHECK(porter_stem("is") == "is");
    CHECK(porter_stem("a") == "a");
    CHECK(porter_stem("") == "");
}

TEST_CASE("stopword list") {
    CHECK(is_stopword("the"));
    CHECK(is_stopword("shall"));
    CHECK(is_stopword("which"));
    CHECK_FALSE(is_stopword("route"));
    CHECK_FALSE(is_stopword("available"));
    CHECK(stopword_count() > 300);
}

TEST_CASE("preprocess drops specials and stopwords and stems") {
    const Strings tokens{"The", "routes", "are", "ASSIGNED", "to", "42", "UAVs", "x1"};
    const TermBag bag = preprocess(tokens);
    CHECK(bag == TermBag{{"assign", 1}, {"rout", 1}, {"uav", 1}, {"x1", 1}});
}

TEST_CASE("preprocess is idempotent") {
    std::ifstream in(testsupport::data_dir() / "porter_vocabulary.tsv");
    Strings words;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line[0] != '#') words.push_back(line.substr(0, line.find('\t')));
    }
    const TermBag once = preprocess(words);
    Strings stems;
    for (const auto& [term, n] : once) {
        for (int i = 0; i < n; ++i) stems.push_back(term);
    }
    CHECK(preprocess(stems) == once);
}

TEST_CASE("normalize_term") {
    CHECK(normalize_term("Operations") == std::optional<std::string>("oper"));
    CHECK_FALSE(normalize_term("the").has_value());
    CHECK_FALSE(normalize_term("2024").has_value());
    CHECK_FALSE(normalize_term("a-b").has_value());
}

TEST_CASE("tokenize_natural splits sentences and tags words") {
    const auto sentences = tokenize_natural("User can select UAV. Routes are assigned, e.g. by the planner!\nDone");
    REQUIRE(sentences.size() == 3);
    CHECK(sentences[0].size() == 4);
    CHECK(sentences[0][0].text == "User");
    CHECK(sentences[0][0].tag == PosTag::Noun);
    CHECK(sentences[0][1].tag == PosTag::Other);
    CHECK(sentences[0][2].tag == PosTag::Verb);
    CHECK(sentences[2][0].text == "Done");
}

TEST_CASE("tag_word") {
    CHECK(tag_word("select") == PosTag::Verb);
    CHECK(tag_word("available") == PosTag::Adjective);
    CHECK(tag_word("route") == PosTag::Noun);
    CHECK(tag_word("UAV") == PosTag::Noun);
    CHECK(tag_word("and") == PosTag::Other);
    CHECK_FALSE(tag_word("x2").has_value());
}

TEST_CASE("code scanner extracts the parts of a Java class") {
    const auto parts = scan_code(R"(
        /** Shows route info. */
        public class AFInfoBox extends CustomComponent {
            private Button assignRouteIcon;
            private Route assignNewRoute = Routes.make();

            public void refresh(UAVState state, int count) {
                assignRouteIcon.setIcon(ImageProvider.getAssignRouteResource());
                // refresh the box
                Object o = new Thing(count);
            }
        }
    )");
    CHECK(parts.class_names == std::vector<IdentifierTokens>{{"af", "info", "box"}});
    CHECK(parts.method_names == std::vector<IdentifierTokens>{{"refresh"}});
    CHECK(parts.field_names == std::vector<IdentifierTokens>{{"assign", "route", "icon"}, {"assign", "new", "route"}});
    CHECK(parts.field_type_names == std::vector<IdentifierTokens>{{"button"}, {"route"}});
    CHECK(parts.parameter_names == std::vector<IdentifierTokens>{{"state"}, {"count"}});
    CHECK(parts.parameter_type_names == std::vector<IdentifierTokens>{{"uav", "state"}, {"int"}});
    const std::vector<IdentifierTokens> invoked{{"make"}, {"set", "icon"}, {"get", "assign", "route", "resource"}};
    CHECK(parts.invoked_method_names == invoked);
    CHECK(parts.comments.size() == 2);
}

TEST_CASE("code scanner handles C functions and structs") {
    const auto parts = scan_code(R"(
        #include <stdio.h>
        struct flight_plan { int waypoint_count; };
        static int plan_count = 0;
        int load_plan(const char *path, struct flight_plan *out) {
            return parse_file(path, out);
        }
    )");
    CHECK(parts.class_names == std::vector<IdentifierTokens>{{"flight", "plan"}});
    CHECK(parts.method_names == std::vector<IdentifierTokens>{{"load", "plan"}});
    CHECK(parts.invoked_method_names == std::vector<IdentifierTokens>{{"parse", "file"}});
    CHECK(parts.parameter_names == std::vector<IdentifierTokens>{{"path"}, {"out"}});
}

TEST_CASE("code documents exclude invoked method names") {
    const auto a = make_artifact("C", Level::Target, Kind::Code,
                                 "class Box { void draw() { paintLater(); } }");
    const auto d = build_document(a);
    CHECK(d.terms.count("box") == 1);
    CHECK(d.terms.count("draw") == 1);
    CHECK(d.terms.count("paint") == 0);
}

namespace {

std::filesystem::path write_manifest(const std::string& name, const std::string& json) {
    const auto dir = testsupport::scratch(name);
    testsupport::write(dir / "a.txt", "Select a route.");
    testsupport::write(dir / "b.txt", "Assign the route.");
    testsupport::write(dir / "C.java", "class RouteBox {}");
    testsupport::write(dir / "manifest.json", json);
    return dir / "manifest.json";
}

ErrorKind load_error(const std::filesystem::path& manifest) {
    try {
        load_dataset(manifest);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error");
    return ErrorKind::Build;
}

}  // namespace

TEST_CASE("load_dataset reads a manifest with relative paths") {
    const auto m = write_manifest("corpus_ok", R"({
        "sources": [{"id": "S1", "path": "a.txt", "kind": "nl"}],
        "intermediates": [{"id": "I1", "path": "b.txt"}],
        "targets": [{"id": "T1", "path": "C.java", "kind": "code"}],
        "oracle_st": [["S1", "T1"]]
    })");
    const auto ds = load_dataset(m);
    CHECK(ds.sources.size() == 1);
    CHECK(ds.intermediates[0].kind == Kind::NaturalLanguage);
    CHECK(ds.targets[0].kind == Kind::Code);
    CHECK(ds.oracle_st == LinkSet{{"S1", "T1"}});
    CHECK_FALSE(ds.oracle_si.has_value());
}

TEST_CASE("load_dataset errors") {
    CHECK(load_error(testsupport::scratch("corpus_missing") / "nope.json") == ErrorKind::Load);
    CHECK(load_error(write_manifest("corpus_badjson", "{\"sources\": [")) == ErrorKind::Parse);
    CHECK(load_error(write_manifest("corpus_dup", R"({
        "sources": [{"id": "X", "path": "a.txt"}],
        "intermediates": [],
        "targets": [{"id": "X", "path": "C.java", "kind": "code"}],
        "oracle_st": []
    })")) == ErrorKind::Validation);
    CHECK(load_error(write_manifest("corpus_oracle", R"({
        "sources": [{"id": "S1", "path": "a.txt"}],
        "intermediates": [],
        "targets": [{"id": "T1", "path": "C.java", "kind": "code"}],
        "oracle_st": [["S1", "T9"]]
    })")) == ErrorKind::Validation);
    CHECK(load_error(write_manifest("corpus_level", R"({
        "sources": [{"id": "S1", "path": "a.txt"}],
        "intermediates": [],
        "targets": [{"id": "T1", "path": "C.java", "kind": "code"}],
        "oracle_st": [["T1", "S1"]]
    })")) == ErrorKind::Validation);
    CHECK(load_error(write_manifest("corpus_nofile", R"({
        "sources": [{"id": "S1", "path": "missing.txt"}],
        "intermediates": [], "targets": [], "oracle_st": []
    })")) == ErrorKind::Load);
}

TEST_CASE("small preprocessing and tokenizing cases") {
    CHECK(split_identifier("snake_case_id") == Strings{"snake", "case", "id"});
    CHECK(preprocess(Strings{"Assigned", "Routes"}) == TermBag{{"assign", 1}, {"rout", 1}});
    CHECK(preprocess(Strings{"the", "of", "and"}).empty());
    CHECK(preprocess(Strings{"available", "list"}) == TermBag{{"avail", 1}, {"list", 1}});
    CHECK(tokenize_natural("A. B.").size() == 2);
    CHECK(tokenize_natural("").empty());
    const auto dd = tokenize_natural("User can select UAV and assign routes from available list.");
    REQUIRE(dd.size() == 1);
    auto tag_of = [&](const std::string& w) {
        for (const auto& t : dd[0]) {
            if (t.text == w) return t.tag;
        }
        return std::optional<PosTag>{};
    };
    CHECK(tag_of("select") == PosTag::Verb);
    CHECK(tag_of("UAV") == PosTag::Noun);
    CHECK(tag_of("routes") == PosTag::Noun);
}

TEST_CASE("motivating manifest loads six artifacts") {
    const auto ds = load_dataset(testsupport::repo_dir() / "data" / "motivating" / "manifest.json");
    CHECK(ds.all().size() == 6);
    CHECK(ds.intermediates.size() == 2);
    CHECK(ds.targets[0].kind == Kind::Code);
}
