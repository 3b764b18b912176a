#include "cohomoforge/io.hpp"

#include <doctest.h>

using namespace cf;

namespace {

Json parse_json(const std::string& text) { return Json::parse(text); }

const char* kZ3onZ7 = R"({
  "schema": "cohomoforge/1",
  "kind": "gmodule",
  "group": {"table": [[0,1,2],[1,2,0],[2,0,1]]},
  "coeffs": {"factors": [7]},
  "action": [[[1]], [[2]], [[4]]]
})";

}  // namespace

TEST_CASE("parsing group documents") {
    InputDocument doc = parse_document(parse_json(
        R"({"schema":"cohomoforge/1","kind":"group","table":[[0,1],[1,0]]})"));
    CHECK(doc.kind == "group");
    CHECK((*doc.group)->order == 2);

    InputDocument perm = parse_document(parse_json(
        R"({"schema":"cohomoforge/1","kind":"group","perm_degree":3,"generators":[[1,0,2],[1,2,0]]})"));
    CHECK((*perm.group)->order == 6);

    CHECK_THROWS_AS(parse_document(parse_json(R"({"kind":"group"})")), Error);
    CHECK_THROWS_AS(parse_document(parse_json(R"({"schema":"cohomoforge/2","kind":"group"})")), Error);
}

TEST_CASE("gmodule documents validate on parse") {
    InputDocument doc = parse_document(parse_json(kZ3onZ7));
    CHECK(doc.gmodule.has_value());
    CHECK(doc.gmodule->coeffs.order() == 7);

    // a non-associative table is rejected through the validator
    try {
        parse_document(parse_json(R"({
            "schema": "cohomoforge/1", "kind": "group",
            "table": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::not_associative);
    }
}

TEST_CASE("canonical emission round-trips byte-identically") {
    std::vector<std::string> docs = {
        R"({"schema":"cohomoforge/1","kind":"group","perm_degree":3,"generators":[[1,0,2],[1,2,0]]})",
        kZ3onZ7,
        R"({"schema":"cohomoforge/1","kind":"abelian","factors":[2,4]})",
        R"({"schema":"cohomoforge/1","kind":"liering","p":5,"dim":3,
            "bracket":[[[0,0,0],[0,0,1],[0,0,0]],[[0,0,-1],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]]],
            "module":{"dim":1,"action":[[[1]],[[0]],[[0]]]},
            "ideal":[[0,0,1]]})",
        R"({"schema":"cohomoforge/1","kind":"battery","catalog":"small"})",
    };
    for (const std::string& text : docs) {
        Json once = emit_canonical(parse_document(parse_json(text)));
        Json twice = emit_canonical(parse_document(once));
        CHECK(once.dump(2) == twice.dump(2));
    }
}

TEST_CASE("running commands produces reports with the stated shape") {
    InputDocument doc = parse_document(parse_json(kZ3onZ7));
    RunOptions opts;
    RunReport rep = run_command(doc, "h1", opts);
    CHECK(rep.overall == "pass");
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].id == "H1");
    CHECK(rep.entries[0].data["order"] == "1");

    Json j = report_to_json(rep);
    CHECK(j["schema"] == "cohomoforge/report/1");
    CHECK(j["overall"] == "pass");
    CHECK(j["checks"].size() == 1);

    RunReport vanish = run_command(doc, "vanishing", opts);
    CHECK(vanish.overall == "pass");
    bool conclusion_found = false;
    for (const ReportEntry& e : vanish.entries)
        if (e.id == "H1 = 0") {
            conclusion_found = true;
            CHECK(e.status == "pass");
        }
    CHECK(conclusion_found);
}

TEST_CASE("inf-res needs subgroup generators") {
    InputDocument doc = parse_document(parse_json(R"({
        "schema":"cohomoforge/1","kind":"gmodule",
        "group": {"table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
        "coeffs": {"factors": [2]},
        "action": [[[1]],[[1]],[[1]],[[1]]],
        "subgroup": [2]})"));
    RunOptions opts;
    RunReport rep = run_command(doc, "inf-res", opts);
    CHECK(rep.overall == "pass");
    CHECK(rep.entries.size() == 3);
}

TEST_CASE("budget violations surface as structured errors") {
    InputDocument doc = parse_document(parse_json(kZ3onZ7));
    RunOptions opts;
    opts.degree = 3;
    try {
        run_command(doc, "cohomology", opts);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::degree_cap_exceeded);
    }
    opts.degree = 2;
    opts.size_budget = 3;
    try {
        run_command(doc, "cohomology", opts);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::size_budget_exceeded);
    }
    CHECK_THROWS_AS(run_command(doc, "no-such-command", RunOptions{}), Error);
}

TEST_CASE("lie commands") {
    InputDocument doc = parse_document(parse_json(R"({
        "schema":"cohomoforge/1","kind":"liering","p":5,"dim":3,
        "bracket":[[[0,0,0],[0,0,1],[0,0,0]],[[0,0,-1],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]]],
        "module":{"dim":1,"action":[[[1]],[[0]],[[0]]]},
        "ideal":[[0,0,1]]})"));
    RunOptions opts;
    RunReport h1 = run_command(doc, "lie-h1", opts);
    CHECK(h1.overall == "pass");
    CHECK(h1.entries[0].data["dim"] == 0);

    RunReport infres = run_command(doc, "lie-inf-res", opts);
    CHECK(infres.overall == "pass");
    CHECK(infres.entries.size() == 3);

    RunReport thms = run_command(doc, "lie-theorems", opts);
    CHECK(thms.overall == "pass");
}
