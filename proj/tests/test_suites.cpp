#include "zrl/groupio.hpp"
#include "zrl/suites.hpp"

#include <doctest.h>

using namespace zrl;

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 10);
    CHECK_THROWS_AS(run_suite("unknown"), std::invalid_argument);
}

TEST_CASE("orbit suite runs and passes") {
    auto rep = run_suite("orbits");
    CHECK(rep.pass());
    CHECK(rep.rows.size() == 9);
    for (const auto& row : rep.rows) CHECK(row.status == "PASS");
}

TEST_CASE("report serialization round trip") {
    SuiteReport rep;
    rep.name = "demo";
    rep.rows.push_back({"row1", "anchor text", "3", "3", "PASS"});
    rep.rows.push_back({"row2", "another anchor", "x", "y", "FAIL"});
    CHECK_FALSE(rep.pass());
    auto text = report_to_text(rep);
    CHECK(text.find("row1") != std::string::npos);
    CHECK(text.find("FAILURES PRESENT") != std::string::npos);
    auto j = report_to_json(rep);
    CHECK(j.find("\"schema\": \"zrl-report-v1\"") != std::string::npos);
    CHECK(j.find("\"pass\": false") != std::string::npos);
    // empty report is a valid document
    SuiteReport empty;
    empty.name = "empty";
    CHECK(report_to_json(empty).find("\"rows\": []") != std::string::npos);
    CHECK(empty.pass());
    // counts agree between formats
    int text_rows = 0;
    for (auto& row : rep.rows)
        if (text.find(row.id) != std::string::npos) ++text_rows;
    CHECK(text_rows == int(rep.rows.size()));
}

TEST_CASE("group document ingestion") {
    auto doc = parse_group_document(R"({
      "ring": {"kind": "fp", "p": 3},
      "generators": [[["0","1","0"],["1","0","0"],["0","0","1"]],
                      [["0","0","1"],["1","0","0"],["0","1","0"]]]
    })");
    auto& [ring, gens] = std::get<1>(doc.group);
    auto G = generate_closure(ring, gens, 100);
    CHECK(G.order() == 6);

    auto cyc = parse_group_document(R"({
      "ring": {"kind": "cyclotomic", "m": 4},
      "generators": [[[["0","1"],["0"]],[["0"],["1"]]],
                      [[["0"],["1"]],[["1"],["0"]]]]
    })");
    auto& [cring, cgens] = std::get<3>(cyc.group);
    CHECK(cgens.size() == 2);
    CHECK(cgens[0].at(0, 0) == Cyc::zeta(*cring.F, 1));

    CHECK_THROWS(parse_group_document("{\"ring\": {\"kind\": \"bad\"}}"));
}
