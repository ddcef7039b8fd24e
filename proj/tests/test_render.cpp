#include "doctest.h"
#include "silted/fixtures.hpp"
#include "silted/render.hpp"

using namespace silted;

TEST_CASE("silting object JSON lists shifted labels and module vectors") {
    const Quiver& q = fixture("A3").quiver;
    SiltingObject t;
    t.summands = {IndecomposableId::module(DimVector({0, 1, 0})), IndecomposableId::module(DimVector({0, 1, 1})),
                  IndecomposableId::shifted(q, 0)};
    const Json j = to_json(q, t);
    CHECK(j["I"] == Json::array({1}));
    CHECK(j["modules"] == Json::parse("[[0,1,0],[0,1,1]]"));
    CHECK(j["summands"][2] == "111[1]");
}

TEST_CASE("algebra JSON writes relations as signed path lists") {
    const auto& s1 = strictly_shod_references()[0];
    const Json j = to_json(present(monomial_algebra_by_walks(s1.quiver, s1.zero_walks)));
    CHECK(j["dimension"] == 7);
    REQUIRE(j["relations"].size() == 2);
    CHECK(j["relations"][0]["terms"][0]["coeff"] == "1");
    CHECK(j["relations"][0]["terms"][0]["path"].size() == 2);
    CHECK(sketch(present(monomial_algebra_by_walks(s1.quiver, s1.zero_walks))) == "1→2 2→3 3→4 | 1·2·3, 2·3·4");
}

TEST_CASE("AR renderings") {
    const ArQuiver ar = ar_quiver_two_term(fixture("A2").quiver);
    const std::string grid = to_ascii(ar);
    CHECK(grid == "01          10          11[1]\n      11          01[1]\n");
    std::set<IndecomposableId> marked{ar.vertices[0]};
    const std::string marks = to_ascii(ar, marked, true);
    CHECK(marks.find("•") != std::string::npos);
    const std::string dot = to_dot(ar_quiver_mod(fixture("D4").quiver));
    std::size_t nodes = 0;
    for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) ++nodes;
    CHECK(nodes == 12);
    CHECK(dot.find("style=dashed") != std::string::npos);
    const Json j = to_json(ar);
    CHECK(j["vertices"].size() == 5);
    CHECK(j["tau"].size() == 3);
}

TEST_CASE("summary tables") {
    const Quiver& q = fixture("A2").quiver;
    const TwoTermCategory cat(q);
    const auto records = classify_all(cat, silting_alg2(q));
    const auto classes = dedupe(records);
    const std::string csv = summary_csv(records, classes);
    CHECK(csv.rfind("no,silting_object,quiver,type,gl_dim,class\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    const std::string text = summary_text(records, classes);
    CHECK(text.find("2 silted algebras from 5 silting objects") != std::string::npos);
    CHECK(text.find("A1⊔A1: 1") != std::string::npos);
}
