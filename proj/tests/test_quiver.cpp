#include <filesystem>

#include "doctest.h"
#include "generators.hpp"
#include "silted/error.hpp"
#include "silted/fixtures.hpp"
#include "silted/homology.hpp"

using namespace silted;

TEST_CASE("text and JSON parsing") {
    const Quiver q = parse_quiver("# D4\nvertices 1 2 3 4\narrows a:1->3 b:2->3; arrow c:3->4\n");
    CHECK(q.size() == 4);
    REQUIRE(q.arrows().size() == 3);
    CHECK(q.arrows()[2].id == "c");
    CHECK(q.label(q.arrows()[2].source) == 3);

    const Quiver j = parse_quiver(R"({"vertices": [1, 2], "arrows": [{"id": "x", "source": 1, "target": 2}]})");
    CHECK_FALSE(j == Quiver::from_edges({1, 2}, {{1, 2}}));  // ids differ
    CHECK(j.arrows()[0].id == "x");
    CHECK(parse_quiver(quiver_to_text(q)) == q);
}

TEST_CASE("malformed input throws ParseError") {
    CHECK_THROWS_AS(parse_quiver("vertices 1 2\narrow a:1->2\narrow b:2->1"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices 1 1"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices 1 2\narrow a:1->3"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices 1\narrow a:1->1"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices 1 2\nedge 1 2"), ParseError);
    CHECK_THROWS_AS(parse_quiver("{\"vertices\": [1, 2"), ParseError);
    CHECK_THROWS_AS(load_quiver("/nonexistent/q.quiver"), ParseError);
}

TEST_CASE("Dynkin type recognition") {
    CHECK(dynkin_type(fixture("A4").quiver).to_string() == "A4");
    CHECK(dynkin_type(fixture("D5").quiver).to_string() == "D5");
    CHECK(dynkin_type(Quiver::from_edges({1, 2, 3, 4}, {{1, 2}})).canonical().to_string() == "A2⊔A1⊔A1");
    CHECK(dynkin_type(Quiver::from_edges({1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}})).to_string() ==
          "E6");
    // D4 with an A1 and an A3 beside it, canonical order by rank.
    const Quiver mixed = Quiver::from_edges({1, 2, 3, 4, 5, 6, 7, 8}, {{1, 2}, {2, 3}, {5, 4}, {6, 4}, {4, 7}});
    CHECK(dynkin_type(mixed).canonical().to_string() == "D4⊔A3⊔A1");
    // Extended D4 and a triangle.
    CHECK_THROWS_AS(dynkin_type(Quiver::from_edges({1, 2, 3, 4, 5}, {{1, 5}, {2, 5}, {3, 5}, {4, 5}})), NotDynkin);
    CHECK_THROWS_AS(dynkin_type(Quiver::from_edges({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}})), NotDynkin);
    CHECK_THROWS_AS(dynkin_type(Quiver::from_edges({1, 2}, {{1, 2}, {1, 2}})), NotDynkin);
}

TEST_CASE("Cartan and Coxeter matrices") {
    const Quiver a2 = fixture("A2").quiver;
    CHECK(cartan_matrix(a2) == RatMatrix{{1, 1}, {0, 1}});
    CHECK(coxeter_matrix(a2) == RatMatrix{{0, 1}, {-1, -1}});
    const Quiver a3 = fixture("A3").quiver;
    CHECK(cartan_matrix(a3) == RatMatrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
    CHECK(PathAlgebra(fixture("D5").quiver).dim() == 14);
}

TEST_CASE("bundled quiver files match the fixtures") {
    const std::filesystem::path dir = SILTED_DATA_DIR;
    for (const auto& f : fixtures()) {
        auto path = dir / (f.name + ".quiver");
        if (!std::filesystem::exists(path)) path = dir / (f.name + ".json");
        CAPTURE(f.name);
        REQUIRE(std::filesystem::exists(path));
        CHECK(load_quiver(path.string()) == f.quiver);
    }
}

TEST_CASE("property: Coxeter polynomial depends only on the Dynkin type") {
    gen::Gen g(21);
    const auto& table = coxeter_table();
    for (int trial = 0; trial < 120; ++trial) {
        const Quiver q = g.any_dynkin(1, 8);
        const auto type = dynkin_type(q);
        REQUIRE(type.components.size() == 1);
        const auto p = linalg::characteristic_polynomial(-linalg::inverse(cartan_matrix(q))->transpose() *
                                                          cartan_matrix(q));
        std::vector<long> coeffs;
        for (const auto& c : p) coeffs.push_back(c.get_num().get_si());
        CAPTURE(q.to_string());
        REQUIRE(table.count(coeffs) == 1);
        CHECK(table.at(coeffs) == type.components[0]);
        // Same polynomial from the row-convention Coxeter matrix.
        CHECK(linalg::characteristic_polynomial(coxeter_matrix(q)) == p);
    }
}

TEST_CASE("property: opposite, text round trip and path counts") {
    gen::Gen g(22);
    for (int trial = 0; trial < 100; ++trial) {
        const Quiver q = g.any_dynkin(1, 8);
        CHECK(opposite(opposite(q)) == q);
        CHECK(parse_quiver(quiver_to_text(q)) == q);
        CHECK(cartan_matrix(opposite(q)) == cartan_matrix(q).transpose());
        const PathAlgebra alg(q);
        std::size_t total = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) {
                CHECK(alg.piece_dim(i, j) == cartan_matrix(q)(i, j));
                total += alg.piece_dim(i, j);
            }
        CHECK(alg.dim() == total);
        // Topological order sends every arrow forward.
        std::vector<std::size_t> pos(q.size());
        for (std::size_t k = 0; k < q.size(); ++k) pos[q.topological_order()[k]] = k;
        for (const auto& a : q.arrows()) CHECK(pos[a.source] < pos[a.target]);
    }
}
