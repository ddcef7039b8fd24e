#include "doctest.h"
#include "generators.hpp"
#include "silted/fixtures.hpp"
#include "silted/homology.hpp"

using namespace silted;

namespace {

SiltingObject object(const Quiver& q, std::vector<std::vector<int>> modules, std::vector<int> shifted) {
    SiltingObject t;
    for (auto& d : modules) t.summands.push_back(IndecomposableId::module(DimVector(std::move(d))));
    for (int l : shifted) t.summands.push_back(IndecomposableId::shifted(q, q.index_of(l)));
    std::sort(t.summands.begin(), t.summands.end());
    return t;
}

}  // namespace

TEST_CASE("End(A_A) presents the quiver itself") {
    for (const char* name : {"A3-sink", "D4", "D5"}) {
        CAPTURE(name);
        const Quiver& q = fixture(name).quiver;
        const TwoTermCategory cat(q);
        SiltingObject a;
        for (std::size_t i = 0; i < q.size(); ++i) a.summands.push_back(IndecomposableId::module(projective_dim(q, i)));
        const BoundQuiverAlgebra b = endomorphism_algebra(cat, a);
        CHECK(b.relations.empty());
        CHECK(b.dimension() == PathAlgebra(q).dim());
        CHECK(b.quiver().arrows().size() == q.arrows().size());
        CHECK(b.algebra.is_associative());
        // Summand k is P(k), and Hom(P(b), P(a)) = e_a A e_b.
        CHECK(b.algebra.cartan() == cartan_matrix(q));
    }
}

TEST_CASE("monomial algebras and their opposites") {
    const auto& s1 = strictly_shod_references()[0];
    const FiniteAlgebra a = monomial_algebra_by_walks(s1.quiver, s1.zero_walks);
    CHECK(a.dim() == 7);
    CHECK(a.is_associative());
    const BoundQuiverAlgebra b = present(a);
    CHECK(b.relations.size() == 2);
    CHECK(b.quiver().arrows().size() == 3);
    CHECK(a.opposite().cartan() == a.cartan().transpose());
    CHECK(a.opposite().opposite().cartan() == a.cartan());
    CHECK(a.opposite().is_associative());
    CHECK_THROWS(monomial_algebra_by_walks(s1.quiver, {{1, 3}}));
}

TEST_CASE("A3 linear, T = 010 + 011 + P(1)[1] gives KA2 x K") {
    const Quiver& q = fixture("A3").quiver;
    const TwoTermCategory cat(q);
    const auto rec = classify(cat, object(q, {{0, 1, 0}, {0, 1, 1}}, {1}));
    CHECK(rec.label() == "A2⊔A1");
    CHECK(rec.blocks.size() == 2);
    CHECK(rec.algebra.quiver().arrows().size() == 1);
    CHECK(rec.algebra.relations.empty());
}

TEST_CASE("a commutative square appears over D5") {
    const Quiver& q = fixture("D5").quiver;
    const TwoTermCategory cat(q);
    const auto rec = classify(cat, object(q, {{0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 1, 1, 0, 0}, {1, 0, 1, 0, 0}}, {4}));
    REQUIRE(rec.algebra.relations.size() == 1);
    std::size_t nonzero = 0;
    for (const auto& c : rec.algebra.relations[0].coeffs) nonzero += c != 0;
    CHECK(nonzero == 2);
    CHECK(rec.label() == "D4⊔A1");
}

TEST_CASE("cartan data of small algebras") {
    const auto ka2 = cartan_data(monomial_algebra(fixture("A2").quiver, {}));
    CHECK(ka2.coxeter_polynomial == std::vector<long>{1, 1, 1});
    CHECK(polynomial_to_string(ka2.coxeter_polynomial) == "t^2 + t + 1");
    const auto d4 = cartan_data(monomial_algebra(fixture("D4").quiver, {}));
    CHECK(d4.coxeter_polynomial == std::vector<long>{1, 1, 0, 1, 1});
}

TEST_CASE("property: every End(T) over the A4 and D4 fixtures is a consistent bound quiver algebra") {
    for (const char* name : {"A4-sink", "D4"}) {
        const Quiver& q = fixture(name).quiver;
        const TwoTermCategory cat(q);
        for (const auto& t : silting_alg2(q)) {
            CAPTURE(t.to_string());
            const FiniteAlgebra table = endomorphism_table(cat, t);
            CHECK(table.is_associative());
            const BoundQuiverAlgebra b = present(table);
            // KQ'/I has the dimension of B, piece by piece.
            for (std::size_t x = 0; x < b.quiver().size(); ++x)
                for (std::size_t y = 0; y < b.quiver().size(); ++y)
                    CHECK(b.paths.piece_dim(x, y) - b.ideal_dims[x][y] == table.piece_dim(x, y));
            // The blocks partition the vertices.
            std::size_t total = 0;
            for (const auto& v : block_vertices(b)) total += v.size();
            CHECK(total == b.quiver().size());
            // Relations never start at an arrow: they lie in rad^2.
            for (const auto& r : b.relations)
                for (std::size_t k = 0; k < r.coeffs.size(); ++k)
                    if (r.coeffs[k] != 0) CHECK(b.paths.path(b.paths.piece(r.source, r.target)[k]).length() >= 2);
        }
    }
}

TEST_CASE("property: relabelling vertices permutes the Cartan matrix") {
    gen::Gen g(61);
    const auto& refs = strictly_shod_references();
    for (int trial = 0; trial < 40; ++trial) {
        const auto& s = refs[g.integer(0, static_cast<int>(refs.size()) - 1)];
        const FiniteAlgebra a = monomial_algebra_by_walks(s.quiver, s.zero_walks);
        const auto p = g.permutation(a.vertices());
        const FiniteAlgebra b = a.restrict(p);
        CHECK(b.is_associative());
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) CHECK(b.piece_dim(i, j) == a.piece_dim(p[i], p[j]));
        CHECK(cartan_data(b).coxeter_polynomial == cartan_data(a).coxeter_polynomial);
    }
}
