#include "doctest.h"
#include "generators.hpp"
#include "silted/category.hpp"
#include "silted/fixtures.hpp"

using namespace silted;

TEST_CASE("minimal projective resolutions of A3 modules") {
    const Quiver q = fixture("A3").quiver;
    const PathAlgebra alg(q);
    // S(1) = 100 has resolution P(2) -> P(1).
    const TwoTermComplex s1 = resolve(alg, simple_rep(q, 0));
    CHECK(s1.deg_0 == std::vector<std::size_t>{0});
    CHECK(s1.deg_minus1 == std::vector<std::size_t>{1});
    const TwoTermComplex p1 = resolve(alg, projective_rep(q, 0));
    CHECK(p1.deg_0 == std::vector<std::size_t>{0});
    CHECK(p1.deg_minus1.empty());
    const TwoTermComplex sh = shifted_projective(alg, 2);
    CHECK(sh.deg_minus1 == std::vector<std::size_t>{2});
    CHECK(sh.deg_0.empty());
}

TEST_CASE("property: resolutions have the module as their only homology") {
    gen::Gen g(41);
    for (int trial = 0; trial < 10; ++trial) {
        const Quiver q = g.any_dynkin(2, 6);
        const PathAlgebra alg(q);
        for (const auto& d : indecomposables(q)) {
            const TwoTermComplex x = resolve(alg, build_representation(q, d));
            CHECK(homology_dims(alg, x, 0) == d.values());
            CHECK(homology_dims(alg, x, -1) == std::vector<int>(q.size(), 0));
            // Minimality: P^{-1} and P^0 share no summand for hereditary indecomposables.
            for (auto i : x.deg_minus1)
                CHECK(std::find(x.deg_0.begin(), x.deg_0.end(), i) == x.deg_0.end());
        }
    }
}

TEST_CASE("Hom in the homotopy category against module-theoretic values") {
    for (const char* name : {"A3-sink", "A4-zigzag", "D4-sink"}) {
        CAPTURE(name);
        const TwoTermCategory cat(fixture(name).quiver);
        const Quiver& q = cat.quiver();
        const std::size_t m = cat.module_count();
        for (std::size_t x = 0; x < cat.size(); ++x)
            for (std::size_t y = 0; y < cat.size(); ++y) {
                const auto& ox = cat.objects()[x];
                const auto& oy = cat.objects()[y];
                if (x < m && y < m) {
                    CHECK(cat.hom(x, y).dim() == hom_dim(q, cat.rep(x), cat.rep(y)));
                    CHECK(cat.hom1(x, y) == ext1_dim(q, cat.rep(x), cat.rep(y)));
                } else if (x >= m && y >= m) {
                    // Hom(P(i)[1], P(j)[1]) = Hom(P(i), P(j)); no maps to the double shift.
                    CHECK(cat.hom(x, y).dim() == cat.algebra().piece_dim(oy.vertex, ox.vertex));
                    CHECK(cat.hom1(x, y) == 0);
                } else if (x >= m) {
                    // P(i)[1] -> M is zero; P(i)[1] -> M[1] is Hom(P(i), M) = M_i.
                    CHECK(cat.hom(x, y).dim() == 0);
                    CHECK(cat.hom1(x, y) == static_cast<std::size_t>(oy.dim[ox.vertex]));
                } else {
                    // M -> P(i)[1] is Ext^1(M, P(i)).
                    CHECK(cat.hom(x, y).dim() == ext1_dim(q, cat.rep(x), projective_rep(q, oy.vertex)));
                }
            }
    }
}

TEST_CASE("property: homotopy classes compose associatively with identities") {
    const TwoTermCategory cat(fixture("D4").quiver);
    const auto& alg = cat.algebra();
    gen::Gen g(42);
    const int n = static_cast<int>(cat.size());
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t x = g.integer(0, n - 1), y = g.integer(0, n - 1), z = g.integer(0, n - 1),
                          w = g.integer(0, n - 1);
        const auto &xy = cat.hom(x, y), &yz = cat.hom(y, z), &zw = cat.hom(z, w);
        auto random_vec = [&](std::size_t d) {
            Vec v(d);
            for (auto& e : v) e = g.integer(-2, 2);
            return v;
        };
        const Vec f = random_vec(xy.dim()), h = random_vec(yz.dim()), k = random_vec(zw.dim());
        const Vec hf = compose_classes(alg, xy, f, yz, h, cat.hom(x, z));
        const Vec kh = compose_classes(alg, yz, h, zw, k, cat.hom(y, w));
        CHECK(compose_classes(alg, cat.hom(x, z), hf, zw, k, cat.hom(x, w)) ==
              compose_classes(alg, xy, f, cat.hom(y, w), kh, cat.hom(x, w)));
        // Identity of X is the unit.
        REQUIRE(cat.hom(x, x).dim() == 1);
        const Vec id_coords = cat.hom(x, x).coordinates(identity_map(alg, cat.complex(x)));
        CHECK(compose_classes(alg, cat.hom(x, x), id_coords, xy, f, xy) == f);
        // Representatives round-trip through their coordinates.
        const ChainMap rep = xy.combination(f);
        CHECK(is_chain_map(alg, cat.complex(x), cat.complex(y), rep));
        CHECK(xy.coordinates(rep) == f);
        CHECK(xy.unpack(xy.pack(rep)).minus1.entries.size() == rep.minus1.entries.size());
    }
    CHECK_THROWS_AS(compose_classes(alg, hom_class_basis(alg, cat.complex(0), cat.complex(1), 1), Vec{},
                                    cat.hom(1, 2), Vec(cat.hom(1, 2).dim()), cat.hom(0, 2)),
                    std::invalid_argument);
}
