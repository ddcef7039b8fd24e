#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "silted/category.hpp"
#include "silted/fixtures.hpp"

using namespace silted;

namespace {

std::size_t root_count(char family, int n) {
    if (family == 'A') return static_cast<std::size_t>(n * (n + 1) / 2);
    if (family == 'D') return static_cast<std::size_t>(n * (n - 1));
    return n == 6 ? 36 : n == 7 ? 63 : 120;
}

}  // namespace

TEST_CASE("positive roots of every Dynkin type up to rank 8") {
    gen::Gen g(31);
    for (int n = 1; n <= 8; ++n) CHECK(indecomposables(g.dynkin('A', n)).size() == root_count('A', n));
    for (int n = 4; n <= 8; ++n) CHECK(indecomposables(g.dynkin('D', n)).size() == root_count('D', n));
    for (int n = 6; n <= 8; ++n) CHECK(indecomposables(g.dynkin('E', n)).size() == root_count('E', n));
}

TEST_CASE("projectives, injectives and simples of A3") {
    const Quiver q = fixture("A3").quiver;
    CHECK(projective_dim(q, 0) == DimVector({1, 1, 1}));
    CHECK(projective_dim(q, 2) == DimVector({0, 0, 1}));
    CHECK(injective_dim(q, 0) == DimVector({1, 0, 0}));
    CHECK(injective_dim(q, 2) == DimVector({1, 1, 1}));
    CHECK(*projective_vertex(q, DimVector({0, 1, 1})) == 1);
    CHECK_FALSE(projective_vertex(q, DimVector({0, 1, 0})).has_value());
    CHECK(hom_dim(q, projective_rep(q, 0), projective_rep(q, 2)) == 0);
    CHECK(hom_dim(q, projective_rep(q, 2), projective_rep(q, 0)) == 1);
    CHECK(ext1_dim(q, simple_rep(q, 0), simple_rep(q, 1)) == 1);
    CHECK(ext1_dim(q, simple_rep(q, 1), simple_rep(q, 0)) == 0);
}

TEST_CASE("tau on A2") {
    const Quiver q = fixture("A2").quiver;
    CHECK(*tau(q, DimVector({1, 0})) == DimVector({0, 1}));
    CHECK_FALSE(tau(q, DimVector({0, 1})).has_value());
    CHECK_FALSE(tau_inverse(q, DimVector({1, 0})).has_value());
}

TEST_CASE("AR quivers of the fixtures") {
    for (const auto& f : fixtures()) {
        CAPTURE(f.name);
        const ArQuiver mod = ar_quiver_mod(f.quiver);
        const ArQuiver two = ar_quiver_two_term(f.quiver);
        CHECK(mod.vertices.size() == indecomposables(f.quiver).size());
        CHECK(two.vertices.size() == mod.vertices.size() + f.quiver.size());
        CHECK(meshes_complete(mod));
        CHECK(meshes_complete(two));
        // Distinct grid cells.
        std::set<std::pair<int, int>> cells;
        for (std::size_t v = 0; v < two.vertices.size(); ++v) cells.insert({two.slice[v], two.row[v]});
        CHECK(cells.size() == two.vertices.size());
        // Arrows go one slice to the right.
        for (auto [s, t] : two.arrows) CHECK(two.slice[t] == two.slice[s] + 1);
    }
    CHECK(ar_quiver_two_term(fixture("A2").quiver).vertices.size() == 5);
    CHECK(ar_quiver_two_term(fixture("D4").quiver).vertices.size() == 16);
    CHECK(ar_quiver_mod(fixture("D4").quiver).vertices.size() == 12);
}

TEST_CASE("glued two-term AR quiver matches irreducible maps computed in the category") {
    for (const char* name : {"A3-sink", "A4-zigzag", "D4", "D5"}) {
        CAPTURE(name);
        const TwoTermCategory cat(fixture(name).quiver);
        const ArQuiver ar = ar_quiver_two_term(cat.quiver());
        REQUIRE(ar.vertices == cat.objects());
        const std::size_t n = cat.size();
        std::set<std::pair<std::size_t, std::size_t>> glued(ar.arrows.begin(), ar.arrows.end());
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                const auto& xy = cat.hom(x, y);
                // rad^2(X, Y): composites through a third indecomposable.
                linalg::EchelonBasis rad2(xy.dim());
                for (std::size_t z = 0; z < n; ++z) {
                    if (z == x || z == y) continue;
                    const auto& xz = cat.hom(x, z);
                    const auto& zy = cat.hom(z, y);
                    for (std::size_t i = 0; i < xz.dim(); ++i)
                        for (std::size_t j = 0; j < zy.dim(); ++j) {
                            Vec f(xz.dim()), g(zy.dim());
                            f[i] = 1;
                            g[j] = 1;
                            rad2.insert(compose_classes(cat.algebra(), xz, f, zy, g, xy));
                        }
                }
                const std::size_t irreducible = xy.dim() - rad2.dim();
                CHECK(irreducible == glued.count({x, y}));
            }
    }
}

TEST_CASE("property: build_representation gives indecomposables with the right dimension vector") {
    gen::Gen g(32);
    for (int trial = 0; trial < 12; ++trial) {
        const Quiver q = g.any_dynkin(2, 6);
        for (const auto& d : indecomposables(q)) {
            const ModuleRep m = build_representation(q, d);
            CHECK(is_representation(q, m));
            CHECK(m.dims == d.values());
            CHECK(hom_dim(q, m, m) == 1);
            CHECK(ext1_dim(q, m, m) == 0);
        }
    }
}

TEST_CASE("property: Euler identity, AR formula and tau via Coxeter vs Nakayama") {
    gen::Gen g(33);
    for (int trial = 0; trial < 10; ++trial) {
        const Quiver q = g.any_dynkin(2, 6);
        CAPTURE(q.to_string());
        const auto dims = indecomposables(q);
        std::vector<ModuleRep> reps;
        for (const auto& d : dims) reps.push_back(build_representation(q, d));
        auto rep_of = [&](const DimVector& d) {
            return reps[static_cast<std::size_t>(std::lower_bound(dims.begin(), dims.end(), d) - dims.begin())];
        };
        for (std::size_t x = 0; x < dims.size(); ++x) {
            const auto t = tau(q, dims[x]);
            CHECK(t == tau_nakayama(q, dims[x]));
            CHECK(tau_inverse(q, dims[x]) == tau_inverse_nakayama(q, dims[x]));
            if (t) CHECK(*tau_inverse(q, *t) == dims[x]);
            for (std::size_t y = 0; y < dims.size(); ++y) {
                const long hom = static_cast<long>(hom_dim(q, reps[x], reps[y]));
                const long ext = static_cast<long>(ext1_dim(q, reps[x], reps[y]));
                CHECK(hom - ext == euler_form(q, dims[x], dims[y]));
                if (t) CHECK(ext == static_cast<long>(hom_dim(q, reps[y], rep_of(*t))));
            }
        }
    }
}

TEST_CASE("property: Hom bases consist of module maps and compose") {
    gen::Gen g(34);
    for (int trial = 0; trial < 6; ++trial) {
        const Quiver q = g.any_dynkin(2, 5);
        const auto dims = indecomposables(q);
        for (int k = 0; k < 20; ++k) {
            const auto& a = dims[g.integer(0, static_cast<int>(dims.size()) - 1)];
            const auto& b = dims[g.integer(0, static_cast<int>(dims.size()) - 1)];
            const auto& c = dims[g.integer(0, static_cast<int>(dims.size()) - 1)];
            const ModuleRep ma = build_representation(q, a), mb = build_representation(q, b),
                            mc = build_representation(q, c);
            const auto ab = hom_basis(q, ma, mb);
            const auto bc = hom_basis(q, mb, mc);
            const auto ac = hom_basis(q, ma, mc);
            std::size_t ambient = 0;
            for (std::size_t v = 0; v < q.size(); ++v) ambient += static_cast<std::size_t>(a[v] * c[v]);
            linalg::EchelonBasis span(ambient);
            for (const auto& h : ac) span.insert(flatten(h));
            for (const auto& f : ab)
                for (const auto& h : bc) {
                    const Vec gf = flatten(compose(f, h));
                    CHECK(gf.size() == ambient);
                    CHECK(span.contains(gf));
                }
        }
    }
}
