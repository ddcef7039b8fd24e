#include "doctest.h"
#include "generators.hpp"

using namespace silted::linalg;

TEST_CASE("rref and rank on a fixed matrix") {
    const RatMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    std::vector<std::size_t> piv;
    const RatMatrix r = rref(m, &piv);
    CHECK(piv == std::vector<std::size_t>{0, 1});
    CHECK(r == RatMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
    CHECK(rank(m) == 2);
    const auto ker = kernel_vectors(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == Vec{-1, -1, 1});
}

TEST_CASE("determinant, inverse and characteristic polynomial") {
    const RatMatrix a{{2, 1}, {1, 1}};
    CHECK(determinant(a) == 1);
    CHECK(*inverse(a) == RatMatrix{{1, -1}, {-1, 2}});
    CHECK_FALSE(inverse(RatMatrix{{1, 2}, {2, 4}}).has_value());
    // Coxeter matrix of A2: t^2 + t + 1.
    CHECK(characteristic_polynomial(RatMatrix{{0, 1}, {-1, -1}}) == Vec{1, 1, 1});
    CHECK(characteristic_polynomial(RatMatrix(0, 0)) == Vec{1});
    RatMatrix h(2, 2);
    h(0, 0) = Rational(1, 2);
    h(1, 1) = Rational(2, 3);
    h(0, 1) = 5;
    CHECK(determinant(h) == Rational(1, 3));
}

TEST_CASE("solve returns nullopt on inconsistent systems") {
    const RatMatrix m{{1, 1}, {2, 2}};
    CHECK_FALSE(solve(m, RatMatrix{{1}, {3}}).has_value());
    const auto x = solve(m, RatMatrix{{1}, {2}});
    REQUIRE(x);
    CHECK(m * *x == RatMatrix{{1}, {2}});
}

TEST_CASE("property: rank-nullity, kernel and transpose rank") {
    gen::Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = g.integer(1, 6), c = g.integer(1, 6), k = g.integer(0, 4);
        const RatMatrix m = g.low_rank(r, c, k);
        const auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == c);
        CHECK(rank(m) <= k);
        CHECK(rank(m) == rank(m.transpose()));
        for (const auto& v : ker) CHECK((m * v).is_zero());
        const RatMatrix rr = rref(m);
        CHECK(rref(rr) == rr);
    }
}

TEST_CASE("property: determinant is multiplicative and inverse inverts") {
    gen::Gen g(12);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = g.integer(1, 5);
        const RatMatrix a = g.matrix(n, n), b = g.matrix(n, n);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
        CHECK(determinant(a.transpose()) == determinant(a));
        const auto inv = inverse(a);
        CHECK(inv.has_value() == (determinant(a) != 0));
        if (inv) CHECK(a * *inv == RatMatrix::identity(n));
    }
}

TEST_CASE("property: Cayley-Hamilton") {
    gen::Gen g(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = g.integer(1, 5);
        const RatMatrix a = g.matrix(n, n);
        const Vec p = characteristic_polynomial(a);
        REQUIRE(p.size() == n + 1);
        CHECK(p[n] == 1);
        CHECK(p[0] == ((n % 2 == 0) ? determinant(a) : Rational(-determinant(a))));
        RatMatrix acc(n, n), power = RatMatrix::identity(n);
        for (std::size_t k = 0; k <= n; ++k) {
            RatMatrix term = power;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) term(i, j) *= p[k];
            acc = acc + term;
            power = power * a;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("property: solve finds a solution whenever one exists") {
    gen::Gen g(14);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = g.integer(1, 5), c = g.integer(1, 5);
        const RatMatrix m = g.low_rank(r, c, g.integer(1, 4));
        const RatMatrix x0 = g.matrix(c, 1);
        const RatMatrix b = m * x0;
        const auto x = solve(m, b);
        REQUIRE(x);
        CHECK(m * *x == b);
        CHECK(*solve(m, b) == *x);
    }
}

TEST_CASE("property: EchelonBasis agrees with rank and recovers coordinates") {
    gen::Gen g(15);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = g.integer(1, 6), count = g.integer(1, 7);
        const RatMatrix m = g.low_rank(count, n, g.integer(1, 4));
        EchelonBasis basis(n);
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < count; ++i) {
            rows.push_back(m.row(i));
            basis.insert(m.row(i));
        }
        CHECK(basis.dim() == rank(m));
        for (const auto& v : rows) {
            CHECK(basis.contains(v));
            CHECK(is_zero(basis.reduce(v)));
            const auto coords = basis.coordinates(v);
            REQUIRE(coords);
            Vec back(n);
            for (std::size_t k = 0; k < coords->size(); ++k)
                for (std::size_t j = 0; j < n; ++j) back[j] += (*coords)[k] * basis.rows()[k][j];
            CHECK(back == v);
        }
        CHECK(std::is_sorted(basis.pivots().begin(), basis.pivots().end()));
    }
}

TEST_CASE("SpanCoordinates rejects vectors outside the span") {
    SpanCoordinates s({Vec{1, 1, 0}, Vec{0, 1, 1}}, 3);
    CHECK(*s.coordinates(Vec{1, 2, 1}) == Vec{1, 1});
    CHECK_FALSE(s.coordinates(Vec{1, 0, 0}).has_value());
}
