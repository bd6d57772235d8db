#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zadkit/poly.hpp"

using namespace zadkit;
using testutil::random_mat;

namespace {

const Rationals Q;
const PrimeField F2(2);
const PrimeField F3(3);

template <FieldType F>
Mat<F> mat2x2(const F& k, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    Mat<F> m(k, 2, 2);
    m.at(0, 0) = k.from_int(a);
    m.at(0, 1) = k.from_int(b);
    m.at(1, 0) = k.from_int(c);
    m.at(1, 1) = k.from_int(d);
    return m;
}

} // namespace

TEST_CASE("scalar parsing and printing") {
    CHECK(Q.eq(Q.parse("3/7"), Q.div(Q.from_int(3), Q.from_int(7))));
    CHECK(Q.eq(Q.parse("2/4"), Q.parse("1/2")));
    CHECK(Q.eq(Q.parse("-5"), Q.from_int(-5)));
    CHECK(Q.to_string(Q.parse("2/4")) == "1/2");
    CHECK(F3.parse("4") == 1);
    CHECK(F3.parse("-1") == 2);
    CHECK_THROWS_AS((void)Q.parse("x"), Error);
    CHECK_THROWS_AS(PrimeField(4), Error);
}

TEST_CASE("rref matches hand reduction") {
    // identity fixed point
    auto id3 = Mat<Rationals>::identity(Q, 3);
    CHECK(rref(id3) == id3);
    // zero fixed point
    Mat<Rationals> z(Q, 2, 4);
    CHECK(rref(z) == z);
    // [[2,4],[1,2]] -> [[1,2],[0,0]]
    auto m = mat2x2(Q, 2, 4, 1, 2);
    auto r = rref(m);
    CHECK(r == mat2x2(Q, 1, 2, 0, 0));
    CHECK(rank(m) == 1);
}

TEST_CASE("rref is idempotent on random matrices") {
    auto g = testutil::rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_mat(Q, 3 + trial % 3, 4, g);
        auto r = rref(m);
        CHECK(rref(r) == r);
    }
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_mat(F3, 4, 3 + trial % 4, g);
        auto r = rref(m);
        CHECK(rref(r) == r);
    }
}

TEST_CASE("nullspace basics and rank-nullity") {
    Mat<Rationals> z(Q, 3, 3);
    CHECK(nullspace_basis(z).size() == 3);
    CHECK(nullspace_basis(Mat<Rationals>::identity(Q, 4)).empty());

    Mat<PrimeField> row(F2, 1, 2);
    row.at(0, 0) = 1;
    row.at(0, 1) = 1;
    auto ns = nullspace_basis(row);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == Vec<PrimeField>{1, 1});

    auto g = testutil::rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_mat(F3, 2 + trial % 4, 2 + (trial / 2) % 5, g);
        auto basis = nullspace_basis(m);
        CHECK(static_cast<int>(basis.size()) + rank(m) == m.cols());
        for (const auto& v : basis) {
            for (const auto& x : m.apply(v)) CHECK(F3.is_zero(x));
        }
    }
}

TEST_CASE("solve returns a solution exactly when consistent") {
    auto g = testutil::rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        auto m = random_mat(Q, 3, 4, g);
        auto x = testutil::random_vec(Q, 4, g);
        auto b = m.apply(x);
        auto s = solve(m, b);
        REQUIRE(s.has_value());
        CHECK(m.apply(*s) == b);
    }
    // inconsistent system
    Mat<Rationals> m(Q, 2, 1);
    m.at(0, 0) = Q.from_int(1);
    m.at(1, 0) = Q.from_int(1);
    CHECK(!solve(m, Vec<Rationals>{Q.from_int(0), Q.from_int(1)}).has_value());
}

TEST_CASE("subspace sum, containment, equality") {
    auto s1 = Subspace<PrimeField>::span(F2, 3, {{1, 0, 0}});
    auto s2 = Subspace<PrimeField>::span(F2, 3, {{1, 1, 0}});
    auto expect = Subspace<PrimeField>::span(F2, 3, {{1, 0, 0}, {0, 1, 0}});
    CHECK(s1.sum(s2) == expect);

    // neutral element
    auto zero = Subspace<PrimeField>::zero(F2, 3);
    CHECK(s1.sum(zero) == s1);
    CHECK(zero.sum(s1) == s1);

    auto span10 = Subspace<Rationals>::span(Q, 2, {{Q.from_int(1), Q.from_int(0)}});
    CHECK(!span10.contains({Q.from_int(0), Q.from_int(1)}));
    CHECK(span10.contains({Q.from_int(7), Q.from_int(0)}));
}

TEST_CASE("subspace sum is associative and commutative up to equality") {
    auto g = testutil::rng(14);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = Subspace<PrimeField>::span(F3, 5, {testutil::random_vec(F3, 5, g), testutil::random_vec(F3, 5, g)});
        auto b = Subspace<PrimeField>::span(F3, 5, {testutil::random_vec(F3, 5, g)});
        auto c = Subspace<PrimeField>::span(F3, 5, {testutil::random_vec(F3, 5, g), testutil::random_vec(F3, 5, g)});
        CHECK(a.sum(b) == b.sum(a));
        CHECK(a.sum(b).sum(c) == a.sum(b.sum(c)));
    }
}

TEST_CASE("containment agrees with exhaustive enumeration over small F_p") {
    auto g = testutil::rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        int ambient = 2 + trial % 5; // <= 6
        std::vector<Vec<PrimeField>> gens{testutil::random_vec(F2, ambient, g), testutil::random_vec(F2, ambient, g)};
        auto s = Subspace<PrimeField>::span(F2, ambient, gens);
        for (int probe = 0; probe < 8; ++probe) {
            auto v = testutil::random_vec(F2, ambient, g);
            CHECK(s.contains(v) == testutil::member_by_enumeration(F2, gens, v));
        }
    }
}

TEST_CASE("coordinates reconstruct vectors in the span") {
    auto g = testutil::rng(16);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = Subspace<Rationals>::span(
            Q, 4, {testutil::random_vec(Q, 4, g), testutil::random_vec(Q, 4, g), testutil::random_vec(Q, 4, g)});
        if (s.dim() == 0) continue;
        auto v = testutil::random_vec(Q, 4, g);
        auto inside = s.reduce(v); // v - inside lies in the span
        Vec<Rationals> w(4);
        for (int i = 0; i < 4; ++i) w[i] = Q.sub(v[i], inside[i]);
        auto coords = s.coordinates(w);
        REQUIRE(coords.has_value());
        Vec<Rationals> rebuilt(4, Q.zero());
        for (int i = 0; i < s.dim(); ++i)
            for (int j = 0; j < 4; ++j) rebuilt[j] = Q.add(rebuilt[j], Q.mul((*coords)[i], s.basis()[i][j]));
        CHECK(rebuilt == w);
    }
}

TEST_CASE("polynomial gcd and squarefree part across characteristics") {
    // over Q: (x-1)^2 (x+2) -> (x-1)(x+2)
    Poly<Rationals> x = Poly<Rationals>::x(Q);
    Poly<Rationals> f = x.sub(Poly<Rationals>::one(Q));
    f = f.mul(f).mul(x.add(Poly<Rationals>::one(Q).scaled(Q.from_int(2))));
    auto sq = squarefree_part(f);
    auto expect = x.sub(Poly<Rationals>::one(Q)).mul(x.add(Poly<Rationals>::one(Q).scaled(Q.from_int(2))));
    CHECK(sq == expect.monic());

    // over F2: x^2 has derivative 0; squarefree part is x
    Poly<PrimeField> x2(F2, {0, 0, 1});
    CHECK(squarefree_part(x2) == Poly<PrimeField>::x(F2));
    // x^2+x+1 is separable irreducible, stays put
    Poly<PrimeField> irr(F2, {1, 1, 1});
    CHECK(squarefree_part(irr) == irr);
    // (x^2+x+1)^2 over F2 has zero derivative
    CHECK(squarefree_part(irr.mul(irr)) == irr);
    // x^3 (x+1)^2 over F3: mixed exponents, one divisible by char
    Poly<PrimeField> x3(F3, {0, 1});
    Poly<PrimeField> g = x3.mul(x3).mul(x3);
    Poly<PrimeField> xp1 = x3.add(Poly<PrimeField>::one(F3));
    g = g.mul(xp1).mul(xp1);
    Poly<PrimeField> expect3 = x3.mul(xp1);
    CHECK(squarefree_part(g) == expect3);
}

TEST_CASE("xgcd certifies gcds") {
    auto g = testutil::rng(17);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> ac(4), bc(3);
        for (auto& v : ac) v = Q.from_int(d(g));
        for (auto& v : bc) v = Q.from_int(d(g));
        Poly<Rationals> a(Q, ac), b(Q, bc);
        if (a.is_zero() || b.is_zero()) continue;
        auto r = poly_xgcd(a, b);
        CHECK(r.u.mul(a).add(r.v.mul(b)) == r.g);
        if (!r.g.is_zero()) {
            CHECK(divmod(a, r.g).second.is_zero());
            CHECK(divmod(b, r.g).second.is_zero());
        }
    }
}
