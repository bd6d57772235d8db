#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zadkit/constructors.hpp"

using namespace zadkit;

namespace {

const Rationals Q;
const PrimeField F2(2);
const PrimeField F3(3);

template <FieldType F>
Poly<F> make_poly(const F& k, std::vector<std::int64_t> cs) {
    std::vector<typename F::Elem> v;
    for (auto c : cs) v.push_back(k.from_int(c));
    return Poly<F>(k, std::move(v));
}

// Strip the constructor-supplied radical so the generic paths get exercised.
template <FieldType F>
Algebra<F> without_known_radical(const Algebra<F>& a) {
    return Algebra<F>(a.field(), a.dim(), a.sc_flat(), a.unit(), a.labels());
}

template <FieldType F>
int label_index(const Algebra<F>& a, const std::string& label) {
    for (int i = 0; i < a.dim(); ++i)
        if (a.labels()[i] == label) return i;
    FAIL("missing label ", label);
    return -1;
}

} // namespace

TEST_CASE("constructor outputs validate") {
    CHECK(validate_algebra(matrix_algebra(F2, 2)).empty());
    CHECK(validate_algebra(matrix_algebra(Q, 3)).empty());
    CHECK(validate_algebra(triangular_algebra(Q, 3)).empty());
    CHECK(validate_algebra(poly_quotient(Q, make_poly(Q, {0, 0, 1}))).empty());
    CHECK(validate_algebra(group_algebra(F2, cyclic_group_table(2))).empty());
    CHECK(validate_algebra(group_algebra(F3, symmetric3_table())).empty());
    CHECK(validate_algebra(path_algebra(Q, Quiver{2, {{0, 1}}})).empty());
    auto ds = direct_sum_algebra(matrix_algebra(Q, 1), matrix_algebra(Q, 2));
    CHECK(validate_algebra(ds).empty());
    CHECK(ds.dim() == 5);
}

TEST_CASE("validation reports a flipped structure constant") {
    auto m2 = matrix_algebra(Q, 2);
    auto sc = m2.sc_flat();
    int e12 = label_index(m2, "e12"), e21 = label_index(m2, "e21"), e11 = label_index(m2, "e11");
    sc[(static_cast<std::size_t>(e12) * 4 + e21) * 4 + e11] = Q.zero(); // e12*e21 = 0 now
    Algebra<Rationals> broken(Q, 4, sc, m2.unit(), m2.labels());
    auto violations = validate_algebra(broken);
    CHECK(!violations.empty());
    CHECK(violations.front().what.find("associativity") != std::string::npos);
}

TEST_CASE("multiplication agrees with matrix units and defining relations") {
    auto m2 = matrix_algebra(Q, 2);
    int e11 = label_index(m2, "e11"), e12 = label_index(m2, "e12"), e21 = label_index(m2, "e21");
    CHECK(m2.mult(m2.basis_vec(e12), m2.basis_vec(e21)) == m2.basis_vec(e11));
    auto g = testutil::rng(3);
    auto v = testutil::random_vec(Q, 4, g);
    CHECK(m2.mult(m2.unit(), v) == v);
    CHECK(m2.mult(v, m2.unit()) == v);

    auto dual = poly_quotient(Q, make_poly(Q, {0, 0, 1}));
    auto x = dual.basis_vec(1);
    CHECK(dual.field().is_zero(dual.mult(x, x)[0]));
    CHECK(dual.field().is_zero(dual.mult(x, x)[1]));

    // operators match mult
    auto L = m2.left_mult_operator(v);
    auto w = testutil::random_vec(Q, 4, g);
    CHECK(L.apply(w) == m2.mult(v, w));
    auto R = m2.right_mult_operator(v);
    CHECK(R.apply(w) == m2.mult(w, v));
}

TEST_CASE("radical across regimes") {
    // semisimple matrix algebras: zero radical, via supplied and via trace form
    auto m2q = matrix_algebra(Q, 2);
    CHECK(radical(m2q).space.dim() == 0);
    CHECK(radical(without_known_radical(m2q)).space.dim() == 0);
    CHECK(radical(without_known_radical(m2q)).method == RadicalMethod::TraceForm);

    // dual numbers: span{x}
    auto dual = poly_quotient(Q, make_poly(Q, {0, 0, 1}));
    auto rad = radical(dual);
    CHECK(rad.space.dim() == 1);
    CHECK(rad.space.contains(dual.basis_vec(1)));
    auto rad2 = radical(without_known_radical(dual));
    CHECK(rad2.method == RadicalMethod::TraceForm);
    CHECK(rad2.space == rad.space);

    // triangular(2): span{e12}, cross-checked against the trace form
    auto t2 = triangular_algebra(Q, 2);
    auto tr = radical(t2);
    CHECK(tr.space.dim() == 1);
    CHECK(tr.space.contains(t2.basis_vec(label_index(t2, "e12"))));
    CHECK(radical(without_known_radical(t2)).space == tr.space);

    // small characteristic, supplied: dual numbers over F2 via poly constructor
    auto dual2 = poly_quotient(F2, make_poly(F2, {0, 0, 1}));
    CHECK(radical(dual2).space.dim() == 1);
    // F4 = F2[x]/(x^2+x+1) is a field: zero radical
    auto f4 = poly_quotient(F2, make_poly(F2, {1, 1, 1}));
    CHECK(radical(f4).space.dim() == 0);

    // small characteristic, exhaustive refinement: M2(F2) without its supplied radical
    auto m2f2 = without_known_radical(matrix_algebra(F2, 2));
    auto r22 = radical(m2f2);
    CHECK(r22.method == RadicalMethod::ExhaustiveRefinement);
    CHECK(r22.space.dim() == 0);

    // group algebras in non-coprime characteristic
    auto c2f2 = group_algebra(F2, cyclic_group_table(2));
    CHECK(radical(c2f2).space.dim() == 1); // augmentation ideal of a p-group
    auto s3f2 = group_algebra(F2, symmetric3_table());
    auto rs3 = radical(s3f2, Options{});
    CHECK(rs3.method == RadicalMethod::ExhaustiveRefinement);
    CHECK(rs3.space.dim() == 1); // spanned by the sum of all group elements
    Vec<PrimeField> allsum(6, 1);
    CHECK(rs3.space.contains(allsum));
    auto s3f3 = group_algebra(F3, symmetric3_table());
    CHECK(radical(s3f3).space.dim() == 4); // kernel of F3[S3] -> F3[S3/C3]

    // coprime characteristic: Maschke
    auto c3f2 = group_algebra(F2, cyclic_group_table(3));
    CHECK(radical(c3f2).space.dim() == 0);
}

TEST_CASE("radical is nilpotent and the radical quotient is semisimple") {
    auto check_one = [&](const auto& a) {
        auto r = radical(a);
        CHECK(is_ideal(a, r.space));
        CHECK(is_nilpotent_ideal(a, r.space));
        if (r.space.dim() > 0) {
            auto quo = quotient_algebra(a, r.space);
            CHECK(validate_algebra(quo.algebra).empty());
            CHECK(radical(quo.algebra).space.dim() == 0);
        }
    };
    check_one(triangular_algebra(Q, 3));
    check_one(poly_quotient(Q, make_poly(Q, {0, 0, 0, 1})));
    check_one(path_algebra(Q, Quiver{3, {{0, 1}, {1, 2}}}));
    check_one(group_algebra(F3, symmetric3_table()));
    check_one(group_algebra(F2, symmetric3_table()));
}

TEST_CASE("quotient algebras") {
    auto t2 = triangular_algebra(Q, 2);
    // quotient by the zero ideal is isomorphic (same dimension, valid)
    auto q0 = quotient_algebra(t2, Subspace<Rationals>::zero(Q, 3));
    CHECK(q0.algebra.dim() == 3);
    CHECK(validate_algebra(q0.algebra).empty());

    auto dual = poly_quotient(Q, make_poly(Q, {0, 0, 1}));
    auto q1 = quotient_algebra(dual, radical(dual).space);
    CHECK(q1.algebra.dim() == 1);

    // triangular(2)/rad is commutative semisimple of dimension 2
    auto q2 = quotient_algebra(t2, radical(t2).space);
    CHECK(q2.algebra.dim() == 2);
    CHECK(validate_algebra(q2.algebra).empty());
    CHECK(center(q2.algebra).dim() == 2);
    CHECK(radical(q2.algebra).space.dim() == 0);

    // projection is an algebra map on random elements
    auto g = testutil::rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = testutil::random_vec(Q, 3, g);
        auto y = testutil::random_vec(Q, 3, g);
        CHECK(q2.projection.apply(t2.mult(x, y)) ==
              q2.algebra.mult(q2.projection.apply(x), q2.projection.apply(y)));
    }

    CHECK_THROWS_AS(quotient_algebra(t2, Subspace<Rationals>::full(Q, 3)), Error);
    // not an ideal: span{e11}
    CHECK_THROWS_AS(quotient_algebra(t2, Subspace<Rationals>::span(Q, 3, {t2.basis_vec(0)})), Error);
}

TEST_CASE("center computations") {
    auto m2 = matrix_algebra(Q, 2);
    auto z = center(m2);
    CHECK(z.dim() == 1);
    CHECK(z.contains(m2.unit()));

    auto c3 = group_algebra(Q, cyclic_group_table(3));
    CHECK(center(c3).dim() == 3); // commutative

    auto fxm2 = direct_sum_algebra(matrix_algebra(Q, 1), matrix_algebra(Q, 2));
    CHECK(center(fxm2).dim() == 2);

    // the center is a unital commutative subalgebra
    auto zc = center(fxm2);
    for (const auto& u : zc.basis())
        for (const auto& v : zc.basis()) {
            CHECK(zc.contains(fxm2.mult(u, v)));
            CHECK(fxm2.mult(u, v) == fxm2.mult(v, u));
        }
    CHECK(zc.contains(fxm2.unit()));
}

TEST_CASE("ideal and subalgebra closures") {
    auto m2 = matrix_algebra(Q, 2);
    CHECK(ideal_closure(m2, {m2.unit()}).dim() == 4);
    CHECK(ideal_closure(m2, {m2.basis_vec(label_index(m2, "e11"))}).dim() == 4); // M_n simple

    auto t2 = triangular_algebra(Q, 2);
    auto diag = subalgebra_closure(
        t2, {t2.basis_vec(label_index(t2, "e11")), t2.basis_vec(label_index(t2, "e22"))}, true);
    CHECK(diag.dim() == 2);
    CHECK(diag.contains(t2.unit()));

    // monotone, idempotent, extensive
    auto g = testutil::rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto v = testutil::random_vec(Q, 3, g);
        auto w = testutil::random_vec(Q, 3, g);
        auto c1 = ideal_closure(t2, {v});
        auto c2 = ideal_closure(t2, {v, w});
        CHECK(c2.contains_all(c1));                       // monotone
        CHECK(ideal_closure(t2, c1.basis()) == c1);       // idempotent
        CHECK(c1.contains(v));                            // extensive
        auto s1 = subalgebra_closure(t2, {v}, false);
        CHECK(subalgebra_closure(t2, s1.basis(), false) == s1);
        CHECK(s1.contains(v));
    }
}

TEST_CASE("path algebra of the A2 quiver") {
    auto a2 = path_algebra(Q, Quiver{2, {{0, 1}}});
    CHECK(a2.dim() == 3);
    CHECK(radical(a2).space.dim() == 1);
    CHECK_THROWS_AS(path_algebra(Q, Quiver{2, {{0, 1}, {1, 0}}}), Error); // cycle
    auto a3 = path_algebra(Q, Quiver{3, {{0, 1}, {1, 2}}});
    CHECK(a3.dim() == 6); // e1,e2,e3, a1, a2, a2*a1
    CHECK(radical(a3).space.dim() == 3);
}

TEST_CASE("constructor precondition errors") {
    CHECK_THROWS_AS(poly_quotient(Q, make_poly(Q, {1, 2})), Error);    // not monic
    CHECK_THROWS_AS(poly_quotient(Q, make_poly(Q, {5})), Error);       // constant
    CHECK_THROWS_AS(matrix_algebra(Q, 0), Error);
    CHECK_THROWS_AS(path_algebra(Q, Quiver{1, {{0, 0}}}), Error);      // loop
}

TEST_CASE("group algebra C2 over F2 matches the defining relation") {
    auto c2 = group_algebra(F2, cyclic_group_table(2));
    CHECK(c2.dim() == 2);
    // g^2 = 1
    auto gvec = c2.basis_vec(1);
    CHECK(c2.mult(gvec, gvec) == c2.unit());
    CHECK_THROWS_AS(group_algebra(F2, std::vector<std::vector<int>>{{0, 1}, {1, 1}}), Error);
}

TEST_CASE("minimal polynomials and idempotents") {
    auto m2 = matrix_algebra(Q, 2);
    auto e11 = m2.basis_vec(label_index(m2, "e11"));
    auto mu = minimal_polynomial(m2, e11);
    CHECK(mu == make_poly(Q, {0, -1, 1})); // x^2 - x
    CHECK(is_idempotent(m2, e11));
    CHECK(!is_idempotent(m2, m2.basis_vec(label_index(m2, "e12"))));

    auto f4 = poly_quotient(F2, make_poly(F2, {1, 1, 1}));
    CHECK(minimal_polynomial(f4, f4.basis_vec(1)) == make_poly(F2, {1, 1, 1}));

    // evaluating the minimal polynomial at the element gives zero
    auto g = testutil::rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto v = testutil::random_vec(Q, 4, g);
        auto p = minimal_polynomial(m2, v);
        auto ev = eval_poly_at(m2, p, v);
        for (const auto& x : ev) CHECK(Q.is_zero(x));
    }
}
