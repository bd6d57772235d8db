#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zadkit/constructors.hpp"
#include "zadkit/module.hpp"

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

template <FieldType F>
AlgebraPtr<F> ptr(Algebra<F> a) {
    return std::make_shared<const Algebra<F>>(std::move(a));
}

template <FieldType F>
int label_index(const Algebra<F>& a, const std::string& label) {
    for (int i = 0; i < a.dim(); ++i)
        if (a.labels()[i] == label) return i;
    FAIL("missing label ", label);
    return -1;
}

// Brute-force character enumeration: all p^n functionals filtered by the
// character laws. Independent oracle for one_dim_modules.
std::vector<Vec<PrimeField>> characters_by_enumeration(const AlgebraPtr<PrimeField>& a) {
    const auto& k = a->field();
    std::vector<Vec<PrimeField>> out;
    for_each_vector(k, a->dim(), [&](const Vec<PrimeField>& lam) {
        Character<PrimeField> ch{a, lam};
        if (validate_character(ch).empty()) out.push_back(lam);
        return true;
    });
    return out;
}

} // namespace

TEST_CASE("regular and natural modules validate") {
    auto m2 = ptr(matrix_algebra(F2, 2));
    CHECK(validate_module(regular_module(m2)).empty());
    CHECK(validate_module(natural_matrix_module(m2, 2)).empty());
    auto dual = ptr(poly_quotient(Q, make_poly(Q, {0, 0, 1})));
    auto reg = regular_module(dual);
    CHECK(validate_module(reg).empty());
    // rho(x) is the nilpotent Jordan block
    auto rx = reg.action()[1];
    CHECK(rx.mul(rx).is_zero());
    CHECK(!rx.is_zero());

    // perturbing one action matrix breaks validation
    auto action = reg.action();
    action[1].at(0, 0) = Q.one();
    Module<Rationals> broken(dual, 2, action);
    CHECK(!validate_module(broken).empty());
}

TEST_CASE("principal projectives of the triangular algebra") {
    auto t2 = ptr(triangular_algebra(Q, 2));
    int e11 = label_index(*t2, "e11"), e22 = label_index(*t2, "e22");
    auto p1 = principal_projective(t2, t2->basis_vec(e11));
    CHECK(p1.module.dim() == 1);
    auto p2 = principal_projective(t2, t2->basis_vec(e22));
    CHECK(p2.module.dim() == 2);
    CHECK(validate_module(p1.module).empty());
    CHECK(validate_module(p2.module).empty());

    // e = unit gives the regular module
    auto pr = principal_projective(t2, t2->unit());
    CHECK(pr.module.dim() == 3);

    // embedding intertwines the actions
    auto g = testutil::rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        auto x = testutil::random_vec(Q, 3, g);
        auto op_inside = p2.module.action_of(x);
        auto lhs = p2.embedding.mul(op_inside);
        auto rhs = t2->left_mult_operator(x).mul(p2.embedding);
        CHECK(lhs == rhs);
    }

    // dim Ae + dim A(1-e) = dim A
    Vec<Rationals> one_minus(3);
    for (int i = 0; i < 3; ++i) one_minus[i] = Q.sub(t2->unit()[i], t2->basis_vec(e22)[i]);
    auto pc = principal_projective(t2, one_minus);
    CHECK(p2.module.dim() + pc.module.dim() == 3);

    CHECK_THROWS_AS(principal_projective(t2, t2->basis_vec(label_index(*t2, "e12"))), Error);
}

TEST_CASE("hom spaces and endomorphism algebras") {
    auto m2 = ptr(matrix_algebra(F2, 2));
    auto nat = natural_matrix_module(m2, 2);
    auto h = hom_space(nat, nat);
    CHECK(h.dim() == 1); // Schur over the split field
    CHECK(h.contains(Mat<PrimeField>::identity(F2, 2).vectorized()));

    auto dual = ptr(poly_quotient(Q, make_poly(Q, {0, 0, 1})));
    auto reg = regular_module(dual);
    auto e = end_algebra(reg);
    CHECK(e.algebra.dim() == 2); // right multiplications
    CHECK(validate_algebra(e.algebra).empty());

    // hom contains identity and is closed under composition for random modules
    auto t2 = ptr(triangular_algebra(F2, 2));
    auto regt = regular_module(t2);
    auto et = end_algebra(regt);
    CHECK(validate_algebra(et.algebra).empty());
    for (const auto& a : et.basis)
        for (const auto& b : et.basis) {
            auto prod = a.mul(b).vectorized();
            CHECK(hom_space(regt, regt).contains(prod));
        }
}

TEST_CASE("annihilators") {
    auto t2 = ptr(triangular_algebra(Q, 2));
    CHECK(annihilator(regular_module(t2)).dim() == 0); // faithful

    auto dual = ptr(poly_quotient(Q, make_poly(Q, {0, 0, 1})));
    auto chars = one_dim_modules(dual);
    REQUIRE(chars.size() == 1);
    auto s = module_from_character(chars[0]);
    auto ann = annihilator(s);
    CHECK(ann.dim() == 1);
    CHECK(ann.contains(dual->basis_vec(1)));

    // F x M2(F): the module supported on the second factor kills the first
    auto fxm2 = ptr(direct_sum_algebra(matrix_algebra(Q, 1), matrix_algebra(Q, 2)));
    std::vector<Mat<Rationals>> action;
    for (int i = 0; i < 5; ++i) {
        Mat<Rationals> m(Q, 2, 2);
        if (i >= 1) {
            int t = i - 1;
            m.at(t / 2, t % 2) = Q.one();
        }
        action.push_back(std::move(m));
    }
    Module<Rationals> second(fxm2, 2, action);
    CHECK(validate_module(second).empty());
    auto ann2 = annihilator(second);
    CHECK(ann2.dim() == 1);
    CHECK(ann2.contains(fxm2->basis_vec(0)));
    CHECK(is_ideal(*fxm2, ann2));
}

TEST_CASE("module radicals and quotients") {
    auto m2 = ptr(matrix_algebra(Q, 2));
    CHECK(module_radical(natural_matrix_module(m2, 2)).dim() == 0);
    CHECK(module_radical(regular_module(m2)).dim() == 0);

    auto dual = ptr(poly_quotient(Q, make_poly(Q, {0, 0, 1})));
    auto reg = regular_module(dual);
    auto mr = module_radical(reg);
    CHECK(mr.dim() == 1);
    CHECK(mr.contains(dual->basis_vec(1)));

    auto quo = quotient_module(reg, mr);
    CHECK(quo.module.dim() == 1);
    CHECK(validate_module(quo.module).empty());
    CHECK(quo.module.action()[1].is_zero()); // x acts as 0

    // quotient by a non-submodule throws
    auto bad = Subspace<Rationals>::span(Q, 2, {{Q.one(), Q.zero()}});
    CHECK_THROWS_AS(quotient_module(reg, bad), Error);
}

TEST_CASE("submodule spinning") {
    auto t2 = ptr(triangular_algebra(Q, 2));
    auto reg = regular_module(t2);
    int e12 = label_index(*t2, "e12");
    auto spun = submodule_spanned(reg, {t2->basis_vec(e12)});
    CHECK(spun.dim() == 1);
    auto all = submodule_spanned(reg, {t2->unit()});
    CHECK(all.dim() == 3);
}

TEST_CASE("irreducibility verdicts") {
    auto m2 = ptr(matrix_algebra(F2, 2));
    CHECK(is_irreducible(natural_matrix_module(m2, 2)).answer == Ternary::Yes);

    auto dualq = ptr(poly_quotient(Q, make_poly(Q, {0, 0, 1})));
    auto r = is_irreducible(regular_module(dualq));
    CHECK(r.answer == Ternary::No);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->dim() == 1);
    CHECK(r.witness->contains(dualq->basis_vec(1)));

    // F4 over F2 as a module over itself: exhaustive spin says irreducible
    auto f4 = ptr(poly_quotient(F2, make_poly(F2, {1, 1, 1})));
    CHECK(is_irreducible(regular_module(f4)).answer == Ternary::Yes);

    // natural module of M3(F3)
    auto m3 = ptr(matrix_algebra(F3, 3));
    CHECK(is_irreducible(natural_matrix_module(m3, 3)).answer == Ternary::Yes);

    // over Q: natural module of M2(Q) is absolutely irreducible
    auto m2q = ptr(matrix_algebra(Q, 2));
    CHECK(is_irreducible(natural_matrix_module(m2q, 2)).answer == Ternary::Yes);

    // over Q the engine stays honest when End is larger than the ground
    // field: Q[x]/(x^2-2) is a field, every spin fills, End has dim 2
    auto sqrt2 = ptr(poly_quotient(Q, make_poly(Q, {-2, 0, 1})));
    auto ru = is_irreducible(regular_module(sqrt2));
    CHECK(ru.answer == Ternary::Unknown);
    CHECK(!ru.reason.empty());
}

TEST_CASE("one-dimensional modules") {
    auto m2 = ptr(matrix_algebra(Q, 2));
    CHECK(one_dim_modules(m2).empty());

    auto dual = ptr(poly_quotient(Q, make_poly(Q, {0, 0, 1})));
    auto cd = one_dim_modules(dual);
    REQUIRE(cd.size() == 1);
    CHECK(Q.eq(cd[0].lambda[0], Q.one()));
    CHECK(Q.is_zero(cd[0].lambda[1]));

    auto t2 = ptr(triangular_algebra(Q, 2));
    auto ct = one_dim_modules(t2);
    REQUIRE(ct.size() == 2);
    int e11 = label_index(*t2, "e11"), e22 = label_index(*t2, "e22"), e12 = label_index(*t2, "e12");
    for (const auto& ch : ct) {
        CHECK(Q.is_zero(ch.lambda[e12]));
        CHECK(Q.eq(Q.add(ch.lambda[e11], ch.lambda[e22]), Q.one()));
    }

    // completeness over small prime fields, against brute force
    for (auto a : {ptr(triangular_algebra(F2, 2)), ptr(group_algebra(F2, symmetric3_table())),
                   ptr(poly_quotient(F2, make_poly(F2, {1, 1, 1}))), ptr(matrix_algebra(F2, 2)),
                   ptr(path_algebra(F2, Quiver{3, {{0, 1}, {1, 2}}}))}) {
        auto fast = one_dim_modules(a);
        auto brute = characters_by_enumeration(a);
        CHECK(fast.size() == brute.size());
        for (const auto& lam : brute) {
            bool found = false;
            for (const auto& ch : fast) found = found || ch.lambda == lam;
            CHECK(found);
        }
    }
    for (auto a : {ptr(triangular_algebra(F3, 3)), ptr(group_algebra(F3, symmetric3_table()))}) {
        auto fast = one_dim_modules(a);
        auto brute = characters_by_enumeration(a);
        CHECK(fast.size() == brute.size());
    }
}

TEST_CASE("direct sums of modules") {
    auto m2 = ptr(matrix_algebra(F2, 2));
    auto nat = natural_matrix_module(m2, 2);
    auto sum = direct_sum_module(nat, nat);
    CHECK(sum.dim() == 4);
    CHECK(validate_module(sum).empty());

    // natural + natural is isomorphic to the regular module: exhaustive search
    // over hom combinations finds an invertible intertwiner
    auto reg = regular_module(m2);
    auto homs = hom_basis_mats(sum, reg);
    REQUIRE(!homs.empty());
    bool invertible_found = false;
    const auto& k = m2->field();
    for_each_vector(k, static_cast<int>(homs.size()), [&](const Vec<PrimeField>& coef) {
        Mat<PrimeField> cand(k, 4, 4);
        for (std::size_t t = 0; t < homs.size(); ++t)
            if (!k.is_zero(coef[t])) cand = cand.add(homs[t].scaled(coef[t]));
        if (is_invertible(cand)) {
            invertible_found = true;
            return false;
        }
        return true;
    });
    CHECK(invertible_found);
}

TEST_CASE("quotient modules validate after quotienting") {
    auto g = testutil::rng(23);
    auto t3 = ptr(triangular_algebra(Q, 3));
    auto reg = regular_module(t3);
    for (int trial = 0; trial < 10; ++trial) {
        auto seedvec = testutil::random_vec(Q, 6, g);
        auto sub = submodule_spanned(reg, {seedvec});
        if (sub.dim() == reg.dim()) continue;
        auto quo = quotient_module(reg, sub);
        CHECK(validate_module(quo.module).empty());
    }
}
