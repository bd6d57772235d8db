#pragma once

// Algebra-level zpd decisions: Wedderburn component analysis of A/R, Ext^1
// self-extension checks over every character, brute-force idempotent oracles
// for the idempotent-generated subalgebra E and commutator ideal I, and the
// four-way crosscheck of the principal projective criterion.

#include "zadkit/split.hpp"
#include "zadkit/zad.hpp"

namespace zadkit {

template <FieldType F>
struct WedderburnComponent {
    Vec<F> idempotent; // central idempotent of A/R, in quotient coordinates
    int dim = 0;
    int center_dim = 0;
    Ternary zpd_flag = Ternary::Unknown;
    std::optional<std::pair<Vec<F>, Vec<F>>> zero_divisor; // (u, v) with uv = 0, both nonzero
    std::string note;
};

template <FieldType F>
struct WedderburnReport {
    Subspace<F> radical;
    Algebra<F> semisimple_quotient; // A/R
    Mat<F> projection;              // quotient_dim x dim(A)
    std::vector<WedderburnComponent<F>> components;
};

namespace detail {

template <FieldType F>
bool is_central(const Algebra<F>& a, const Vec<F>& z) {
    for (int i = 0; i < a.dim(); ++i)
        if (!(a.mult(z, a.basis_vec(i)) == a.mult(a.basis_vec(i), z))) return false;
    return true;
}

template <FieldType F>
bool vec_is_zero(const F& k, const Vec<F>& v) {
    for (const auto& x : v)
        if (!k.is_zero(x)) return false;
    return true;
}

// Zero-divisor probe inside the component eps*B of a semisimple algebra B:
// reducible (or repeated-factor) minimal polynomials factor into a pair of
// proper divisors that multiply to zero.
template <FieldType F>
std::optional<std::pair<Vec<F>, Vec<F>>> zero_divisor_probe(const Algebra<F>& b, const Vec<F>& eps,
                                                            const std::vector<Vec<F>>& block_basis,
                                                            const Options& opts) {
    const F& k = b.field();
    std::vector<Vec<F>> candidates = block_basis;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int t = 0; t < opts.probe_trials; ++t) {
        Vec<F> z(b.dim(), k.zero());
        for (const auto& blk : block_basis) {
            auto c = k.from_int(dist(rng));
            for (int i = 0; i < b.dim(); ++i) z[i] = k.add(z[i], k.mul(c, blk[i]));
        }
        candidates.push_back(std::move(z));
    }
    for (const auto& z : candidates) {
        auto mu = minimal_polynomial_from(b, z, eps);
        if (mu.degree() < 2) continue;
        Poly<F> factor = Poly<F>::zero(k);
        auto roots = field_roots(mu, opts);
        if (!roots.empty()) {
            factor = Poly<F>(k, {k.neg(roots.front()), k.one()});
        } else {
            auto s = squarefree_part(mu);
            if (s.degree() > 0 && s.degree() < mu.degree()) factor = s;
        }
        if (factor.is_zero()) continue;
        auto [rest, rem] = divmod(mu, factor);
        if (!rem.is_zero() || rest.degree() < 1) continue;
        auto u = eval_poly_from(b, factor, z, eps);
        auto v = eval_poly_from(b, rest, z, eps);
        if (vec_is_zero(k, u) || vec_is_zero(k, v)) continue; // would contradict minimality
        if (!vec_is_zero(k, b.mult(u, v))) fail(Errc::Internal, "probe factorization does not multiply to zero");
        return std::make_pair(u, v);
    }
    return std::nullopt;
}

} // namespace detail

// Split A/R into its Wedderburn components via the primitive idempotents of
// its center, and flag each component's zpd status.
template <FieldType F>
WedderburnReport<F> semisimple_components(const Algebra<F>& a, const Options& opts = {}) {
    const F& k = a.field();
    auto rad = radical(a, opts);
    auto quo = quotient_algebra(a, rad.space);
    const Algebra<F>& bar = quo.algebra;
    auto z = center(bar);
    auto zview = subalgebra_as_algebra(bar, z, bar.unit());
    auto split = split_commutative(zview.algebra, opts);
    WedderburnReport<F> out{rad.space, bar, quo.projection, {}};
    Vec<F> total(bar.dim(), k.zero());
    for (std::size_t t = 0; t < split.idempotents.size(); ++t) {
        WedderburnComponent<F> comp;
        comp.idempotent = zview.inclusion.apply(split.idempotents[t]);
        comp.center_dim = split.block_dims[t];
        if (!is_idempotent(bar, comp.idempotent) || !detail::is_central(bar, comp.idempotent))
            fail(Errc::Internal, "center splitting produced a non-central idempotent");
        for (int i = 0; i < bar.dim(); ++i) total[i] = k.add(total[i], comp.idempotent[i]);
        SpanAccumulator<F> acc(k, bar.dim());
        std::vector<Vec<F>> block_basis;
        for (int i = 0; i < bar.dim(); ++i) {
            auto w = bar.mult(comp.idempotent, bar.basis_vec(i));
            if (acc.insert(w)) block_basis.push_back(w);
        }
        comp.dim = acc.dim();
        if constexpr (F::is_finite) {
            // finite division rings are fields: M_n(K) has n >= 2 iff dim > dim Z
            if (comp.dim > comp.center_dim || comp.dim == 1) {
                comp.zpd_flag = Ternary::Yes;
            } else {
                comp.zpd_flag = Ternary::No;
                comp.note = "field component of dimension > 1";
            }
        } else {
            if (comp.dim == 1) {
                comp.zpd_flag = Ternary::Yes;
            } else if (comp.dim == comp.center_dim) {
                comp.zpd_flag = Ternary::No;
                comp.note = "commutative component of dimension > 1";
            } else if (comp.center_dim == 1) {
                auto zd = detail::zero_divisor_probe(bar, comp.idempotent, block_basis, opts);
                if (zd) {
                    comp.zpd_flag = Ternary::Yes;
                    comp.zero_divisor = zd;
                } else {
                    comp.zpd_flag = Ternary::Unknown;
                    comp.note = "no zero divisor found within the probe budget";
                }
            } else {
                comp.zpd_flag = Ternary::Unknown;
                comp.note = "center block not split to dimension 1";
            }
        }
        out.components.push_back(std::move(comp));
    }
    if (!(total == bar.unit())) fail(Errc::Internal, "component idempotents do not sum to 1");
    return out;
}

template <FieldType F>
struct ZpdVerdict {
    Ternary answer = Ternary::Unknown;
    std::string method;
    std::string reason;
    std::optional<WedderburnReport<F>> report;
    std::vector<Character<F>> characters;
    std::vector<int> ext_dims;
    std::optional<std::pair<Character<F>, Vec<F>>> ext_witness;
    int failing_component = -1;
    std::uint64_t seed = 0;
};

// zpd iff A/R is zpd componentwise and no character has a self-extension.
template <FieldType F>
ZpdVerdict<F> is_zpd(AlgebraPtr<F> a, const Options& opts = {}) {
    ZpdVerdict<F> out;
    out.seed = opts.seed;
    out.method = "wedderburn+ext1";
    out.report = semisimple_components(*a, opts);
    out.characters = one_dim_modules(a, opts);
    for (const auto& ch : out.characters) {
        auto ext = ext1_self(*a, ch);
        out.ext_dims.push_back(ext.dimension);
        if (ext.dimension > 0 && !out.ext_witness) out.ext_witness = std::make_pair(ch, *ext.derivation);
    }
    if (out.ext_witness) {
        out.answer = Ternary::No;
        out.reason = "a 1-dimensional module has a nonzero self-extension";
        return out;
    }
    const auto& components = out.report->components;
    for (std::size_t t = 0; t < components.size(); ++t) {
        if (components[t].zpd_flag == Ternary::No) {
            out.answer = Ternary::No;
            out.failing_component = static_cast<int>(t);
            out.reason = "component #" + std::to_string(t) + " of A/R is not zpd (" + components[t].note + ")";
            return out;
        }
    }
    for (std::size_t t = 0; t < components.size(); ++t) {
        if (components[t].zpd_flag == Ternary::Unknown) {
            out.answer = Ternary::Unknown;
            out.failing_component = static_cast<int>(t);
            out.reason = "component #" + std::to_string(t) + ": " + components[t].note;
            return out;
        }
    }
    out.answer = Ternary::Yes;
    return out;
}

// All idempotents of A by enumeration (finite fields within budget).
template <FieldType F>
std::vector<Vec<F>> idempotents_exhaustive(const Algebra<F>& a, const Options& opts = {})
    requires F::is_finite
{
    const F& k = a.field();
    require_budget(k, a.dim(), opts, "idempotents_exhaustive");
    std::vector<Vec<F>> out;
    for_each_vector(k, a.dim(), [&](const Vec<F>& e) {
        if (a.mult(e, e) == e) out.push_back(e);
        return true;
    });
    return out;
}

// Subalgebra generated by all idempotents (contains 1).
template <FieldType F>
Subspace<F> E_subalgebra(const Algebra<F>& a, const Options& opts = {})
    requires F::is_finite
{
    return subalgebra_closure(a, idempotents_exhaustive(a, opts), true);
}

// Ideal generated by all commutators of idempotents with arbitrary elements.
template <FieldType F>
Subspace<F> I_ideal(const Algebra<F>& a, const Options& opts = {})
    requires F::is_finite
{
    const F& k = a.field();
    std::vector<Vec<F>> gens;
    for (const auto& e : idempotents_exhaustive(a, opts))
        for (int j = 0; j < a.dim(); ++j) {
            auto eb = a.mult(e, a.basis_vec(j));
            auto be = a.mult(a.basis_vec(j), e);
            for (int t = 0; t < a.dim(); ++t) eb[t] = k.sub(eb[t], be[t]);
            gens.push_back(std::move(eb));
        }
    return ideal_closure(a, gens);
}

// Local test: A/R is a division algebra iff its only idempotents are 0, 1.
template <FieldType F>
bool is_local(const Algebra<F>& a, const Options& opts = {})
    requires F::is_finite
{
    auto rad = radical(a, opts);
    auto quo = quotient_algebra(a, rad.space);
    return idempotents_exhaustive(quo.algebra, opts).size() == 2;
}

// ---------------------------------------------------------------------------
// Four-way crosscheck of the principal projective criterion

template <FieldType F>
struct CrosscheckRow {
    Vec<F> idempotent;
    bool c_zad_oracle = false; // (1) Ae is zad, by the oracle
    bool c_re_in_ie = false;   // (2) top zad and Re inside Ie
    bool c_ext1 = false;       // (3) top zad and all 1-dim quotients extension-free
    bool c_ae_eq_ee = false;   // (4) Ae = Ee

    bool agree() const { return c_zad_oracle == c_re_in_ie && c_re_in_ie == c_ext1 && c_ext1 == c_ae_eq_ee; }
};

template <FieldType F>
struct CrosscheckReport {
    std::vector<CrosscheckRow<F>> rows; // one per nonzero idempotent
    bool all_agree = true;
};

template <FieldType F>
CrosscheckReport<F> zpd_condition_crosscheck(AlgebraPtr<F> a, const Options& opts = {})
    requires F::is_finite
{
    const F& k = a->field();
    auto rad = radical(*a, opts);
    auto chars = one_dim_modules(a, opts);
    std::vector<int> ext_dims;
    for (const auto& ch : chars) ext_dims.push_back(ext1_self(*a, ch).dimension);
    auto esub = E_subalgebra(*a, opts);
    auto iideal = I_ideal(*a, opts);
    CrosscheckReport<F> out;
    for (const auto& e : idempotents_exhaustive(*a, opts)) {
        if (detail::vec_is_zero(k, e)) continue;
        CrosscheckRow<F> row;
        row.idempotent = e;
        auto pp = principal_projective(a, e);
        row.c_zad_oracle = is_zad_oracle(pp.module, opts).answer == Ternary::Yes;

        // top = Ae / R(Ae)
        SpanAccumulator<F> racc(k, pp.module.dim());
        for (const auto& r : rad.space.basis()) {
            auto op = pp.module.action_of(r);
            for (int j = 0; j < pp.module.dim(); ++j) racc.insert(op.col(j));
        }
        auto top = quotient_module(pp.module, Subspace<F>::from_accumulator(racc));
        bool top_zad = is_zad_oracle(top.module, opts).answer == Ternary::Yes;

        // Re and Ie and Ee inside A
        SpanAccumulator<F> re(k, a->dim());
        for (const auto& r : rad.space.basis()) re.insert(a->mult(r, e));
        SpanAccumulator<F> ie(k, a->dim());
        for (const auto& x : iideal.basis()) ie.insert(a->mult(x, e));
        SpanAccumulator<F> ee(k, a->dim());
        for (const auto& x : esub.basis()) ee.insert(a->mult(x, e));
        auto re_s = Subspace<F>::from_accumulator(re);
        auto ie_s = Subspace<F>::from_accumulator(ie);
        auto ee_s = Subspace<F>::from_accumulator(ee);
        row.c_re_in_ie = top_zad && ie_s.contains_all(re_s);

        bool ext_ok = true;
        for (std::size_t t = 0; t < chars.size(); ++t) {
            auto val = k.zero();
            for (int i = 0; i < a->dim(); ++i) val = k.add(val, k.mul(chars[t].lambda[i], e[i]));
            if (k.is_zero(val)) continue;
            if (ext_dims[t] > 0) ext_ok = false;
        }
        row.c_ext1 = top_zad && ext_ok;

        SpanAccumulator<F> ae(k, a->dim());
        for (int i = 0; i < a->dim(); ++i) ae.insert(a->mult(a->basis_vec(i), e));
        row.c_ae_eq_ee = Subspace<F>::from_accumulator(ae) == ee_s;

        out.all_agree = out.all_agree && row.agree();
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace zadkit
