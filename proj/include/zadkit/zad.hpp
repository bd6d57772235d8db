#pragma once

// The zad decision engine: tensor kernel T_ker, the span of the zero-action
// pure tensors, the exhaustive finite-field oracle with replayable
// certificates and witnesses, theorem fast paths for irreducible and
// semisimple modules, structural reductions, and the zero-action-preserving
// map checks.

#include <random>
#include <tuple>

#include "zadkit/ext1.hpp"
#include "zadkit/module.hpp"

namespace zadkit {

// Fixed flattening convention for A (x) V: b_i (x) v_j at position i*m + j.
struct TensorIndex {
    int n = 0, m = 0;

    int flatten(int i, int j) const { return i * m + j; }
    int size() const { return n * m; }
};

template <FieldType F>
Vec<F> pure_tensor(const F& k, const TensorIndex& ti, const Vec<F>& x, const Vec<F>& v) {
    Vec<F> r(static_cast<std::size_t>(ti.size()), k.zero());
    for (int i = 0; i < ti.n; ++i) {
        if (k.is_zero(x[i])) continue;
        for (int j = 0; j < ti.m; ++j)
            if (!k.is_zero(v[j])) r[ti.flatten(i, j)] = k.mul(x[i], v[j]);
    }
    return r;
}

// b_i (x) e_j - 1 (x) (b_i e_j), the spanning elements of T_ker.
template <FieldType F>
Vec<F> basis_pair_element(const Module<F>& v, int i, int j) {
    const F& k = v.field();
    const auto& a = *v.algebra();
    TensorIndex ti{a.dim(), v.dim()};
    auto u = pure_tensor(k, ti, a.basis_vec(i), v.basis_vec(j));
    auto w = pure_tensor(k, ti, a.unit(), v.action()[i].col(j));
    for (int t = 0; t < ti.size(); ++t) u[t] = k.sub(u[t], w[t]);
    return u;
}

// Kernel of the action map A (x) V -> V.
template <FieldType F>
Subspace<F> t_ker(const Module<F>& v) {
    const F& k = v.field();
    const auto& a = *v.algebra();
    TensorIndex ti{a.dim(), v.dim()};
    Mat<F> map(k, v.dim(), ti.size());
    for (int i = 0; i < ti.n; ++i)
        for (int j = 0; j < ti.m; ++j) map.set_col(ti.flatten(i, j), v.action()[i].col(j));
    SpanAccumulator<F> acc(k, ti.size());
    for (auto& vec : nullspace_basis(map)) acc.insert(std::move(vec));
    return Subspace<F>::from_accumulator(acc);
}

// Span of zero-action pure tensors together with the independent generators
// that produced it; the generators are genuine pairs (a, w) with a w = 0.
template <FieldType F>
struct SSpan {
    Subspace<F> space;
    std::vector<std::pair<Vec<F>, Vec<F>>> generators;

    SSpan(F field, int ambient) : space(Subspace<F>::zero(field, ambient)) {}
};

namespace detail {

// Accumulate Ann(w) (x) w into the span for one vector w.
template <FieldType F>
void accumulate_annihilator_tensors(const Module<F>& v, const Vec<F>& w, SpanAccumulator<F>& acc,
                                    std::vector<std::pair<Vec<F>, Vec<F>>>& gens) {
    const F& k = v.field();
    const auto& a = *v.algebra();
    TensorIndex ti{a.dim(), v.dim()};
    Mat<F> act(k, v.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i) act.set_col(i, v.action()[i].apply(w));
    for (auto& x : nullspace_basis(act)) {
        auto t = pure_tensor(k, ti, x, w);
        if (acc.insert(std::move(t))) gens.emplace_back(std::move(x), w);
    }
}

} // namespace detail

// Exact F-span of S_{A(x)V} by enumerating every vector of V (finite fields,
// within budget).
template <FieldType F>
SSpan<F> s_span_exhaustive(const Module<F>& v, const Options& opts = {})
    requires F::is_finite
{
    const F& k = v.field();
    require_budget(k, v.dim(), opts, "s_span_exhaustive");
    TensorIndex ti{v.algebra()->dim(), v.dim()};
    SpanAccumulator<F> acc(k, ti.size());
    SSpan<F> out(k, ti.size());
    for_each_vector(k, v.dim(), [&](const Vec<F>& w) {
        bool zero = true;
        for (const auto& x : w)
            if (!k.is_zero(x)) zero = false;
        if (!zero) detail::accumulate_annihilator_tensors(v, w, acc, out.generators);
        return true;
    });
    out.space = Subspace<F>::from_accumulator(acc);
    return out;
}

// Lower-bound accumulation over a supplied candidate vector stream (any field).
template <FieldType F>
SSpan<F> s_span_accumulate(const Module<F>& v, const std::vector<Vec<F>>& candidates) {
    const F& k = v.field();
    TensorIndex ti{v.algebra()->dim(), v.dim()};
    SpanAccumulator<F> acc(k, ti.size());
    SSpan<F> out(k, ti.size());
    for (const auto& w : candidates) {
        bool zero = true;
        for (const auto& x : w)
            if (!k.is_zero(x)) zero = false;
        if (!zero) detail::accumulate_annihilator_tensors(v, w, acc, out.generators);
    }
    out.space = Subspace<F>::from_accumulator(acc);
    return out;
}

// The deterministic candidate stream used over Q: standard basis, pairwise
// sums and differences, then seeded small-integer vectors.
template <FieldType F>
std::vector<Vec<F>> candidate_vectors(const Module<F>& v, const Options& opts) {
    const F& k = v.field();
    const int m = v.dim();
    std::vector<Vec<F>> out;
    for (int i = 0; i < m; ++i) out.push_back(v.basis_vec(i));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Vec<F> s(m, k.zero()), d(m, k.zero());
            s[i] = k.one();
            s[j] = k.one();
            d[i] = k.one();
            d[j] = k.neg(k.one());
            out.push_back(std::move(s));
            out.push_back(std::move(d));
        }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 4 * m; ++trial) {
        Vec<F> r(m);
        for (int i = 0; i < m; ++i) r[i] = k.from_int(dist(rng));
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Certificates, witnesses, verdicts

template <FieldType F>
struct ZadCertificate {
    struct Term {
        typename F::Elem coeff;
        Vec<F> a; // algebra vector
        Vec<F> m; // module vector, a acts as zero on m
    };
    struct Entry {
        int i = 0, j = 0;
        std::vector<Term> terms;
    };
    std::vector<Entry> entries; // one per basis pair (i, j)
};

template <FieldType F>
struct NotZadWitness {
    Vec<F> alpha; // functional on A (x) V in the flattened convention
    int i = 0, j = 0;
};

template <FieldType F>
struct ZadVerdict {
    Ternary answer = Ternary::Unknown;
    std::string method;
    std::string reason;
    std::optional<ZadCertificate<F>> certificate;
    std::optional<NotZadWitness<F>> witness;
    std::uint64_t seed = 0;
};

// Express every x (x) v - 1 (x) xv in terms of the recorded zero-action
// generators; an independent checker can replay the combination.
template <FieldType F>
ZadCertificate<F> build_certificate(const Module<F>& v, const SSpan<F>& span) {
    const F& k = v.field();
    const auto& a = *v.algebra();
    TensorIndex ti{a.dim(), v.dim()};
    Mat<F> gens(k, ti.size(), static_cast<int>(span.generators.size()));
    for (int c = 0; c < gens.cols(); ++c)
        gens.set_col(c, pure_tensor(k, ti, span.generators[c].first, span.generators[c].second));
    ZadCertificate<F> cert;
    for (int i = 0; i < ti.n; ++i)
        for (int j = 0; j < ti.m; ++j) {
            auto u = basis_pair_element(v, i, j);
            auto coords = solve(gens, u);
            if (!coords) fail(Errc::Internal, "certificate requested for a pair outside the span");
            typename ZadCertificate<F>::Entry entry{i, j, {}};
            for (std::size_t t = 0; t < coords->size(); ++t)
                if (!k.is_zero((*coords)[t]))
                    entry.terms.push_back({(*coords)[t], span.generators[t].first, span.generators[t].second});
            cert.entries.push_back(std::move(entry));
        }
    return cert;
}

// Check a stored certificate against the instance it claims to certify.
template <FieldType F>
bool verify_certificate(const Module<F>& v, const ZadCertificate<F>& cert, std::string* why = nullptr) {
    const F& k = v.field();
    const auto& a = *v.algebra();
    TensorIndex ti{a.dim(), v.dim()};
    auto complain = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(cert.entries.size()) != ti.size())
        return complain("certificate does not cover every basis pair");
    std::vector<bool> seen(static_cast<std::size_t>(ti.size()), false);
    for (const auto& entry : cert.entries) {
        if (entry.i < 0 || entry.i >= ti.n || entry.j < 0 || entry.j >= ti.m)
            return complain("certificate entry indexes out of range");
        if (seen[ti.flatten(entry.i, entry.j)]) return complain("duplicate certificate entry");
        seen[ti.flatten(entry.i, entry.j)] = true;
        Vec<F> sum(static_cast<std::size_t>(ti.size()), k.zero());
        for (const auto& term : entry.terms) {
            if (static_cast<int>(term.a.size()) != ti.n || static_cast<int>(term.m.size()) != ti.m)
                return complain("certificate term has wrong shape");
            // the listed pair must be a genuine zero action
            auto action = v.act(term.a, term.m);
            for (const auto& x : action)
                if (!k.is_zero(x)) return complain("certificate term does not act as zero");
            auto t = pure_tensor(k, ti, term.a, term.m);
            for (int s = 0; s < ti.size(); ++s) sum[s] = k.add(sum[s], k.mul(term.coeff, t[s]));
        }
        auto expect = basis_pair_element(v, entry.i, entry.j);
        if (sum != expect) return complain("certificate combination does not reproduce x(x)v - 1(x)xv");
    }
    return true;
}

// Check a stored witness: alpha kills every zero-action pure tensor but not
// the stored basis-pair element. Exhaustive over finite fields.
template <FieldType F>
bool verify_witness(const Module<F>& v, const NotZadWitness<F>& wit, const Options& opts, std::string* why = nullptr)
    requires F::is_finite
{
    const F& k = v.field();
    const auto& a = *v.algebra();
    TensorIndex ti{a.dim(), v.dim()};
    auto complain = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(wit.alpha.size()) != ti.size()) return complain("witness functional has wrong length");
    require_budget(k, v.dim(), opts, "verify_witness");
    bool ok = true;
    for_each_vector(k, v.dim(), [&](const Vec<F>& w) {
        Mat<F> act(k, v.dim(), a.dim());
        for (int i = 0; i < a.dim(); ++i) act.set_col(i, v.action()[i].apply(w));
        for (auto& x : nullspace_basis(act)) {
            auto t = pure_tensor(k, ti, x, w);
            auto val = k.zero();
            for (int s = 0; s < ti.size(); ++s) val = k.add(val, k.mul(wit.alpha[s], t[s]));
            if (!k.is_zero(val)) {
                ok = false;
                return false;
            }
        }
        return true;
    });
    if (!ok) return complain("witness functional does not vanish on all zero-action tensors");
    auto u = basis_pair_element(v, wit.i, wit.j);
    auto val = k.zero();
    for (int s = 0; s < ti.size(); ++s) val = k.add(val, k.mul(wit.alpha[s], u[s]));
    if (k.is_zero(val)) return complain("witness functional vanishes on the claimed violating pair");
    return true;
}

// ---------------------------------------------------------------------------
// The exhaustive oracle: zad iff the zero-action tensors span all of T_ker

template <FieldType F>
ZadVerdict<F> is_zad_oracle(const Module<F>& v, const Options& opts = {}) {
    if constexpr (!F::is_finite) {
        fail(Errc::InvalidArgument, "the exhaustive zad oracle requires a finite ground field");
    } else {
        const F& k = v.field();
        if (v.dim() == 0) return {Ternary::Yes, "oracle", "zero module", ZadCertificate<F>{}, std::nullopt, opts.seed};
        auto span = s_span_exhaustive(v, opts);
        auto ker = t_ker(v);
        ZadVerdict<F> out;
        out.method = "oracle";
        out.seed = opts.seed;
        if (span.space == ker) {
            out.answer = Ternary::Yes;
            out.certificate = build_certificate(v, span);
            return out;
        }
        out.answer = Ternary::No;
        // alpha: kills span S, nonzero somewhere on T_ker
        Mat<F> smat(k, span.space.dim(), ker.ambient());
        for (int r = 0; r < span.space.dim(); ++r) smat.set_row(r, span.space.basis()[r]);
        NotZadWitness<F> wit;
        bool found = false;
        for (auto& alpha : nullspace_basis(smat)) {
            TensorIndex ti{v.algebra()->dim(), v.dim()};
            for (int i = 0; i < ti.n && !found; ++i)
                for (int j = 0; j < ti.m && !found; ++j) {
                    auto u = basis_pair_element(v, i, j);
                    auto val = k.zero();
                    for (int s = 0; s < ti.size(); ++s) val = k.add(val, k.mul(alpha[s], u[s]));
                    if (!k.is_zero(val)) {
                        wit = {alpha, i, j};
                        found = true;
                    }
                }
            if (found) break;
        }
        if (!found) fail(Errc::Internal, "span differs from T_ker but no separating functional was found");
        out.witness = std::move(wit);
        out.reason = "F-span of S is a proper subspace of T_ker (dim " + std::to_string(span.space.dim()) + " < " +
                     std::to_string(ker.dim()) + ")";
        return out;
    }
}

// ---------------------------------------------------------------------------
// Theorem fast paths

namespace detail {

// Irreducibility already established by the caller.
template <FieldType F>
ZadVerdict<F> zad_irreducible_known(const Module<F>& v, const Options& opts) {
    auto end = end_algebra(v);
    ZadVerdict<F> out;
    out.seed = opts.seed;
    if (v.dim() > end.algebra.dim()) {
        out.answer = Ternary::Yes;
        out.method = "thm-irreducible:dim>end";
        return out;
    }
    if (end.algebra.dim() == 1) {
        out.answer = Ternary::Yes;
        out.method = "thm-irreducible:end=F";
        return out;
    }
    out.answer = Ternary::No;
    out.method = "thm-irreducible";
    out.reason = "dim V = " + std::to_string(v.dim()) + " <= dim End = " + std::to_string(end.algebra.dim()) +
                 " and End is not the ground field";
    return out;
}

} // namespace detail

template <FieldType F>
ZadVerdict<F> is_zad_irreducible(const Module<F>& v, const Options& opts = {}) {
    auto irr = is_irreducible(v, opts);
    if (irr.answer == Ternary::No) fail(Errc::NotIrreducible, "module is reducible");
    if (irr.answer == Ternary::Unknown)
        fail(Errc::NotIrreducible, "irreducibility could not be established: " + irr.reason);
    return detail::zad_irreducible_known(v, opts);
}

template <FieldType F>
struct SubmoduleView {
    Module<F> module;
    Mat<F> inclusion; // parent_dim x sub_dim
};

template <FieldType F>
SubmoduleView<F> submodule_as_module(const Module<F>& v, const Subspace<F>& s) {
    const F& k = v.field();
    const int d = s.dim();
    std::vector<Mat<F>> action;
    for (int i = 0; i < v.algebra()->dim(); ++i) {
        Mat<F> m(k, d, d);
        for (int c = 0; c < d; ++c) {
            auto img = v.action()[i].apply(s.basis()[c]);
            auto coords = s.coordinates(img);
            if (!coords) fail(Errc::InvalidArgument, "subspace is not action-closed");
            m.set_col(c, *coords);
        }
        action.push_back(std::move(m));
    }
    Mat<F> incl(k, v.dim(), d);
    for (int c = 0; c < d; ++c) incl.set_col(c, s.basis()[c]);
    return {Module<F>(v.algebra(), d, std::move(action)), std::move(incl)};
}

namespace detail {

// Intertwining projection onto the submodule W, solved as a linear system;
// exists whenever W is a direct summand (in particular for semisimple V).
template <FieldType F>
std::optional<Mat<F>> summand_projection(const Module<F>& v, const Subspace<F>& w) {
    const F& k = v.field();
    const int m = v.dim();
    const int unknowns = m * m;
    // reduction-by-W as a linear map
    Mat<F> red(k, m, m);
    for (int c = 0; c < m; ++c) {
        Vec<F> e(m, k.zero());
        e[c] = k.one();
        red.set_col(c, w.reduce(e));
    }
    std::vector<Vec<F>> rows;
    std::vector<typename F::Elem> rhs;
    auto push_row = [&](Vec<F> row, typename F::Elem b) {
        rows.push_back(std::move(row));
        rhs.push_back(b);
    };
    // intertwining: X rho(b_i) - rho(b_i) X = 0
    for (int i = 0; i < v.algebra()->dim(); ++i) {
        const auto& op = v.action()[i];
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                Vec<F> row(unknowns, k.zero());
                for (int b = 0; b < m; ++b) row[r * m + b] = k.add(row[r * m + b], op.at(b, c));
                for (int a2 = 0; a2 < m; ++a2) row[a2 * m + c] = k.sub(row[a2 * m + c], op.at(r, a2));
                push_row(std::move(row), k.zero());
            }
    }
    // fixes W pointwise: X w = w
    for (const auto& wvec : w.basis())
        for (int r = 0; r < m; ++r) {
            Vec<F> row(unknowns, k.zero());
            for (int c = 0; c < m; ++c) row[r * m + c] = wvec[c];
            push_row(std::move(row), wvec[r]);
        }
    // image inside W: red(X e_c) = 0
    for (int c = 0; c < m; ++c)
        for (int r = 0; r < m; ++r) {
            Vec<F> row(unknowns, k.zero());
            for (int t = 0; t < m; ++t) row[t * m + c] = red.at(r, t);
            push_row(std::move(row), k.zero());
        }
    Mat<F> sys = Mat<F>::from_rows(k, rows, unknowns);
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    return unflatten(k, *sol, m, m);
}

} // namespace detail

// Decide zad for a module with zero radical action by splitting off
// irreducible summands and taking the conjunction.
template <FieldType F>
ZadVerdict<F> zad_semisimple(const Module<F>& v, const Options& opts = {}) {
    ZadVerdict<F> out;
    out.seed = opts.seed;
    out.method = "semisimple-decomposition";
    if (v.dim() == 0) {
        out.answer = Ternary::Yes;
        return out;
    }
    IrreducibilityResult<F> irr;
    try {
        irr = is_irreducible(v, opts);
    } catch (const Error& e) {
        out.answer = Ternary::Unknown;
        out.reason = e.what();
        return out;
    }
    if (irr.answer == Ternary::Unknown) {
        out.answer = Ternary::Unknown;
        out.reason = irr.reason;
        return out;
    }
    if (irr.answer == Ternary::Yes) {
        auto leaf = detail::zad_irreducible_known(v, opts);
        leaf.method = "semisimple-decomposition/" + leaf.method;
        leaf.seed = opts.seed;
        return leaf;
    }
    auto proj = detail::summand_projection(v, *irr.witness);
    if (!proj) {
        out.answer = Ternary::Unknown;
        out.reason = "found a proper submodule but no intertwining projection; module may not be semisimple";
        return out;
    }
    auto sub = submodule_as_module(v, *irr.witness);
    SpanAccumulator<F> kacc(v.field(), v.dim());
    for (auto& kv : nullspace_basis(*proj)) kacc.insert(std::move(kv));
    auto complement = submodule_as_module(v, Subspace<F>::from_accumulator(kacc));
    auto left = zad_semisimple(sub.module, opts);
    auto right = zad_semisimple(complement.module, opts);
    // conjunction per the direct-sum law
    if (left.answer == Ternary::No || right.answer == Ternary::No) {
        out.answer = Ternary::No;
        const auto& bad = left.answer == Ternary::No ? left : right;
        out.reason = "a summand of dimension " +
                     std::to_string(left.answer == Ternary::No ? sub.module.dim() : complement.module.dim()) +
                     " is not zad: " + (bad.reason.empty() ? bad.method : bad.reason);
        return out;
    }
    if (left.answer == Ternary::Unknown || right.answer == Ternary::Unknown) {
        out.answer = Ternary::Unknown;
        out.reason = left.answer == Ternary::Unknown ? left.reason : right.reason;
        return out;
    }
    out.answer = Ternary::Yes;
    return out;
}

// ---------------------------------------------------------------------------
// Verdict combinators (direct sums and quotients)

inline Ternary conjunction(const std::vector<Ternary>& vs) {
    bool unknown = false;
    for (auto v : vs) {
        if (v == Ternary::No) return Ternary::No;
        if (v == Ternary::Unknown) unknown = true;
    }
    return unknown ? Ternary::Unknown : Ternary::Yes;
}

template <FieldType F>
ZadVerdict<F> zad_direct_sum(const std::vector<ZadVerdict<F>>& parts) {
    ZadVerdict<F> out;
    out.method = "direct-sum-law";
    std::vector<Ternary> answers;
    for (const auto& p : parts) answers.push_back(p.answer);
    out.answer = conjunction(answers);
    if (out.answer == Ternary::No) out.reason = "some summand is not zad";
    return out;
}

template <FieldType F>
ZadVerdict<F> zad_quotient_propagate(const ZadVerdict<F>& on_module) {
    ZadVerdict<F> out;
    out.method = "quotient-law";
    if (on_module.answer == Ternary::Yes) {
        out.answer = Ternary::Yes;
        return out;
    }
    out.answer = Ternary::Unknown;
    out.reason = "only Yes transfers to homomorphic images";
    return out;
}

// ---------------------------------------------------------------------------
// Transfer across a quotient by an ideal inside the annihilator

template <FieldType F>
struct ReducedInstance {
    AlgebraPtr<F> algebra;
    Module<F> module;
    Mat<F> projection; // quotient_dim x parent_dim
};

template <FieldType F>
ReducedInstance<F> zad_over_quotient_transfer(const Module<F>& v, const Subspace<F>& j) {
    auto ann = annihilator(v);
    if (!ann.contains_all(j)) fail(Errc::InvalidArgument, "ideal is not contained in the annihilator");
    auto quo = quotient_algebra(*v.algebra(), j);
    auto qa = std::make_shared<const Algebra<F>>(std::move(quo.algebra));
    std::vector<Mat<F>> action;
    for (int c : quo.section_cols) action.push_back(v.action()[c]);
    Module<F> reduced(qa, v.dim(), std::move(action));
    return {qa, std::move(reduced), std::move(quo.projection)};
}

// ---------------------------------------------------------------------------
// The principal projective fast path: Ae is zad iff its top is zad and no
// 1-dimensional quotient has a self-extension

template <FieldType F>
ZadVerdict<F> is_zad_principal_projective(AlgebraPtr<F> a, const Vec<F>& e, const Options& opts = {}) {
    const F& k = a->field();
    auto pp = principal_projective(a, e);
    auto rad = radical(*a, opts);
    SpanAccumulator<F> racc(k, pp.module.dim());
    for (const auto& r : rad.space.basis()) {
        auto op = pp.module.action_of(r);
        for (int j = 0; j < pp.module.dim(); ++j) racc.insert(op.col(j));
    }
    auto top = quotient_module(pp.module, Subspace<F>::from_accumulator(racc));
    auto top_verdict = zad_semisimple(top.module, opts);
    ZadVerdict<F> out;
    out.seed = opts.seed;
    out.method = "thm-principal-projective";
    if (top_verdict.answer == Ternary::No) {
        out.answer = Ternary::No;
        out.reason = "the top Ae/Re is not zad: " + (top_verdict.reason.empty() ? top_verdict.method : top_verdict.reason);
        return out;
    }
    auto chars = one_dim_modules(a, opts);
    for (std::size_t t = 0; t < chars.size(); ++t) {
        auto val = k.zero();
        for (int i = 0; i < a->dim(); ++i) val = k.add(val, k.mul(chars[t].lambda[i], e[i]));
        if (k.is_zero(val)) continue; // not a quotient of Ae
        auto ext = ext1_self(*a, chars[t]);
        if (ext.dimension > 0) {
            out.answer = Ternary::No;
            out.reason = "a 1-dimensional quotient of Ae has a self-extension (character #" + std::to_string(t) +
                         ", Ext^1 dim " + std::to_string(ext.dimension) + ")";
            return out;
        }
    }
    if (top_verdict.answer == Ternary::Unknown) {
        out.answer = Ternary::Unknown;
        out.reason = top_verdict.reason;
        return out;
    }
    out.answer = Ternary::Yes;
    return out;
}

// ---------------------------------------------------------------------------
// Zero-action-preserving maps

template <FieldType F>
struct ModuleMap {
    Module<F> source;
    Module<F> target;
    Mat<F> matrix; // target_dim x source_dim
};

template <FieldType F>
bool is_module_hom(const ModuleMap<F>& phi) {
    for (int i = 0; i < phi.source.algebra()->dim(); ++i)
        if (!(phi.matrix.mul(phi.source.action()[i]) == phi.target.action()[i].mul(phi.matrix))) return false;
    return true;
}

template <FieldType F>
struct ZapResult {
    Ternary answer = Ternary::Unknown;
    std::optional<std::pair<Vec<F>, Vec<F>>> violation; // (a, m) with am = 0, a phi(m) != 0
};

// Does phi send zero actions to zero actions? Exhaustive over finite fields.
template <FieldType F>
ZapResult<F> is_zero_action_preserving(const ModuleMap<F>& phi, const Options& opts = {})
    requires F::is_finite
{
    const F& k = phi.source.field();
    const auto& a = *phi.source.algebra();
    require_budget(k, phi.source.dim(), opts, "is_zero_action_preserving");
    ZapResult<F> out{Ternary::Yes, std::nullopt};
    for_each_vector(k, phi.source.dim(), [&](const Vec<F>& m) {
        Mat<F> act(k, phi.source.dim(), a.dim());
        for (int i = 0; i < a.dim(); ++i) act.set_col(i, phi.source.action()[i].apply(m));
        auto image = phi.matrix.apply(m);
        for (auto& x : nullspace_basis(act)) {
            auto hit = phi.target.action_of(x).apply(image);
            for (const auto& c : hit)
                if (!k.is_zero(c)) {
                    out = {Ternary::No, std::make_pair(x, m)};
                    return false;
                }
        }
        return true;
    });
    return out;
}

// The implication of the zero-action-preserving proposition: if the source is
// zad (per the oracle) and phi preserves zero actions, phi must intertwine.
template <FieldType F>
bool zap_implies_hom_check(const ModuleMap<F>& phi, const Options& opts = {})
    requires F::is_finite
{
    auto zad = is_zad_oracle(phi.source, opts);
    if (zad.answer != Ternary::Yes) return true;
    auto zap = is_zero_action_preserving(phi, opts);
    if (zap.answer != Ternary::Yes) return true;
    return is_module_hom(phi);
}

// ---------------------------------------------------------------------------
// The combined fast engine

template <FieldType F>
ZadVerdict<F> decide_zad_fast(const Module<F>& v, const Options& opts = {}) {
    const F& k = v.field();
    ZadVerdict<F> out;
    out.seed = opts.seed;
    if (v.dim() == 0) {
        out.answer = Ternary::Yes;
        out.method = "trivial:zero-module";
        return out;
    }
    std::string notes;
    try {
        auto irr = is_irreducible(v, opts);
        if (irr.answer == Ternary::Yes) return detail::zad_irreducible_known(v, opts);
    } catch (const Error& e) {
        notes += std::string("; irreducibility: ") + e.what();
    }
    try {
        auto mr = module_radical(v, opts);
        if (mr.dim() == 0) {
            auto verdict = zad_semisimple(v, opts);
            if (verdict.answer != Ternary::Unknown) return verdict;
            notes += "; semisimple route: " + verdict.reason;
        }
    } catch (const Error& e) {
        notes += std::string("; radical: ") + e.what();
    }
    auto span = s_span_accumulate(v, candidate_vectors(v, opts));
    auto ker = t_ker(v);
    if (span.space == ker) {
        out.answer = Ternary::Yes;
        out.method = "span-certificate";
        out.certificate = build_certificate(v, span);
        return out;
    }
    out.answer = Ternary::Unknown;
    out.method = "fast";
    out.reason = "no theorem route applied; accumulated span has dim " + std::to_string(span.space.dim()) +
                 " < t_ker dim " + std::to_string(ker.dim()) + notes;
    return out;
}

} // namespace zadkit
