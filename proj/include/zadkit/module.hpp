#pragma once

// Finite-dimensional left modules: validation, Hom/End spaces, annihilators,
// radicals, quotients, principal projectives, irreducibility and the
// enumeration of 1-dimensional modules.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zadkit/algebra.hpp"
#include "zadkit/split.hpp"

namespace zadkit {

template <FieldType F>
class Module {
  public:
    using Elem = typename F::Elem;

    Module(AlgebraPtr<F> algebra, int m, std::vector<Mat<F>> action)
        : algebra_(std::move(algebra)), m_(m), action_(std::move(action)) {
        if (!algebra_) fail(Errc::InvalidArgument, "module without algebra");
        if (static_cast<int>(action_.size()) != algebra_->dim())
            fail(Errc::DimensionMismatch, "one action matrix per algebra basis element required");
        for (const auto& mat : action_)
            if (mat.rows() != m_ || mat.cols() != m_) fail(Errc::DimensionMismatch, "action matrix shape mismatch");
    }

    const AlgebraPtr<F>& algebra() const { return algebra_; }
    const F& field() const { return algebra_->field(); }
    int dim() const { return m_; }
    const std::vector<Mat<F>>& action() const { return action_; }

    // rho(x) for a coordinate vector x.
    Mat<F> action_of(const Vec<F>& x) const {
        const F& k = field();
        Mat<F> r(k, m_, m_);
        for (int i = 0; i < algebra_->dim(); ++i) {
            if (k.is_zero(x[i])) continue;
            r = r.add(action_[i].scaled(x[i]));
        }
        return r;
    }

    Vec<F> act(const Vec<F>& x, const Vec<F>& v) const { return action_of(x).apply(v); }

    Vec<F> basis_vec(int i) const {
        Vec<F> v(m_, field().zero());
        v[i] = field().one();
        return v;
    }

  private:
    AlgebraPtr<F> algebra_;
    int m_;
    std::vector<Mat<F>> action_;
};

template <FieldType F>
std::vector<Violation> validate_module(const Module<F>& v) {
    const F& k = v.field();
    const auto& a = *v.algebra();
    std::vector<Violation> out;
    if (!(v.action_of(a.unit()) == Mat<F>::identity(k, v.dim())))
        out.push_back({"unit does not act as the identity"});
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Mat<F> lhs = v.action()[i].mul(v.action()[j]);
            Mat<F> rhs(k, v.dim(), v.dim());
            for (int t = 0; t < a.dim(); ++t)
                if (!k.is_zero(a.sc(i, j, t))) rhs = rhs.add(v.action()[t].scaled(a.sc(i, j, t)));
            if (!(lhs == rhs)) {
                out.push_back({"action violates structure constants at basis pair (" + std::to_string(i) + "," +
                               std::to_string(j) + ")"});
            }
        }
    return out;
}

template <FieldType F>
Module<F> regular_module(AlgebraPtr<F> a) {
    const int n = a->dim();
    std::vector<Mat<F>> action;
    for (int i = 0; i < n; ++i) action.push_back(a->left_mult_operator(a->basis_vec(i)));
    return Module<F>(std::move(a), n, std::move(action));
}

// Natural column module of matrix_algebra(k): only valid for that basis layout.
template <FieldType F>
Module<F> natural_matrix_module(AlgebraPtr<F> a, int k) {
    const F& field = a->field();
    if (a->dim() != k * k) fail(Errc::DimensionMismatch, "natural module needs a k^2-dimensional matrix algebra");
    std::vector<Mat<F>> action;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            Mat<F> m(field, k, k);
            m.at(r, c) = field.one();
            action.push_back(std::move(m));
        }
    return Module<F>(std::move(a), k, std::move(action));
}

template <FieldType F>
Module<F> direct_sum_module(const Module<F>& v, const Module<F>& w) {
    if (v.algebra() != w.algebra() && !(v.algebra()->sc_flat() == w.algebra()->sc_flat() &&
                                        v.algebra()->unit() == w.algebra()->unit()))
        fail(Errc::InvalidArgument, "direct sum of modules over different algebras");
    const F& k = v.field();
    const int m = v.dim() + w.dim();
    std::vector<Mat<F>> action;
    for (int i = 0; i < v.algebra()->dim(); ++i) {
        Mat<F> blk(k, m, m);
        for (int r = 0; r < v.dim(); ++r)
            for (int c = 0; c < v.dim(); ++c) blk.at(r, c) = v.action()[i].at(r, c);
        for (int r = 0; r < w.dim(); ++r)
            for (int c = 0; c < w.dim(); ++c) blk.at(v.dim() + r, v.dim() + c) = w.action()[i].at(r, c);
        action.push_back(std::move(blk));
    }
    return Module<F>(v.algebra(), m, std::move(action));
}

// {x in A : rho(x) = 0}, always a two-sided ideal.
template <FieldType F>
Subspace<F> annihilator(const Module<F>& v) {
    const F& k = v.field();
    const int n = v.algebra()->dim(), m = v.dim();
    Mat<F> sys(k, m * m, n);
    for (int t = 0; t < n; ++t) sys.set_col(t, v.action()[t].vectorized());
    SpanAccumulator<F> acc(k, n);
    for (auto& vec : nullspace_basis(sys)) acc.insert(std::move(vec));
    return Subspace<F>::from_accumulator(acc);
}

// All intertwiners V -> W as a subspace of target_dim x source_dim matrices,
// flattened row-major.
template <FieldType F>
Subspace<F> hom_space(const Module<F>& v, const Module<F>& w) {
    const F& k = v.field();
    const int n = v.algebra()->dim();
    const int mv = v.dim(), mw = w.dim();
    const int unknowns = mw * mv;
    // constraints: X rho_V(b_i) - rho_W(b_i) X = 0 for all i
    Mat<F> sys(k, n * mw * mv, unknowns);
    int row = 0;
    for (int i = 0; i < n; ++i) {
        const Mat<F>& rv = v.action()[i];
        const Mat<F>& rw = w.action()[i];
        for (int r = 0; r < mw; ++r)
            for (int c = 0; c < mv; ++c) {
                // entry (r,c) of X rv - rw X, coefficient of X[a][b]
                for (int b = 0; b < mv; ++b) sys.at(row, r * mv + b) = k.add(sys.at(row, r * mv + b), rv.at(b, c));
                for (int a = 0; a < mw; ++a)
                    sys.at(row, a * mv + c) = k.sub(sys.at(row, a * mv + c), rw.at(r, a));
                ++row;
            }
    }
    SpanAccumulator<F> acc(k, unknowns);
    for (auto& vec : nullspace_basis(sys)) acc.insert(std::move(vec));
    return Subspace<F>::from_accumulator(acc);
}

template <FieldType F>
Mat<F> unflatten(const F& k, const Vec<F>& flat, int rows, int cols) {
    Mat<F> m(k, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = flat[static_cast<std::size_t>(r) * cols + c];
    return m;
}

template <FieldType F>
std::vector<Mat<F>> hom_basis_mats(const Module<F>& v, const Module<F>& w) {
    auto h = hom_space(v, w);
    std::vector<Mat<F>> out;
    for (const auto& row : h.basis()) out.push_back(unflatten(v.field(), row, w.dim(), v.dim()));
    return out;
}

template <FieldType F>
struct EndAlgebra {
    Algebra<F> algebra;          // End_A(V) under composition, in the hom basis
    std::vector<Mat<F>> basis;   // intertwiner matrices matching the basis order
};

template <FieldType F>
EndAlgebra<F> end_algebra(const Module<F>& v) {
    const F& k = v.field();
    auto h = hom_space(v, v);
    const int d = h.dim();
    std::vector<Mat<F>> mats;
    for (const auto& row : h.basis()) mats.push_back(unflatten(k, row, v.dim(), v.dim()));
    std::vector<typename F::Elem> sc(static_cast<std::size_t>(d) * d * d, k.zero());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto prod = mats[i].mul(mats[j]).vectorized();
            auto coords = h.coordinates(prod);
            if (!coords) fail(Errc::Internal, "End(V) is not closed under composition");
            for (int t = 0; t < d; ++t) sc[(static_cast<std::size_t>(i) * d + j) * d + t] = (*coords)[t];
        }
    auto unit = h.coordinates(Mat<F>::identity(k, v.dim()).vectorized());
    if (!unit) fail(Errc::Internal, "End(V) does not contain the identity");
    Algebra<F> alg(k, d, std::move(sc), std::move(*unit));
    return {std::move(alg), std::move(mats)};
}

// Least action-closed subspace containing the given vectors.
template <FieldType F>
Subspace<F> submodule_spanned(const Module<F>& v, const std::vector<Vec<F>>& gens) {
    SpanAccumulator<F> acc(v.field(), v.dim());
    std::vector<Vec<F>> work;
    for (const auto& g : gens)
        if (acc.insert(g)) work.push_back(g);
    for (std::size_t t = 0; t < work.size(); ++t) {
        const Vec<F> u = work[t];
        for (int i = 0; i < v.algebra()->dim(); ++i) {
            auto img = v.action()[i].apply(u);
            if (acc.insert(img)) work.push_back(std::move(img));
        }
    }
    return Subspace<F>::from_accumulator(acc);
}

// R*V for the algebra radical R.
template <FieldType F>
Subspace<F> module_radical(const Module<F>& v, const Options& opts = {}) {
    auto rad = radical(*v.algebra(), opts);
    SpanAccumulator<F> acc(v.field(), v.dim());
    for (const auto& r : rad.space.basis()) {
        auto op = v.action_of(r);
        for (int j = 0; j < v.dim(); ++j) acc.insert(op.col(j));
    }
    return Subspace<F>::from_accumulator(acc);
}

template <FieldType F>
struct QuotientModule {
    Module<F> module;
    Mat<F> projection; // quotient_dim x parent_dim
};

// Quotient by an action-closed subspace; basis = non-pivot coordinates.
template <FieldType F>
QuotientModule<F> quotient_module(const Module<F>& v, const Subspace<F>& sub) {
    const F& k = v.field();
    if (sub.ambient() != v.dim()) fail(Errc::DimensionMismatch, "quotient submodule ambient mismatch");
    for (const auto& u : sub.basis())
        for (int i = 0; i < v.algebra()->dim(); ++i)
            if (!sub.contains(v.action()[i].apply(u)))
                fail(Errc::InvalidArgument, "quotient by a subspace that is not action-closed");
    const auto coords = sub.nonpivot_cols();
    const int q = static_cast<int>(coords.size());
    auto project = [&](const Vec<F>& vec) {
        auto red = sub.reduce(vec);
        Vec<F> out(q);
        for (int t = 0; t < q; ++t) out[t] = red[coords[t]];
        return out;
    };
    std::vector<Mat<F>> action;
    for (int i = 0; i < v.algebra()->dim(); ++i) {
        Mat<F> m(k, q, q);
        for (int c = 0; c < q; ++c) {
            Vec<F> lift(v.dim(), k.zero());
            lift[coords[c]] = k.one();
            m.set_col(c, project(v.action()[i].apply(lift)));
        }
        action.push_back(std::move(m));
    }
    Mat<F> proj(k, q, v.dim());
    for (int c = 0; c < v.dim(); ++c) {
        Vec<F> e(v.dim(), k.zero());
        e[c] = k.one();
        proj.set_col(c, project(e));
    }
    return {Module<F>(v.algebra(), q, std::move(action)), std::move(proj)};
}

template <FieldType F>
struct PrincipalProjective {
    Module<F> module;
    Mat<F> embedding; // algebra_dim x module_dim, columns = basis of Ae
};

// The left module Ae for an idempotent e, presented on the echelon basis of
// the image of right multiplication by e.
template <FieldType F>
PrincipalProjective<F> principal_projective(AlgebraPtr<F> a, const Vec<F>& e) {
    const F& k = a->field();
    if (!is_idempotent(*a, e)) fail(Errc::NotIdempotent, "principal projective requires an idempotent");
    bool zero = true;
    for (const auto& x : e)
        if (!k.is_zero(x)) zero = false;
    if (zero) fail(Errc::NotIdempotent, "principal projective requires a nonzero idempotent");
    SpanAccumulator<F> acc(k, a->dim());
    for (int i = 0; i < a->dim(); ++i) acc.insert(a->mult(a->basis_vec(i), e));
    auto space = Subspace<F>::from_accumulator(acc);
    const int d = space.dim();
    std::vector<Mat<F>> action;
    for (int i = 0; i < a->dim(); ++i) {
        Mat<F> m(k, d, d);
        for (int c = 0; c < d; ++c) {
            auto img = a->mult(a->basis_vec(i), space.basis()[c]);
            auto coords = space.coordinates(img);
            if (!coords) fail(Errc::Internal, "Ae is not closed under left multiplication");
            m.set_col(c, *coords);
        }
        action.push_back(std::move(m));
    }
    Mat<F> embed(k, a->dim(), d);
    for (int c = 0; c < d; ++c) embed.set_col(c, space.basis()[c]);
    return {Module<F>(std::move(a), d, std::move(action)), std::move(embed)};
}

// ---------------------------------------------------------------------------
// Characters (1-dimensional modules)

template <FieldType F>
struct Character {
    AlgebraPtr<F> algebra;
    Vec<F> lambda; // value on each basis element

    bool operator==(const Character& o) const { return lambda == o.lambda; }
};

template <FieldType F>
std::vector<Violation> validate_character(const Character<F>& ch) {
    const auto& a = *ch.algebra;
    const F& k = a.field();
    std::vector<Violation> out;
    auto value = [&](const Vec<F>& x) {
        auto r = k.zero();
        for (int i = 0; i < a.dim(); ++i) r = k.add(r, k.mul(x[i], ch.lambda[i]));
        return r;
    };
    if (!k.eq(value(a.unit()), k.one())) out.push_back({"character does not send the unit to 1"});
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            auto lhs = k.mul(ch.lambda[i], ch.lambda[j]);
            auto rhs = value(a.mult(a.basis_vec(i), a.basis_vec(j)));
            if (!k.eq(lhs, rhs))
                out.push_back({"character is not multiplicative at basis pair (" + std::to_string(i) + "," +
                               std::to_string(j) + ")"});
        }
    return out;
}

template <FieldType F>
Module<F> module_from_character(const Character<F>& ch) {
    const F& k = ch.algebra->field();
    std::vector<Mat<F>> action;
    for (int i = 0; i < ch.algebra->dim(); ++i) {
        Mat<F> m(k, 1, 1);
        m.at(0, 0) = ch.lambda[i];
        action.push_back(std::move(m));
    }
    return Module<F>(ch.algebra, 1, std::move(action));
}

// Complete list of algebra maps A -> F. Route: quotient A/R by the ideal
// generated by all commutators, split the commutative semisimple remainder,
// read off the 1-dimensional blocks. Characters kill the radical (values of
// nilpotents are nilpotent scalars) and all commutators, so the list is full.
template <FieldType F>
std::vector<Character<F>> one_dim_modules(AlgebraPtr<F> a, const Options& opts = {}) {
    const F& k = a->field();
    auto rad = radical(*a, opts);
    // pass to the semisimple quotient
    std::optional<QuotientAlgebra<F>> qr;
    const Algebra<F>* stage = a.get();
    if (rad.space.dim() > 0) {
        qr = quotient_algebra(*a, rad.space);
        stage = &qr->algebra;
    }
    // kill all commutators
    std::vector<Vec<F>> comms;
    for (int i = 0; i < stage->dim(); ++i)
        for (int j = i + 1; j < stage->dim(); ++j) {
            auto ij = stage->mult(stage->basis_vec(i), stage->basis_vec(j));
            auto ji = stage->mult(stage->basis_vec(j), stage->basis_vec(i));
            for (int t = 0; t < stage->dim(); ++t) ij[t] = k.sub(ij[t], ji[t]);
            comms.push_back(std::move(ij));
        }
    auto comm_ideal = ideal_closure(*stage, comms);
    std::optional<QuotientAlgebra<F>> qc;
    const Algebra<F>* cstage = stage;
    if (comm_ideal.dim() == stage->dim()) return {}; // C = 0, no characters
    if (comm_ideal.dim() > 0) {
        qc = quotient_algebra(*stage, comm_ideal);
        cstage = &qc->algebra;
    }
    auto split = split_commutative(*cstage, opts);
    // project a parent basis vector through both quotients
    auto push_down = [&](int parent_index) {
        Vec<F> v(a->dim(), k.zero());
        v[parent_index] = k.one();
        Vec<F> w = qr ? qr->projection.apply(v) : v;
        return qc ? qc->projection.apply(w) : w;
    };
    std::vector<Character<F>> out;
    for (std::size_t b = 0; b < split.idempotents.size(); ++b) {
        if (split.block_dims[b] != 1) continue;
        const auto& eps = split.idempotents[b];
        // the block is F*eps; the character value of x is the coordinate of
        // eps*x against eps
        int pivot = -1;
        for (int t = 0; t < cstage->dim(); ++t)
            if (!k.is_zero(eps[t])) {
                pivot = t;
                break;
            }
        Character<F> ch{a, Vec<F>(a->dim(), k.zero())};
        for (int i = 0; i < a->dim(); ++i) {
            auto img = cstage->mult(eps, push_down(i));
            ch.lambda[i] = k.div(img[pivot], eps[pivot]);
        }
        if (!validate_character(ch).empty()) fail(Errc::Internal, "extracted an invalid character");
        out.push_back(std::move(ch));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Irreducibility

enum class Ternary { Yes, No, Unknown };

template <FieldType F>
struct IrreducibilityResult {
    Ternary answer = Ternary::Unknown;
    std::optional<Subspace<F>> witness; // proper nonzero submodule for No
    std::string reason;                 // for Unknown
};

template <FieldType F>
IrreducibilityResult<F> is_irreducible(const Module<F>& v, const Options& opts = {}) {
    const F& k = v.field();
    if (v.dim() == 0) fail(Errc::InvalidArgument, "irreducibility of the zero module");
    if (v.dim() == 1) return {Ternary::Yes, std::nullopt, ""};
    if constexpr (F::is_finite) {
        require_budget(k, v.dim(), opts, "irreducibility spin");
        IrreducibilityResult<F> res{Ternary::Yes, std::nullopt, ""};
        for_each_vector(k, v.dim(), [&](const Vec<F>& w) {
            bool zero = true;
            for (const auto& x : w)
                if (!k.is_zero(x)) zero = false;
            if (zero) return true;
            auto spun = submodule_spanned(v, {w});
            if (spun.dim() < v.dim()) {
                res = {Ternary::No, spun, ""};
                return false;
            }
            return true;
        });
        return res;
    } else {
        // spin standard basis vectors and small combinations
        std::vector<Vec<F>> candidates;
        for (int i = 0; i < v.dim(); ++i) candidates.push_back(v.basis_vec(i));
        for (int i = 0; i < v.dim(); ++i)
            for (int j = i + 1; j < v.dim(); ++j) {
                Vec<F> s(v.dim(), k.zero()), d(v.dim(), k.zero());
                s[i] = k.one();
                s[j] = k.one();
                d[i] = k.one();
                d[j] = k.neg(k.one());
                candidates.push_back(std::move(s));
                candidates.push_back(std::move(d));
            }
        for (const auto& c : candidates) {
            auto spun = submodule_spanned(v, {c});
            if (spun.dim() < v.dim()) return {Ternary::No, spun, ""};
        }
        // all candidate spins fill V; certify via End being a division algebra,
        // which we only confirm in the 1-dimensional case
        auto end = end_algebra(v);
        if (end.algebra.dim() == 1) return {Ternary::Yes, std::nullopt, ""};
        return {Ternary::Unknown, std::nullopt,
                "spins fill V but End(V) has dimension " + std::to_string(end.algebra.dim()) +
                    " and division testing over Q is inconclusive"};
    }
}

} // namespace zadkit
