#pragma once

// Finite-dimensional unital associative algebras presented by structure
// constants, with validation, ideal arithmetic, quotients, center and the
// Jacobson radical.

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zadkit/enumerate.hpp"
#include "zadkit/mat.hpp"
#include "zadkit/poly.hpp"
#include "zadkit/subspace.hpp"

namespace zadkit {

struct Violation {
    std::string what;
};

template <FieldType F>
class Algebra {
  public:
    using Elem = typename F::Elem;

    // sc is the flat structure-constant tensor: b_i b_j = sum_k sc[(i*n+j)*n+k] b_k.
    Algebra(F field, int n, std::vector<Elem> sc, Vec<F> unit, std::vector<std::string> labels = {})
        : field_(field), n_(n), sc_(std::move(sc)), unit_(std::move(unit)), labels_(std::move(labels)) {
        if (n < 0) fail(Errc::InvalidArgument, "negative algebra dimension");
        if (sc_.size() != static_cast<std::size_t>(n) * n * n)
            fail(Errc::DimensionMismatch, "structure constant tensor has wrong size");
        if (static_cast<int>(unit_.size()) != n) fail(Errc::DimensionMismatch, "unit vector has wrong size");
        if (labels_.empty()) {
            labels_.reserve(n);
            for (int i = 0; i < n; ++i) labels_.push_back("b" + std::to_string(i));
        }
        if (static_cast<int>(labels_.size()) != n) fail(Errc::DimensionMismatch, "label list has wrong size");
    }

    const F& field() const { return field_; }
    int dim() const { return n_; }
    const Elem& sc(int i, int j, int k) const {
        return sc_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }
    const std::vector<Elem>& sc_flat() const { return sc_; }
    const Vec<F>& unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Vec<F> basis_vec(int i) const {
        Vec<F> v(n_, field_.zero());
        v[i] = field_.one();
        return v;
    }

    Vec<F> mult(const Vec<F>& x, const Vec<F>& y) const {
        if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
            fail(Errc::DimensionMismatch, "product of vectors outside the coordinate space");
        Vec<F> r(n_, field_.zero());
        for (int i = 0; i < n_; ++i) {
            if (field_.is_zero(x[i])) continue;
            for (int j = 0; j < n_; ++j) {
                if (field_.is_zero(y[j])) continue;
                const auto xy = field_.mul(x[i], y[j]);
                for (int k = 0; k < n_; ++k) {
                    const auto& c = sc(i, j, k);
                    if (!field_.is_zero(c)) r[k] = field_.add(r[k], field_.mul(xy, c));
                }
            }
        }
        return r;
    }

    // Matrix of y -> x y.
    Mat<F> left_mult_operator(const Vec<F>& x) const {
        Mat<F> m(field_, n_, n_);
        for (int j = 0; j < n_; ++j) m.set_col(j, mult(x, basis_vec(j)));
        return m;
    }

    // Matrix of y -> y x.
    Mat<F> right_mult_operator(const Vec<F>& x) const {
        Mat<F> m(field_, n_, n_);
        for (int j = 0; j < n_; ++j) m.set_col(j, mult(basis_vec(j), x));
        return m;
    }

    const std::optional<Subspace<F>>& known_radical() const { return known_radical_; }
    void set_known_radical(Subspace<F> r) { known_radical_ = std::move(r); }

  private:
    F field_;
    int n_;
    std::vector<Elem> sc_;
    Vec<F> unit_;
    std::vector<std::string> labels_;
    std::optional<Subspace<F>> known_radical_;
};

template <FieldType F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

// Empty result means both the associativity and the unit axioms hold.
template <FieldType F>
std::vector<Violation> validate_algebra(const Algebra<F>& a) {
    const F& k = a.field();
    const int n = a.dim();
    std::vector<Violation> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                // (b_i b_j) b_l vs b_i (b_j b_l)
                for (int m = 0; m < n; ++m) {
                    auto lhs = k.zero(), rhs = k.zero();
                    for (int t = 0; t < n; ++t) {
                        lhs = k.add(lhs, k.mul(a.sc(i, j, t), a.sc(t, l, m)));
                        rhs = k.add(rhs, k.mul(a.sc(j, l, t), a.sc(i, t, m)));
                    }
                    if (!k.eq(lhs, rhs)) {
                        std::ostringstream os;
                        os << "associativity fails at (i,j,l,m)=(" << i << "," << j << "," << l << "," << m << ")";
                        out.push_back({os.str()});
                    }
                }
            }
    for (int j = 0; j < n; ++j) {
        auto b = a.basis_vec(j);
        if (a.mult(a.unit(), b) != b) out.push_back({"unit fails as left identity on basis " + std::to_string(j)});
        if (a.mult(b, a.unit()) != b) out.push_back({"unit fails as right identity on basis " + std::to_string(j)});
    }
    return out;
}

template <FieldType F>
bool is_ideal(const Algebra<F>& a, const Subspace<F>& s) {
    if (s.ambient() != a.dim()) fail(Errc::DimensionMismatch, "ideal test ambient mismatch");
    for (const auto& u : s.basis())
        for (int i = 0; i < a.dim(); ++i) {
            if (!s.contains(a.mult(a.basis_vec(i), u))) return false;
            if (!s.contains(a.mult(u, a.basis_vec(i)))) return false;
        }
    return true;
}

// Least two-sided ideal containing gens.
template <FieldType F>
Subspace<F> ideal_closure(const Algebra<F>& a, const std::vector<Vec<F>>& gens) {
    SpanAccumulator<F> acc(a.field(), a.dim());
    std::vector<Vec<F>> work;
    for (const auto& g : gens)
        if (acc.insert(g)) work.push_back(g);
    for (std::size_t t = 0; t < work.size(); ++t) {
        const Vec<F> u = work[t];
        for (int i = 0; i < a.dim(); ++i) {
            for (auto v : {a.mult(a.basis_vec(i), u), a.mult(u, a.basis_vec(i))})
                if (acc.insert(v)) work.push_back(std::move(v));
        }
    }
    return Subspace<F>::from_accumulator(acc);
}

// Least subalgebra containing gens (unital when include_unit).
template <FieldType F>
Subspace<F> subalgebra_closure(const Algebra<F>& a, const std::vector<Vec<F>>& gens, bool include_unit) {
    SpanAccumulator<F> acc(a.field(), a.dim());
    std::vector<Vec<F>> work;
    if (include_unit && acc.insert(a.unit())) work.push_back(a.unit());
    for (const auto& g : gens)
        if (acc.insert(g)) work.push_back(g);
    for (std::size_t t = 0; t < work.size(); ++t) {
        const Vec<F> u = work[t];
        for (std::size_t s = 0; s <= t; ++s) {
            for (auto v : {a.mult(u, work[s]), a.mult(work[s], u)})
                if (acc.insert(v)) work.push_back(std::move(v));
        }
    }
    return Subspace<F>::from_accumulator(acc);
}

// {x : L_x = R_x}.
template <FieldType F>
Subspace<F> center(const Algebra<F>& a) {
    const F& k = a.field();
    const int n = a.dim();
    Mat<F> m(k, n * n, n);
    for (int t = 0; t < n; ++t) {
        auto diff = a.left_mult_operator(a.basis_vec(t)).sub(a.right_mult_operator(a.basis_vec(t)));
        m.set_col(t, diff.vectorized());
    }
    SpanAccumulator<F> acc(k, n);
    for (auto& v : nullspace_basis(m)) acc.insert(std::move(v));
    return Subspace<F>::from_accumulator(acc);
}

// True iff the span of s (assumed multiplicatively closed on the right by
// itself, e.g. an ideal) powers down to zero within dim steps.
template <FieldType F>
bool is_nilpotent_ideal(const Algebra<F>& a, const Subspace<F>& s) {
    Subspace<F> cur = s;
    for (int step = 0; step <= a.dim(); ++step) {
        if (cur.dim() == 0) return true;
        SpanAccumulator<F> next(a.field(), a.dim());
        for (const auto& u : cur.basis())
            for (const auto& v : s.basis()) next.insert(a.mult(u, v));
        Subspace<F> ns = Subspace<F>::from_accumulator(next);
        if (ns == cur) return false; // chain stabilized above zero
        cur = std::move(ns);
    }
    return cur.dim() == 0;
}

// Kernel of the trace form (x,y) -> tr(L_x L_y) = tr(L_{xy}). Contains the
// radical in every characteristic; equals it when char = 0 or char > dim.
template <FieldType F>
Subspace<F> trace_form_kernel(const Algebra<F>& a) {
    const F& k = a.field();
    const int n = a.dim();
    Mat<F> gram(k, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto prod = a.mult(a.basis_vec(i), a.basis_vec(j));
            auto op = a.left_mult_operator(prod);
            auto tr = k.zero();
            for (int t = 0; t < n; ++t) tr = k.add(tr, op.at(t, t));
            gram.at(i, j) = tr;
        }
    SpanAccumulator<F> acc(k, n);
    for (auto& v : nullspace_basis(gram)) acc.insert(std::move(v));
    return Subspace<F>::from_accumulator(acc);
}

enum class RadicalMethod { Supplied, TraceForm, ExhaustiveRefinement };

template <FieldType F>
struct RadicalResult {
    Subspace<F> space;
    RadicalMethod method;
};

namespace detail {

template <FieldType F>
void verify_radical_shape(const Algebra<F>& a, const Subspace<F>& r, const char* origin) {
    if (!is_ideal(a, r)) fail(Errc::Internal, std::string("radical (") + origin + ") is not an ideal");
    if (!is_nilpotent_ideal(a, r)) fail(Errc::Internal, std::string("radical (") + origin + ") is not nilpotent");
}

} // namespace detail

// Jacobson radical. Regimes: constructor/file-supplied basis; the trace form
// when char = 0 or char > dim; over F_p with small p, exhaustive refinement of
// the trace-form kernel C (enumerate x in C, keep x whose generated ideal is
// nilpotent) as long as p^dim(C) stays within budget.
template <FieldType F>
RadicalResult<F> radical(const Algebra<F>& a, const Options& opts = {}) {
    if (a.known_radical()) {
        detail::verify_radical_shape(a, *a.known_radical(), "supplied");
        return {*a.known_radical(), RadicalMethod::Supplied};
    }
    const std::int64_t p = a.field().characteristic();
    Subspace<F> kernel = trace_form_kernel(a);
    if (p == 0 || p > a.dim()) {
        detail::verify_radical_shape(a, kernel, "trace form");
        return {std::move(kernel), RadicalMethod::TraceForm};
    }
    if constexpr (F::is_finite) {
        if (!checked_pow(static_cast<std::uint64_t>(p), kernel.dim(), opts.budget))
            fail(Errc::UnsupportedRadicalRegime,
                 "radical over F_" + std::to_string(p) + " with p <= dim: refinement of a " +
                     std::to_string(kernel.dim()) + "-dim trace kernel exceeds budget");
        SpanAccumulator<F> acc(a.field(), a.dim());
        for_each_vector(a.field(), kernel.dim(), [&](const Vec<F>& coords) {
            Vec<F> x(a.dim(), a.field().zero());
            for (int i = 0; i < kernel.dim(); ++i)
                for (int j = 0; j < a.dim(); ++j)
                    x[j] = a.field().add(x[j], a.field().mul(coords[i], kernel.basis()[i][j]));
            if (is_nilpotent_ideal(a, ideal_closure(a, {x}))) acc.insert(std::move(x));
        });
        Subspace<F> rad = Subspace<F>::from_accumulator(acc);
        detail::verify_radical_shape(a, rad, "exhaustive refinement");
        return {std::move(rad), RadicalMethod::ExhaustiveRefinement};
    }
    fail(Errc::UnsupportedRadicalRegime, "radical unavailable in this characteristic");
}

template <FieldType F>
struct QuotientAlgebra {
    Algebra<F> algebra;
    Mat<F> projection; // quotient_dim x parent_dim
    std::vector<int> section_cols; // parent coordinates lifting the quotient basis
};

// Quotient by a proper two-sided ideal; the quotient basis is the set of
// non-pivot coordinates of the ideal's echelon basis.
template <FieldType F>
QuotientAlgebra<F> quotient_algebra(const Algebra<F>& a, const Subspace<F>& j) {
    const F& k = a.field();
    const int n = a.dim();
    if (!is_ideal(a, j)) fail(Errc::InvalidArgument, "quotient by a subspace that is not an ideal");
    if (j.dim() == n) fail(Errc::InvalidArgument, "quotient by the whole algebra");
    const auto coords = j.nonpivot_cols();
    const int q = static_cast<int>(coords.size());
    auto project = [&](const Vec<F>& v) {
        auto red = j.reduce(v);
        Vec<F> out(q);
        for (int t = 0; t < q; ++t) out[t] = red[coords[t]];
        return out;
    };
    std::vector<typename F::Elem> sc(static_cast<std::size_t>(q) * q * q, k.zero());
    for (int s = 0; s < q; ++s)
        for (int t = 0; t < q; ++t) {
            auto prod = project(a.mult(a.basis_vec(coords[s]), a.basis_vec(coords[t])));
            for (int u = 0; u < q; ++u) sc[(static_cast<std::size_t>(s) * q + t) * q + u] = prod[u];
        }
    std::vector<std::string> labels(q);
    for (int t = 0; t < q; ++t) labels[t] = a.labels()[coords[t]] + "~";
    Algebra<F> quo(k, q, std::move(sc), project(a.unit()), std::move(labels));
    Mat<F> proj(k, q, n);
    for (int c = 0; c < n; ++c) proj.set_col(c, project(a.basis_vec(c)));
    if (a.known_radical() && j.dim() <= a.known_radical()->dim() && a.known_radical()->contains_all(j)) {
        SpanAccumulator<F> acc(k, q);
        for (const auto& r : a.known_radical()->basis()) acc.insert(project(r));
        quo.set_known_radical(Subspace<F>::from_accumulator(acc));
    }
    return {std::move(quo), std::move(proj), coords};
}

// Minimal polynomial of the element z (monic, satisfied exactly).
template <FieldType F>
Poly<F> minimal_polynomial(const Algebra<F>& a, const Vec<F>& z) {
    const F& k = a.field();
    const int n = a.dim();
    std::vector<Vec<F>> powers{a.unit()};
    while (true) {
        Vec<F> next = a.mult(powers.back(), z);
        Mat<F> m(k, n, static_cast<int>(powers.size()));
        for (int c = 0; c < static_cast<int>(powers.size()); ++c) m.set_col(c, powers[c]);
        if (auto coeffs = solve(m, next)) {
            std::vector<typename F::Elem> pc(powers.size() + 1, k.zero());
            for (std::size_t i = 0; i < powers.size(); ++i) pc[i] = k.neg((*coeffs)[i]);
            pc.back() = k.one();
            return Poly<F>(k, std::move(pc));
        }
        powers.push_back(std::move(next));
        if (static_cast<int>(powers.size()) > n + 1) fail(Errc::Internal, "minimal polynomial did not terminate");
    }
}

// Horner evaluation of f at z inside the algebra.
template <FieldType F>
Vec<F> eval_poly_at(const Algebra<F>& a, const Poly<F>& f, const Vec<F>& z) {
    const F& k = a.field();
    Vec<F> r(a.dim(), k.zero());
    for (std::size_t i = f.c.size(); i-- > 0;) {
        r = a.mult(r, z);
        for (int t = 0; t < a.dim(); ++t)
            r[t] = k.add(r[t], k.mul(f.c[i], a.unit()[t]));
    }
    return r;
}

template <FieldType F>
bool is_idempotent(const Algebra<F>& a, const Vec<F>& e) {
    return a.mult(e, e) == e;
}

} // namespace zadkit
