#pragma once

// Splitting commutative (semisimple) algebras into orthogonal idempotent
// blocks. Over F_p the split always reaches the primitive central idempotents:
// the Frobenius fixed-point subalgebra {z : z^p = z} is F_p-linear over the
// prime field and isomorphic to F_p^k, one coordinate per component, and its
// elements have minimal polynomials that factor into distinct linear pieces.
// Over Q the refinement uses rational roots of minimal polynomials; blocks of
// dimension 1 are certified primitive, larger blocks may be number fields or,
// in principle, unsplit products.

#include <algorithm>
#include <vector>

#include "zadkit/algebra.hpp"

namespace zadkit {

template <FieldType F>
struct SubalgebraView {
    Algebra<F> algebra;   // structure constants in the echelon basis of space
    Subspace<F> space;    // subspace of the parent coordinate space
    Mat<F> inclusion;     // parent_dim x sub_dim, columns = basis vectors
};

// Present a multiplicatively closed subspace with the given unit as an
// algebra in its own right (basis = echelon basis of the subspace).
template <FieldType F>
SubalgebraView<F> subalgebra_as_algebra(const Algebra<F>& a, const Subspace<F>& s, const Vec<F>& unit) {
    const F& k = a.field();
    const int d = s.dim();
    std::vector<typename F::Elem> sc(static_cast<std::size_t>(d) * d * d, k.zero());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto prod = a.mult(s.basis()[i], s.basis()[j]);
            auto coords = s.coordinates(prod);
            if (!coords) fail(Errc::InvalidArgument, "subspace is not multiplicatively closed");
            for (int t = 0; t < d; ++t) sc[(static_cast<std::size_t>(i) * d + j) * d + t] = (*coords)[t];
        }
    auto unit_coords = s.coordinates(unit);
    if (!unit_coords) fail(Errc::InvalidArgument, "unit lies outside the subspace");
    Mat<F> incl(k, a.dim(), d);
    for (int c = 0; c < d; ++c) incl.set_col(c, s.basis()[c]);
    return {Algebra<F>(k, d, std::move(sc), std::move(*unit_coords)), s, std::move(incl)};
}

template <FieldType F>
struct CommutativeSplit {
    std::vector<Vec<F>> idempotents; // orthogonal, summing to the unit
    std::vector<int> block_dims;     // dim of e_i * C
};

namespace detail {

// Minimal polynomial of z relative to the local unit u (powers u, z, z^2, ...).
template <FieldType F>
Poly<F> minimal_polynomial_from(const Algebra<F>& a, const Vec<F>& z, const Vec<F>& u) {
    const F& k = a.field();
    std::vector<Vec<F>> powers{u};
    while (true) {
        Vec<F> next = a.mult(powers.back(), z);
        Mat<F> m(k, a.dim(), static_cast<int>(powers.size()));
        for (int c = 0; c < static_cast<int>(powers.size()); ++c) m.set_col(c, powers[c]);
        if (auto coeffs = solve(m, next)) {
            std::vector<typename F::Elem> pc(powers.size() + 1, k.zero());
            for (std::size_t i = 0; i < powers.size(); ++i) pc[i] = k.neg((*coeffs)[i]);
            pc.back() = k.one();
            return Poly<F>(k, std::move(pc));
        }
        powers.push_back(std::move(next));
        if (static_cast<int>(powers.size()) > a.dim() + 1)
            fail(Errc::Internal, "relative minimal polynomial did not terminate");
    }
}

// Horner evaluation with an explicit local unit.
template <FieldType F>
Vec<F> eval_poly_from(const Algebra<F>& a, const Poly<F>& f, const Vec<F>& z, const Vec<F>& u) {
    const F& k = a.field();
    Vec<F> r(a.dim(), k.zero());
    for (std::size_t i = f.c.size(); i-- > 0;) {
        r = a.mult(r, z);
        for (int t = 0; t < a.dim(); ++t) r[t] = k.add(r[t], k.mul(f.c[i], u[t]));
    }
    return r;
}

template <FieldType F>
int block_dim(const Algebra<F>& a, const Vec<F>& e) {
    SpanAccumulator<F> acc(a.field(), a.dim());
    for (int i = 0; i < a.dim(); ++i) acc.insert(a.mult(e, a.basis_vec(i)));
    return acc.dim();
}

inline std::vector<std::int64_t> divisors_bounded(std::int64_t n, std::int64_t bound) {
    std::vector<std::int64_t> out;
    n = n < 0 ? -n : n;
    for (std::int64_t d = 1; d * d <= n && d <= bound; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Roots in the ground field of a polynomial (rational-root scan over Q,
// residue scan over F_p). Possibly incomplete over Q for huge coefficients.
template <FieldType F>
std::vector<typename F::Elem> field_roots(const Poly<F>& f, const Options& opts) {
    const F& k = f.field;
    std::vector<typename F::Elem> roots;
    if constexpr (F::is_finite) {
        if (k.characteristic() > opts.max_root_scan) return roots;
        for (std::int64_t c = 0; c < k.characteristic(); ++c)
            if (k.is_zero(f.eval(c))) roots.push_back(c);
    } else {
        Poly<F> g = f;
        // factor out x
        while (!g.is_zero() && k.is_zero(g.c[0])) {
            if (roots.empty()) roots.push_back(k.zero());
            g = divmod(g, Poly<F>::x(k)).first;
        }
        if (g.degree() < 1) return roots;
        // clear denominators to an integer polynomial
        std::vector<Rational> cs(g.c.begin(), g.c.end());
        boost::multiprecision::mpz_int common(1);
        for (const auto& q : cs) common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(q));
        std::vector<boost::multiprecision::mpz_int> zc;
        for (const auto& q : cs) zc.push_back(boost::multiprecision::numerator(q * Rational(common)));
        const auto& a0 = zc.front();
        const auto& ad = zc.back();
        if (a0 == 0 || abs(a0) > opts.max_root_scan * opts.max_root_scan ||
            abs(ad) > opts.max_root_scan * opts.max_root_scan) {
            // fall back to testing small integers only
            for (std::int64_t c = -32; c <= 32; ++c)
                if (k.is_zero(g.eval(Rational(c)))) roots.push_back(Rational(c));
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            return roots;
        }
        auto ps = divisors_bounded(static_cast<std::int64_t>(a0), opts.max_root_scan);
        auto qs = divisors_bounded(static_cast<std::int64_t>(ad), opts.max_root_scan);
        for (auto pnum : ps)
            for (auto qden : qs)
                for (int sign : {1, -1}) {
                    Rational cand(sign * pnum, qden);
                    if (k.is_zero(g.eval(cand))) roots.push_back(cand);
                }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    }
    return roots;
}

} // namespace detail

// Decompose the commutative unital algebra c into orthogonal idempotent
// blocks, refining as far as root extraction allows (always primitive over
// prime fields when c is semisimple).
template <FieldType F>
CommutativeSplit<F> split_commutative(const Algebra<F>& c, const Options& opts = {}) {
    const F& k = c.field();
    const int n = c.dim();
    std::vector<Vec<F>> moving;
    if constexpr (F::is_finite) {
        // Frobenius fixed-point subalgebra: kernel of z -> z^p - z.
        Mat<F> frob(k, n, n);
        for (int j = 0; j < n; ++j) {
            // z^p by square-and-multiply inside c
            Vec<F> base = c.basis_vec(j), acc = c.unit();
            std::uint64_t e = static_cast<std::uint64_t>(k.characteristic());
            while (e) {
                if (e & 1) acc = c.mult(acc, base);
                base = c.mult(base, base);
                e >>= 1;
            }
            for (int i = 0; i < n; ++i) acc[i] = k.sub(acc[i], c.basis_vec(j)[i]);
            frob.set_col(j, acc);
        }
        moving = nullspace_basis(frob);
    } else {
        for (int j = 0; j < n; ++j) moving.push_back(c.basis_vec(j));
    }

    std::vector<Vec<F>> blocks{c.unit()};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t b = 0; b < blocks.size() && !changed; ++b) {
            const Vec<F> e = blocks[b];
            if (detail::block_dim(c, e) <= 1) continue;
            for (const auto& z0 : moving) {
                Vec<F> z = c.mult(e, z0);
                Poly<F> mu = detail::minimal_polynomial_from(c, z, e);
                if (mu.degree() <= 1) continue;
                auto roots = detail::field_roots(mu, opts);
                if (roots.empty()) continue;
                // Split off one root's primary factor via a Bezout idempotent;
                // the refined blocks are revisited on the next pass.
                bool split_done = false;
                for (const auto& r : roots) {
                    Poly<F> lin(k, {k.neg(r), k.one()});
                    Poly<F> primary = Poly<F>::one(k);
                    Poly<F> rest = mu;
                    while (true) {
                        auto [q, rem] = divmod(rest, lin);
                        if (!rem.is_zero()) break;
                        rest = q;
                        primary = primary.mul(lin);
                    }
                    if (primary.degree() == 0 || rest.degree() < 1) continue;
                    auto xg = poly_xgcd(primary, rest);
                    if (xg.g.degree() != 0) continue;
                    // v*rest is 1 mod primary, 0 mod rest
                    Poly<F> proj = xg.v.mul(rest);
                    Vec<F> eps = detail::eval_poly_from(c, proj, z, e);
                    if (!is_idempotent(c, eps)) fail(Errc::Internal, "split produced a non-idempotent");
                    bool zero = true, whole = true;
                    for (int t = 0; t < n; ++t) {
                        if (!k.is_zero(eps[t])) zero = false;
                        if (!k.eq(eps[t], e[t])) whole = false;
                    }
                    if (zero || whole) continue;
                    Vec<F> comp(n);
                    for (int t = 0; t < n; ++t) comp[t] = k.sub(e[t], eps[t]);
                    blocks.erase(blocks.begin() + b);
                    blocks.insert(blocks.begin() + b, {eps, comp});
                    split_done = true;
                    break;
                }
                if (!split_done) continue;
                changed = true;
                break;
            }
        }
    }

    CommutativeSplit<F> out;
    for (auto& e : blocks) {
        out.block_dims.push_back(detail::block_dim(c, e));
        out.idempotents.push_back(std::move(e));
    }
    return out;
}

} // namespace zadkit
