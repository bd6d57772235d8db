#pragma once

// Dense univariate polynomials over an exact field. Just enough machinery for
// minimal polynomials, characteristic-aware squarefree parts and Bezout
// idempotent splitting: division, gcd, xgcd, derivative, evaluation.

#include <vector>

#include "zadkit/field.hpp"

namespace zadkit {

// Coefficients ascending; invariant: no trailing zero (zero poly is empty).
template <FieldType F>
struct Poly {
    using Elem = typename F::Elem;

    F field;
    std::vector<Elem> c;

    explicit Poly(F f) : field(f) {}
    Poly(F f, std::vector<Elem> coeffs) : field(f), c(std::move(coeffs)) { trim(); }

    static Poly zero(F f) { return Poly(f); }
    static Poly one(F f) { return Poly(f, {f.one()}); }
    static Poly x(F f) { return Poly(f, {f.zero(), f.one()}); }

    void trim() {
        while (!c.empty() && field.is_zero(c.back())) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const Elem& lead() const { return c.back(); }

    bool operator==(const Poly& o) const {
        if (c.size() != o.c.size()) return false;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!field.eq(c[i], o.c[i])) return false;
        return true;
    }

    Poly add(const Poly& o) const {
        std::vector<Elem> r(std::max(c.size(), o.c.size()), field.zero());
        for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] = field.add(r[i], o.c[i]);
        return Poly(field, std::move(r));
    }

    Poly sub(const Poly& o) const {
        std::vector<Elem> r(std::max(c.size(), o.c.size()), field.zero());
        for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] = field.sub(r[i], o.c[i]);
        return Poly(field, std::move(r));
    }

    Poly mul(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero(field);
        std::vector<Elem> r(c.size() + o.c.size() - 1, field.zero());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j)
                r[i + j] = field.add(r[i + j], field.mul(c[i], o.c[j]));
        return Poly(field, std::move(r));
    }

    Poly scaled(const Elem& s) const {
        Poly r = *this;
        for (auto& x : r.c) x = field.mul(x, s);
        r.trim();
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(field.inv(lead()));
    }

    Poly derivative() const {
        if (c.size() <= 1) return zero(field);
        std::vector<Elem> r(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i)
            r[i - 1] = field.mul(c[i], field.from_int(static_cast<std::int64_t>(i)));
        return Poly(field, std::move(r));
    }

    Elem eval(const Elem& t) const {
        Elem r = field.zero();
        for (std::size_t i = c.size(); i-- > 0;) r = field.add(field.mul(r, t), c[i]);
        return r;
    }
};

template <FieldType F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    const F& k = a.field;
    if (b.is_zero()) fail(Errc::InvalidArgument, "polynomial division by zero");
    Poly<F> q = Poly<F>::zero(k), r = a;
    const auto lead_inv = k.inv(b.lead());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        auto coef = k.mul(r.c.back(), lead_inv);
        std::vector<typename F::Elem> t(static_cast<std::size_t>(shift) + 1, k.zero());
        t.back() = coef;
        Poly<F> term(k, std::move(t));
        q = q.add(term);
        r = r.sub(term.mul(b));
    }
    return {q, r};
}

template <FieldType F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

// g = gcd(a, b) monic, with u a + v b = g.
template <FieldType F>
struct XgcdResult {
    Poly<F> g, u, v;
};

template <FieldType F>
XgcdResult<F> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
    const F& k = a.field;
    Poly<F> r0 = a, r1 = b;
    Poly<F> u0 = Poly<F>::one(k), u1 = Poly<F>::zero(k);
    Poly<F> v0 = Poly<F>::zero(k), v1 = Poly<F>::one(k);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        auto u2 = u0.sub(q.mul(u1));
        u0 = u1;
        u1 = u2;
        auto v2 = v0.sub(q.mul(v1));
        v0 = v1;
        v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    const auto s = k.inv(r0.lead());
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

namespace detail {

// p-th root of a polynomial of the form g(x^p) over the prime field F_p
// (coefficientwise, since a^p = a in F_p).
template <FieldType F>
Poly<F> pth_root(const Poly<F>& f) {
    const F& k = f.field;
    const auto p = static_cast<std::size_t>(k.characteristic());
    std::vector<typename F::Elem> r;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i % p == 0) {
            r.push_back(f.c[i]);
        } else if (!k.is_zero(f.c[i])) {
            fail(Errc::Internal, "polynomial is not a p-th power composition");
        }
    }
    return Poly<F>(k, std::move(r));
}

} // namespace detail

// Product of the distinct monic irreducible factors of f, valid in any
// characteristic (prime fields handle the inseparable branch via p-th roots).
template <FieldType F>
Poly<F> squarefree_part(const Poly<F>& f) {
    const F& k = f.field;
    if (f.degree() <= 0) return Poly<F>::one(k);
    Poly<F> fm = f.monic();
    Poly<F> df = fm.derivative();
    if (df.is_zero()) {
        // only reachable in characteristic p: f = g(x^p)
        return squarefree_part(detail::pth_root(fm));
    }
    Poly<F> g = poly_gcd(fm, df);
    Poly<F> w = divmod(fm, g).first.monic(); // distinct factors with exponent not divisible by char
    if (g.degree() == 0) return w;
    // strip the w-factors out of g; what survives has all exponents divisible by char
    Poly<F> y = g;
    while (true) {
        Poly<F> d = poly_gcd(y, w);
        if (d.degree() == 0) break;
        y = divmod(y, d).first;
    }
    if (y.degree() == 0) return w;
    return w.mul(squarefree_part(detail::pth_root(y.monic()))).monic();
}

} // namespace zadkit
