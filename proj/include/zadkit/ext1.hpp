#pragma once

// Self-extensions of 1-dimensional modules, computed as lambda-derivation
// spaces: d(ab) = lambda(a) d(b) + d(a) lambda(b) with d(1) = 0. A nonzero d
// is exactly the off-diagonal entry of a non-split upper-triangular
// self-extension, and coboundaries vanish when both diagonal characters agree,
// so the derivation space is Ext^1(S,S) on the nose.

#include <optional>

#include "zadkit/module.hpp"

namespace zadkit {

template <FieldType F>
struct Ext1Result {
    int dimension = 0;
    std::optional<Vec<F>> derivation; // a nonzero witness when dimension > 0
};

template <FieldType F>
Ext1Result<F> ext1_self(const Algebra<F>& a, const Character<F>& lam) {
    const F& k = a.field();
    const int n = a.dim();
    if (!validate_character(lam).empty()) fail(Errc::InvalidArgument, "ext1_self needs a valid character");
    // unknowns d_0..d_{n-1}; one equation per basis pair plus d(unit) = 0
    Mat<F> sys(k, n * n + 1, n);
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int t = 0; t < n; ++t) sys.at(row, t) = a.sc(i, j, t);
            sys.at(row, j) = k.sub(sys.at(row, j), lam.lambda[i]);
            sys.at(row, i) = k.sub(sys.at(row, i), lam.lambda[j]);
            ++row;
        }
    for (int t = 0; t < n; ++t) sys.at(row, t) = a.unit()[t];
    auto basis = nullspace_basis(sys);
    Ext1Result<F> out;
    out.dimension = static_cast<int>(basis.size());
    if (!basis.empty()) out.derivation = basis.front();
    return out;
}

// The 2-dimensional self-extension module defined by a lambda-derivation:
// rho(a) = [[lambda(a), d(a)], [0, lambda(a)]].
template <FieldType F>
Module<F> extension_module(AlgebraPtr<F> a, const Character<F>& lam, const Vec<F>& derivation) {
    const F& k = a->field();
    std::vector<Mat<F>> action;
    for (int i = 0; i < a->dim(); ++i) {
        Mat<F> m(k, 2, 2);
        m.at(0, 0) = lam.lambda[i];
        m.at(0, 1) = derivation[i];
        m.at(1, 1) = lam.lambda[i];
        action.push_back(std::move(m));
    }
    return Module<F>(std::move(a), 2, std::move(action));
}

} // namespace zadkit
