#pragma once

// The algebra corpus: matrix algebras, triangular algebras, polynomial
// quotients, group algebras, acyclic path algebras and direct sums. Every
// constructor validates its output; constructors whose radical is known by
// construction attach it so small-characteristic instances stay decidable.

#include <algorithm>
#include <string>
#include <vector>

#include "zadkit/algebra.hpp"

namespace zadkit {

namespace detail {

template <FieldType F>
Algebra<F> finish(Algebra<F> a, const char* what) {
    auto violations = validate_algebra(a);
    if (!violations.empty())
        fail(Errc::Internal, std::string(what) + " constructor produced an invalid algebra: " + violations.front().what);
    return a;
}

} // namespace detail

// Full matrix algebra M_k(F); basis e_{rc} flattened row-major.
template <FieldType F>
Algebra<F> matrix_algebra(const F& field, int k) {
    if (k < 1) fail(Errc::InvalidArgument, "matrix algebra needs k >= 1");
    const int n = k * k;
    std::vector<typename F::Elem> sc(static_cast<std::size_t>(n) * n * n, field.zero());
    auto idx = [&](int r, int c) { return r * k + c; };
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            for (int r2 = 0; r2 < k; ++r2)
                for (int c2 = 0; c2 < k; ++c2)
                    if (c == r2)
                        sc[(static_cast<std::size_t>(idx(r, c)) * n + idx(r2, c2)) * n + idx(r, c2)] = field.one();
    Vec<F> unit(n, field.zero());
    for (int r = 0; r < k; ++r) unit[idx(r, r)] = field.one();
    std::vector<std::string> labels(n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) labels[idx(r, c)] = "e" + std::to_string(r + 1) + std::to_string(c + 1);
    auto a = detail::finish(Algebra<F>(field, n, std::move(sc), std::move(unit), std::move(labels)), "matrix_algebra");
    a.set_known_radical(Subspace<F>::zero(field, n)); // semisimple
    return a;
}

// Upper triangular k x k matrices; basis e_{rc} for r <= c, row-major.
template <FieldType F>
Algebra<F> triangular_algebra(const F& field, int k) {
    if (k < 1) fail(Errc::InvalidArgument, "triangular algebra needs k >= 1");
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < k; ++r)
        for (int c = r; c < k; ++c) cells.emplace_back(r, c);
    const int n = static_cast<int>(cells.size());
    auto idx = [&](int r, int c) {
        for (int t = 0; t < n; ++t)
            if (cells[t].first == r && cells[t].second == c) return t;
        return -1;
    };
    std::vector<typename F::Elem> sc(static_cast<std::size_t>(n) * n * n, field.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [r, c] = cells[i];
            auto [r2, c2] = cells[j];
            if (c == r2) sc[(static_cast<std::size_t>(i) * n + j) * n + idx(r, c2)] = field.one();
        }
    Vec<F> unit(n, field.zero());
    for (int r = 0; r < k; ++r) unit[idx(r, r)] = field.one();
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i)
        labels[i] = "e" + std::to_string(cells[i].first + 1) + std::to_string(cells[i].second + 1);
    auto a = detail::finish(Algebra<F>(field, n, std::move(sc), std::move(unit), std::move(labels)), "triangular_algebra");
    std::vector<Vec<F>> strict;
    for (int i = 0; i < n; ++i)
        if (cells[i].first != cells[i].second) strict.push_back(a.basis_vec(i));
    a.set_known_radical(Subspace<F>::span(field, n, strict)); // strictly upper part
    return a;
}

// F[x]/(f) for monic nonconstant f, basis 1, x, ..., x^{deg-1}.
template <FieldType F>
Algebra<F> poly_quotient(const F& field, const Poly<F>& f) {
    if (f.degree() < 1) fail(Errc::InvalidArgument, "polynomial quotient needs a nonconstant modulus");
    if (!field.eq(f.lead(), field.one())) fail(Errc::InvalidArgument, "polynomial quotient needs a monic modulus");
    const int n = f.degree();
    // x^t mod f for t = 0 .. 2n-2
    std::vector<Vec<F>> pow(2 * n - 1, Vec<F>(n, field.zero()));
    pow[0][0] = field.one();
    for (int t = 1; t < 2 * n - 1; ++t) {
        // shift and reduce
        Vec<F> shifted(n + 1, field.zero());
        for (int i = 0; i < n; ++i) shifted[i + 1] = pow[t - 1][i];
        auto top = shifted[n];
        for (int i = 0; i < n; ++i) pow[t][i] = field.sub(shifted[i], field.mul(top, f.c[i]));
    }
    std::vector<typename F::Elem> sc(static_cast<std::size_t>(n) * n * n, field.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < n; ++t) sc[(static_cast<std::size_t>(i) * n + j) * n + t] = pow[i + j][t];
    Vec<F> unit(n, field.zero());
    unit[0] = field.one();
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
    auto a = detail::finish(Algebra<F>(field, n, std::move(sc), std::move(unit), std::move(labels)), "poly_quotient");
    // radical = (squarefree part of f); zero iff f is squarefree
    Poly<F> s = squarefree_part(f);
    auto [q, r] = divmod(s, f);
    (void)q;
    if (r.is_zero()) {
        a.set_known_radical(Subspace<F>::zero(field, n));
    } else {
        Vec<F> gen(n, field.zero());
        for (int i = 0; i <= s.degree() && i < n; ++i) gen[i] = s.c[i];
        a.set_known_radical(ideal_closure(a, {gen}));
    }
    return a;
}

// Group algebra from a multiplication table: table[i][j] = index of g_i g_j.
template <FieldType F>
Algebra<F> group_algebra(const F& field, const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) fail(Errc::InvalidArgument, "empty group table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) fail(Errc::InvalidArgument, "group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) fail(Errc::InvalidArgument, "group table entry out of range");
    }
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int j = 0; j < n; ++j) ok = ok && table[e][j] == j && table[j][e] == j;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) fail(Errc::InvalidArgument, "group table has no identity");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                if (table[table[i][j]][l] != table[i][table[j][l]])
                    fail(Errc::InvalidArgument, "group table is not associative");
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            seen_row[table[i][j]] = true;
            seen_col[table[j][i]] = true;
        }
        for (int j = 0; j < n; ++j)
            if (!seen_row[j] || !seen_col[j]) fail(Errc::InvalidArgument, "group table is not cancellative");
    }
    std::vector<typename F::Elem> sc(static_cast<std::size_t>(n) * n * n, field.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sc[(static_cast<std::size_t>(i) * n + j) * n + table[i][j]] = field.one();
    Vec<F> unit(n, field.zero());
    unit[id] = field.one();
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    auto a = detail::finish(Algebra<F>(field, n, std::move(sc), std::move(unit), std::move(labels)), "group_algebra");
    const std::int64_t p = field.characteristic();
    if (p == 0 || n % p != 0) {
        a.set_known_radical(Subspace<F>::zero(field, n)); // Maschke
    } else {
        // p-group: radical is the augmentation ideal
        std::int64_t m = n;
        while (m % p == 0) m /= p;
        if (m == 1) {
            std::vector<Vec<F>> gens;
            for (int i = 0; i < n; ++i) {
                if (i == id) continue;
                Vec<F> v(n, field.zero());
                v[i] = field.one();
                v[id] = field.neg(field.one());
                gens.push_back(std::move(v));
            }
            a.set_known_radical(Subspace<F>::span(field, n, gens));
        }
        // otherwise leave the radical to the generic small-characteristic path
    }
    return a;
}

struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows; // (source, target)
};

// Path algebra of an acyclic quiver. Paths compose like functions: p * q is
// "q then p" and is nonzero iff source(p) = target(q).
template <FieldType F>
Algebra<F> path_algebra(const F& field, const Quiver& quiver) {
    const int nv = quiver.vertices;
    if (nv < 1) fail(Errc::InvalidArgument, "quiver needs at least one vertex");
    for (auto [s, t] : quiver.arrows)
        if (s < 0 || s >= nv || t < 0 || t >= nv) fail(Errc::InvalidArgument, "arrow endpoint out of range");
    // acyclicity via DFS coloring
    {
        std::vector<std::vector<int>> adj(nv);
        for (auto [s, t] : quiver.arrows) adj[s].push_back(t);
        std::vector<int> color(nv, 0);
        auto dfs = [&](auto&& self, int v) -> bool {
            color[v] = 1;
            for (int w : adj[v]) {
                if (color[w] == 1) return false;
                if (color[w] == 0 && !self(self, w)) return false;
            }
            color[v] = 2;
            return true;
        };
        for (int v = 0; v < nv; ++v)
            if (color[v] == 0 && !dfs(dfs, v)) fail(Errc::InvalidArgument, "quiver has a directed cycle");
    }
    struct Path {
        int src, dst;
        std::vector<int> arrows; // in traversal order
    };
    std::vector<Path> paths;
    for (int v = 0; v < nv; ++v) paths.push_back({v, v, {}});
    std::vector<Path> frontier;
    for (int k = 0; k < static_cast<int>(quiver.arrows.size()); ++k)
        frontier.push_back({quiver.arrows[k].first, quiver.arrows[k].second, {k}});
    while (!frontier.empty()) {
        for (const auto& p : frontier) paths.push_back(p);
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (int k = 0; k < static_cast<int>(quiver.arrows.size()); ++k)
                if (quiver.arrows[k].first == p.dst) {
                    Path q = p;
                    q.dst = quiver.arrows[k].second;
                    q.arrows.push_back(k);
                    next.push_back(std::move(q));
                }
        frontier = std::move(next);
    }
    const int n = static_cast<int>(paths.size());
    auto find_path = [&](const Path& p) {
        for (int t = 0; t < n; ++t)
            if (paths[t].src == p.src && paths[t].dst == p.dst && paths[t].arrows == p.arrows) return t;
        return -1;
    };
    std::vector<typename F::Elem> sc(static_cast<std::size_t>(n) * n * n, field.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (paths[i].src != paths[j].dst) continue;
            Path prod;
            prod.src = paths[j].src;
            prod.dst = paths[i].dst;
            prod.arrows = paths[j].arrows;
            prod.arrows.insert(prod.arrows.end(), paths[i].arrows.begin(), paths[i].arrows.end());
            int t = find_path(prod);
            if (t < 0) fail(Errc::Internal, "path product missing from basis");
            sc[(static_cast<std::size_t>(i) * n + j) * n + t] = field.one();
        }
    Vec<F> unit(n, field.zero());
    for (int v = 0; v < nv; ++v) unit[v] = field.one();
    std::vector<std::string> labels(n);
    for (int t = 0; t < n; ++t) {
        if (paths[t].arrows.empty()) {
            labels[t] = "e" + std::to_string(paths[t].src + 1);
        } else {
            std::string s;
            for (auto it = paths[t].arrows.rbegin(); it != paths[t].arrows.rend(); ++it) {
                if (!s.empty()) s += "*";
                s += "a" + std::to_string(*it + 1);
            }
            labels[t] = s;
        }
    }
    auto a = detail::finish(Algebra<F>(field, n, std::move(sc), std::move(unit), std::move(labels)), "path_algebra");
    std::vector<Vec<F>> arrow_ideal;
    for (int t = nv; t < n; ++t) arrow_ideal.push_back(a.basis_vec(t));
    a.set_known_radical(Subspace<F>::span(field, n, arrow_ideal));
    return a;
}

template <FieldType F>
Algebra<F> direct_sum_algebra(const Algebra<F>& a, const Algebra<F>& b) {
    require_same_field(a.field(), b.field());
    const F& field = a.field();
    const int na = a.dim(), nb = b.dim(), n = na + nb;
    std::vector<typename F::Elem> sc(static_cast<std::size_t>(n) * n * n, field.zero());
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int t = 0; t < na; ++t) sc[(static_cast<std::size_t>(i) * n + j) * n + t] = a.sc(i, j, t);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            for (int t = 0; t < nb; ++t)
                sc[(static_cast<std::size_t>(na + i) * n + (na + j)) * n + (na + t)] = b.sc(i, j, t);
    Vec<F> unit(n, field.zero());
    for (int i = 0; i < na; ++i) unit[i] = a.unit()[i];
    for (int i = 0; i < nb; ++i) unit[na + i] = b.unit()[i];
    std::vector<std::string> labels(n);
    for (int i = 0; i < na; ++i) labels[i] = "l." + a.labels()[i];
    for (int i = 0; i < nb; ++i) labels[na + i] = "r." + b.labels()[i];
    auto out = detail::finish(Algebra<F>(field, n, std::move(sc), std::move(unit), std::move(labels)), "direct_sum_algebra");
    if (a.known_radical() && b.known_radical()) {
        std::vector<Vec<F>> gens;
        for (const auto& v : a.known_radical()->basis()) {
            Vec<F> w(n, field.zero());
            for (int i = 0; i < na; ++i) w[i] = v[i];
            gens.push_back(std::move(w));
        }
        for (const auto& v : b.known_radical()->basis()) {
            Vec<F> w(n, field.zero());
            for (int i = 0; i < nb; ++i) w[na + i] = v[i];
            gens.push_back(std::move(w));
        }
        out.set_known_radical(Subspace<F>::span(field, n, gens));
    }
    return out;
}

// Convenience group tables for the shipped corpus.
inline std::vector<std::vector<int>> cyclic_group_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

// S3 as permutations of {0,1,2} in a fixed order: id, (01), (02), (12), (012), (021).
inline std::vector<std::vector<int>> symmetric3_table() {
    const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto compose = [&](int a, int b) {
        int c[3];
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (int t = 0; t < 6; ++t)
            if (perms[t][0] == c[0] && perms[t][1] == c[1] && perms[t][2] == c[2]) return t;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) t[i][j] = compose(i, j);
    return t;
}

} // namespace zadkit
