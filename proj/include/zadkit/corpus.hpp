#pragma once

// The shipped instance corpus: matrix algebras over Q/F2/F3, triangular
// algebras, dual numbers, the field extensions F4/F2 and F9/F3, group
// algebras of C2/C3/S3, path algebras of the A2/A3 quivers, and direct sums.
// Spans every decision branch of the zad/zpd pipelines.

#include <functional>

#include "zadkit/json_io.hpp"

namespace zadkit {

struct CorpusAlgebra {
    std::string name;
    Json file;
};

struct CorpusModule {
    std::string name;
    std::string algebra_name;
    Json file; // without the "algebra" path reference
};

namespace detail {

template <FieldType F>
Poly<F> int_poly(const F& k, std::vector<std::int64_t> cs) {
    std::vector<typename F::Elem> v;
    for (auto c : cs) v.push_back(k.from_int(c));
    return Poly<F>(k, std::move(v));
}

} // namespace detail

inline std::vector<CorpusAlgebra> corpus_algebras() {
    std::vector<CorpusAlgebra> out;
    auto add = [&](const std::string& name, const auto& algebra) {
        out.push_back({name, serialize_algebra(algebra)});
    };
    const Rationals Q;
    const PrimeField F2(2), F3(3);
    auto all_fields = [&](const std::string& base, auto make) {
        add(base + "_q", make(Q));
        add(base + "_f2", make(F2));
        add(base + "_f3", make(F3));
    };
    all_fields("m1", [](auto k) { return matrix_algebra(k, 1); });
    all_fields("m2", [](auto k) { return matrix_algebra(k, 2); });
    all_fields("m3", [](auto k) { return matrix_algebra(k, 3); });
    all_fields("tri2", [](auto k) { return triangular_algebra(k, 2); });
    all_fields("tri3", [](auto k) { return triangular_algebra(k, 3); });
    all_fields("dual", [](auto k) { return poly_quotient(k, detail::int_poly(k, {0, 0, 1})); });
    add("f4_f2", poly_quotient(F2, detail::int_poly(F2, {1, 1, 1})));
    add("f9_f3", poly_quotient(F3, detail::int_poly(F3, {1, 0, 1})));
    all_fields("gc2", [](auto k) { return group_algebra(k, cyclic_group_table(2)); });
    all_fields("gc3", [](auto k) { return group_algebra(k, cyclic_group_table(3)); });
    all_fields("gs3", [](auto k) { return group_algebra(k, symmetric3_table()); });
    all_fields("pa2", [](auto k) { return path_algebra(k, Quiver{2, {{0, 1}}}); });
    all_fields("pa3", [](auto k) { return path_algebra(k, Quiver{3, {{0, 1}, {1, 2}}}); });
    all_fields("fxf", [](auto k) { return direct_sum_algebra(matrix_algebra(k, 1), matrix_algebra(k, 1)); });
    all_fields("fxm2", [](auto k) { return direct_sum_algebra(matrix_algebra(k, 1), matrix_algebra(k, 2)); });
    all_fields("tri2xdual", [](auto k) {
        return direct_sum_algebra(triangular_algebra(k, 2), poly_quotient(k, detail::int_poly(k, {0, 0, 1})));
    });
    return out;
}

inline std::vector<CorpusModule> corpus_modules() {
    std::vector<CorpusModule> out;
    const Rationals Q;
    const PrimeField F2(2), F3(3);
    auto add_natural = [&](const std::string& field_tag, auto k, int n) {
        auto a = std::make_shared<const Algebra<decltype(k)>>(matrix_algebra(k, n));
        out.push_back({"nat_m" + std::to_string(n) + "_" + field_tag, "m" + std::to_string(n) + "_" + field_tag,
                       serialize_module(natural_matrix_module(a, n))});
    };
    for (int n : {2, 3}) {
        add_natural("q", Q, n);
        add_natural("f2", F2, n);
        add_natural("f3", F3, n);
    }
    // an explicit regular-module file (the CLI can also synthesize these)
    auto dual2 = std::make_shared<const Algebra<PrimeField>>(poly_quotient(F2, detail::int_poly(F2, {0, 0, 1})));
    out.push_back({"reg_dual_f2", "dual_f2", serialize_module(regular_module(dual2))});
    auto f4 = std::make_shared<const Algebra<PrimeField>>(poly_quotient(F2, detail::int_poly(F2, {1, 1, 1})));
    out.push_back({"reg_f4_f2", "f4_f2", serialize_module(regular_module(f4))});
    return out;
}

// Lookup helper used by the generator and the test suites.
inline const CorpusAlgebra& corpus_algebra(const std::vector<CorpusAlgebra>& all, const std::string& name) {
    for (const auto& a : all)
        if (a.name == name) return a;
    fail(Errc::InvalidArgument, "no corpus algebra named '" + name + "'");
}

} // namespace zadkit
