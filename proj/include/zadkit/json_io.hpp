#pragma once

// File formats: algebra files, module files and report payload serialization.
// Scalars are encoded as strings ("3/7" over Q, canonical residues over F_p)
// so files stay exact and diffable. Objects serialize with sorted keys, which
// keeps byte-identical reports reproducible.

#include <json.hpp>
#include <string>
#include <variant>

#include "zadkit/constructors.hpp"
#include "zadkit/module.hpp"
#include "zadkit/zad.hpp"
#include "zadkit/zpd.hpp"

namespace zadkit {

using Json = nlohmann::json;

enum class RadicalStatus { None, Verified, Declared };

struct LoadedAlgebra {
    FieldSpec field;
    Json normalized; // canonical algebra-file json, used when embedding in reports
    RadicalStatus radical_status = RadicalStatus::None;
    std::variant<AlgebraPtr<Rationals>, AlgebraPtr<PrimeField>> impl;

    template <FieldType F>
    const AlgebraPtr<F>& as() const {
        return std::get<AlgebraPtr<F>>(impl);
    }
};

struct LoadedModule {
    Json normalized; // canonical module-file json without the algebra reference
    std::variant<std::monostate, Module<Rationals>, Module<PrimeField>> impl;

    template <FieldType F>
    const Module<F>& as() const {
        return std::get<Module<F>>(impl);
    }
};

// Throws Errc::ParseError on malformed input and surfaces validation
// violations as parse errors.
LoadedAlgebra load_algebra_json(const Json& file, const Options& opts = {});
LoadedModule load_module_json(const Json& file, const LoadedAlgebra& algebra);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& value);

// Canonical serialization (sparse structure constants, echelon radical basis).
template <FieldType F>
Json serialize_algebra(const Algebra<F>& a);
template <FieldType F>
Json serialize_module(const Module<F>& m);

// Scalar vector <-> json helpers shared by the report layer.
template <FieldType F>
Json vec_to_json(const F& k, const Vec<F>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(k.to_string(x));
    return arr;
}

template <FieldType F>
Vec<F> vec_from_json(const F& k, const Json& arr) {
    if (!arr.is_array()) fail(Errc::ParseError, "expected an array of scalars");
    Vec<F> v;
    for (const auto& x : arr) {
        if (x.is_string())
            v.push_back(k.parse(x.template get<std::string>()));
        else if (x.is_number_integer())
            v.push_back(k.from_int(x.template get<std::int64_t>()));
        else
            fail(Errc::ParseError, "scalar entries must be strings or integers");
    }
    return v;
}

template <FieldType F>
Json mat_to_json(const Mat<F>& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) rows.push_back(vec_to_json(m.field(), m.row(r)));
    return rows;
}

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

// Report payload serialization, templated over the ground field.
template <FieldType F>
Json certificate_to_json(const F& k, const ZadCertificate<F>& cert);
template <FieldType F>
ZadCertificate<F> certificate_from_json(const F& k, const Json& j);
template <FieldType F>
Json witness_to_json(const F& k, const NotZadWitness<F>& wit);
template <FieldType F>
NotZadWitness<F> witness_from_json(const F& k, const Json& j);
template <FieldType F>
Json zad_verdict_to_json(const F& k, const ZadVerdict<F>& v);
template <FieldType F>
Json zpd_verdict_to_json(const F& k, const ZpdVerdict<F>& v);
template <FieldType F>
Json crosscheck_to_json(const F& k, const CrosscheckReport<F>& rep);

std::string ternary_to_string(Ternary t);

} // namespace zadkit
