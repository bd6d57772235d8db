#include "zadkit/json_io.hpp"

#include <fstream>

namespace zadkit {

namespace {

void expect(bool cond, const std::string& what) {
    if (!cond) fail(Errc::ParseError, what);
}

template <FieldType F>
Algebra<F> algebra_from_json_typed(const F& k, const Json& file) {
    expect(file.contains("dim") && file["dim"].is_number_integer(), "algebra file needs an integer dim");
    const int n = file["dim"].get<int>();
    expect(n >= 1, "algebra dimension must be positive");
    std::vector<typename F::Elem> sc(static_cast<std::size_t>(n) * n * n, k.zero());
    expect(file.contains("sc"), "algebra file needs structure constants under 'sc'");
    const Json& scj = file["sc"];
    auto parse_scalar = [&](const Json& x) -> typename F::Elem {
        if (x.is_string()) return k.parse(x.template get<std::string>());
        if (x.is_number_integer()) return k.from_int(x.template get<std::int64_t>());
        fail(Errc::ParseError, "scalar entries must be strings or integers");
    };
    if (scj.is_object() && scj.contains("sparse")) {
        for (const auto& quad : scj["sparse"]) {
            expect(quad.is_array() && quad.size() == 4, "sparse entries are [i, j, k, value]");
            int i = quad[0].get<int>(), j = quad[1].get<int>(), t = quad[2].get<int>();
            expect(i >= 0 && i < n && j >= 0 && j < n && t >= 0 && t < n, "sparse index out of range");
            sc[(static_cast<std::size_t>(i) * n + j) * n + t] = parse_scalar(quad[3]);
        }
    } else if (scj.is_object() && scj.contains("dense")) {
        const Json& dense = scj["dense"];
        expect(dense.is_array() && static_cast<int>(dense.size()) == n, "dense tensor must have dim slices");
        for (int i = 0; i < n; ++i) {
            expect(static_cast<int>(dense[i].size()) == n, "dense tensor slice has wrong size");
            for (int j = 0; j < n; ++j) {
                expect(static_cast<int>(dense[i][j].size()) == n, "dense tensor row has wrong size");
                for (int t = 0; t < n; ++t)
                    sc[(static_cast<std::size_t>(i) * n + j) * n + t] = parse_scalar(dense[i][j][t]);
            }
        }
    } else {
        fail(Errc::ParseError, "'sc' must contain either 'sparse' or 'dense'");
    }
    expect(file.contains("unit"), "algebra file needs a unit vector");
    auto unit = vec_from_json(k, file["unit"]);
    expect(static_cast<int>(unit.size()) == n, "unit vector has wrong length");
    std::vector<std::string> labels;
    if (file.contains("labels")) {
        for (const auto& l : file["labels"]) labels.push_back(l.get<std::string>());
        expect(static_cast<int>(labels.size()) == n, "label list has wrong length");
    }
    return Algebra<F>(k, n, std::move(sc), std::move(unit), std::move(labels));
}

template <FieldType F>
std::pair<AlgebraPtr<F>, RadicalStatus> finish_algebra(const F& k, const Json& file, const Options& opts) {
    Algebra<F> a = algebra_from_json_typed(k, file);
    auto violations = validate_algebra(a);
    if (!violations.empty())
        fail(Errc::ParseError, "algebra file fails validation: " + violations.front().what + " (and " +
                                   std::to_string(violations.size() - 1) + " more)");
    RadicalStatus status = RadicalStatus::None;
    if (file.contains("radical")) {
        std::vector<Vec<F>> rows;
        for (const auto& r : file["radical"]) rows.push_back(vec_from_json(k, r));
        auto declared = Subspace<F>::span(k, a.dim(), rows);
        if (!is_ideal(a, declared)) fail(Errc::ParseError, "declared radical is not an ideal");
        if (!is_nilpotent_ideal(a, declared)) fail(Errc::ParseError, "declared radical is not nilpotent");
        // the quotient must have zero radical whenever some regime can decide it
        status = RadicalStatus::Declared;
        if (declared.dim() < a.dim()) {
            auto quo = quotient_algebra(a, declared);
            try {
                if (radical(quo.algebra, opts).space.dim() != 0)
                    fail(Errc::ParseError, "declared radical is smaller than the Jacobson radical");
                status = RadicalStatus::Verified;
            } catch (const Error& e) {
                if (e.code() != Errc::UnsupportedRadicalRegime) throw; // declared stays trusted otherwise
            }
        }
        a.set_known_radical(std::move(declared));
    }
    return {std::make_shared<const Algebra<F>>(std::move(a)), status};
}

template <FieldType F>
Module<F> module_from_json_typed(const Json& file, const AlgebraPtr<F>& a) {
    const F& k = a->field();
    expect(file.contains("dim") && file["dim"].is_number_integer(), "module file needs an integer dim");
    const int m = file["dim"].get<int>();
    expect(m >= 0, "module dimension must be nonnegative");
    expect(file.contains("action") && file["action"].is_array(), "module file needs action matrices");
    expect(static_cast<int>(file["action"].size()) == a->dim(),
           "one action matrix per algebra basis element required");
    std::vector<Mat<F>> action;
    for (const auto& matj : file["action"]) {
        expect(matj.is_array() && static_cast<int>(matj.size()) == m, "action matrix has wrong row count");
        Mat<F> mat(k, m, m);
        for (int r = 0; r < m; ++r) {
            auto row = vec_from_json(k, matj[r]);
            expect(static_cast<int>(row.size()) == m, "action matrix row has wrong length");
            mat.set_row(r, row);
        }
        action.push_back(std::move(mat));
    }
    Module<F> mod(a, m, std::move(action));
    auto violations = validate_module(mod);
    if (!violations.empty())
        fail(Errc::ParseError, "module file fails validation: " + violations.front().what + " (and " +
                                   std::to_string(violations.size() - 1) + " more)");
    return mod;
}

} // namespace

Json field_to_json(const FieldSpec& f) {
    Json j;
    if (f.kind == FieldSpec::Kind::Rationals) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = f.p;
    }
    return j;
}

FieldSpec field_from_json(const Json& j) {
    expect(j.is_object() && j.contains("kind"), "field descriptor needs a 'kind'");
    auto kind = j["kind"].get<std::string>();
    if (kind == "Q") return {FieldSpec::Kind::Rationals, 0};
    if (kind == "Fp") {
        expect(j.contains("p") && j["p"].is_number_integer(), "prime field descriptor needs 'p'");
        auto p = j["p"].get<std::int64_t>();
        if (!is_prime(p)) fail(Errc::ParseError, "field modulus " + std::to_string(p) + " is not prime");
        return {FieldSpec::Kind::PrimeField, p};
    }
    fail(Errc::ParseError, "unknown field kind '" + kind + "'");
}

template <FieldType F>
Json serialize_algebra(const Algebra<F>& a) {
    const F& k = a.field();
    Json j;
    j["format"] = 1;
    j["field"] = field_to_json(k.spec());
    j["dim"] = a.dim();
    j["unit"] = vec_to_json(k, a.unit());
    Json sparse = Json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int jj = 0; jj < a.dim(); ++jj)
            for (int t = 0; t < a.dim(); ++t)
                if (!k.is_zero(a.sc(i, jj, t)))
                    sparse.push_back(Json::array({i, jj, t, k.to_string(a.sc(i, jj, t))}));
    j["sc"] = Json{{"sparse", sparse}};
    j["labels"] = a.labels();
    if (a.known_radical()) {
        Json rows = Json::array();
        for (const auto& r : a.known_radical()->basis()) rows.push_back(vec_to_json(k, r));
        j["radical"] = rows;
    }
    return j;
}

template <FieldType F>
Json serialize_module(const Module<F>& m) {
    Json j;
    j["format"] = 1;
    j["dim"] = m.dim();
    Json action = Json::array();
    for (const auto& mat : m.action()) action.push_back(mat_to_json(mat));
    j["action"] = action;
    return j;
}

LoadedAlgebra load_algebra_json(const Json& file, const Options& opts) {
    expect(file.is_object(), "algebra file must be a JSON object");
    if (file.contains("format")) expect(file["format"].get<int>() == 1, "unsupported algebra file format");
    expect(file.contains("field"), "algebra file needs a field descriptor");
    FieldSpec spec = field_from_json(file["field"]);
    LoadedAlgebra out;
    out.field = spec;
    if (spec.kind == FieldSpec::Kind::Rationals) {
        auto [aptr, status] = finish_algebra(Rationals(), file, opts);
        out.normalized = serialize_algebra(*aptr);
        out.radical_status = status;
        out.impl = std::move(aptr);
    } else {
        auto [aptr, status] = finish_algebra(PrimeField(spec.p), file, opts);
        out.normalized = serialize_algebra(*aptr);
        out.radical_status = status;
        out.impl = std::move(aptr);
    }
    return out;
}

LoadedModule load_module_json(const Json& file, const LoadedAlgebra& algebra) {
    expect(file.is_object(), "module file must be a JSON object");
    if (file.contains("format")) expect(file["format"].get<int>() == 1, "unsupported module file format");
    LoadedModule out;
    if (algebra.field.kind == FieldSpec::Kind::Rationals) {
        auto mod = module_from_json_typed(file, algebra.as<Rationals>());
        out.normalized = serialize_module(mod);
        out.impl = std::move(mod);
    } else {
        auto mod = module_from_json_typed(file, algebra.as<PrimeField>());
        out.normalized = serialize_module(mod);
        out.impl = std::move(mod);
    }
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::ParseError, "bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& value) {
    std::ofstream outf(path);
    if (!outf) fail(Errc::ParseError, "cannot write '" + path + "'");
    outf << value.dump(2) << "\n";
}

std::string ternary_to_string(Ternary t) {
    switch (t) {
        case Ternary::Yes: return "yes";
        case Ternary::No: return "no";
        default: return "unknown";
    }
}

template <FieldType F>
Json certificate_to_json(const F& k, const ZadCertificate<F>& cert) {
    Json entries = Json::array();
    for (const auto& e : cert.entries) {
        Json terms = Json::array();
        for (const auto& t : e.terms)
            terms.push_back(
                Json{{"coeff", k.to_string(t.coeff)}, {"a", vec_to_json(k, t.a)}, {"m", vec_to_json(k, t.m)}});
        entries.push_back(Json{{"i", e.i}, {"j", e.j}, {"terms", terms}});
    }
    return Json{{"entries", entries}};
}

template <FieldType F>
ZadCertificate<F> certificate_from_json(const F& k, const Json& j) {
    ZadCertificate<F> cert;
    expect(j.is_object() && j.contains("entries"), "certificate payload needs entries");
    for (const auto& e : j["entries"]) {
        typename ZadCertificate<F>::Entry entry;
        entry.i = e.at("i").get<int>();
        entry.j = e.at("j").get<int>();
        for (const auto& t : e.at("terms")) {
            typename ZadCertificate<F>::Term term{
                t.at("coeff").is_string() ? k.parse(t.at("coeff").template get<std::string>())
                                          : k.from_int(t.at("coeff").template get<std::int64_t>()),
                vec_from_json(k, t.at("a")), vec_from_json(k, t.at("m"))};
            entry.terms.push_back(std::move(term));
        }
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

template <FieldType F>
Json witness_to_json(const F& k, const NotZadWitness<F>& wit) {
    return Json{{"alpha", vec_to_json(k, wit.alpha)}, {"i", wit.i}, {"j", wit.j}};
}

template <FieldType F>
NotZadWitness<F> witness_from_json(const F& k, const Json& j) {
    expect(j.is_object() && j.contains("alpha"), "witness payload needs alpha");
    return {vec_from_json(k, j["alpha"]), j.at("i").get<int>(), j.at("j").get<int>()};
}

template <FieldType F>
Json zad_verdict_to_json(const F& k, const ZadVerdict<F>& v) {
    Json j;
    j["verdict"] = ternary_to_string(v.answer);
    j["method"] = v.method;
    if (!v.reason.empty()) j["reason"] = v.reason;
    Json evidence = Json::object();
    if (v.certificate) evidence["certificate"] = certificate_to_json(k, *v.certificate);
    if (v.witness) evidence["witness"] = witness_to_json(k, *v.witness);
    j["evidence"] = evidence;
    return j;
}

template <FieldType F>
Json zpd_verdict_to_json(const F& k, const ZpdVerdict<F>& v) {
    Json j;
    j["verdict"] = ternary_to_string(v.answer);
    j["method"] = v.method;
    if (!v.reason.empty()) j["reason"] = v.reason;
    Json evidence = Json::object();
    if (v.report) {
        Json rad = Json::array();
        for (const auto& r : v.report->radical.basis()) rad.push_back(vec_to_json(k, r));
        evidence["radical_basis"] = rad;
        Json comps = Json::array();
        for (const auto& c : v.report->components) {
            Json cj{{"idempotent", vec_to_json(k, c.idempotent)},
                    {"dim", c.dim},
                    {"center_dim", c.center_dim},
                    {"flag", ternary_to_string(c.zpd_flag)}};
            if (!c.note.empty()) cj["note"] = c.note;
            if (c.zero_divisor)
                cj["zero_divisor"] = Json{{"u", vec_to_json(k, c.zero_divisor->first)},
                                          {"v", vec_to_json(k, c.zero_divisor->second)}};
            comps.push_back(std::move(cj));
        }
        evidence["components"] = comps;
    }
    Json chars = Json::array();
    for (const auto& ch : v.characters) chars.push_back(vec_to_json(k, ch.lambda));
    evidence["characters"] = chars;
    evidence["ext_dims"] = v.ext_dims;
    if (v.ext_witness)
        evidence["ext_witness"] = Json{{"lambda", vec_to_json(k, v.ext_witness->first.lambda)},
                                       {"derivation", vec_to_json(k, v.ext_witness->second)}};
    if (v.failing_component >= 0) evidence["failing_component"] = v.failing_component;
    j["evidence"] = evidence;
    return j;
}

template <FieldType F>
Json crosscheck_to_json(const F& k, const CrosscheckReport<F>& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows)
        rows.push_back(Json{{"idempotent", vec_to_json(k, r.idempotent)},
                            {"zad_oracle", r.c_zad_oracle},
                            {"re_in_ie", r.c_re_in_ie},
                            {"ext1", r.c_ext1},
                            {"ae_eq_ee", r.c_ae_eq_ee},
                            {"agree", r.agree()}});
    return Json{{"all_agree", rep.all_agree}, {"rows", rows}};
}

// explicit instantiations for the two ground fields
template Json serialize_algebra<Rationals>(const Algebra<Rationals>&);
template Json serialize_algebra<PrimeField>(const Algebra<PrimeField>&);
template Json serialize_module<Rationals>(const Module<Rationals>&);
template Json serialize_module<PrimeField>(const Module<PrimeField>&);
template Json certificate_to_json<Rationals>(const Rationals&, const ZadCertificate<Rationals>&);
template Json certificate_to_json<PrimeField>(const PrimeField&, const ZadCertificate<PrimeField>&);
template ZadCertificate<Rationals> certificate_from_json<Rationals>(const Rationals&, const Json&);
template ZadCertificate<PrimeField> certificate_from_json<PrimeField>(const PrimeField&, const Json&);
template Json witness_to_json<Rationals>(const Rationals&, const NotZadWitness<Rationals>&);
template Json witness_to_json<PrimeField>(const PrimeField&, const NotZadWitness<PrimeField>&);
template NotZadWitness<Rationals> witness_from_json<Rationals>(const Rationals&, const Json&);
template NotZadWitness<PrimeField> witness_from_json<PrimeField>(const PrimeField&, const Json&);
template Json zad_verdict_to_json<Rationals>(const Rationals&, const ZadVerdict<Rationals>&);
template Json zad_verdict_to_json<PrimeField>(const PrimeField&, const ZadVerdict<PrimeField>&);
template Json zpd_verdict_to_json<Rationals>(const Rationals&, const ZpdVerdict<Rationals>&);
template Json zpd_verdict_to_json<PrimeField>(const PrimeField&, const ZpdVerdict<PrimeField>&);
template Json crosscheck_to_json<Rationals>(const Rationals&, const CrosscheckReport<Rationals>&);
template Json crosscheck_to_json<PrimeField>(const PrimeField&, const CrosscheckReport<PrimeField>&);

} // namespace zadkit
