// Python bindings: the corpus constructors plus the field-erased command
// layer. Reports come back as plain dicts mirroring the CLI's JSON output.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zadkit/corpus.hpp"
#include "zadkit/engine.hpp"

namespace py = pybind11;
using namespace zadkit;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& x : j) out.append(json_to_py(x));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

Json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json arr = Json::array();
        for (const auto& x : obj) arr.push_back(py_to_json(x));
        return arr;
    }
    if (py::isinstance<py::dict>(obj)) {
        Json out = Json::object();
        for (const auto& item : obj.cast<py::dict>()) out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    throw py::type_error("cannot convert object to JSON");
}

// An algebra handle: the normalized file form plus the validated in-memory value.
struct PyAlgebra {
    Json file;

    explicit PyAlgebra(Json f) : file(std::move(f)) { (void)load_algebra_json(file); }

    int dim() const { return file.at("dim").get<int>(); }
    std::string field() const {
        return field_from_json(file.at("field")).describe();
    }
    py::object to_dict() const { return json_to_py(file); }
    std::string to_json() const { return file.dump(2); }
    py::object radical_basis() const {
        auto rep = engine::run_radical(file, Options{});
        return json_to_py(rep.report.at("evidence").at("radical_basis"));
    }
    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (const auto& l : file.at("labels")) out.push_back(l.get<std::string>());
        return out;
    }
};

struct PyModule {
    Json file; // without algebra reference

    int dim() const { return file.at("dim").get<int>(); }
    py::object to_dict() const { return json_to_py(file); }
};

FieldSpec parse_field_arg(const py::object& field) {
    if (py::isinstance<py::str>(field)) {
        auto s = field.cast<std::string>();
        if (s == "Q" || s == "q") return {FieldSpec::Kind::Rationals, 0};
        fail(Errc::ParseError, "field must be 'Q' or a prime integer");
    }
    return {FieldSpec::Kind::PrimeField, field.cast<std::int64_t>()};
}

template <class Make>
PyAlgebra build(const py::object& field, Make&& make) {
    auto spec = parse_field_arg(field);
    if (spec.kind == FieldSpec::Kind::Rationals) return PyAlgebra(serialize_algebra(make(Rationals())));
    return PyAlgebra(serialize_algebra(make(PrimeField(spec.p))));
}

Options make_options(std::uint64_t budget, std::uint64_t seed) {
    Options o;
    o.budget = budget;
    o.seed = seed;
    return o;
}

py::dict command_dict(const engine::CommandResult& r) {
    py::dict out;
    out["exit_code"] = r.exit_code;
    out["summary"] = r.summary;
    out["report"] = r.report.is_null() ? py::object(py::none()) : json_to_py(r.report);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "decision procedures for zero-action-determined modules and zero-product-determined algebras";

    py::register_exception<Error>(m, "ZadkitError");

    py::class_<PyAlgebra>(m, "Algebra")
        .def(py::init([](const py::object& data) {
                 if (py::isinstance<py::str>(data)) return PyAlgebra(Json::parse(data.cast<std::string>()));
                 return PyAlgebra(py_to_json(data));
             }),
             py::arg("data"), "Build from a JSON string or a dict in the algebra file format.")
        .def_property_readonly("dim", &PyAlgebra::dim)
        .def_property_readonly("field", &PyAlgebra::field)
        .def_property_readonly("labels", &PyAlgebra::labels)
        .def("to_dict", &PyAlgebra::to_dict)
        .def("to_json", &PyAlgebra::to_json)
        .def("radical_basis", &PyAlgebra::radical_basis)
        .def("__repr__", [](const PyAlgebra& a) {
            return "<zadkit.Algebra dim=" + std::to_string(a.dim()) + " over " + a.field() + ">";
        });

    py::class_<PyModule>(m, "Module")
        .def_property_readonly("dim", &PyModule::dim)
        .def("to_dict", &PyModule::to_dict)
        .def("__repr__",
             [](const PyModule& v) { return "<zadkit.Module dim=" + std::to_string(v.dim()) + ">"; });

    m.def("load_algebra", [](const std::string& path) { return PyAlgebra(read_json_file(path)); },
          py::arg("path"));
    m.def("load_module", [](const std::string& path) {
        auto j = read_json_file(path);
        j.erase("algebra");
        return PyModule{j};
    });

    m.def(
        "matrix_algebra",
        [](int n, const py::object& field) { return build(field, [&](auto k) { return matrix_algebra(k, n); }); },
        py::arg("n"), py::arg("field"));
    m.def(
        "triangular_algebra",
        [](int n, const py::object& field) {
            return build(field, [&](auto k) { return triangular_algebra(k, n); });
        },
        py::arg("n"), py::arg("field"));
    m.def(
        "poly_quotient",
        [](const std::vector<std::string>& coeffs, const py::object& field) {
            return build(field, [&](auto k) {
                std::vector<typename decltype(k)::Elem> cs;
                for (const auto& c : coeffs) cs.push_back(k.parse(c));
                return poly_quotient(k, Poly<decltype(k)>(k, std::move(cs)));
            });
        },
        py::arg("coeffs"), py::arg("field"), "Monic modulus, coefficients ascending, as scalar strings.");
    m.def(
        "group_algebra",
        [](const std::vector<std::vector<int>>& table, const py::object& field) {
            return build(field, [&](auto k) { return group_algebra(k, table); });
        },
        py::arg("table"), py::arg("field"));
    m.def(
        "path_algebra",
        [](int vertices, const std::vector<std::pair<int, int>>& arrows, const py::object& field) {
            return build(field, [&](auto k) { return path_algebra(k, Quiver{vertices, arrows}); });
        },
        py::arg("vertices"), py::arg("arrows"), py::arg("field"));
    m.def("direct_sum", [](const PyAlgebra& a, const PyAlgebra& b) {
        auto la = load_algebra_json(a.file);
        auto lb = load_algebra_json(b.file);
        if (la.field != lb.field) fail(Errc::FieldMismatch, "direct sum needs matching fields");
        if (la.field.kind == FieldSpec::Kind::Rationals)
            return PyAlgebra(serialize_algebra(direct_sum_algebra(*la.as<Rationals>(), *lb.as<Rationals>())));
        return PyAlgebra(serialize_algebra(direct_sum_algebra(*la.as<PrimeField>(), *lb.as<PrimeField>())));
    });

    m.def("regular_module", [](const PyAlgebra& a) {
        auto la = load_algebra_json(a.file);
        if (la.field.kind == FieldSpec::Kind::Rationals)
            return PyModule{serialize_module(regular_module(la.as<Rationals>()))};
        return PyModule{serialize_module(regular_module(la.as<PrimeField>()))};
    });

    m.def("cyclic_group_table", &cyclic_group_table, py::arg("n"));
    m.def("symmetric3_table", &symmetric3_table);

    const auto default_budget = Options{}.budget;
    m.def(
        "validate",
        [](const PyAlgebra& a, const py::object& module) {
            return command_dict(engine::guarded([&] {
                if (module.is_none()) return engine::run_validate_algebra(a.file, Options{});
                return engine::run_validate_module(a.file, module.cast<PyModule>().file, Options{});
            }));
        },
        py::arg("algebra"), py::arg("module") = py::none());
    m.def(
        "check_zpd",
        [](const PyAlgebra& a, const std::string& mode, std::uint64_t budget, std::uint64_t seed) {
            return command_dict(engine::guarded(
                [&] { return engine::run_check_zpd(a.file, engine::mode_from_string(mode), make_options(budget, seed)); }));
        },
        py::arg("algebra"), py::arg("mode") = "fast", py::arg("budget") = default_budget, py::arg("seed") = 0);
    m.def(
        "check_zad",
        [](const PyAlgebra& a, const py::object& module, const std::string& mode, std::uint64_t budget,
           std::uint64_t seed) {
            return command_dict(engine::guarded([&] {
                std::optional<Json> mod;
                if (!module.is_none()) mod = module.cast<PyModule>().file;
                return engine::run_check_zad(a.file, mod, engine::mode_from_string(mode), make_options(budget, seed));
            }));
        },
        py::arg("algebra"), py::arg("module") = py::none(), py::arg("mode") = "fast",
        py::arg("budget") = default_budget, py::arg("seed") = 0);
    m.def(
        "oracle",
        [](const PyAlgebra& a, const py::object& module, std::uint64_t budget, std::uint64_t seed) {
            return command_dict(engine::guarded([&] {
                std::optional<Json> mod;
                if (!module.is_none()) mod = module.cast<PyModule>().file;
                return engine::run_oracle(a.file, mod, make_options(budget, seed));
            }));
        },
        py::arg("algebra"), py::arg("module") = py::none(), py::arg("budget") = default_budget, py::arg("seed") = 0);
    m.def(
        "crosscheck",
        [](const PyAlgebra& a, std::uint64_t budget, std::uint64_t seed) {
            return command_dict(
                engine::guarded([&] { return engine::run_crosscheck(a.file, make_options(budget, seed)); }));
        },
        py::arg("algebra"), py::arg("budget") = default_budget, py::arg("seed") = 0);
    m.def(
        "replay",
        [](const py::object& report) {
            return command_dict(engine::guarded([&] {
                Json rep = py::isinstance<py::str>(report) ? Json::parse(report.cast<std::string>())
                                                           : py_to_json(report);
                return engine::run_replay(rep, Options{});
            }));
        },
        py::arg("report"), "Re-verify a stored report (dict or JSON string); exit_code 0 means it replays.");
}
