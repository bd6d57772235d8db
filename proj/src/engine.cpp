#include "zadkit/engine.hpp"

#include <chrono>

namespace zadkit::engine {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Json options_to_json(const Options& opts) {
    return Json{{"budget", opts.budget}, {"seed", opts.seed}, {"probe_trials", opts.probe_trials}};
}

Options options_from_json(const Json& j, Options base) {
    if (j.contains("budget")) base.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("seed")) base.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("probe_trials")) base.probe_trials = j["probe_trials"].get<int>();
    return base;
}

Json make_instance(const LoadedAlgebra& a, const std::optional<LoadedModule>& m, const std::string& module_kind) {
    Json inst;
    inst["algebra"] = a.normalized;
    inst["module"] = m ? m->normalized : Json(nullptr);
    inst["module_kind"] = module_kind;
    return inst;
}

Json make_report(const std::string& command, const std::string& mode, const Options& opts, const Json& instance,
                 const Json& verdict_fragment, std::int64_t timing_ms) {
    Json rep;
    rep["format"] = 1;
    rep["tool"] = "zadkit";
    rep["command"] = command;
    rep["mode"] = mode;
    rep["options"] = options_to_json(opts);
    rep["instance"] = instance;
    for (const auto& [key, value] : verdict_fragment.items()) rep[key] = value;
    rep["timing_ms"] = timing_ms;
    return rep;
}

Ternary ternary_from_string(const std::string& s) {
    if (s == "yes") return Ternary::Yes;
    if (s == "no") return Ternary::No;
    return Ternary::Unknown;
}

// Obtain the module to analyze: an explicit module file or the regular module.
template <FieldType F>
Module<F> instance_module(const LoadedAlgebra& a, const std::optional<LoadedModule>& m) {
    if (m) return m->as<F>();
    return regular_module(a.as<F>());
}

template <class Fn>
auto with_field(const LoadedAlgebra& a, Fn&& fn) {
    if (a.field.kind == FieldSpec::Kind::Rationals) return fn(Rationals());
    return fn(PrimeField(a.field.p));
}

} // namespace

Mode mode_from_string(const std::string& s) {
    if (s == "fast") return Mode::Fast;
    if (s == "oracle") return Mode::Oracle;
    if (s == "both") return Mode::Both;
    fail(Errc::ParseError, "unknown mode '" + s + "' (expected fast|oracle|both)");
}

std::string mode_to_string(Mode m) {
    switch (m) {
        case Mode::Fast: return "fast";
        case Mode::Oracle: return "oracle";
        default: return "both";
    }
}

int exit_code_for_error(Errc c) {
    switch (c) {
        case Errc::OverBudget: return 4;
        case Errc::UnsupportedRadicalRegime: return 5;
        case Errc::Discrepancy: return 6;
        case Errc::Internal: return 7;
        default: return 3;
    }
}

int exit_code_for(Ternary t) {
    switch (t) {
        case Ternary::Yes: return 0;
        case Ternary::No: return 1;
        default: return 2;
    }
}

CommandResult run_validate_algebra(const Json& algebra_file, const Options& opts) {
    auto loaded = load_algebra_json(algebra_file, opts); // throws ParseError on violations
    CommandResult r;
    r.exit_code = 0;
    r.summary = "algebra valid: field " + loaded.field.describe() + ", dim " +
                std::to_string(loaded.normalized["dim"].get<int>());
    if (loaded.radical_status == RadicalStatus::Declared) r.summary += " (radical declared, trusted)";
    if (loaded.radical_status == RadicalStatus::Verified) r.summary += " (radical verified)";
    return r;
}

CommandResult run_validate_module(const Json& algebra_file, const Json& module_file, const Options& opts) {
    auto a = load_algebra_json(algebra_file, opts);
    auto m = load_module_json(module_file, a);
    CommandResult r;
    r.exit_code = 0;
    r.summary = "module valid: dim " + std::to_string(m.normalized["dim"].get<int>()) + " over " +
                a.field.describe() + "-algebra of dim " + std::to_string(a.normalized["dim"].get<int>());
    return r;
}

CommandResult run_radical(const Json& algebra_file, const Options& opts) {
    auto start = Clock::now();
    auto a = load_algebra_json(algebra_file, opts);
    return with_field(a, [&](auto field) {
        using F = decltype(field);
        auto rad = radical(*a.as<F>(), opts);
        Json evidence;
        Json rows = Json::array();
        for (const auto& r : rad.space.basis()) rows.push_back(vec_to_json(field, r));
        evidence["radical_basis"] = rows;
        evidence["radical_dim"] = rad.space.dim();
        evidence["method"] = rad.method == RadicalMethod::Supplied
                                 ? "supplied"
                                 : (rad.method == RadicalMethod::TraceForm ? "trace-form" : "exhaustive-refinement");
        Json frag;
        frag["verdict"] = "yes";
        frag["method"] = evidence["method"];
        frag["evidence"] = evidence;
        CommandResult r;
        r.report = make_report("radical", "fast", opts, make_instance(a, std::nullopt, "none"), frag, ms_since(start));
        r.exit_code = 0;
        r.summary = "radical dim " + std::to_string(rad.space.dim()) + " (" +
                    evidence["method"].get<std::string>() + ")";
        return r;
    });
}

CommandResult run_oracle(const Json& algebra_file, const std::optional<Json>& module_file, const Options& opts) {
    auto start = Clock::now();
    auto a = load_algebra_json(algebra_file, opts);
    std::optional<LoadedModule> m;
    if (module_file) m = load_module_json(*module_file, a);
    return with_field(a, [&](auto field) {
        using F = decltype(field);
        auto mod = instance_module<F>(a, m);
        auto verdict = is_zad_oracle(mod, opts);
        Json frag = zad_verdict_to_json(field, verdict);
        CommandResult r;
        r.report = make_report("oracle", "oracle", opts, make_instance(a, m, m ? "file" : "regular"), frag,
                               ms_since(start));
        r.exit_code = exit_code_for(verdict.answer);
        r.summary = "zad oracle: " + ternary_to_string(verdict.answer);
        return r;
    });
}

CommandResult run_check_zad(const Json& algebra_file, const std::optional<Json>& module_file, Mode mode,
                            const Options& opts) {
    auto start = Clock::now();
    auto a = load_algebra_json(algebra_file, opts);
    std::optional<LoadedModule> m;
    if (module_file) m = load_module_json(*module_file, a);
    return with_field(a, [&](auto field) {
        using F = decltype(field);
        auto mod = instance_module<F>(a, m);
        std::optional<ZadVerdict<F>> fast, oracle;
        if (mode == Mode::Fast || mode == Mode::Both) fast = decide_zad_fast(mod, opts);
        if (mode == Mode::Oracle || mode == Mode::Both) oracle = is_zad_oracle(mod, opts);
        CommandResult r;
        Json frag;
        if (mode == Mode::Both) {
            bool fast_decisive = fast->answer != Ternary::Unknown;
            bool disagree = fast_decisive && fast->answer != oracle->answer;
            frag = zad_verdict_to_json(field, *oracle);
            frag["fast_verdict"] = ternary_to_string(fast->answer);
            frag["fast_method"] = fast->method;
            frag["modes_agree"] = !disagree;
            if (disagree) {
                r.report = make_report("check-zad", "both", opts, make_instance(a, m, m ? "file" : "regular"), frag,
                                       ms_since(start));
                r.exit_code = 6;
                r.summary = "DISCREPANCY: fast says " + ternary_to_string(fast->answer) + ", oracle says " +
                            ternary_to_string(oracle->answer);
                return r;
            }
        } else {
            frag = zad_verdict_to_json(field, mode == Mode::Fast ? *fast : *oracle);
        }
        const auto& final_v = mode == Mode::Fast ? *fast : *oracle;
        r.report =
            make_report("check-zad", mode_to_string(mode), opts, make_instance(a, m, m ? "file" : "regular"), frag,
                        ms_since(start));
        r.exit_code = exit_code_for(final_v.answer);
        r.summary = "zad: " + ternary_to_string(final_v.answer) + " (" + final_v.method + ")";
        return r;
    });
}

CommandResult run_check_zpd(const Json& algebra_file, Mode mode, const Options& opts) {
    auto start = Clock::now();
    auto a = load_algebra_json(algebra_file, opts);
    return with_field(a, [&](auto field) {
        using F = decltype(field);
        CommandResult r;
        Json frag;
        Ternary final_answer = Ternary::Unknown;
        if (mode == Mode::Fast) {
            auto v = is_zpd(a.as<F>(), opts);
            frag = zpd_verdict_to_json(field, v);
            final_answer = v.answer;
        } else if (mode == Mode::Oracle) {
            auto v = is_zad_oracle(regular_module(a.as<F>()), opts);
            frag = zad_verdict_to_json(field, v);
            frag["method"] = "oracle:regular-module";
            final_answer = v.answer;
        } else {
            auto vf = is_zpd(a.as<F>(), opts);
            auto vo = is_zad_oracle(regular_module(a.as<F>()), opts);
            bool fast_decisive = vf.answer != Ternary::Unknown;
            bool disagree = fast_decisive && vf.answer != vo.answer;
            frag = zpd_verdict_to_json(field, vf);
            frag["oracle_verdict"] = ternary_to_string(vo.answer);
            frag["modes_agree"] = !disagree;
            if (disagree) {
                r.report = make_report("check-zpd", "both", opts, make_instance(a, std::nullopt, "regular"), frag,
                                       ms_since(start));
                r.exit_code = 6;
                r.summary = "DISCREPANCY: wedderburn+ext1 says " + ternary_to_string(vf.answer) +
                            ", regular-module oracle says " + ternary_to_string(vo.answer);
                return r;
            }
            final_answer = vo.answer;
        }
        r.report = make_report("check-zpd", mode_to_string(mode), opts, make_instance(a, std::nullopt, "regular"),
                               frag, ms_since(start));
        r.exit_code = exit_code_for(final_answer);
        r.summary = "zpd: " + ternary_to_string(final_answer);
        return r;
    });
}

CommandResult run_crosscheck(const Json& algebra_file, const Options& opts) {
    auto start = Clock::now();
    auto a = load_algebra_json(algebra_file, opts);
    if (a.field.kind != FieldSpec::Kind::PrimeField)
        fail(Errc::InvalidArgument, "crosscheck enumerates idempotents and requires a prime field");
    PrimeField field(a.field.p);
    auto rep = zpd_condition_crosscheck(a.as<PrimeField>(), opts);
    Json frag;
    frag["verdict"] = rep.all_agree ? "yes" : "no";
    frag["method"] = "four-way-crosscheck";
    frag["evidence"] = crosscheck_to_json(field, rep);
    CommandResult r;
    r.report =
        make_report("crosscheck", "oracle", opts, make_instance(a, std::nullopt, "none"), frag, ms_since(start));
    r.exit_code = rep.all_agree ? 0 : 6;
    r.summary = rep.all_agree ? "all four conditions agree on every idempotent (" + std::to_string(rep.rows.size()) +
                                    " nonzero idempotents)"
                              : "DISCREPANCY between the four conditions";
    return r;
}

namespace {

// Independent verification of a stored report's payload plus a deterministic
// re-run comparison of the verdict.
template <FieldType F>
bool replay_typed(const F& field, const LoadedAlgebra& a, const std::optional<LoadedModule>& m, const Json& report,
                  const Options& opts, std::string& note) {
    const std::string command = report.at("command").get<std::string>();
    const std::string mode = report.value("mode", "fast");
    const Ternary stored = ternary_from_string(report.at("verdict").get<std::string>());
    const Json evidence = report.value("evidence", Json::object());

    if (command == "oracle" || command == "check-zad" || command == "check-zpd") {
        // payload verification against the claimed instance
        bool needs_module_payload = command != "check-zpd" || mode != "fast";
        if (needs_module_payload) {
            auto mod = instance_module<F>(a, m);
            if (stored == Ternary::Yes && evidence.contains("certificate")) {
                auto cert = certificate_from_json(field, evidence["certificate"]);
                std::string why;
                if (!verify_certificate(mod, cert, &why)) {
                    note = "certificate failed: " + why;
                    return false;
                }
            } else if (stored == Ternary::No && evidence.contains("witness")) {
                if constexpr (F::is_finite) {
                    auto wit = witness_from_json(field, evidence["witness"]);
                    std::string why;
                    if (!verify_witness(mod, wit, opts, &why)) {
                        note = "witness failed: " + why;
                        return false;
                    }
                } else {
                    note = "stored witness over the rationals cannot be replayed";
                    return false;
                }
            }
        }
        if (command == "check-zpd" && mode != "oracle") {
            // radical basis must be a nilpotent ideal
            const auto& aptr = a.as<F>();
            if (evidence.contains("radical_basis")) {
                std::vector<Vec<F>> rows;
                for (const auto& r : evidence["radical_basis"]) rows.push_back(vec_from_json(field, r));
                auto rad = Subspace<F>::span(field, aptr->dim(), rows);
                if (!is_ideal(*aptr, rad) || !is_nilpotent_ideal(*aptr, rad)) {
                    note = "stored radical basis is not a nilpotent ideal";
                    return false;
                }
            }
            if (evidence.contains("ext_witness")) {
                Character<F> ch{aptr, vec_from_json(field, evidence["ext_witness"]["lambda"])};
                if (!validate_character(ch).empty()) {
                    note = "stored extension witness has an invalid character";
                    return false;
                }
                auto d = vec_from_json(field, evidence["ext_witness"]["derivation"]);
                bool nonzero = false;
                for (const auto& x : d) nonzero = nonzero || !field.is_zero(x);
                if (!nonzero) {
                    note = "stored derivation is zero";
                    return false;
                }
                auto x = extension_module(aptr, ch, d);
                if (!validate_module(x).empty()) {
                    note = "stored derivation does not define a module";
                    return false;
                }
                // the evident embedding of S must not split
                auto s = module_from_character(ch);
                for (const auto& h : hom_basis_mats(x, s))
                    if (!field.is_zero(h.at(0, 0))) {
                        note = "stored extension splits";
                        return false;
                    }
            }
            if (evidence.contains("components")) {
                auto rad = radical(*aptr, opts);
                auto quo = quotient_algebra(*aptr, rad.space);
                Vec<F> total(quo.algebra.dim(), field.zero());
                for (const auto& cj : evidence["components"]) {
                    auto eps = vec_from_json(field, cj.at("idempotent"));
                    if (!is_idempotent(quo.algebra, eps)) {
                        note = "stored component idempotent is not idempotent in A/R";
                        return false;
                    }
                    for (std::size_t t = 0; t < total.size(); ++t) total[t] = field.add(total[t], eps[t]);
                    SpanAccumulator<F> acc(field, quo.algebra.dim());
                    for (int i = 0; i < quo.algebra.dim(); ++i) acc.insert(quo.algebra.mult(eps, quo.algebra.basis_vec(i)));
                    if (acc.dim() != cj.at("dim").get<int>()) {
                        note = "stored component dimension mismatch";
                        return false;
                    }
                    if (cj.contains("zero_divisor")) {
                        auto u = vec_from_json(field, cj["zero_divisor"]["u"]);
                        auto v = vec_from_json(field, cj["zero_divisor"]["v"]);
                        bool uz = true, vz = true;
                        for (const auto& x : u) uz = uz && field.is_zero(x);
                        for (const auto& x : v) vz = vz && field.is_zero(x);
                        bool prod_zero = true;
                        for (const auto& x : quo.algebra.mult(u, v)) prod_zero = prod_zero && field.is_zero(x);
                        if (uz || vz || !prod_zero) {
                            note = "stored zero divisor does not check out";
                            return false;
                        }
                    }
                }
                if (!(total == quo.algebra.unit())) {
                    note = "stored component idempotents do not sum to 1";
                    return false;
                }
            }
        }
        // deterministic re-run must reproduce the stored verdict; in "both"
        // mode that verdict came from the oracle side
        Ternary rerun;
        const bool oracle_side = command == "oracle" || mode == "oracle" || mode == "both";
        if (command == "check-zpd") {
            if (oracle_side)
                rerun = is_zad_oracle(regular_module(a.as<F>()), opts).answer;
            else
                rerun = is_zpd(a.as<F>(), opts).answer;
        } else {
            auto mod = instance_module<F>(a, m);
            rerun = oracle_side ? is_zad_oracle(mod, opts).answer : decide_zad_fast(mod, opts).answer;
        }
        if (rerun != stored) {
            note = "re-run verdict " + ternary_to_string(rerun) + " differs from stored " + ternary_to_string(stored);
            return false;
        }
        // a recorded fast-side verdict must reproduce as well
        if (report.contains("fast_verdict") && command != "check-zpd") {
            auto mod = instance_module<F>(a, m);
            auto fast = decide_zad_fast(mod, opts).answer;
            if (ternary_to_string(fast) != report["fast_verdict"].get<std::string>()) {
                note = "re-run fast verdict differs from the recorded one";
                return false;
            }
        }
        return true;
    }
    if (command == "crosscheck") {
        if constexpr (F::is_finite) {
            auto rep = zpd_condition_crosscheck(a.as<F>(), opts);
            bool stored_agree = report.at("verdict").get<std::string>() == "yes";
            if (rep.all_agree != stored_agree) {
                note = "crosscheck agreement differs on re-run";
                return false;
            }
            if (evidence.contains("rows") &&
                evidence["rows"].size() != rep.rows.size()) {
                note = "crosscheck row count differs on re-run";
                return false;
            }
            return true;
        } else {
            note = "crosscheck reports only exist over prime fields";
            return false;
        }
    }
    if (command == "radical") {
        const auto& aptr = a.as<F>();
        if (!evidence.contains("radical_basis")) {
            note = "radical report lacks a basis";
            return false;
        }
        std::vector<Vec<F>> rows;
        for (const auto& r : evidence["radical_basis"]) rows.push_back(vec_from_json(field, r));
        auto rad = Subspace<F>::span(field, aptr->dim(), rows);
        if (!is_ideal(*aptr, rad) || !is_nilpotent_ideal(*aptr, rad)) {
            note = "stored radical basis is not a nilpotent ideal";
            return false;
        }
        if (radical(*aptr, opts).space != rad) {
            note = "stored radical differs from recomputation";
            return false;
        }
        return true;
    }
    note = "unknown command '" + command + "' in report";
    return false;
}

} // namespace

CommandResult run_replay(const Json& report, const Options& cli_opts) {
    if (!report.is_object() || !report.contains("instance") || !report.contains("command"))
        fail(Errc::ParseError, "not a zadkit report");
    Options opts = report.contains("options") ? options_from_json(report["options"], Options{}) : cli_opts;
    const Json& inst = report["instance"];
    auto a = load_algebra_json(inst.at("algebra"), opts);
    std::optional<LoadedModule> m;
    if (inst.contains("module") && !inst["module"].is_null()) m = load_module_json(inst["module"], a);
    std::string note;
    bool ok = report.at("verdict").is_string();
    if (ok) {
        if (a.field.kind == FieldSpec::Kind::Rationals)
            ok = replay_typed(Rationals(), a, m, report, opts, note);
        else
            ok = replay_typed(PrimeField(a.field.p), a, m, report, opts, note);
    } else {
        note = "report lacks a verdict";
    }
    CommandResult r;
    r.exit_code = ok ? 0 : 1;
    r.summary = ok ? "replay ok: stored evidence verifies and the verdict reproduces"
                   : "replay FAILED: " + note;
    return r;
}

} // namespace zadkit::engine
