// Command-line surface for the zad/zpd decision toolkit. Exit codes:
// 0 yes, 1 no (or failed replay), 2 unknown, 3 parse/usage error,
// 4 enumeration budget exceeded, 5 radical regime unsupported,
// 6 discrepancy between independent decision paths, 7 internal error.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "zadkit/engine.hpp"

namespace fs = std::filesystem;
using zadkit::Json;
using zadkit::Options;

namespace {

struct CommonFlags {
    std::uint64_t budget = Options{}.budget;
    std::uint64_t seed = 0;
    std::string mode = "fast";
    std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_mode) {
    cmd->add_option("--budget", flags.budget, "max enumerated vectors per exhaustive pass");
    cmd->add_option("--seed", flags.seed, "seed for candidate streams and probes");
    if (with_mode)
        cmd->add_option("--mode", flags.mode, "fast|oracle|both")->check(CLI::IsMember({"fast", "oracle", "both"}));
    cmd->add_option("--out", flags.out, "write the JSON report to this path");
}

Options to_options(const CommonFlags& flags) {
    Options opts;
    opts.budget = flags.budget;
    opts.seed = flags.seed;
    return opts;
}

int finish(const zadkit::engine::CommandResult& result, const CommonFlags& flags) {
    if (!result.summary.empty()) std::cout << result.summary << "\n";
    if (!flags.out.empty() && !result.report.is_null()) zadkit::write_json_file(flags.out, result.report);
    return result.exit_code;
}

// Module files reference their algebra by a path relative to the module file.
Json resolve_module_algebra(const std::string& module_path, const Json& module_file) {
    if (!module_file.contains("algebra") || !module_file["algebra"].is_string())
        zadkit::fail(zadkit::Errc::ParseError, "module file lacks an 'algebra' path reference");
    fs::path ref = module_file["algebra"].get<std::string>();
    fs::path base = fs::path(module_path).parent_path();
    return zadkit::read_json_file((base / ref).string());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zadkit: decide zero-action-determined modules and zero-product-determined algebras"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string path_a, path_b;

    auto* validate = app.add_subcommand("validate", "validate an algebra or module file");
    validate->add_option("file", path_a, "algebra or module JSON file")->required();
    add_common(validate, flags, false);

    auto* radical = app.add_subcommand("radical", "compute the Jacobson radical");
    radical->add_option("algebra", path_a, "algebra JSON file")->required();
    add_common(radical, flags, false);

    auto* check_zad = app.add_subcommand("check-zad", "decide whether a module is zero-action determined");
    check_zad->add_option("algebra", path_a, "algebra JSON file")->required();
    check_zad->add_option("module", path_b, "module JSON file")->required();
    add_common(check_zad, flags, true);

    auto* check_zpd = app.add_subcommand("check-zpd", "decide whether an algebra is zero-product determined");
    check_zpd->add_option("algebra", path_a, "algebra JSON file")->required();
    add_common(check_zpd, flags, true);

    auto* oracle = app.add_subcommand("oracle", "exhaustive zad oracle (prime fields, within budget)");
    oracle->add_option("algebra", path_a, "algebra JSON file")->required();
    oracle->add_option("module", path_b, "module JSON file (defaults to the regular module)");
    add_common(oracle, flags, false);

    auto* crosscheck = app.add_subcommand("crosscheck", "four-way principal projective criterion crosscheck");
    crosscheck->add_option("algebra", path_a, "algebra JSON file")->required();
    add_common(crosscheck, flags, false);

    auto* replay = app.add_subcommand("replay", "re-verify a stored report's certificate or witness");
    replay->add_option("report", path_a, "report JSON file")->required();
    add_common(replay, flags, false);

    CLI11_PARSE(app, argc, argv);

    using namespace zadkit::engine;
    auto opts = to_options(flags);

    auto result = guarded([&]() -> CommandResult {
        if (validate->parsed()) {
            Json file = zadkit::read_json_file(path_a);
            if (file.contains("action")) {
                Json alg = resolve_module_algebra(path_a, file);
                return run_validate_module(alg, file, opts);
            }
            return run_validate_algebra(file, opts);
        }
        if (radical->parsed()) return run_radical(zadkit::read_json_file(path_a), opts);
        if (check_zad->parsed())
            return run_check_zad(zadkit::read_json_file(path_a), zadkit::read_json_file(path_b),
                                 mode_from_string(flags.mode), opts);
        if (check_zpd->parsed())
            return run_check_zpd(zadkit::read_json_file(path_a), mode_from_string(flags.mode), opts);
        if (oracle->parsed()) {
            std::optional<Json> mod;
            if (!path_b.empty()) mod = zadkit::read_json_file(path_b);
            return run_oracle(zadkit::read_json_file(path_a), mod, opts);
        }
        if (crosscheck->parsed()) return run_crosscheck(zadkit::read_json_file(path_a), opts);
        if (replay->parsed()) return run_replay(zadkit::read_json_file(path_a), opts);
        zadkit::fail(zadkit::Errc::ParseError, "no subcommand given");
    });
    return finish(result, flags);
}
