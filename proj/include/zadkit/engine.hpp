#pragma once

// Field-erased command layer shared by the CLI and the Python bindings.
// Every command returns a deterministic JSON report (timing aside) plus the
// exit code contract: 0 yes, 1 no, 2 unknown, 3 parse/usage, 4 over budget,
// 5 radical regime unsupported, 6 discrepancy, 7 internal.

#include <optional>

#include "zadkit/json_io.hpp"

namespace zadkit::engine {

enum class Mode { Fast, Oracle, Both };

Mode mode_from_string(const std::string& s);
std::string mode_to_string(Mode m);

struct CommandResult {
    int exit_code = 0;
    Json report; // null for commands without a report
    std::string summary;
};

int exit_code_for_error(Errc c);
int exit_code_for(Ternary t);

CommandResult run_validate_algebra(const Json& algebra_file, const Options& opts);
CommandResult run_validate_module(const Json& algebra_file, const Json& module_file, const Options& opts);
CommandResult run_radical(const Json& algebra_file, const Options& opts);
CommandResult run_check_zad(const Json& algebra_file, const std::optional<Json>& module_file, Mode mode,
                            const Options& opts);
CommandResult run_check_zpd(const Json& algebra_file, Mode mode, const Options& opts);
CommandResult run_oracle(const Json& algebra_file, const std::optional<Json>& module_file, const Options& opts);
CommandResult run_crosscheck(const Json& algebra_file, const Options& opts);
CommandResult run_replay(const Json& report, const Options& opts);

// Wraps a command so library errors become the documented exit codes and an
// error note on the result.
template <class Fn>
CommandResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        CommandResult r;
        r.exit_code = exit_code_for_error(e.code());
        r.summary = std::string("error: ") + e.what();
        return r;
    } catch (const std::exception& e) {
        CommandResult r;
        r.exit_code = 7;
        r.summary = std::string("internal error: ") + e.what();
        return r;
    }
}

} // namespace zadkit::engine
