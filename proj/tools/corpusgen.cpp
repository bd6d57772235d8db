// Regenerates the shipped data/ tree: corpus algebra files, module files and
// replayable reports. Run from the repository root after changing corpus
// definitions, then commit the result.

#include <filesystem>
#include <iostream>

#include "zadkit/corpus.hpp"
#include "zadkit/engine.hpp"

namespace fs = std::filesystem;
using namespace zadkit;

int main(int argc, char** argv) {
    fs::path root = argc > 1 ? argv[1] : "data";
    fs::create_directories(root / "corpus");
    fs::create_directories(root / "modules");
    fs::create_directories(root / "reports");

    auto algebras = corpus_algebras();
    for (const auto& a : algebras) {
        write_json_file((root / "corpus" / (a.name + ".json")).string(), a.file);
    }
    std::cout << "wrote " << algebras.size() << " algebra files\n";

    auto modules = corpus_modules();
    for (const auto& m : modules) {
        Json file = m.file;
        file["algebra"] = "../corpus/" + m.algebra_name + ".json";
        write_json_file((root / "modules" / (m.name + ".json")).string(), file);
    }
    std::cout << "wrote " << modules.size() << " module files\n";

    // Replayable reports for the pinned verdicts.
    Options opts;
    int reports = 0;
    auto ship_zpd = [&](const std::string& name) {
        auto res = engine::run_check_zpd(corpus_algebra(algebras, name).file, engine::Mode::Fast, opts);
        write_json_file((root / "reports" / ("zpd_" + name + ".json")).string(), res.report);
        ++reports;
    };
    for (const auto& name : {"m2_q", "m2_f2", "m2_f3", "m3_q", "m3_f2", "m3_f3", "dual_q", "f4_f2", "tri2_q",
                             "tri2_f2", "tri3_q", "tri3_f2", "fxf_q"})
        ship_zpd(name);
    auto ship_oracle = [&](const std::string& name) {
        auto res = engine::run_oracle(corpus_algebra(algebras, name).file, std::nullopt, opts);
        write_json_file((root / "reports" / ("oracle_" + name + "_regular.json")).string(), res.report);
        ++reports;
    };
    ship_oracle("dual_f2");
    ship_oracle("m2_f2");
    ship_oracle("f4_f2");
    std::cout << "wrote " << reports << " reports\n";
    return 0;
}
