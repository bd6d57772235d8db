#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "zadkit/corpus.hpp"
#include "zadkit/engine.hpp"

using namespace zadkit;
namespace fs = std::filesystem;

namespace {

const fs::path kData = ZADKIT_DATA_DIR;

Json strip_timing(Json j) {
    j.erase("timing_ms");
    return j;
}

} // namespace

TEST_CASE("every corpus algebra file loads, validates and round-trips") {
    int count = 0;
    for (const auto& entry : fs::directory_iterator(kData / "corpus")) {
        auto file = read_json_file(entry.path().string());
        auto loaded = load_algebra_json(file);
        // shipped files are already in canonical form, so the round trip is exact
        CHECK(loaded.normalized == file);
        ++count;
    }
    CHECK(count >= 40);
}

TEST_CASE("shipped corpus matches the generator definitions") {
    auto algebras = corpus_algebras();
    for (const auto& a : algebras) {
        auto path = kData / "corpus" / (a.name + ".json");
        REQUIRE_MESSAGE(fs::exists(path), "missing corpus file ", a.name);
        CHECK(read_json_file(path.string()) == a.file);
    }
    auto modules = corpus_modules();
    for (const auto& m : modules) {
        auto path = kData / "modules" / (m.name + ".json");
        REQUIRE_MESSAGE(fs::exists(path), "missing module file ", m.name);
        auto shipped = read_json_file(path.string());
        shipped.erase("algebra");
        CHECK(shipped == m.file);
    }
}

TEST_CASE("module files load against their referenced algebras") {
    for (const auto& entry : fs::directory_iterator(kData / "modules")) {
        auto file = read_json_file(entry.path().string());
        REQUIRE(file.contains("algebra"));
        auto apath = entry.path().parent_path() / file["algebra"].get<std::string>();
        auto algebra = load_algebra_json(read_json_file(apath.string()));
        auto mod = load_module_json(file, algebra);
        CHECK(mod.normalized["dim"] == file["dim"]);
    }
}

TEST_CASE("malformed files are rejected with parse errors") {
    auto good = read_json_file((kData / "corpus" / "m2_f2.json").string());

    auto bad_field = good;
    bad_field["field"] = Json{{"kind", "Fp"}, {"p", 4}};
    CHECK_THROWS_AS(load_algebra_json(bad_field), Error);

    auto bad_scalar = good;
    bad_scalar["unit"][0] = "not-a-number";
    CHECK_THROWS_AS(load_algebra_json(bad_scalar), Error);

    auto bad_sc = good;
    bad_sc["sc"]["sparse"][0][3] = "0"; // drops e11*e11 = e11: breaks the unit law
    CHECK_THROWS_AS(load_algebra_json(bad_sc), Error);

    auto bad_radical = good;
    bad_radical["radical"] = Json::array({good["unit"]}); // the unit is not nilpotent
    CHECK_THROWS_AS(load_algebra_json(bad_radical), Error);

    // declared radical smaller than the true one is rejected in a decidable regime
    auto dualq = read_json_file((kData / "corpus" / "dual_q.json").string());
    dualq["radical"] = Json::array();
    CHECK_THROWS_AS(load_algebra_json(dualq), Error);
}

TEST_CASE("reports are deterministic apart from timing") {
    auto m2 = read_json_file((kData / "corpus" / "m2_f3.json").string());
    Options opts;
    opts.seed = 42;
    auto r1 = engine::run_check_zpd(m2, engine::Mode::Both, opts);
    auto r2 = engine::run_check_zpd(m2, engine::Mode::Both, opts);
    CHECK(strip_timing(r1.report).dump(2) == strip_timing(r2.report).dump(2));

    auto gs3 = read_json_file((kData / "corpus" / "gs3_f2.json").string());
    auto r3 = engine::run_crosscheck(gs3, opts);
    auto r4 = engine::run_crosscheck(gs3, opts);
    CHECK(strip_timing(r3.report).dump(2) == strip_timing(r4.report).dump(2));
}

TEST_CASE("shipped reports match regeneration apart from timing") {
    Options opts;
    auto algebras = corpus_algebras();
    for (const auto& name : {"m2_q", "dual_q", "f4_f2", "tri3_q", "fxf_q"}) {
        auto shipped = read_json_file((kData / "reports" / ("zpd_" + std::string(name) + ".json")).string());
        auto fresh = engine::run_check_zpd(corpus_algebra(algebras, name).file, engine::Mode::Fast, opts);
        CHECK(strip_timing(shipped) == strip_timing(fresh.report));
    }
}

TEST_CASE("every shipped report replays") {
    int count = 0;
    for (const auto& entry : fs::directory_iterator(kData / "reports")) {
        auto report = read_json_file(entry.path().string());
        auto res = engine::run_replay(report, Options{});
        CHECK_MESSAGE(res.exit_code == 0, entry.path().filename().string(), ": ", res.summary);
        ++count;
    }
    CHECK(count >= 15);
}

TEST_CASE("tampered reports fail replay") {
    auto report = read_json_file((kData / "reports" / "zpd_dual_q.json").string());
    auto tampered = report;
    tampered["evidence"]["ext_witness"]["derivation"] = Json::array({"0", "0"});
    CHECK(engine::run_replay(tampered, Options{}).exit_code != 0);

    auto flipped = report;
    flipped["verdict"] = "yes";
    CHECK(engine::run_replay(flipped, Options{}).exit_code != 0);

    auto oracle_rep = read_json_file((kData / "reports" / "oracle_m2_f2_regular.json").string());
    auto bad_cert = oracle_rep;
    bad_cert["evidence"]["certificate"]["entries"][0]["terms"] = Json::array();
    CHECK(engine::run_replay(bad_cert, Options{}).exit_code != 0);
}

TEST_CASE("both-mode reports replay even when the fast path is undecided") {
    // the fast engine says unknown on this instance, the oracle says no; the
    // stored verdict is the oracle's and must reproduce on replay
    auto algebra = read_json_file((kData / "corpus" / "dual_f2.json").string());
    auto module = read_json_file((kData / "modules" / "reg_dual_f2.json").string());
    auto res = engine::run_check_zad(algebra, module, engine::Mode::Both, Options{});
    CHECK(res.exit_code == 1);
    CHECK(res.report["fast_verdict"] == "unknown");
    CHECK(engine::run_replay(res.report, Options{}).exit_code == 0);

    auto zb = engine::run_check_zpd(read_json_file((kData / "corpus" / "gs3_f2.json").string()),
                                    engine::Mode::Both, Options{});
    CHECK(zb.exit_code == 1);
    CHECK(engine::run_replay(zb.report, Options{}).exit_code == 0);
}

TEST_CASE("oracle on an explicit module file") {
    auto algebra = read_json_file((kData / "corpus" / "m2_f2.json").string());
    auto module = read_json_file((kData / "modules" / "nat_m2_f2.json").string());
    auto res = engine::run_oracle(algebra, module, Options{});
    CHECK(res.exit_code == 0);
    CHECK(res.report["instance"]["module_kind"] == "file");
    CHECK(engine::run_replay(res.report, Options{}).exit_code == 0);
}

TEST_CASE("exit code contract") {
    auto algebras = corpus_algebras();
    Options opts;
    CHECK(engine::run_check_zpd(corpus_algebra(algebras, "m2_f2").file, engine::Mode::Fast, opts).exit_code == 0);
    CHECK(engine::run_check_zpd(corpus_algebra(algebras, "dual_q").file, engine::Mode::Fast, opts).exit_code == 1);

    // the oracle needs a finite field: usage error
    auto r = engine::guarded(
        [&] { return engine::run_oracle(corpus_algebra(algebras, "dual_q").file, std::nullopt, opts); });
    CHECK(r.exit_code == 3);

    // over budget
    Options tiny;
    tiny.budget = 4;
    auto r2 = engine::guarded(
        [&] { return engine::run_oracle(corpus_algebra(algebras, "m3_f3").file, std::nullopt, tiny); });
    CHECK(r2.exit_code == 4);

    // radical regime unsupported: S3 over F2 with no declared radical and no budget
    auto gs3 = corpus_algebra(algebras, "gs3_f2").file;
    auto r3 = engine::guarded([&] { return engine::run_radical(gs3, tiny); });
    CHECK(r3.exit_code == 5);
}
