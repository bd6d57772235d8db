"""Smoke tests for the Python bindings: the pinned verdicts, oracle
agreement, and report replay, driven through the same engine as the CLI."""

import os
import pathlib

import pytest

import zadkit

DATA = pathlib.Path(os.environ.get("ZADKIT_DATA_DIR", "data"))


def test_constructors_and_properties():
    m2 = zadkit.matrix_algebra(2, 2)
    assert m2.dim == 4
    assert m2.field == "F2"
    assert "e12" in m2.labels

    t3 = zadkit.triangular_algebra(3, "Q")
    assert t3.dim == 6
    assert zadkit.validate(t3)["exit_code"] == 0


def test_known_zpd_verdicts():
    assert zadkit.check_zpd(zadkit.matrix_algebra(2, "Q"))["exit_code"] == 0
    assert zadkit.check_zpd(zadkit.matrix_algebra(3, 3))["exit_code"] == 0

    dual = zadkit.poly_quotient(["0", "0", "1"], "Q")
    res = zadkit.check_zpd(dual)
    assert res["exit_code"] == 1
    witness = res["report"]["evidence"]["ext_witness"]
    assert witness["derivation"] == ["0", "1"]

    f4 = zadkit.poly_quotient(["1", "1", "1"], 2)
    assert zadkit.check_zpd(f4)["exit_code"] == 1

    s3 = zadkit.group_algebra(zadkit.symmetric3_table(), 3)
    assert zadkit.check_zpd(s3, mode="both")["exit_code"] == 0


def test_oracle_and_fast_paths_agree():
    for make in (
        lambda: zadkit.matrix_algebra(2, 2),
        lambda: zadkit.poly_quotient(["0", "0", "1"], 2),
        lambda: zadkit.triangular_algebra(2, 2),
        lambda: zadkit.direct_sum(zadkit.matrix_algebra(1, 2), zadkit.matrix_algebra(2, 2)),
    ):
        a = make()
        both = zadkit.check_zpd(a, mode="both")
        assert both["exit_code"] in (0, 1)
        assert both["report"]["modes_agree"] is True


def test_radical_and_regular_module():
    t2 = zadkit.triangular_algebra(2, "Q")
    assert len(t2.radical_basis()) == 1
    reg = zadkit.regular_module(t2)
    assert reg.dim == 3
    res = zadkit.check_zad(t2, reg)
    assert res["exit_code"] == 0
    assert res["report"]["method"] == "span-certificate"


def test_replay_roundtrip_and_tamper():
    dual = zadkit.poly_quotient(["0", "0", "1"], 2)
    res = zadkit.oracle(dual)
    assert res["exit_code"] == 1
    report = res["report"]
    assert zadkit.replay(report)["exit_code"] == 0
    tampered = dict(report)
    tampered["verdict"] = "yes"
    assert zadkit.replay(tampered)["exit_code"] != 0


def test_crosscheck():
    t2 = zadkit.triangular_algebra(2, 2)
    res = zadkit.crosscheck(t2)
    assert res["exit_code"] == 0
    assert res["report"]["evidence"]["all_agree"] is True


def test_invalid_inputs_raise():
    with pytest.raises(zadkit.ZadkitError):
        zadkit.poly_quotient(["1", "1"], 4)  # 4 is not prime
    with pytest.raises(zadkit.ZadkitError):
        zadkit.Algebra({"format": 1})  # missing everything


@pytest.mark.skipif(not DATA.exists(), reason="corpus directory not available")
def test_shipped_corpus_loads():
    a = zadkit.load_algebra(str(DATA / "corpus" / "gs3_f2.json"))
    assert a.dim == 6
    res = zadkit.check_zpd(a, mode="both")
    assert res["exit_code"] == 1  # F2[S3] is not zpd
    assert res["report"]["modes_agree"] is True
