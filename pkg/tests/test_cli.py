"""Golden runs of the documented CLI examples (JSON schema "1")."""

import json

import pytest

from chaincodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


GR43 = ["--family", "gr", "--p", "2", "--e", "2", "--m", "3",
        "--n", "5", "--s", "1", "--lambda", "1"]
Z4N = ["--family", "gr", "--p", "2", "--e", "2", "--m", "1",
       "--n", "1", "--s", "2", "--lambda", "-1"]


def test_factor_golden(capsys):
    code, data = run(capsys, "factor", *GR43)
    assert code == 0 and data["schema"] == "1"
    assert data["beta_zero"] is True
    assert data["length"] == 10
    comps = data["components"]
    assert [c["degree"] for c in comps] == [1, 4]
    assert comps[0]["f_str"] == "x + [3, 0, 0]"
    assert comps[1]["f"] == [[1, 0, 0]] * 5   # x^4 + x^3 + x^2 + x + 1


def test_classify_census_golden(capsys):
    code, data = run(capsys, "classify", *GR43, "--component", "1", "--table")
    assert code == 0
    assert data["census"] == {
        "I": 2, "II": 2, "III": 8, "IV": 1, "chain": 0, "total": 13
    }
    assert len(data["ideals"]) == 13
    assert any("Non-principal" in line for line in data["table"])


def test_size_and_dist_golden(capsys):
    args = ["--family", "gr", "--p", "2", "--e", "2", "--m", "1",
            "--n", "1", "--s", "2", "--lambda", "1",
            "--type", "III", "--omega", "2", "--t", "1", "--G", "[[1]]"]
    code, data = run(capsys, "size", *args)
    assert code == 0 and data["size"] == 16 and data["ideal"]["kappa"] == 2
    code, data = run(capsys, "dist", *args, "--metric", "rt")
    assert code == 0 and data["distance"] == 3
    code, data = run(capsys, "dist", *args, "--metric", "hamming")
    assert code == 0 and data["distance"] == 2


def test_wdist_golden(capsys):
    # [PAPER] reference RT distributions over Z_4, negacyclic length 4
    code, data = run(capsys, "wdist", *Z4N, "--type", "chain", "--nu", "1")
    assert code == 0 and data["weights"] == [1, 1, 6, 24, 96]
    code, data = run(capsys, "wdist", *Z4N, "--type", "chain", "--nu", "2")
    assert code == 0 and data["weights"] == [1, 1, 2, 12, 48]


def test_dual_golden(capsys):
    code, data = run(capsys, "dual", *Z4N, "--type", "chain", "--nu", "3")
    assert code == 0
    assert data["dual_ideal"] == {"kind": "chain", "j": 1, "nu": 5}
    assert data["dual_size"] == 4**4 // 2 ** (8 - 3)


def test_chain_subcommand_z8(capsys):
    code, data = run(capsys, "chain", "--family", "gr", "--p", "2", "--e", "3",
                     "--m", "1", "--n", "1", "--s", "1", "--lambda", "3")
    assert code == 0
    assert [i["size"] for i in data["ideals"]] == [64, 32, 16, 8, 4, 2, 1]
    assert [i["d_RT"] for i in data["ideals"]] == [1, 1, 1, 1, 1, 2, 0]


def test_isodual_subcommand(capsys):
    code, data = run(capsys, "isodual", "--family", "fu", "--p", "2", "--e", "2",
                     "--m", "1", "--n", "1", "--s", "2", "--lambda", "1")
    assert code == 0 and data["count"] == 7


def test_verify_exit_codes(capsys):
    base = ["--family", "gr", "--p", "2", "--e", "2", "--m", "1",
            "--n", "1", "--s", "1", "--lambda", "1"]
    code, data = run(capsys, "verify", *base)
    assert code == 0 and data["ok"] is True
    code, data = run(capsys, "verify", *base, "--inject-size-error")
    assert code == 2 and data["ok"] is False
    statuses = {c["status"] for c in data["checks"]}
    assert "fail" in statuses


def test_domain_errors_exit_1(capsys):
    bad = ["--family", "gr", "--p", "2", "--e", "2", "--m", "1",
           "--n", "1", "--s", "1", "--lambda", "2"]   # 2 is not a unit in Z_4
    code, data = run(capsys, "factor", *bad)
    assert code == 1 and "error" in data
    bad_n = ["--family", "gr", "--p", "2", "--e", "2", "--m", "1",
             "--n", "2", "--s", "1", "--lambda", "1"]  # n not coprime to p
    code, data = run(capsys, "factor", *bad_n)
    assert code == 1 and "error" in data


def test_lambda_json_literal(capsys):
    # fu element literal: 1 + u over F_2[u]/u^2 (unit gamma-part, chain case)
    args = ["--family", "fu", "--p", "2", "--e", "2", "--m", "1",
            "--n", "1", "--s", "1", "--lambda", "[[1],[1]]"]
    code, data = run(capsys, "verify", *args)
    assert code == 0 and data["ok"] is True


def test_out_file(tmp_path, capsys):
    out = tmp_path / "result.json"
    code = main(["size", *Z4N, "--type", "chain", "--nu", "0", "--out", str(out)])
    capsys.readouterr()
    assert code == 0
    data = json.loads(out.read_text())
    assert data["size"] == 4**4
