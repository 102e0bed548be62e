"""CLI contract: flags, output shapes, exit codes, and byte determinism."""

import json

import pytest
from click.testing import CliRunner

from boundlab.cli import main

REP3 = "2 3 1\n1 1 1\n"


@pytest.fixture()
def runner():
    return CliRunner()


def _write_rep3(tmp_path):
    path = tmp_path / "rep3.txt"
    path.write_text(REP3, encoding="utf-8")
    return str(path)


def test_threshold_pstar_text(runner):
    res = runner.invoke(main, ["threshold", "pstar", "--q", "2", "--lambda",
                               "0.533", "--delta", "0.1"])
    assert res.exit_code == 0
    assert "value" in res.output
    assert "bracket" in res.output
    assert "residual" in res.output
    value = float(res.output.split("value")[1].split("=")[1].split()[0])
    assert abs(value - 0.077) <= 2e-3


def test_threshold_json_roundtrip(runner):
    res = runner.invoke(main, ["threshold", "pstar", "--q", "2", "--lambda",
                               "0.5", "--delta", "0.1", "--format", "json"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["kind"] == "pstar"
    assert payload["params"] == {"q": 2, "lambda": 0.5, "delta": 0.1}
    lo, hi = payload["bracket"]
    assert lo <= payload["value"] <= hi
    assert isinstance(payload["at_boundary"], bool)


def test_threshold_plain_float_kinds(runner):
    res = runner.invoke(main, ["threshold", "johnson", "--q", "2",
                               "--delta", "0.1", "--format", "json"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert abs(payload["value"] - 0.0528) <= 5e-4
    assert payload["bracket"] is None


def test_threshold_domain_error_exits_2(runner):
    res = runner.invoke(main, ["threshold", "pstar", "--q", "2", "--lambda",
                               "0", "--delta", "0.1"])
    assert res.exit_code == 2
    assert "lambda" in res.output


def test_threshold_missing_flag_exits_2(runner):
    res = runner.invoke(main, ["threshold", "pstar", "--q", "2"])
    assert res.exit_code == 2


def test_threshold_extraneous_flag_exits_2(runner):
    res = runner.invoke(main, ["threshold", "johnson", "--q", "2", "--delta",
                               "0.1", "--lambda", "0.5"])
    assert res.exit_code == 2


def test_threshold_unknown_kind_exits_2(runner):
    res = runner.invoke(main, ["threshold", "nope", "--q", "2"])
    assert res.exit_code == 2


def test_figure_writes_deterministic_csv(runner, tmp_path):
    out1 = str(tmp_path / "a.csv")
    out2 = str(tmp_path / "b.csv")
    for out in (out1, out2):
        res = runner.invoke(main, ["figure", "ru-q15", "--points", "24",
                                   "-o", out])
        assert res.exit_code == 0, res.output
    b1 = open(out1, "rb").read()
    b2 = open(out2, "rb").read()
    assert b1 == b2
    text = b1.decode("utf-8")
    assert text.startswith("# command: boundlab figure ru-q15 --points 24\n")
    assert "# version:" in text
    header = [ln for ln in text.splitlines() if not ln.startswith("#")][0]
    assert header == "delta,ru_q15,johnson_q15,half_delta"


def test_figure_p_list_flag(runner, tmp_path):
    out = str(tmp_path / "f.csv")
    res = runner.invoke(main, ["figure", "F-lambda", "--points", "16",
                               "--p-list", "0.05,0.1", "-o", out])
    assert res.exit_code == 0
    header = [ln for ln in open(out, encoding="utf-8")
              if not ln.startswith("#")][0].strip()
    assert header == "gamma,F_p0.05,F_p0.1"


def test_figure_bad_p_list_exits_2(runner, tmp_path):
    res = runner.invoke(main, ["figure", "F-lambda", "--p-list", "zebra",
                               "-o", str(tmp_path / "x.csv")])
    assert res.exit_code == 2


def test_figure_unknown_id_exits_2(runner):
    res = runner.invoke(main, ["figure", "nope"])
    assert res.exit_code == 2


def test_verify_exponents_exit_zero(runner):
    res = runner.invoke(main, ["verify", "exponents"])
    assert res.exit_code == 0, res.output
    assert "worst margin" in res.output
    assert "0 violated" in res.output


def test_verify_unknown_suite_exits_2(runner):
    res = runner.invoke(main, ["verify", "nope"])
    assert res.exit_code == 2


def test_simulate_text_report(runner, tmp_path):
    path = _write_rep3(tmp_path)
    args = ["simulate", path, "--channel", "qsc", "--p", "0.1", "--trials",
            "50000", "--seed", "7"]
    res = runner.invoke(main, args)
    assert res.exit_code == 0, res.output
    assert "block" in res.output and "bit" in res.output
    assert "ci95" in res.output
    assert "poltyrev" in res.output
    assert "exact_block" in res.output
    # byte-identical on rerun
    res2 = runner.invoke(main, args)
    assert res2.output == res.output


def test_simulate_json_schema(runner, tmp_path):
    path = _write_rep3(tmp_path)
    res = runner.invoke(main, ["simulate", path, "--channel", "qec",
                               "--lambda", "0.5", "--trials", "20000",
                               "--seed", "3", "--format", "json"])
    assert res.exit_code == 0, res.output
    payload = json.loads(res.output)
    assert payload["code"]["n"] == 3
    assert payload["channel"]["kind"] == "qec"
    assert payload["block"]["trials"] == 20000
    assert payload["ambiguity"] is not None
    assert payload["bounds"]["exact_ambiguity"] == pytest.approx(0.125)


def test_simulate_bawgn_sphere_bound_shown(runner, tmp_path):
    path = _write_rep3(tmp_path)
    res = runner.invoke(main, ["simulate", path, "--channel", "bawgn",
                               "--sigma2", "0.5", "--trials", "20000"])
    assert res.exit_code == 0, res.output
    assert "sphere" in res.output


def test_simulate_zero_trials_exits_2(runner, tmp_path):
    path = _write_rep3(tmp_path)
    res = runner.invoke(main, ["simulate", path, "--channel", "qsc", "--p",
                               "0.1", "--trials", "0"])
    assert res.exit_code == 2
    assert "trials" in res.output


def test_simulate_missing_channel_param_exits_2(runner, tmp_path):
    path = _write_rep3(tmp_path)
    res = runner.invoke(main, ["simulate", path, "--channel", "qsc",
                               "--trials", "100"])
    assert res.exit_code == 2
    res = runner.invoke(main, ["simulate", path, "--channel", "qsc", "--p",
                               "0.1", "--sigma2", "1.0", "--trials", "100"])
    assert res.exit_code == 2


def test_simulate_malformed_code_file_exits_2(runner, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 3 2\n1 1 1\n1 1 1\n", encoding="utf-8")
    res = runner.invoke(main, ["simulate", str(path), "--channel", "qsc",
                               "--p", "0.1", "--trials", "100"])
    assert res.exit_code == 2


def test_simulate_missing_file_exits_2(runner, tmp_path):
    res = runner.invoke(main, ["simulate", str(tmp_path / "none.txt"),
                               "--channel", "qsc", "--p", "0.1",
                               "--trials", "100"])
    assert res.exit_code == 2
