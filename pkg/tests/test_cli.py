import json

import pytest

from starkcheck.cli import main, tabulate
from starkcheck.suites import ConfigError, RunConfig, parse_modulus, run_suite
from starkcheck.quadfield import Field


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_config_round_trip():
    cfg = RunConfig(field="Q(sqrt 5)", modulus="7,-1", prime=11, digits=45, padic_digits=22, seed=3)
    assert RunConfig.from_text(cfg.to_text()) == cfg


def test_config_parsing_accepts_dashes_and_comments():
    cfg = RunConfig.from_text("# a comment\npadic-digits = 12\nfield = Q\n")
    assert cfg.padic_digits == 12 and cfg.field == "Q"
    with pytest.raises(ConfigError):
        RunConfig.from_text("colour = blue\n")


def test_parse_modulus_forms():
    F = Field(5)
    assert parse_modulus(F, "7,-1").norm() == 41
    assert parse_modulus(F, "p29").norm() == 29
    assert parse_modulus(Field(1), "15").norm() == 15
    with pytest.raises(ConfigError):
        parse_modulus(F, "p29:2")
    with pytest.raises(ConfigError):
        parse_modulus(F, "x")


def test_exit_code_pass(capsys):
    code, out, _ = _run(capsys, "verify", "zeta0-exact", "--modulus", "12")
    assert code == 0
    assert json.loads(out)["passed"]


def test_exit_code_usage(capsys):
    assert _run(capsys, "verify", "no-such-suite")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2
    assert _run(capsys, "gross-stark", "--field", "Q(sqrt -1)", "--prime", "7")[0] == 2
    assert _run(capsys, "zeta0", "--field", "Q(sqrt 12)", "--modulus", "3")[0] == 2


def test_exit_code_precision(capsys, monkeypatch):
    from starkcheck import suites
    from starkcheck.padic import InsufficientPrecision

    def starved(cfg):
        raise InsufficientPrecision("log difference known only to O(5^2)")

    monkeypatch.setitem(suites.SUITES, "exp-formula", starved)
    code, out, err = _run(capsys, "verify", "exp-formula")
    assert code == 3
    assert "precision exhausted" in json.loads(out)["error"]


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["verify", "barnes-props", "--seed", "7", "--digits", "25", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_config_file(tmp_path, capsys):
    cfgfile = tmp_path / "run.cfg"
    cfgfile.write_text(RunConfig(field="Q(sqrt 5)", modulus="7,-1").to_text())
    code, out, _ = _run(capsys, "zeta0", "--config", str(cfgfile))
    assert code == 0
    assert sorted(json.loads(out)["zeta0"].values()) == ["-1", "1"]


def test_tabulate_X_mod_12():
    head, rows = tabulate("X", RunConfig(modulus="12"))
    assert len(rows) == 4 and head[0] == "modulus"


def test_tabulate_zeta0_example_field():
    head, rows = tabulate("zeta0", RunConfig(field="Q(sqrt 5)", modulus="7,-1"))
    assert sorted(r[3] for r in rows) == ["-1", "1"]


def test_tabulate_empty_range(capsys):
    code, out, _ = _run(capsys, "tabulate", "zeta0", "--range", "9:3")
    assert code == 0
    assert out.startswith("# columns:")
    assert len(out.strip().splitlines()) == 2


def test_tabulate_json(capsys):
    code, out, _ = _run(capsys, "tabulate", "gamma-p", "--modulus", "4", "--prime", "5", "--format", "json",
                        "--padic-digits", "10")
    assert code == 0
    assert len(json.loads(out)["rows"]) == 4


def test_run_suite_unknown():
    with pytest.raises(ConfigError):
        run_suite("nope")


def test_barnes_and_pgamma_commands(capsys):
    code, out, _ = _run(capsys, "barnes", "--z", "1/2", "--v", "1")
    assert code == 0 and json.loads(out)["value"].startswith("-0.3465735902")
    code, out, _ = _run(capsys, "pgamma", "--x", "6", "--prime", "5", "--padic-digits", "4")
    assert code == 0 and "Gamma_p" in json.loads(out)
    assert _run(capsys, "pgamma", "--x", "6")[0] == 2
