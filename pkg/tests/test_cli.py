import json
import subprocess
import sys

import pytest

from janetbasis.cli import main


def run(*args):
    return main(["compute", *args])


def test_trivial_all_verified(tmp_path, capsys):
    path = tmp_path / "trivial.sys"
    path.write_text("vars: x y\norder: degrevlex\nx\n")
    out = tmp_path / "r.json"
    assert run("--input", str(path), "--algorithm", "all", "--verify", "--print-basis",
               "--stats-json", str(out)) == 0
    records = json.loads(out.read_text())
    assert [r["algorithm"] for r in records] == ["invbasis", "gerdt", "vargerdt"]
    for r in records:
        assert r["basis_size"] == 1
        assert r["verified"] == {"theorem5": True, "spoly": True, "ideal_equal": True,
                                 "heads_minimal": True}
    text = capsys.readouterr().out
    assert text.count("\nx\n") == 3


def test_json_schema_and_table_agree(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run("--fixture", "toy", "--stats-json", str(out)) == 0
    (r,) = json.loads(out.read_text())
    required = {"system", "algorithm", "basis_size", "reductions_to_zero", "c1", "c2", "c3",
                "c4", "rewritten", "max_degree", "cpu_ms", "verified"}
    assert required <= set(r)
    from janetbasis.engine import RunStats
    from dataclasses import fields

    assert {f.name for f in fields(RunStats)} == set(r["stats"])
    row = capsys.readouterr().out.strip().splitlines()[-1].split()
    assert row[:2] == ["toy", "vargerdt"]
    assert row[4:12] == [str(r[k]) for k in ("reductions_to_zero", "c1", "c2", "c3", "c4",
                                               "rewritten", "max_degree", "basis_size")]


def test_cyclic_criteria_none(tmp_path):
    on, off = tmp_path / "on.json", tmp_path / "off.json"
    assert run("--generate", "cyclic:4", "--verify", "--stats-json", str(on)) == 0
    assert run("--generate", "cyclic:4", "--criteria", "none", "--verify", "--autoreduce-tail",
               "--stats-json", str(off)) == 0
    a, b = json.loads(on.read_text())[0], json.loads(off.read_text())[0]
    assert a["basis_size"] == b["basis_size"]
    assert b["reductions_to_zero"] >= a["reductions_to_zero"]
    assert b["c1"] == b["c2"] == 0


def test_stats_json_stdout(capsys):
    assert run("--fixture", "toy", "--stats-json", "-") == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)[0]["system"] == "toy"
    assert "algorithm" in captured.err


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["--input", "/nonexistent.sys"],
        ["--fixture", "nope"],
        ["--generate", "cyclic:x"],
        ["--fixture", "toy", "--criteria", "c9"],
        ["--fixture", "toy", "--algorithm", "f5"],
        ["--fixture", "toy", "--time-limit", "0"],
    ],
)
def test_usage_errors(args):
    with pytest.raises(SystemExit) as exc:
        run(*args)
    assert exc.value.code == 2


def test_parse_error_reports_position(tmp_path, capsys):
    path = tmp_path / "bad.sys"
    path.write_text("vars: x y\nx + q\n")
    with pytest.raises(SystemExit):
        run("--input", str(path))
    assert "line 2, column 5" in capsys.readouterr().err


def test_timeout_exit_code(tmp_path):
    out = tmp_path / "r.json"
    assert run("--fixture", "katsura5", "--time-limit", "0.000001", "--stats-json", str(out)) == 3
    assert json.loads(out.read_text())[0]["timed_out"] is True


def test_verification_failure_exit_code(monkeypatch):
    import janetbasis.cli as cli

    def broken(F, algorithm, **kw):
        from janetbasis.engine import RunStats

        return list(F)[:1], RunStats(basis_size=1)

    monkeypatch.setattr(cli, "compute", broken)
    assert run("--fixture", "toy", "--verify") == 1


def test_order_and_preprocess(tmp_path):
    out = tmp_path / "r.json"
    assert run("--generate", "cyclic:3", "--order", "lex", "--preprocess", "autoreduce",
               "--no-rewritten", "--verify", "--stats-json", str(out)) == 0
    r = json.loads(out.read_text())[0]
    assert r["order"] == "lex" and r["rewritten_enabled"] is False


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "janetbasis", "compute", "--fixture", "toy"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "vargerdt" in proc.stdout
