"""Command-line interface: subcommands, exit codes, output formats."""

import json

import pytest

from ordrel.cli import main

EXP1 = {"family": "exponential", "params": {"rate": 2.0}}
EXP2 = {"family": "exponential", "params": {"rate": 1.0}}


@pytest.fixture
def spec_file(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)

    return write


class TestDist:
    def test_csv_points(self, spec_file, capsys):
        path = spec_file("d.json", EXP1)
        assert main(["dist", "-s", path, "--fn", "sf", "--x", "0.5", "--x", "1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "x,value"
        assert float(lines[1].split(",")[1]) == pytest.approx(0.36787944117, rel=1e-9)

    def test_json_format(self, spec_file, capsys):
        path = spec_file("d.json", EXP1)
        assert main(["dist", "-s", path, "--fn", "cdf", "--x", "1",
                     "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload[0]["x"] == 1.0

    def test_system_spec(self, spec_file, capsys):
        path = spec_file("s.json", {"kind": "series_phr", "components": [
            {"baseline": EXP1, "prop": 1.0}, {"baseline": EXP2, "prop": 1.0}]})
        assert main(["dist", "-s", path, "--fn", "hazard", "--x", "1"]) == 0
        out = capsys.readouterr().out
        assert float(out.strip().splitlines()[1].split(",")[1]) == pytest.approx(3.0)

    def test_grid_file(self, spec_file, capsys):
        dpath = spec_file("d.json", EXP1)
        gpath = spec_file("g.json", {"kind": "x", "lo": 0.0, "hi": 1.0, "n": 64})
        assert main(["dist", "-s", dpath, "--fn", "sf", "--grid", gpath]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 65

    def test_env_default_grid(self, spec_file, capsys, monkeypatch):
        dpath = spec_file("d.json", EXP1)
        gpath = spec_file("g.json", {"kind": "x", "lo": 0.0, "hi": 2.0, "n": 64})
        monkeypatch.setenv("ORDREL_DEFAULT_GRID", gpath)
        assert main(["dist", "-s", dpath, "--fn", "sf"]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 65

    def test_no_points_is_usage_error(self, spec_file, capsys, monkeypatch):
        monkeypatch.delenv("ORDREL_DEFAULT_GRID", raising=False)
        path = spec_file("d.json", EXP1)
        assert main(["dist", "-s", path, "--fn", "sf"]) == 2

    def test_out_file(self, spec_file, tmp_path):
        path = spec_file("d.json", EXP1)
        out = tmp_path / "out.csv"
        assert main(["dist", "-s", path, "--fn", "sf", "--x", "1",
                     "--out", str(out)]) == 0
        assert out.read_text().startswith("x,value")


class TestOrder:
    def test_holds_exit_zero(self, spec_file, capsys):
        a, b = spec_file("a.json", EXP1), spec_file("b.json", EXP2)
        assert main(["order", "--relation", "hr", "-s", a, "-s", b]) == 0
        assert json.loads(capsys.readouterr().out)["outcome"] == "holds"

    def test_fails_exit_one(self, spec_file, capsys):
        a, b = spec_file("a.json", EXP2), spec_file("b.json", EXP1)
        assert main(["order", "--relation", "st", "-s", a, "-s", b]) == 1
        assert json.loads(capsys.readouterr().out)["outcome"] == "fails"

    def test_inconclusive_exit_three(self, spec_file, capsys):
        a, b = spec_file("a.json", EXP1), spec_file("b.json", EXP2)
        g = spec_file("g.json", {"kind": "x", "lo": 400.0, "hi": 500.0, "n": 64})
        assert main(["order", "--relation", "hr", "-s", a, "-s", b,
                     "--grid", g]) == 3

    def test_one_spec_is_usage_error(self, spec_file):
        a = spec_file("a.json", EXP1)
        assert main(["order", "--relation", "st", "-s", a]) == 2


class TestTheorem:
    def test_consistent_case(self, spec_file, capsys):
        path = spec_file("c.json", {"id": "T6", "scenario": {
            "theta": 1.5, "alphas": [2.0, 2.0], "alphas_star": [1.0, 2.5]}})
        assert main(["theorem", "-s", path]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["consistent"] is True

    def test_csv_summary(self, spec_file, capsys):
        path = spec_file("c.json", {"id": "Ex2", "scenario": {}})
        assert main(["theorem", "-s", path, "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].startswith("id,hypothesis_satisfied")
        assert lines[1].startswith("Ex2,True")

    def test_schema_violation_exit_two(self, spec_file, capsys):
        path = spec_file("c.json", {"id": "T6", "scenario": {"theta": 1.0}})
        assert main(["theorem", "-s", path]) == 2
        assert "error:" in capsys.readouterr().err

    def test_malformed_json_exit_two(self, tmp_path, capsys):
        p = tmp_path / "bad.json"
        p.write_text("{oops")
        assert main(["theorem", "-s", str(p)]) == 2
        assert "error:" in capsys.readouterr().err


class TestScan:
    def test_clean_scan_exit_zero(self, spec_file, capsys):
        path = spec_file("scan.json", {"id": "T1", "budget": 5, "seed": 3})
        assert main(["scan", "-s", path]) == 0
        result = json.loads(capsys.readouterr().out)
        assert result["counts"]["inconsistent"] == 0

    def test_seed_override(self, spec_file, capsys):
        path = spec_file("scan.json", {"id": "T5", "budget": 4, "seed": 1})
        assert main(["scan", "-s", path, "--seed", "2"]) == 0
        assert json.loads(capsys.readouterr().out)["seed"] == 2

    def test_csv_rows(self, spec_file, capsys):
        path = spec_file("scan.json", {"id": "T6", "budget": 4})
        assert main(["scan", "-s", path, "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 5  # header + one row per case


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_unknown_relation(self, spec_file, capsys):
        a = spec_file("a.json", EXP1)
        assert main(["order", "--relation", "total", "-s", a, "-s", a]) == 2
