import json

import pytest

from iscwiener.cli import run

JSON_KEYS = {"p", "q", "m", "n", "case", "N", "E", "W", "mu_exact", "mu_decimal", "methods"}


def test_compute_all_methods(capsys):
    assert run(["compute", "--p", "1", "--q", "1", "--m", "1", "--n", "1",
                "--method", "all", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert set(out) == JSON_KEYS
    assert out["W"] == "8" and out["mu_exact"] == "4/3"
    assert set(out["methods"]) == {"bfs", "cuts", "tables", "closed"}
    assert all(v["W"] == "8" for v in out["methods"].values())


def test_compute_single_method_text(capsys):
    assert run(["compute", "--p", "2", "--q", "2", "--m", "1", "--n", "4", "--method", "closed"]) == 0
    text = capsys.readouterr().out
    assert "W  = 318" in text and "53/20" in text


def test_compute_csv(capsys):
    assert run(["compute", "--p", "1", "--q", "1", "--m", "3", "--n", "3", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("p,q,m,n,case,N,E,method,W,mu_exact")
    assert len(lines) == 5
    assert all(",786,262/77," in line for line in lines[1:])


def test_parity_violation_exit_code(capsys):
    assert run(["compute", "--p", "2", "--q", "3", "--m", "1", "--n", "4"]) == 1
    assert "ParityViolation" in capsys.readouterr().err


def test_usage_error_exit_code(capsys):
    assert run(["compute", "--p", "2"]) == 1
    assert run(["nosuchcommand"]) == 1
    assert run(["family"]) == 1


def test_family_hex(capsys):
    assert run(["family", "--hex", "2", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["W"] == "318" and out["mu_exact"] == "53/20" and out["mu_decimal"] == "2.65"
    assert set(out["methods"]) == {"family", "closed"}


def test_family_trap_and_bitrap(capsys):
    assert run(["family", "--trap", "2", "2", "--bfs"]) == 0
    assert "W  = 25" in capsys.readouterr().out
    assert run(["family", "--bitrap", "9", "3", "5", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert (out["p"], out["q"], out["m"], out["n"]) == (3, 5, 1, 9)


def test_cuts_csv(capsys):
    assert run(["cuts", "--p", "2", "--q", "2", "--m", "1", "--n", "4"]) == 0
    geo = capsys.readouterr().out.splitlines()
    assert run(["cuts", "--p", "2", "--q", "2", "--m", "1", "--n", "4", "--source", "tables"]) == 0
    tab = capsys.readouterr().out.splitlines()
    assert geo[0] == tab[0] == "family,k,edge_count,f_small,f_comp"
    assert len(geo) == len(tab) == 8
    strip = lambda row: row.split(",")[:2] + row.split(",")[3:]
    assert [strip(r) for r in geo[1:]] == [strip(r) for r in tab[1:]]


def test_export_formats(capsys, tmp_path):
    assert run(["export", "--p", "1", "--q", "1", "--m", "1", "--n", "1"]) == 0
    assert capsys.readouterr().out.startswith("0,0: 1,0 0,1")
    path = tmp_path / "g.dot"
    assert run(["export", "--p", "2", "--q", "2", "--m", "1", "--n", "4",
                "--format", "dot", "--out", str(path)]) == 0
    assert path.read_text().count(" -- ") == 23


def test_verify_small(capsys):
    assert run(["verify", "--max-n", "6", "--max-m", "3"]) == 0
    assert "0 mismatches" in capsys.readouterr().out


def test_verify_parallel_matches_serial(capsys):
    assert run(["verify", "--max-n", "5", "--max-m", "2", "--jobs", "2"]) == 0
    par = capsys.readouterr().out
    assert run(["verify", "--max-n", "5", "--max-m", "2"]) == 0
    assert capsys.readouterr().out == par


def test_verify_reports_mismatch(monkeypatch, capsys):
    import iscwiener.report as report

    original = report.table_cuts

    def corrupted(params):
        cuts = original(params)
        if params.as_tuple() == (2, 2, 1, 4):
            c = cuts[0]
            cuts[0] = type(c)(c.family, c.k, c.f_small + 1, c.f_comp - 1)
        return cuts

    monkeypatch.setattr(report, "table_cuts", corrupted)
    assert run(["verify", "--max-n", "4", "--max-m", "1"]) == 2
    out = capsys.readouterr().out
    assert "MISMATCH ISC(2,2,1,4)" in out
    assert "family='H1', k=1" in out
    assert "tables=" in out and "bfs=318" in out


def test_bench(capsys):
    assert run(["bench", "--p", "2", "--q", "2", "--m", "1", "--n", "4",
                "--repeat", "2", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert {v["W"] for v in out["methods"].values()} == {"318"}
