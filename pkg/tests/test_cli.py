import csv
import io
import json

import pytest
from hypothesis import given, settings, strategies as st

from bouwer.cli import main, parse_range
from bouwer.formats import parse_edge_list, parse_labels, parse_permutation
from bouwer.report import CSV_COLUMNS, Report, SweepSpec, analyze, reports_to_csv, run_sweep

from conftest import graph


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_files(tmp_path, capsys):
    out = tmp_path / "b269.edges"
    code, _, _ = run(capsys, "generate", 2, 6, 9, "--out", out)
    assert code == 0
    edges = parse_edge_list(out.read_text())
    labels = parse_labels((tmp_path / "b269.edges.labels").read_text())
    assert len(edges) == 108 and len(labels) == 54


def test_generate_stdout_formats(capsys):
    code, text, _ = run(capsys, "generate", 2, 2, 3)
    assert code == 0 and len(text.splitlines()) == 12
    code, text, _ = run(capsys, "generate", 2, 2, 3, "--format", "labels")
    assert code == 0 and text.splitlines() == [
        "0: (0; 0)", "1: (0; 1)", "2: (0; 2)", "3: (1; 0)", "4: (1; 1)", "5: (1; 2)"]


def test_generate_invalid(capsys):
    code, _, err = run(capsys, "generate", 2, 3, 9)
    assert code == 1 and "NotUnit" in err


def test_usage_error(capsys):
    assert run(capsys, "classify", "two", 6, 9)[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "sweep", "--k", "a..b")[0] == 1


@pytest.mark.parametrize("triple, kind, evidence", [
    ((2, 6, 9), "HalfArcTransitive", "certificate:(2,2,3):1/0"),
    ((2, 6, 21), "ArcTransitive", "explicit:b2621"),
    ((2, 6, 7), "ArcTransitive", "explicit:b2m7"),
])
def test_classify(tmp_path, capsys, triple, kind, evidence):
    path = tmp_path / "r.json"
    code, text, _ = run(capsys, "classify", *triple, "--oracle", "--out", path)
    assert code == 0
    assert kind in text and evidence in text
    rep = Report.from_json(path.read_text())
    assert rep.verdict == kind and rep.agree and rep.status == "agree"
    assert rep.oracle in ("reversible", "irreversible")


def test_classify_undecided_exit(capsys, monkeypatch):
    import bouwer.certifier as cert

    monkeypatch.setattr(cert, "explicit_reversal", lambda p: None)
    code, text, _ = run(capsys, "classify", 2, 6, 7, "--oracle", "--oracle-budget", 3)
    assert code == 3 and "undecided" in text


def test_classify_disagreement_exit(capsys, monkeypatch):
    import bouwer.report as report
    from bouwer.certifier import VerdictKind

    monkeypatch.setattr(report, "predicted_verdict", lambda p: VerdictKind.ARC_TRANSITIVE)
    code, _, _ = run(capsys, "classify", 2, 6, 9)
    assert code == 2


def test_oracle_command(tmp_path, capsys):
    path = tmp_path / "perm.txt"
    code, text, _ = run(capsys, "oracle", 2, 4, 5, "--out", path)
    assert code == 0 and "reversible" in text
    perm = parse_permutation(path.read_text())
    g = graph(2, 4, 5)
    assert perm[0] == g.params.one and perm[g.params.one] == 0
    code, text, _ = run(capsys, "oracle", 2, 6, 9)
    assert code == 0 and "irreversible" in text
    assert run(capsys, "oracle", 2, 6, 9, "--oracle-budget", 2)[0] == 3


def test_profile(tmp_path, capsys):
    path = tmp_path / "p.json"
    code, text, _ = run(capsys, "profile", 2, 10, 11, "--out", path)
    assert code == 0 and "girth=6" in text
    d = json.loads(path.read_text())
    assert set(d["buckets"]["from_v"]) == {"0", "1", "2"}
    code, text, _ = run(capsys, "profile", 2, 4, 15)
    assert "girth=4" in text
    code, text, _ = run(capsys, "profile", 3, 6, 9)
    assert "3-arc cases (total 150" in text


def test_sweep_csv(tmp_path, capsys):
    csv_path, out_dir = tmp_path / "s.csv", tmp_path / "reports"
    code, _, _ = run(capsys, "sweep", "--k", "2..2", "--m", "2..6", "--n", "2..21",
                     "--oracle", "--oracle-max-order", 50, "--csv", csv_path, "--out", out_dir)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(csv_path.read_text())))
    assert list(rows[0]) == CSV_COLUMNS
    assert [(r["k"], r["m"], r["n"]) for r in rows] == [
        ("2", "2", "3"), ("2", "3", "7"), ("2", "4", "3"), ("2", "4", "5"), ("2", "4", "15"),
        ("2", "6", "3"), ("2", "6", "7"), ("2", "6", "9"), ("2", "6", "21")]
    assert all(r["agree"] == "yes" for r in rows)
    assert all((r["oracle"] != "skipped") == (int(r["order"]) <= 50) for r in rows)
    assert all(r["ms_elapsed"] == "" for r in rows)
    assert len(list(out_dir.glob("*.json"))) == len(rows)


def test_sweep_empty(capsys):
    code, text, _ = run(capsys, "sweep", "--k", "2", "--m", "7..5")
    assert code == 0 and text.splitlines() == [",".join(CSV_COLUMNS)]


def test_sweep_deterministic():
    spec = SweepSpec((2, 3), (2, 8), (2, 21), max_order=500, oracle_max_order=60)
    first = reports_to_csv(run_sweep(spec))
    assert first == reports_to_csv(run_sweep(spec))
    assert first == reports_to_csv(run_sweep(spec, jobs=2))


def test_sweep_skips_large_and_invalid():
    spec = SweepSpec((2, 2), (6, 6), (2, 70), max_order=200)
    assert list(spec.triples()) == [(2, 6, 3), (2, 6, 7), (2, 6, 9), (2, 6, 21)]


def test_sweep_records_row_errors(monkeypatch):
    import bouwer.report as report

    def boom(*a, **kw):
        raise RuntimeError("boom")

    monkeypatch.setattr(report, "analyze", boom)
    reps = run_sweep(SweepSpec((2, 2), (3, 3), (7, 7)))
    assert reps[0].status == "error" and "boom" in reps[0].csv_row()["evidence"]


def test_timing_is_opt_in():
    assert analyze(2, 6, 9).ms_elapsed is None
    assert analyze(2, 6, 9, timing=True).ms_elapsed >= 0


def test_parse_range():
    assert parse_range("2..5") == (2, 5)
    assert parse_range("7") == (7, 7)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([(2, 6, 9), (2, 6, 21), (2, 2, 3), (3, 4, 5), (2, 4, 15)]), st.booleans())
def test_report_round_trip(triple, oracle):
    rep = analyze(*triple, oracle=oracle)
    assert Report.from_json(rep.to_json()) == rep
    assert rep.agree == (rep.verdict == rep.predicted)


def test_oracle_contradiction_is_a_disagreement(monkeypatch, capsys):
    import bouwer.report as report
    from bouwer.oracle import OracleResult

    monkeypatch.setattr(report, "oracle_arc_reversal", lambda g, budget: OracleResult(True, None, 1))
    rep = analyze(2, 6, 9, oracle=True)
    assert rep.agree and rep.status == "disagree" and rep.oracle == "reversible"
    assert run(capsys, "classify", 2, 6, 9, "--oracle")[0] == 2
