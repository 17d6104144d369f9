"""Command-line surface: exit codes and output shapes."""

import json

import pytest

from helpkit.chartable import parse_table, serialize_table
from helpkit.cli import main
from helpkit.report import _data_text


@pytest.fixture()
def a5_path(tmp_path):
    p = tmp_path / "a5.json"
    p.write_text(_data_text("a5.json"), encoding="utf-8")
    return str(p)


def test_validate_clean(a5_path, capsys):
    assert main(["validate", a5_path]) == 0
    out = capsys.readouterr().out
    assert "orthogonality: pass" in out


def test_validate_partial_table_notice(tmp_path, capsys):
    p = tmp_path / "co3.json"
    p.write_text(_data_text("co3.json"), encoding="utf-8")
    assert main(["validate", str(p)]) == 0
    assert "partial table" in capsys.readouterr().out


def test_validate_truncated_file(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text(_data_text("a5.json")[:120], encoding="utf-8")
    assert main(["validate", str(p)]) == 1
    assert "line" in capsys.readouterr().err


def test_validate_bad_invariant(tmp_path, capsys):
    doc = json.loads(_data_text("a5.json"))
    doc["classes"][1]["order"] = 3
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    assert main(["validate", str(p)]) == 1


def test_usage_error_exit_code():
    assert main(["solve", "--table", "co3"]) == 2  # missing --order


def test_solve_writes_canonical_tuples(tmp_path, capsys):
    out = tmp_path / "sol.txt"
    assert main(["solve", "--table", "co3", "--order", "5", "--replay",
                 "--out", str(out)]) == 0
    text = out.read_text()
    assert "(-4,5)" in text and "(1,0)" in text
    assert "rationally conjugate: no" in text


def test_solve_rational_verdict(capsys):
    assert main(["solve", "--table", "co3", "--order", "7", "--replay"]) == 0
    out = capsys.readouterr().out
    assert "(1)" in out and "rationally conjugate: yes" in out


def test_solve_a5_order_2(capsys):
    assert main(["solve", "--table", "a5", "--order", "2"]) == 0
    out = capsys.readouterr().out
    assert "(1)" in out and "rationally conjugate: yes" in out


def test_budget_exit_code(capsys):
    assert main(["solve", "--table", "co1", "--order", "23", "--replay",
                 "--budget", "10"]) == 3


def test_rule_out_infeasible(capsys):
    assert main(["rule-out", "--table", "co3", "--primes", "11,23"]) == 0
    out = capsys.readouterr().out
    assert "infeasible" in out
    assert "(2)[*]" in out


def test_rule_out_spectrum_order_rejected(capsys):
    assert main(["rule-out", "--table", "co3", "--primes", "2,11"]) == 1
    assert "order 22" in capsys.readouterr().err


def test_rule_out_bad_primes_usage(capsys):
    assert main(["rule-out", "--table", "co3", "--primes", "whoops"]) == 2


def test_orders_command(capsys):
    assert main(["orders", "--table", "a5"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "2 in-spectrum" in out and "30 out-of-spectrum" in out


def test_report_skip_flag(capsys):
    # skip everything heavy; keep two cheap checks to prove wiring
    keep = {"co3-order2", "co3-order5"}
    from helpkit.report import load_ruleout_manifest, load_solution_manifest

    tags = []
    for group, entries in load_solution_manifest().items():
        tags += [f"{group}-order{k}" for k in entries]
    for group, entries in load_ruleout_manifest().items():
        tags += [f"{group}-ruleout{k}" for k in entries]
    skip = [t for t in tags if t not in keep]
    assert main(["report", "--skip", ",".join(skip)]) == 0
    out = capsys.readouterr().out
    assert "co3-order2" in out and "0 failed" in out


def test_report_detects_golden_drift(tmp_path, capsys, monkeypatch):
    # a golden file with one tuple removed must fail, naming the order
    import helpkit.report as report_mod

    real = report_mod.read_golden_tuples

    def tampered(name):
        rows = real(name)
        return rows[:-1] if name == "co3_order5.txt" else rows

    monkeypatch.setattr(report_mod, "read_golden_tuples", tampered)
    from helpkit.report import load_ruleout_manifest, load_solution_manifest

    tags = []
    for group, entries in load_solution_manifest().items():
        tags += [f"{group}-order{k}" for k in entries]
    for group, entries in load_ruleout_manifest().items():
        tags += [f"{group}-ruleout{k}" for k in entries]
    skip = [t for t in tags if t != "co3-order5"]
    assert main(["report", "--skip", ",".join(skip)]) == 1
    out = capsys.readouterr().out
    assert "co3-order5" in out and "FAIL" in out


def test_report_marks_full_table_items_skipped(capsys):
    from helpkit.report import load_ruleout_manifest, load_solution_manifest

    gated = {"co3-order4", "co3-order14", "co1-order55", "co1-order65",
             "co1-ruleout46", "co1-ruleout69", "co1-ruleout115"}
    tags = []
    for group, entries in load_solution_manifest().items():
        tags += [f"{group}-order{k}" for k in entries]
    for group, entries in load_ruleout_manifest().items():
        tags += [f"{group}-ruleout{k}" for k in entries]
    skip = [t for t in tags if t not in gated]
    assert main(["report", "--skip", ",".join(skip)]) == 0
    out = capsys.readouterr().out
    for tag in gated:
        assert tag in out
    assert out.count("SKIP") >= len(gated)
