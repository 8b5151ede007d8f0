"""Command-line interface: selectors, verdicts, exit codes, machine mode."""

import json

import pytest

from diaskit.cli import main

GOOD = """dialgebra v1
dim 2
vdash 1 1 -> 1:1
dashv 1 1 -> 1:1
dashv 2 1 -> 2:1
"""

# e1 |- e1 = e2 with e2 absorbing nothing violates the bar-side axioms
BROKEN = """dialgebra v1
dim 2
vdash 1 1 -> 2:1
vdash 2 1 -> 2:1
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_pass_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "catalog:Dias2_1")
        assert code == 0
        assert "verdict: pass" in out

    def test_axiom_violation_exits_one(self, tmp_path, capsys):
        path = tmp_path / "broken.dlg"
        path.write_text(BROKEN)
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 1
        assert "verdict: fail" in out

    def test_file_input_matches_selector(self, tmp_path, capsys):
        path = tmp_path / "good.dlg"
        path.write_text(GOOD)
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0


class TestInputErrors:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "verify", "/no/such/file.dlg")
        assert code == 2
        assert "cannot read" in err

    def test_parse_error_carries_line_number(self, tmp_path, capsys):
        path = tmp_path / "bad.dlg"
        path.write_text("dialgebra v1\ndim 2\nvdash 1 9 -> 1:1\n")
        code, _, err = run(capsys, "verify", str(path))
        assert code == 2
        assert "line 3" in err

    def test_unknown_catalog_name(self, capsys):
        code, _, err = run(capsys, "verify", "catalog:Dias5_1")
        assert code == 2
        assert "unknown catalog entry" in err

    def test_bad_parameter_syntax(self, capsys):
        code, _, err = run(capsys, "verify", "catalog:Dias2_3?lam")
        assert code == 2
        assert "key=value" in err

    def test_missing_parameter(self, capsys):
        code, _, err = run(capsys, "verify", "catalog:Dias2_3")
        assert code == 2
        assert "missing parameter" in err


class TestSpaces:
    def test_default_space_dimension_and_basis(self, capsys):
        code, out, _ = run(capsys, "spaces", "catalog:Dias2_1", "--machine")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == "diaskit.report/1"
        section = doc["sections"][0]
        assert ["dim", "1"] in section["items"]
        assert section["matrices"] == [["basis 1", [["0", "0"], ["1", "0"]]]]

    @pytest.mark.parametrize("which", ["der", "dider", "inn", "dinn"])
    def test_all_kinds_run(self, capsys, which):
        code, out, _ = run(capsys, "spaces", "catalog:Dias3_8",
                           "--which", which)
        assert code == 0
        assert "dim:" in out


class TestReports:
    def test_invariants_sections(self, capsys):
        code, out, _ = run(capsys, "invariants", "catalog:Dias3_1")
        assert code == 0
        assert "[invariant sets]" in out
        assert "[induced bracket]" in out
        assert "chirality: right" in out

    def test_bider_finding_for_one_sided_closure(self, capsys):
        code, out, _ = run(capsys, "bider", "catalog:Dias3_13")
        assert code == 0
        assert "verdict: findings" in out
        assert "inner-dider + der is ideal: no" in out

    def test_kxy_reports_split_pair_finding(self, capsys):
        code, out, _ = run(capsys, "kxy", "--bound", "4")
        assert code == 0
        assert "two-generator claim" in out
        assert "verdict: findings" in out

    def test_kxy_bound_floor(self, capsys):
        code, _, err = run(capsys, "kxy", "--bound", "3")
        assert code == 2
        assert "at least 4" in err


class TestCatalog:
    def test_filter_restricts_entries(self, capsys):
        code, out, _ = run(capsys, "catalog", "Dias3_9", "--samples", "1")
        assert code == 0
        assert "entries shown: 1" in out
        assert "Dias3_16 case table" not in out

    def test_machine_output_deterministic(self, capsys):
        first = run(capsys, "catalog", "--samples", "5", "--seed", "7",
                    "--machine")
        second = run(capsys, "catalog", "--samples", "5", "--seed", "7",
                     "--machine")
        assert first == second
        assert first[0] == 0
        doc = json.loads(first[1])
        assert doc["verdict"] == "findings"

    def test_seed_changes_samples_not_verdict(self, capsys):
        a = run(capsys, "catalog", "--samples", "3", "--seed", "1",
                "--machine")
        b = run(capsys, "catalog", "--samples", "3", "--seed", "2",
                "--machine")
        assert json.loads(a[1])["verdict"] == json.loads(b[1])["verdict"]
