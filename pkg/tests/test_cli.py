import json
import subprocess
import sys

import pytest

from twistratio.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_csv_contains_lemma_row(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--gmax", "5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "g,p,omega,i_min,kind"
        assert "3,0,5,5,exact" in lines

    def test_json_mode(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--gmax", "3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert {"g": 2, "p": 0, "omega": 2, "i_min": 4, "kind": "exact"} in payload["rows"]

    def test_text_mode(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--gmax", "2", "--format", "text")
        assert code == 0
        assert "S_{2,0}" in out


class TestReport:
    def test_twist_power_exits_zero(self, capsys):
        code, out, _ = run_cli(capsys, "report", "--word", "a", "--genus", "3")
        assert code == 0
        assert "pseudo-Anosov:   False" in out

    def test_json_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "report", "--word", "aB", "--genus", "3", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        rep = payload["reports"][0]
        assert rep["is_pseudo_anosov"] is True
        assert rep["certificates"]["bound_satisfied"] is True
        assert payload["config"]["B"] == 207

    def test_csv_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "report", "--word", "abAB", "--genus", "2", "--format", "csv"
        )
        assert code == 0
        header, row = out.splitlines()
        assert header.startswith("word,is_pseudo_anosov,trace_abs")
        assert row.startswith("abAB,true,")

    def test_exponent_notation_accepted(self, capsys):
        # parses fine; the bound check honestly fails (|w| != |w|_s), so exit 1
        code, out, _ = run_cli(
            capsys, "report", "--word", "a^3 b^-2", "--genus", "3", "--format", "json"
        )
        assert code == 1
        rep = json.loads(out)["reports"][0]
        assert rep["word"] == "aaaBB"
        assert rep["certificates"]["bound_satisfied"] is False

    def test_invalid_word_diagnostic(self, capsys):
        code, _, err = run_cli(capsys, "report", "--word", "z", "--genus", "3")
        assert code == 2
        assert err.startswith("error:") and "z" in err

    def test_low_complexity_diagnostic(self, capsys):
        code, _, err = run_cli(capsys, "report", "--word", "ab", "--genus", "1")
        assert code == 2
        assert "complexity" in err

    def test_short_flag(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "report", "--word", "abab" * 12, "--genus", "2",
            "--format", "json", "--short",
        )
        assert code == 0
        assert "e+" in json.loads(out)["reports"][0]["trace_abs"]


class TestEnumerate:
    def test_reports_stream(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--count", "5", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert len(payload["reports"]) == 5
        assert all(r["certificates"]["bound_satisfied"] for r in payload["reports"])

    def test_identical_runs_byte_identical(self, capsys):
        _, first, _ = run_cli(capsys, "enumerate", "--count", "12", "--format", "json")
        _, second, _ = run_cli(capsys, "enumerate", "--count", "12", "--format", "json")
        assert first == second

    def test_prefix_stable_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--count", "4", "--prefix-stable", "--format", "json"
        )
        assert code == 0
        words = [r["word"] for r in json.loads(out)["reports"]]
        assert words[0] == "ab"
        for u, v in zip(words, words[1:]):
            assert v.startswith(u)

    def test_rejects_bad_count(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--count", "0")
        assert code == 2 and "count" in err


class TestFamilies:
    def test_johnson(self, capsys):
        code, out, _ = run_cli(
            capsys, "johnson", "--k", "3", "--genus", "2", "--format", "json"
        )
        assert code == 0
        rep = json.loads(out)["reports"][0]
        assert rep["family"] == "johnson"
        assert rep["certificates"]["bound_satisfied"] is True

    def test_johnson_seeds_flag(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "johnson", "--k", "1", "--genus", "3", "--seeds", "6,10,2",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["config"]["seeds"] == {
            "genus2": 6, "genus3": 10, "arc_pair": 2,
        }

    def test_johnson_bad_seeds(self, capsys):
        code, _, err = run_cli(capsys, "johnson", "--k", "1", "--genus", "2", "--seeds", "1,2")
        assert code == 2 and "seeds" in err

    def test_pointpush(self, capsys):
        code, out, _ = run_cli(capsys, "pointpush", "--genus", "3", "--format", "json")
        assert code == 0
        rep = json.loads(out)["reports"][0]
        assert rep["family"] == "point_push"
        assert rep["family_data"]["base_intersection"] == 5
        assert json.loads(out)["config"]["pair_intersection"]["value"] == 150

    def test_pointpush_low_genus(self, capsys):
        code, _, err = run_cli(capsys, "pointpush", "--genus", "1")
        assert code == 2 and "genus" in err


class TestSelftest:
    def test_all_suites_pass(self, capsys):
        code, out, _ = run_cli(capsys, "selftest")
        assert code == 0
        assert "selftest: PASS" in out
        assert "tree-distance" in out and "conjugacy-closure" in out


class TestSubprocessEntrypoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "twistratio", "table", "--gmax", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "g,p,omega,i_min,kind" in proc.stdout
