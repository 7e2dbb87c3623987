"""Tests for the command-line interface: verbs, formats, exit codes."""

import json
import subprocess
import sys

import pytest

from eclab.cli import main
from eclab.graphs import parse_edge_list


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEc:
    def test_family_json(self, capsys):
        code, out, _ = run_cli(capsys, "ec", "--family", "path:6", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["ec"] == 4
        assert list(payload) == ["ec", "blocks", "justification", "mode"]
        assert payload["mode"] == "exact"

    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "ec", "--family", "cycle:5")
        assert code == 0
        assert out.startswith("EC 5")

    def test_graph_file_input(self, capsys, tmp_path):
        path = tmp_path / "g.el"
        path.write_text("4 3\n0 1\n1 2\n2 3\n")
        code, out, _ = run_cli(capsys, "ec", "--graph", str(path), "--format", "json")
        assert code == 0
        assert json.loads(out)["ec"] == 3

    def test_budget_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "ec", "--family", "path:6", "--max-edges", "3")
        assert code == 3
        assert "cap" in err

    def test_env_cap_override(self, capsys, monkeypatch):
        monkeypatch.setenv("ECLAB_MAX_EDGES", "3")
        code, _, _ = run_cli(capsys, "ec", "--family", "path:6")
        assert code == 3
        monkeypatch.setenv("ECLAB_MAX_EDGES", "8")
        code, out, _ = run_cli(capsys, "ec", "--family", "path:6", "--format", "json")
        assert code == 0 and json.loads(out)["ec"] == 4

    def test_lower_bound_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "ec", "--family", "path:6", "--lower-bound", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["mode"] == "lower_bound"
        assert payload["ec"] >= 4

    def test_jobs_flag_same_value(self, capsys):
        code, out, _ = run_cli(
            capsys, "ec", "--family", "path:8", "--jobs", "2", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["ec"] == 5


class TestGamma:
    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "gamma", "--family", "complete:4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["gamma_prime"] == 2
        assert len(payload["witness"]) == 2


class TestVerify:
    def test_negative_singleton(self, capsys, tmp_path):
        path = tmp_path / "p6.el"
        code, out, _ = run_cli(capsys, "generate", "--family", "path:6", "--output", str(path))
        assert code == 0
        code, out, _ = run_cli(
            capsys,
            "verify",
            "--graph",
            str(path),
            "--partition",
            "[[0],[1],[2],[3],[4]]",
        )
        assert code == 1
        assert out.strip() == "block 2 has no partner"

    def test_positive(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "--family",
            "path:6",
            "--partition",
            "[[0,4],[1],[2],[3]]",
        )
        assert code == 0
        assert "order 4" in out

    def test_invalid_partition_is_usage_error(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--family", "path:6", "--partition", "[[0],[1]]"
        )
        assert code == 2
        assert "not covered" in err

    def test_bad_json_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--family", "path:6", "--partition", "nope")
        assert code == 2

    def test_preset_on_wrong_graph(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--family", "path:6", "--partition-id", "pi1")
        assert code == 2


class TestEcg:
    def test_dot_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "ecg", "--family", "kbip:2,4", "--partition-id", "pi6", "--format", "dot"
        )
        assert code == 0
        assert out.startswith("graph {")
        assert out.count("--") == 6  # K4
        assert "B0" in out

    def test_edge_list_output(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "ecg",
            "--family",
            "path:6",
            "--partition",
            "[[0,4],[1],[2],[3]]",
            "--format",
            "text",
        )
        assert code == 0
        g = parse_edge_list(out)
        assert g.n == 4 and g.m == 4

    def test_isolated_vertices_listed_in_dot(self, capsys):
        code, out, _ = run_cli(
            capsys, "ecg", "--family", "star:3", "--partition", "[[0],[1],[2]]",
            "--format", "dot",
        )
        assert code == 0
        for name in ("B0", "B1", "B2"):
            assert f"{name};" in out

    def test_rejected_partition_is_negative_exit(self, capsys):
        code, _, err = run_cli(
            capsys, "ecg", "--family", "path:6",
            "--partition", "[[0],[1],[2],[3],[4]]",
        )
        assert code == 1
        assert "no partner" in err


class TestBounds:
    def test_text_table(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--family", "cycle:7")
        assert code == 0
        assert "twice-gamma-minus-one" in out
        assert "size-upper" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--family", "star:5", "--format", "json")
        assert code == 0
        entries = json.loads(out)
        by_source = {e["source"]: e for e in entries}
        assert not by_source["twice-gamma-minus-one"]["applicable"]


class TestGenerateAndCorpus:
    def test_generate_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "--family", "kbip:2,4")
        assert code == 0
        g = parse_edge_list(out)
        assert g.n == 6 and g.m == 8

    def test_generate_bad_spec(self, capsys):
        code, _, _ = run_cli(capsys, "generate", "--family", "path:1")
        assert code == 2

    def test_corpus_export(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys,
            "corpus",
            "--classes",
            "trees",
            "--max-vertices",
            "5",
            "--out-dir",
            str(tmp_path),
        )
        assert code == 0
        files = sorted(p.name for p in tmp_path.iterdir())
        assert len(files) == 8  # 1+1+1+2+3 trees
        assert "trees_5_2.el" in files

    def test_corpus_over_cap(self, capsys, tmp_path):
        code, _, _ = run_cli(
            capsys, "corpus", "--classes", "all", "--max-vertices", "10",
            "--out-dir", str(tmp_path),
        )
        assert code == 3


class TestTheorems:
    def test_single_cheap_tag(self, capsys):
        code, out, _ = run_cli(capsys, "theorems", "--only", "cycles-closed-form")
        assert code == 0
        assert "PASS" in out and "cycles-closed-form" in out

    def test_unknown_tag_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "theorems", "--only", "nonsense")
        assert code == 2
        assert "unknown check tags" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eclab.cli", "ec", "--family", "star:4", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ec"] == 4
