"""CLI behavior: commands, exit codes, label conventions, determinism."""

from __future__ import annotations

import json

import pytest

from aqcist.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def base5_path(tmp_path, capsys):
    path = tmp_path / "base5.json"
    code, _, _ = run(capsys, "construct", "--n", "5", "--output", str(path))
    assert code == 0
    return str(path)


class TestGenerate:
    def test_edgelist_counts(self, capsys):
        code, out, _ = run(capsys, "generate", "--n", "2", "--format", "edgelist")
        assert code == 0
        assert len(out.splitlines()) == 6

    def test_aq5_has_144_lines(self, capsys):
        code, out, _ = run(capsys, "generate", "--n", "5")
        assert code == 0
        assert len(out.splitlines()) == 144

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "generate", "--n", "3", "--format", "dot")
        assert code == 0
        assert out.count(" -- ") == 20

    def test_deterministic_files(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        assert run(capsys, "generate", "--n", "4", "--format", "graphml", "--output", str(a))[0] == 0
        assert run(capsys, "generate", "--n", "4", "--format", "graphml", "--output", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_cap_override(self, capsys):
        code, _, err = run(capsys, "generate", "--n", "21", "--format", "edgelist",
                           "--output", "/dev/null")
        assert code == 2 and "error" in err


class TestConstruct:
    def test_prints_diameters(self, tmp_path, capsys):
        path = tmp_path / "f.json"
        code, out, _ = run(capsys, "construct", "--n", "6", "--output", str(path))
        assert code == 0
        assert "diameters: 9 9 7 7" in out
        doc = json.loads(path.read_text())
        assert doc["n"] == 6 and doc["k"] == 4

    def test_deterministic(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert run(capsys, "construct", "--n", "5", "--output", str(a))[0] == 0
        assert run(capsys, "construct", "--n", "5", "--output", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_base5_diameters(self, tmp_path, capsys):
        code, out, _ = run(capsys, "construct", "--n", "5", "--output", str(tmp_path / "x.json"))
        assert code == 0 and "diameters: 8 8 6 6" in out

    def test_unsupported_n(self, capsys):
        code, _, err = run(capsys, "construct", "--n", "2")
        assert code == 2 and "error" in err


class TestVerify:
    def test_pass_exit_zero(self, base5_path, capsys):
        code, out, _ = run(capsys, "verify", base5_path, "--mode", "both")
        assert code == 0
        assert "verdict: pass" in out

    def test_json_report(self, base5_path, capsys):
        code, out, _ = run(capsys, "verify", base5_path, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "pass"
        assert doc["stats"]["diameters"] == [8, 8, 6, 6]

    def test_duplicated_edge_exit_one(self, base5_path, tmp_path, capsys):
        doc = json.loads(open(base5_path).read())
        doc["trees"][1]["edges"].append(doc["trees"][0]["edges"][0])
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "verify", str(bad))
        assert code == 1
        assert "fail" in out and "witness" in out

    def test_truncated_json_exit_two(self, tmp_path, capsys):
        bad = tmp_path / "trunc.json"
        bad.write_text('{"n": 5, "trees": [{"id"')
        code, _, err = run(capsys, "verify", str(bad))
        assert code == 2 and "error" in err

    def test_bruteforce_cap_exit_two(self, tmp_path, capsys):
        path = tmp_path / "f7.json"
        assert run(capsys, "construct", "--n", "7", "--output", str(path))[0] == 0
        code, _, err = run(capsys, "verify", str(path), "--mode", "bruteforce")
        assert code == 2 and "cap" in err
        code, out, _ = run(capsys, "verify", str(path), "--mode", "bruteforce",
                           "--max-n-override", "7")
        assert code == 0


class TestRoute:
    def test_binary_labels(self, base5_path, capsys):
        code, out, _ = run(capsys, "route", base5_path, "00000", "11111")
        assert code == 0
        lines = out.splitlines()
        assert "adjacent: yes" in lines[0]
        assert lines[4] == "T4 (length 1): 00000 11111"

    def test_paper_labels_isomorphic(self, base5_path, capsys):
        _, out_bin, _ = run(capsys, "route", base5_path, "00000", "11111")
        _, out_paper, _ = run(capsys, "route", base5_path, "1", "32", "--labels", "paper")

        def lengths(text):
            return [line.split(":")[0] for line in text.splitlines()[1:]]

        assert lengths(out_bin) == lengths(out_paper)
        assert "T4 (length 1): 1 32" in out_paper

    def test_same_vertex_rejected(self, base5_path, capsys):
        code, _, err = run(capsys, "route", base5_path, "00000", "00000")
        assert code == 2 and "error" in err

    def test_bad_vertex_rejected(self, base5_path, capsys):
        code, _, _ = run(capsys, "route", base5_path, "000", "11111")
        assert code == 2


class TestStats:
    def test_table(self, base5_path, capsys):
        code, out, _ = run(capsys, "stats", base5_path)
        assert code == 0
        assert "10000" in out  # tree 1 center
        assert out.count("8") >= 4  # the |internal| column is 8 8 8 8
        assert "edge-disjoint: yes" in out
        assert "internal-disjoint: yes" in out

    def test_single_tree_toy_family(self, tmp_path, capsys):
        doc = {"n": 1, "k": 1, "labeling": "zero-based-value", "provenance": "file",
               "trees": [{"id": 1, "edges": [[0, 1]]}]}
        path = tmp_path / "toy.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "stats", str(path))
        assert code == 0
        rows = [line.split() for line in out.splitlines()]
        t1 = next(r for r in rows if r and r[0] == "T1")
        assert t1[2] == "1"  # diameter
        assert t1[4] == "-"  # no center on two vertices
        assert t1[5] == "0"  # no internal vertices

    def test_sampled_route_lengths(self, base5_path, capsys):
        code, out, _ = run(capsys, "stats", base5_path, "--samples", "25", "--seed", "9")
        assert code == 0
        assert "route lengths over 25 pairs (seed 9" in out

    def test_nonpositive_samples_rejected(self, base5_path, capsys):
        code, _, err = run(capsys, "stats", base5_path, "--samples", "0")
        assert code == 2 and "error" in err


class TestErrorPaths:
    def test_unwritable_output(self, tmp_path, capsys):
        code, _, err = run(capsys, "generate", "--n", "3",
                           "--output", str(tmp_path / "missing" / "x.txt"))
        assert code == 2 and "error" in err
