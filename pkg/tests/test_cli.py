"""The fb command line: every subcommand, format, and exit code."""

from __future__ import annotations

import json

import pytest

import freebraid.cli as cli
from freebraid.cli import EXIT_CAP, EXIT_OK, EXIT_PARSE, EXIT_VERIFY, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_OK, err
    return json.loads(out)


# --- reduce ---


def test_reduce_json(capsys):
    doc = run_json(capsys, "reduce", "-g", "A2", "-w", "1 2 1 2")
    assert doc["graph"] == "A2"
    assert doc["input_word"] == "1 2 1 2"
    assert doc["reduced_word"] == "2 1"
    assert doc["length"] == 2
    assert doc["root_sequence"] == [[1, 0], [1, 1]]
    assert doc["inversion_set"] == [[1, 0], [1, 1]]


def test_reduce_keeps_reduced_input(capsys):
    doc = run_json(capsys, "reduce", "-g", "D4", "-w", "2 1 3 4 2 4 3 1 2")
    assert doc["reduced_word"] == "2 1 3 4 2 4 3 1 2"
    assert doc["length"] == 9
    assert doc["root_sequence"][4] == [1, 2, 1, 1]


def test_reduce_empty_word(capsys):
    doc = run_json(capsys, "reduce", "-g", "A2", "-w", "")
    assert doc["reduced_word"] == ""
    assert doc["length"] == 0
    assert doc["inversion_set"] == []


def test_reduce_text(capsys):
    code, out, err = run(capsys, "reduce", "-g", "A2", "-w", "1 1", "--format", "text")
    assert code == EXIT_OK
    assert "reduced: e" in out
    assert "length: 0" in out


def test_reduce_text_root_names(capsys):
    code, out, _ = run(capsys, "reduce", "-g", "A2", "-w", "1 2 1", "--format", "text")
    assert code == EXIT_OK
    assert "root sequence: a1, a1+a2, a2" in out


def test_json_output_has_sorted_keys(capsys):
    code, out, _ = run(capsys, "reduce", "-g", "A2", "-w", "1 2")
    assert code == EXIT_OK
    keys = list(json.loads(out))
    assert keys == sorted(keys)


# --- analyze ---


def test_analyze_frozen_values_4231(capsys):
    doc = run_json(capsys, "analyze", "--perm", "4231")
    assert doc["perm"] == "4231"
    assert doc["graph"] == "A3"
    assert doc["element"] == "1 2 3 2 1"
    assert doc["length"] == 5
    assert doc["n_triples"] == 2
    assert doc["N"] == 2
    assert doc["class_count"] == 3
    assert doc["bound_holds"] is True
    assert doc["achieves_bound"] is False
    assert doc["freely_braided"] is False
    assert [c["signature_bits"] for c in doc["classes"]] == [[1, 1], [0, 1], [0, 0]]
    assert [c["size"] for c in doc["classes"]] == [1, 4, 1]
    assert [c["parity"] for c in doc["classes"]] == [1, -1, 1]
    assert doc["edges"] == [[0, 1], [1, 2]]
    assert all(t["contractible"] for t in doc["triples"])


def test_analyze_freely_braided_a2(capsys):
    doc = run_json(capsys, "analyze", "-g", "A2", "-w", "1 2 1")
    assert doc["N"] == 1
    assert doc["class_count"] == 2
    assert doc["achieves_bound"] is True
    assert doc["freely_braided"] is True
    assert "verified" not in doc


def test_analyze_verify_ok(capsys):
    doc = run_json(capsys, "analyze", "-g", "A2", "-w", "1 2 1", "--verify")
    assert doc["verified"] is True


def test_analyze_precedence_flag(capsys):
    lex = run_json(capsys, "analyze", "-g", "A2", "-w", "1 2 1")
    rev = run_json(capsys, "analyze", "-g", "A2", "-w", "1 2 1", "--precedence", "revlex")
    assert lex["precedence"] == "lex"
    assert rev["precedence"] == "revlex"
    assert lex["class_count"] == rev["class_count"]
    flipped = [[1 - b for b in c["signature_bits"]] for c in rev["classes"]]
    assert flipped == [c["signature_bits"] for c in lex["classes"]]


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--perm", "4231", "--format", "text")
    assert code == EXIT_OK
    assert "classes: 3 <= 2^N = 4" in out
    assert "bits=01" in out
    assert "edges: 0-1 1-2" in out


def test_analyze_perm_conflicts_with_graph(capsys):
    code, out, err = run(capsys, "analyze", "--perm", "4231", "-g", "A3")
    assert code == EXIT_PARSE
    assert "error:" in err


def test_analyze_missing_element(capsys):
    code, _, err = run(capsys, "analyze", "-g", "A3")
    assert code == EXIT_PARSE


# --- graph ---


def test_graph_json(capsys):
    doc = run_json(capsys, "graph", "-g", "A2", "-w", "1 2 1")
    assert doc["element"] == "1 2 1"
    assert doc["bipartite"] is True
    assert [v["canonical"] for v in doc["vertices"]] == ["1 2 1", "2 1 2"]
    assert doc["edges"] == [[0, 1]]
    assert "parity" not in doc["vertices"][0]


def test_graph_json_with_parity(capsys):
    doc = run_json(capsys, "graph", "-g", "A2", "-w", "1 2 1", "--parity")
    assert [v["parity"] for v in doc["vertices"]] == [-1, 1]


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "--perm", "4231", "--dot", "--parity")
    assert code == EXIT_OK
    assert out.startswith("graph commutation {")
    assert "// element: 1 2 3 2 1" in out
    assert "// bipartite: true" in out
    assert 'fillcolor="#aec7e8"' in out
    assert 'fillcolor="#ffbb78"' in out
    assert "c0 -- c1;" in out
    assert "c1 -- c2;" in out


def test_graph_dot_identity(capsys):
    code, out, _ = run(capsys, "graph", "-g", "A2", "-w", "", "--dot")
    assert code == EXIT_OK
    assert 'label="e"' in out


# --- enumerate ---


def test_enumerate_table(capsys):
    doc = run_json(capsys, "enumerate", "--type", "A", "-n", "4")
    assert doc["type"] == "A"
    assert doc["rows"] == [
        {"n": 1, "freely_braided": 1, "bound_achievers": 1},
        {"n": 2, "freely_braided": 2, "bound_achievers": 2},
        {"n": 3, "freely_braided": 6, "bound_achievers": 6},
        {"n": 4, "freely_braided": 20, "bound_achievers": 20},
    ]


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "3", "--format", "text")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].split() == ["n", "freely_braided", "bound_achievers"]
    assert lines[-1].split() == ["3", "6", "6"]


def test_enumerate_rank_limit(capsys):
    code, _, err = run(capsys, "enumerate", "-n", "7")
    assert code == EXIT_CAP
    code, _, err = run(capsys, "enumerate", "-n", "0")
    assert code == EXIT_PARSE
    code, _, err = run(capsys, "enumerate", "--type", "B", "-n", "2")
    assert code == EXIT_PARSE


# --- exit codes and caps ---


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "reduce", "-g", "Zq", "-w", "1")
    assert code == EXIT_PARSE
    assert "error:" in err


def test_cap_exit_with_partial_count(capsys):
    code, _, err = run(capsys, "analyze", "-g", "A3", "-w", "1 2 1 3 2 1", "--max-words", "5")
    assert code == EXIT_CAP
    assert "partial count: 6" in err


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("FB_MAX_WORDS", "5")
    code, _, err = run(capsys, "analyze", "-g", "A3", "-w", "1 2 1 3 2 1")
    assert code == EXIT_CAP


def test_flag_overrides_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("FB_MAX_WORDS", "5")
    code, out, _ = run(capsys, "analyze", "-g", "A3", "-w", "1 2 1 3 2 1", "--max-words", "100")
    assert code == EXIT_OK


def test_bad_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("FB_MAX_WORDS", "many")
    code, _, err = run(capsys, "analyze", "-g", "A2", "-w", "1")
    assert code == EXIT_PARSE
    assert "FB_MAX_WORDS" in err


def test_threads_flag_validated(capsys):
    code, _, err = run(capsys, "analyze", "-g", "A2", "-w", "1", "--threads", "0")
    assert code == EXIT_PARSE
    code, _, _ = run(capsys, "analyze", "-g", "A2", "-w", "1", "--threads", "4")
    assert code == EXIT_OK


def test_verify_failure_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli, "oracle_reduced_words", lambda w, cap=None: [])
    code, _, err = run(capsys, "analyze", "-g", "A2", "-w", "1 2 1", "--verify")
    assert code == EXIT_VERIFY
    assert "verification failed" in err
