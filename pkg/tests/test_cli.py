import json

import pytest
from typer.testing import CliRunner

from cli.main import app
from proxigraph.core.config import settings

runner = CliRunner()

FOUR_PATH = {"vertices": ["a1", "b1", "a2", "b2"], "edges": [["a1", "b1"], ["b1", "a2"], ["a2", "b2"]]}
FOUR_PATH_PARTS = {"A": ["a1", "a2"], "B": ["b1", "b2"]}


def invoke(*args):
    result = runner.invoke(app, ["--quiet", *[str(arg) for arg in args]])
    return result, result.stdout.splitlines()


@pytest.fixture
def four_path_files(write_json):
    return write_json("graph.json", FOUR_PATH), write_json("partition.json", FOUR_PATH_PARTS)


# ==================== classify ====================
@pytest.mark.parametrize("ac, verdict", [(1, "Ultrametric"), (2, "Metric"), ("5/2", "Semimetric")])
def test_classify(write_json, ac, verdict):
    space = write_json("s.json", {"points": ["a", "b", "c"], "distances": [[0, 1, ac], [1, 0, 1], [ac, 1, 0]]})
    result, lines = invoke("classify", space)
    assert result.exit_code == 0
    assert lines[0] == verdict


def test_classify_missing_file(tmp_path):
    result, lines = invoke("classify", tmp_path / "nope.json")
    assert result.exit_code == 2
    assert lines[0] == "error"
    assert lines[1].startswith("document-not-found")


def test_classify_rejects_float_entries(write_json):
    space = write_json("s.json", {"points": ["a", "b"], "distances": [[0, 0.5], [0.5, 0]]})
    result, lines = invoke("classify", space)
    assert result.exit_code == 2
    assert lines[1].startswith("malformed-document")


# ==================== check ====================
def test_check_path_bipartite(four_path_files):
    result, lines = invoke("check", "path-bipartite", *four_path_files)
    assert result.exit_code == 0
    assert lines[0] == "true"


def test_check_path_complete_is_false_on_four_path(four_path_files):
    result, lines = invoke("check", "path-complete", *four_path_files)
    assert result.exit_code == 1
    assert lines[0] == "false"


def test_check_proximity_needs_space(four_path_files):
    result, lines = invoke("check", "path-proximinal", *four_path_files)
    assert result.exit_code == 2
    assert lines[1].startswith("missing-space-file")


def test_check_vertex_mismatch(write_json, four_path_files):
    graph_file, _ = four_path_files
    parts = write_json("p.json", {"A": ["a1"], "B": ["b1"]})
    result, lines = invoke("check", "path-bipartite", graph_file, parts)
    assert result.exit_code == 2
    assert lines[1].startswith("vertex-mismatch")


# ==================== bpath ====================
def test_bpath_lists_pairs(four_path_files):
    result, lines = invoke("bpath", *four_path_files)
    assert result.exit_code == 0
    assert lines[0] == "3"
    assert json.loads(lines[1]) == [["a1", "b1"], ["a2", "b1"], ["a2", "b2"]]


def test_bpath_witness(four_path_files):
    result, lines = invoke("bpath", *four_path_files, "--witness", "a2", "b2")
    assert result.exit_code == 0
    assert lines[2] == "a2 b2"


def test_bpath_witness_outside_bpath(four_path_files):
    result, lines = invoke("bpath", *four_path_files, "-w", "a1", "b2")
    assert result.exit_code == 1
    assert lines[2].startswith("pair-not-in-bpath")


def test_bpath_quotient(four_path_files):
    result, lines = invoke("bpath", *four_path_files, "--quotient")
    assert result.exit_code == 0
    assert "graph Q {" in lines


# ==================== witness ====================
def test_witness_metric_then_check(four_path_files, tmp_path):
    out = tmp_path / "witness.json"
    result, lines = invoke("witness", "metric", four_path_files[0], "--partition", four_path_files[1], "--out", out)
    assert result.exit_code == 0
    assert lines[0] == "true"
    assert out.exists()
    result, lines = invoke("check", "path-proximinal", *four_path_files, "--space", out)
    assert lines[0] == "true"
    result, lines = invoke("check", "proximinal", *four_path_files, "--space", out)
    assert lines[0] == "true"


def test_witness_metric_precondition(write_json, tmp_path):
    graph = write_json("g.json", {"vertices": ["a1", "b1", "b2"], "edges": [["a1", "b1"]]})
    parts = write_json("p.json", {"A": ["a1"], "B": ["b1", "b2"]})
    result, lines = invoke("witness", "metric", graph, "--partition", parts, "--out", tmp_path / "w.json")
    assert result.exit_code == 1
    assert lines[1].startswith("not-path-bipartite")


def test_witness_ultrametric(write_json, tmp_path):
    graph = write_json("g.json", {"vertices": ["p", "q", "r", "s"], "edges": [["p", "q"], ["r", "s"]]})
    out = tmp_path / "cert.json"
    result, lines = invoke("witness", "ultrametric", graph, "--out", out)
    assert result.exit_code == 0
    assert "class: Ultrametric" in lines
    assert json.loads(out.read_text(encoding="utf-8"))["partition"] == {"A": ["p", "r"], "B": ["q", "s"]}


def test_witness_ultrametric_needs_degree_one(four_path_files, tmp_path):
    result, lines = invoke("witness", "ultrametric", four_path_files[0], "--out", tmp_path / "cert.json")
    assert result.exit_code == 1
    assert lines[0] == "false"
    assert lines[1].startswith("not-degree-one")


# ==================== verify ====================
def test_verify_sweep():
    result, lines = invoke("verify", "two-vertex-components", "--max-n", "3")
    assert result.exit_code == 0
    assert lines[0] == "true"
    assert "checked: 11" in lines


def test_verify_unknown_sweep():
    result, lines = invoke("verify", "no-such-sweep")
    assert result.exit_code == 2
    assert lines[1].startswith("unknown-sweep")


def test_verify_bound_exceeded():
    result, lines = invoke("verify", "two-vertex-components", "--max-n", "9")
    assert result.exit_code == 2
    assert lines[1].startswith("bound-exceeded")


def test_out_of_range_max_n_setting_is_reported(monkeypatch):
    monkeypatch.setattr(settings, "PROXIGRAPH_MAX_N", 9)
    result, lines = invoke("verify", "two-vertex-components")
    assert result.exit_code == 2
    assert lines[0] == "error"
    assert lines[1].startswith("bound-exceeded")


# ==================== example ====================
def test_example_writes_bundle(tmp_path):
    result, lines = invoke("example", "four-path", "--out-dir", tmp_path)
    assert result.exit_code == 0
    assert lines[0] == "true"
    for name in ("graph.json", "partition.json", "space.json", "report.txt"):
        assert (tmp_path / name).exists()


def test_example_hamming_cube_reports_errata():
    result, lines = invoke("example", "hamming-cube")
    assert result.exit_code == 0
    assert any(line.startswith("勘误:") for line in lines)


def test_example_lattice_parameters():
    result, lines = invoke("example", "lattice-truncation", "--n", "1", "--m", "0", "--k", "1")
    assert result.exit_code == 0
    assert "[✓] dist(A, B) = 5/2: 5/2" in lines


# ==================== export-dot ====================
def test_export_dot_to_file(four_path_files, tmp_path):
    out = tmp_path / "g.dot"
    result, lines = invoke("export-dot", four_path_files[0], "--partition", four_path_files[1], "--out", out)
    assert result.exit_code == 0
    assert out.read_text(encoding="utf-8").startswith("graph G {")


def test_export_dot_to_stdout(four_path_files):
    result, lines = invoke("export-dot", four_path_files[0])
    assert result.exit_code == 0
    assert '  "a1" -- "b1";' in lines
