import pytest

from proxigraph.core.config import settings
from proxigraph.core.exceptions import (
    BoundExceededError,
    InvalidPartitionError,
    InvalidPathError,
    PreconditionError,
)
from proxigraph.models import Bipartition, PathSeq

FOUR_PATH_BPATH = frozenset({("a1", "b1"), ("a2", "b1"), ("a2", "b2")})


# ==================== be-路径 ====================
def test_is_be_path_finds_the_crossing_edge(paths, four_path, four_path_parts):
    witness = paths.is_be_path(four_path, ["a1", "b1"], four_path_parts)
    assert witness.crossing_edge == ("a1", "b1")
    assert witness.endpoints == ("a1", "b1")
    # 三条边都跨部分
    assert paths.is_be_path(four_path, PathSeq(order=("a1", "b1", "a2")), four_path_parts) is None


def test_is_be_path_rejects_non_paths(paths, four_path, four_path_parts):
    with pytest.raises(InvalidPathError):
        paths.is_be_path(four_path, ["a1", "a2"], four_path_parts)


def test_be_path_with_segments_on_both_sides(paths, graphs):
    graph = graphs.build_graph(["a1", "a2", "b1", "b2"], [("a1", "a2"), ("a2", "b1"), ("b1", "b2")])
    parts = Bipartition(a=frozenset({"a1", "a2"}), b=frozenset({"b1", "b2"}))
    witness = paths.is_be_path(graph, ["a1", "a2", "b1", "b2"], parts)
    assert witness.crossing_index == 1


def test_enumerate_be_paths_on_four_path(paths, four_path, four_path_parts):
    witnesses = paths.enumerate_be_paths(four_path, four_path_parts)
    # 每条边正反两个方向
    assert len(witnesses) == 6
    assert all(len(w.path.order) == 2 for w in witnesses)
    assert paths.enumerated_bpath_pairs(four_path, four_path_parts) == FOUR_PATH_BPATH


def test_union_of_be_paths(paths, graphs, four_path, four_path_parts):
    assert paths.union_of_be_paths(four_path, four_path_parts) == four_path
    lonely = graphs.build_graph(["a1", "b1"])
    parts = Bipartition(a=frozenset({"a1"}), b=frozenset({"b1"}))
    assert paths.union_of_be_paths(lonely, parts).vertices == frozenset()


def test_oracle_respects_vertex_bound(paths, instances, monkeypatch):
    monkeypatch.setattr(settings, "PROXIGRAPH_ORACLE_MAX_VERTICES", 3)
    graph = instances.random_graph(4, 1, seed=0)
    parts = Bipartition(a=frozenset({"v1", "v2"}), b=frozenset({"v3", "v4"}))
    with pytest.raises(BoundExceededError) as e:
        paths.enumerate_be_paths(graph, parts)
    assert e.value.code == "size-exceeded"


def test_partition_must_cover_vertices(paths, four_path):
    parts = Bipartition(a=frozenset({"a1"}), b=frozenset({"b1"}))
    with pytest.raises(InvalidPartitionError) as e:
        paths.bpath_pairs(four_path, parts)
    assert e.value.code == "parts-not-covering"


# ==================== 路径二部 ====================
def test_path_bipartite(paths, four_path, four_path_parts, cube):
    assert paths.is_path_bipartite(four_path, four_path_parts)
    assert paths.is_path_bipartite(*cube)


def test_isolated_vertex_breaks_path_bipartiteness(paths, graphs):
    graph = graphs.build_graph(["a1", "b1", "b2"], [("a1", "b1")])
    parts = Bipartition(a=frozenset({"a1"}), b=frozenset({"b1", "b2"}))
    reason = paths.path_bipartite_violation(graph, parts)
    assert "b2" in reason
    assert not paths.is_path_bipartite(graph, parts)


def test_find_path_bipartite_partition(paths, graphs):
    graph = graphs.build_graph(["u", "v", "w", "x", "y"], [("u", "v"), ("v", "w"), ("x", "y")])
    parts = paths.find_path_bipartite_partition(graph)
    assert parts.a == frozenset({"u", "x"})
    assert paths.is_path_bipartite(graph, parts)
    with_isolated = graphs.build_graph(["u", "v", "w"], [("u", "v")])
    assert paths.find_path_bipartite_partition(with_isolated) is None


def test_universally_path_bipartite(paths, graphs, four_path):
    assert paths.is_universally_path_bipartite(four_path)
    two_edges = graphs.build_graph(["u", "v", "w", "x"], [("u", "v"), ("w", "x")])
    assert not paths.is_universally_path_bipartite(two_edges)


# ==================== B_path ====================
def test_bpath_on_four_path(paths, four_path, four_path_parts):
    bpath = paths.bpath_pairs(four_path, four_path_parts)
    assert bpath == FOUR_PATH_BPATH
    assert not paths.is_path_complete(four_path, four_path_parts)


def test_cube_graph_is_path_complete(paths, cube):
    graph, parts = cube
    assert len(paths.bpath_pairs(graph, parts)) == 64
    assert paths.is_path_complete(graph, parts)


def test_be_path_witness_on_cube(paths, cube):
    graph, parts = cube
    witness = paths.be_path_witness(graph, parts, "x2", "x5")
    assert witness.path.order == ("x2", "x6", "x14", "x5")
    assert witness.crossing_index == 0


def test_be_path_witness_is_a_be_path(paths, cube):
    graph, parts = cube
    witness = paths.be_path_witness(graph, parts, "x4", "x15")
    assert witness.endpoints == ("x4", "x15")
    assert paths.is_be_path(graph, witness.path, parts) is not None


def test_be_path_witness_outside_bpath(paths, four_path, four_path_parts):
    assert paths.be_path_witness(four_path, four_path_parts, "a1", "b2") is None
    with pytest.raises(PreconditionError) as e:
        paths.be_path_witness(four_path, four_path_parts, "b1", "a1")
    assert e.value.code == "wrong-side"


# ==================== 商图 ====================
def test_quotient_graph_of_four_path(paths, four_path, four_path_parts):
    quotient = paths.quotient_graph(four_path, four_path_parts)
    assert quotient.a_ids() == ["A1", "A2"]
    assert quotient.members("A2") == frozenset({"a2"})
    assert quotient.edges == frozenset({("A1", "B1"), ("A2", "B1"), ("A2", "B2")})
    assert not paths.is_quotient_complete_bipartite(quotient)


def test_quotient_graph_of_cube_is_complete_bipartite(paths, cube):
    quotient = paths.quotient_graph(*cube)
    assert len(quotient.edges) == 4
    assert quotient.representative["A1"] == "x1"
    assert paths.is_quotient_complete_bipartite(quotient)


def test_bpath_is_nonempty_for_path_bipartite_graphs(paths, instances):
    for graph in instances.enumerate_labeled_graphs(4):
        for parts in instances.all_bipartitions(graph.vertices):
            if paths.is_path_bipartite(graph, parts):
                assert paths.bpath_pairs(graph, parts)
