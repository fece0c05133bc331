from fractions import Fraction

import pytest

from proxigraph.core.exceptions import PreconditionError
from proxigraph.models import Bipartition, SpaceClass


# ==================== 阈值图 ====================
def test_threshold_graph_keeps_within_part_edges(path_proximinal, metrics):
    space = metrics.build_space(
        ["a1", "a2", "b1"],
        [[0, Fraction(1, 2), 1], [Fraction(1, 2), 0, 3], [1, 3, 0]],
    )
    parts = Bipartition(a=frozenset({"a1", "a2"}), b=frozenset({"b1"}))
    graph = path_proximinal.build_threshold_graph(space, parts)
    assert graph.sorted_edges() == [("a1", "a2"), ("a1", "b1")]
    assert path_proximinal.verify_path_proximinal(graph, parts, space)
    assert path_proximinal.check_structural_conditions(space, parts)
    assert not path_proximinal.check_within_part_separation(space, parts)


def test_hamming_cube_threshold_graph(path_proximinal, paths, graphs, instances, cube):
    graph, parts = cube
    space = instances.cube_hamming_space()
    threshold_graph = path_proximinal.build_threshold_graph(space, parts)
    assert len(threshold_graph.edges) == 32
    assert graphs.is_subgraph(graph, threshold_graph)
    assert path_proximinal.verify_path_proximinal(threshold_graph, parts, space)
    assert paths.is_path_complete(threshold_graph, parts)


def test_verify_rejects_graph_that_is_not_the_threshold_graph(path_proximinal, instances, cube):
    graph, parts = cube
    assert not path_proximinal.verify_path_proximinal(graph, parts, instances.cube_hamming_space())


def test_structural_conditions_fail_when_a_part_is_cut_off(path_proximinal, metrics):
    # a2 离所有点都远，阈值图中成为孤立点
    space = metrics.build_space(
        ["a1", "a2", "b1"],
        [[0, 3, 1], [3, 0, 3], [1, 3, 0]],
    )
    parts = Bipartition(a=frozenset({"a1", "a2"}), b=frozenset({"b1"}))
    assert not path_proximinal.check_structural_conditions(space, parts)
    threshold_graph = path_proximinal.build_threshold_graph(space, parts)
    assert not path_proximinal.verify_path_proximinal(threshold_graph, parts, space)


# ==================== 见证度量 ====================
def test_witness_metric_for_path_bipartite(path_proximinal, four_path, four_path_parts):
    space = path_proximinal.witness_metric_for_path_bipartite(four_path, four_path_parts)
    assert path_proximinal.verify_path_proximinal(four_path, four_path_parts, space)
    assert path_proximinal.check_within_part_separation(space, four_path_parts)


def test_witness_metric_requires_path_bipartite(path_proximinal, graphs):
    graph = graphs.build_graph(["a1", "b1", "b2"], [("a1", "b1")])
    parts = Bipartition(a=frozenset({"a1"}), b=frozenset({"b1", "b2"}))
    with pytest.raises(PreconditionError) as e:
        path_proximinal.witness_metric_for_path_bipartite(graph, parts)
    assert e.value.code == "not-path-bipartite"


def test_certificate_exists_iff_no_isolated_vertex(path_proximinal, graphs):
    graph = graphs.build_graph(["u", "v", "w"], [("u", "v"), ("v", "w")])
    certificate = path_proximinal.is_path_proximinal_graph(graph)
    assert certificate.kind == "path-proximinal"
    assert path_proximinal.verify_path_proximinal(certificate.graph, certificate.parts, certificate.space)
    isolated = graphs.build_graph(["u", "v", "w"], [("u", "v")])
    assert path_proximinal.is_path_proximinal_graph(isolated) is None


# ==================== 邻近图 ∩ 路径邻近图 ====================
def test_full_projection(path_proximinal, proximinal, graphs, four_path, four_path_parts):
    space = proximinal.witness_proximinal_metric(four_path, four_path_parts)
    assert path_proximinal.check_full_projection(four_path, four_path_parts, space)
    partial = graphs.build_graph(["a1", "b1", "a2", "b2"], [("a1", "b1")])
    partial_space = proximinal.witness_proximinal_metric(partial, four_path_parts)
    assert not path_proximinal.check_full_projection(partial, four_path_parts, partial_space)


def test_full_projection_requires_proximinal_graph(path_proximinal, proximinal, graphs, four_path, four_path_parts):
    space = proximinal.witness_proximinal_metric(four_path, four_path_parts)
    partial = graphs.build_graph(["a1", "b1", "a2", "b2"], [("a1", "b1")])
    with pytest.raises(PreconditionError) as e:
        path_proximinal.check_full_projection(partial, four_path_parts, space)
    assert e.value.code == "not-a-proximinal-graph"


# ==================== 超度量 ====================
def test_witness_ultrametric_for_perfect_matching(path_proximinal, metrics, graphs):
    graph = graphs.build_graph(["p", "q", "r", "s"], [("p", "q"), ("r", "s")])
    certificate = path_proximinal.witness_ultrametric(graph)
    assert certificate.parts.a == frozenset({"p", "r"})
    assert metrics.classify(certificate.space) is SpaceClass.ULTRAMETRIC
    assert path_proximinal.verify_path_proximinal(graph, certificate.parts, certificate.space)
    assert path_proximinal.all_components_two_vertices(graph)


def test_witness_ultrametric_needs_degree_one(path_proximinal, four_path):
    assert not path_proximinal.all_degrees_one(four_path)
    assert path_proximinal.witness_ultrametric(four_path) is None
    assert not path_proximinal.all_components_two_vertices(four_path)


def test_ultrametric_connectivity_statements_agree(path_proximinal, graphs):
    single = graphs.build_graph(["p", "q"], [("p", "q")])
    certificate = path_proximinal.witness_ultrametric(single)
    statements = path_proximinal.ultrametric_connectivity_statements(
        certificate.graph, certificate.parts, certificate.space
    )
    assert statements == (True, True, True, True)
    matching = graphs.build_graph(["p", "q", "r", "s"], [("p", "q"), ("r", "s")])
    certificate = path_proximinal.witness_ultrametric(matching)
    statements = path_proximinal.ultrametric_connectivity_statements(
        certificate.graph, certificate.parts, certificate.space
    )
    assert statements == (False, False, False, False)


def test_ultrametric_connectivity_requires_ultrametric(path_proximinal, four_path, four_path_parts):
    space = path_proximinal.witness_metric_for_path_bipartite(four_path, four_path_parts)
    with pytest.raises(PreconditionError):
        path_proximinal.ultrametric_connectivity_statements(four_path, four_path_parts, space)
