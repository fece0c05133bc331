import pytest

from proxigraph.core.exceptions import (
    InvalidGraphError,
    InvalidPartitionError,
    InvalidPathError,
    PreconditionError,
)
from proxigraph.models import Bipartition, PathSeq, SimpleGraph


# ==================== 模型 ====================
def test_edges_are_normalized_and_deduplicated(graphs):
    graph = graphs.build_graph(["u", "v", "w"], [("v", "u"), ("u", "v"), ("w", "v")])
    assert graph.sorted_edges() == [("u", "v"), ("v", "w")]
    assert graph.neighbors("v") == ("u", "w")
    assert graph.degree("w") == 1


def test_loop_is_rejected(graphs):
    with pytest.raises(InvalidGraphError) as e:
        graphs.build_graph(["u"], [("u", "u")])
    assert e.value.code == "loop-edge"


def test_unknown_endpoint_is_rejected(graphs):
    with pytest.raises(InvalidGraphError) as e:
        graphs.build_graph(["u"], [("u", "v")])
    assert e.value.code == "unknown-endpoint"


def test_duplicate_vertex_is_rejected(graphs):
    with pytest.raises(InvalidGraphError) as e:
        graphs.build_graph(["u", "u"])
    assert e.value.code == "duplicate-vertex"


@pytest.mark.parametrize("label", ["", "a b", 3])
def test_bad_labels_are_rejected(graphs, label):
    with pytest.raises(InvalidGraphError) as e:
        graphs.build_graph([label])
    assert e.value.code == "invalid-label"


def test_path_must_have_distinct_vertices():
    with pytest.raises(InvalidPathError):
        PathSeq(order=("a", "b", "a"))
    with pytest.raises(InvalidPathError):
        PathSeq(order=("a",))


def test_bipartition_parts_must_be_disjoint_and_nonempty():
    with pytest.raises(InvalidPartitionError) as e:
        Bipartition(a=frozenset({"a"}), b=frozenset({"a", "b"}))
    assert e.value.code == "parts-overlap"
    with pytest.raises(InvalidPartitionError) as e:
        Bipartition(a=frozenset(), b=frozenset({"b"}))
    assert e.value.code == "empty-part"


def test_bipartition_side_and_crossing(four_path_parts):
    assert four_path_parts.side("a1") == "A"
    assert four_path_parts.side("b2") == "B"
    assert four_path_parts.side("zz") is None
    assert four_path_parts.crosses("b1", "a2")
    assert not four_path_parts.crosses("a1", "a2")


def test_error_renders_code_and_message():
    error = InvalidGraphError("顶点重复: u", code="duplicate-vertex")
    assert str(error) == "duplicate-vertex: 顶点重复: u"


# ==================== 子图 ====================
def test_induced_subgraph(graphs, four_path):
    sub = graphs.induced_subgraph(four_path, {"a1", "b1", "b2"})
    assert sub.sorted_edges() == [("a1", "b1")]
    with pytest.raises(InvalidGraphError):
        graphs.induced_subgraph(four_path, {"zz"})
    with pytest.raises(InvalidGraphError):
        graphs.induced_subgraph(four_path, set())


def test_induced_bipartite_subgraph_drops_within_part_edges(graphs):
    graph = graphs.build_graph(["a1", "a2", "b1"], [("a1", "a2"), ("a2", "b1")])
    parts = Bipartition(a=frozenset({"a1", "a2"}), b=frozenset({"b1"}))
    cross = graphs.induced_bipartite_subgraph(graph, parts)
    assert cross.sorted_edges() == [("a2", "b1")]
    assert cross.vertices == graph.vertices


def test_union_recovers_graph_from_sides(graphs, cube):
    graph, parts = cube
    pieces = [
        graphs.induced_subgraph(graph, parts.a),
        graphs.induced_subgraph(graph, parts.b),
        graphs.induced_bipartite_subgraph(graph, parts),
    ]
    assert graphs.graph_union(pieces) == graph


def test_prune_isolated(graphs):
    graph = graphs.build_graph(["u", "v", "w"], [("u", "v")])
    assert graphs.prune_isolated(graph).vertices == frozenset({"u", "v"})
    assert graphs.isolated_vertices(graph) == frozenset({"w"})
    assert not graphs.is_pruned(graph)
    with pytest.raises(PreconditionError) as e:
        graphs.prune_isolated(graphs.build_graph(["u", "v"]))
    assert e.value.code == "empty-graph"


# ==================== 连通性 ====================
def test_components_are_ordered_by_smallest_label(graphs):
    graph = graphs.build_graph(["d", "c", "b", "a"], [("c", "d"), ("a", "b")])
    assert graphs.connected_components(graph) == [frozenset({"a", "b"}), frozenset({"c", "d"})]
    assert not graphs.is_connected(graph)
    assert graphs.is_connected(graphs.build_graph(["solo"]))


def test_cube_graph_is_connected_with_isolated_corners(graphs, cube):
    graph, parts = cube
    assert len(graph.edges) == 25
    assert graphs.is_connected(graph)
    a_components = graphs.connected_components(graphs.induced_subgraph(graph, parts.a))
    b_components = graphs.connected_components(graphs.induced_subgraph(graph, parts.b))
    assert frozenset({"x1"}) in a_components and len(a_components) == 2
    assert frozenset({"x8"}) in b_components and len(b_components) == 2


def test_find_path_is_shortest_and_deterministic(graphs, four_path):
    assert graphs.find_path(four_path, "a1", "b2").order == ("a1", "b1", "a2", "b2")
    disconnected = graphs.build_graph(["u", "v"])
    assert graphs.find_path(disconnected, "u", "v") is None
    with pytest.raises(InvalidGraphError):
        graphs.find_path(four_path, "a1", "a1")


def test_validate_path_rejects_non_edges(graphs, four_path):
    graphs.validate_path(four_path, PathSeq(order=("a1", "b1", "a2")))
    with pytest.raises(InvalidPathError):
        graphs.validate_path(four_path, PathSeq(order=("a1", "a2")))


def test_complete_and_complete_bipartite(graphs):
    parts = Bipartition(a=frozenset({"a1", "a2"}), b=frozenset({"b1"}))
    star = graphs.build_graph(["a1", "a2", "b1"], [("a1", "b1"), ("a2", "b1")])
    assert graphs.is_complete_bipartite(star, parts)
    assert not graphs.is_complete(star)
    triangle = SimpleGraph(vertices=frozenset({"a1", "a2", "b1"}), edges=[("a1", "a2"), ("a1", "b1"), ("a2", "b1")])
    assert graphs.is_complete(triangle)
    assert not graphs.is_bipartite_with_parts(triangle, parts)


def test_pruned_graph_is_the_only_subgraph_without_isolated_vertices_containing_it(graphs, instances):
    for graph in instances.enumerate_labeled_graphs(4):
        if graph.is_empty():
            continue
        pruned = graphs.prune_isolated(graph)
        for extra in graph.vertices - pruned.vertices:
            bigger = graphs.build_graph(sorted(pruned.vertices | {extra}), graph.edges)
            assert not graphs.is_pruned(bigger)


def test_degree_of_unknown_vertex(graphs, four_path):
    assert graphs.degree(four_path, "b1") == 2
    with pytest.raises(InvalidGraphError) as e:
        graphs.degree(four_path, "zz")
    assert e.value.code == "unknown-vertex"


# ==================== 随机图性质 ====================
SEEDS = range(40)


def _component_of(graphs, graph, v):
    component = next(c for c in graphs.connected_components(graph) if v in c)
    return graphs.induced_subgraph(graph, component)


@pytest.mark.parametrize("seed", SEEDS)
def test_union_of_connected_graphs_sharing_a_vertex_is_connected(graphs, instances, seed):
    first = _component_of(graphs, instances.random_graph(6, 0.4, seed), "v1")
    second = _component_of(graphs, instances.random_graph(6, 0.4, seed + 1000), "v1")
    assert graphs.is_connected(first) and graphs.is_connected(second)
    union = graphs.graph_union([first, second])
    assert union.vertices == first.vertices | second.vertices
    assert graphs.is_connected(union)


@pytest.mark.parametrize("seed", SEEDS)
def test_prune_isolated_is_idempotent(graphs, instances, seed):
    graph = instances.random_graph(6, 0.25, seed)
    if graph.is_empty():
        return
    pruned = graphs.prune_isolated(graph)
    assert graphs.prune_isolated(pruned) == pruned
    assert all(graphs.degree(pruned, v) > 0 for v in pruned.vertices)
    assert pruned.edges == graph.edges


@pytest.mark.parametrize("seed", SEEDS)
def test_find_path_result_is_a_path_of_the_host(graphs, instances, seed):
    graph = instances.random_graph(6, 0.3, seed)
    components = graphs.connected_components(graph)
    for u in sorted(graph.vertices):
        for v in sorted(graph.vertices):
            if u == v:
                continue
            path = graphs.find_path(graph, u, v)
            same_component = any(u in c and v in c for c in components)
            assert (path is not None) == same_component
            if path is not None:
                graphs.validate_path(graph, path)
                assert path.order[0] == u and path.order[-1] == v
