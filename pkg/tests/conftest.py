"""
[INPUT]: 依赖 pytest 的 fixture，依赖 proxigraph.services 与 proxigraph.models
[OUTPUT]: 对外提供测试共用的图、划分、空间与文件 fixture
[POS]: tests 的公共夹具
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from fractions import Fraction
import json

import pytest

from proxigraph.models import Bipartition
from proxigraph.services import (
    GraphService,
    InstanceService,
    MetricService,
    PathProximinalService,
    PathStructureService,
    ProximinalGraphService,
)


@pytest.fixture
def graphs():
    return GraphService()


@pytest.fixture
def metrics():
    return MetricService()


@pytest.fixture
def paths(graphs):
    return PathStructureService(graphs)


@pytest.fixture
def proximinal(graphs, metrics):
    return ProximinalGraphService(graphs, metrics)


@pytest.fixture
def path_proximinal(graphs, metrics):
    return PathProximinalService(graphs, metrics)


@pytest.fixture
def instances(metrics):
    return InstanceService(metrics)


# ==================== 小图 ====================
@pytest.fixture
def four_path(graphs):
    """a1 - b1 - a2 - b2"""
    return graphs.build_graph(["a1", "b1", "a2", "b2"], [("a1", "b1"), ("b1", "a2"), ("a2", "b2")])


@pytest.fixture
def four_path_parts():
    return Bipartition(a=frozenset({"a1", "a2"}), b=frozenset({"b1", "b2"}))


@pytest.fixture
def cube(instances):
    """四维立方体上的 25 边路径二部图及其划分"""
    return instances.cube_path_graph()


@pytest.fixture
def three_points(metrics):
    """返回一个按 d(a, c) 构造三点空间的函数，d(a, b) = d(b, c) = 1"""

    def make(ac):
        return metrics.build_space(
            ["a", "b", "c"],
            [[0, 1, Fraction(ac)], [1, 0, 1], [Fraction(ac), 1, 0]],
        )

    return make


# ==================== 文件 ====================
@pytest.fixture
def write_json(tmp_path):
    def write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return path

    return write
