from concurrent.futures import ThreadPoolExecutor

import pytest

from proxigraph.core.config import Settings, settings
from proxigraph.core.exceptions import BoundExceededError, PreconditionError
from proxigraph.models import Bipartition, SpaceClass
from proxigraph.services import SWEEPS, VerificationService
from proxigraph.services.verification import (
    check_be_path_union,
    check_degree_one_ultrametric,
    check_pruned_partition,
    check_ultrametric_diameter,
    ordered_chunk_map,
)


@pytest.fixture
def verification():
    return VerificationService()


def test_every_sweep_is_registered(verification):
    assert len(SWEEPS) == 18
    assert "be-path-union" in verification.names()
    assert verification.names() == sorted(verification.names())


@pytest.mark.parametrize("name", sorted(SWEEPS))
def test_sweeps_find_no_counterexample(verification, name):
    report = verification.run(name, max_n=3, instances=3, seed=1)
    assert report.passed, report.counterexample
    assert report.checked > 0
    assert report.parameters["max_n"] == 3


@pytest.mark.parametrize("name", ["be-path-union", "bpath-components", "universal-partition"])
def test_four_vertex_sweeps(verification, name):
    report = verification.run(name, max_n=4, instances=0)
    assert report.passed, report.counterexample


def test_parallel_run_matches_sequential(verification):
    sequential = verification.run("pruned-partition", max_n=4, instances=0, jobs=1)
    parallel = verification.run("pruned-partition", max_n=4, instances=0, jobs=2)
    assert parallel.passed
    assert parallel.checked == sequential.checked


def test_ordered_chunk_map_keeps_order():
    with ThreadPoolExecutor(max_workers=3) as executor:
        outcomes = list(ordered_chunk_map(executor, str, iter(range(50)), chunk_size=4, window=3))
    assert outcomes == [str(i) for i in range(50)]


def test_ordered_chunk_map_reads_family_lazily():
    generated = 0

    def family():
        nonlocal generated
        for i in range(200_000):
            generated += 1
            yield i

    def fails_first(i):
        return "反例" if i == 0 else None

    with ThreadPoolExecutor(max_workers=2) as executor:
        for outcome in ordered_chunk_map(executor, fails_first, family(), chunk_size=8, window=2):
            assert outcome == "反例"
            break
    assert generated <= 3 * 8


def test_unknown_sweep(verification):
    with pytest.raises(PreconditionError) as e:
        verification.run("no-such-sweep")
    assert e.value.code == "unknown-sweep"


@pytest.mark.parametrize("kwargs", [{"max_n": 0}, {"max_n": 8}, {"instances": -1}, {"jobs": 0}])
def test_bounds_are_checked(verification, kwargs):
    with pytest.raises(BoundExceededError) as e:
        verification.run("two-vertex-components", **kwargs)
    assert e.value.code == "bound-exceeded"


def test_out_of_range_max_n_setting_fails_before_sweeping(verification, monkeypatch):
    with pytest.raises(BoundExceededError) as e:
        Settings(PROXIGRAPH_MAX_N=9).check_bounds()
    assert e.value.code == "bound-exceeded"
    monkeypatch.setattr(settings, "PROXIGRAPH_MAX_N", 0)
    with pytest.raises(BoundExceededError):
        verification.run("two-vertex-components", max_n=1)


# ==================== 检查函数 ====================
def test_check_reports_nothing_for_good_instances(four_path, four_path_parts):
    assert check_be_path_union((four_path, four_path_parts)) is None
    assert check_pruned_partition(four_path) is None
    assert check_degree_one_ultrametric(four_path) is None


def test_diameter_check_uses_class_from_family(three_points):
    space = three_points(1)
    parts = Bipartition(a=frozenset({"a"}), b=frozenset({"b", "c"}))
    assert check_ultrametric_diameter((space, SpaceClass.ULTRAMETRIC, parts)) is None
