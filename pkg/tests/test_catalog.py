import pytest

from proxigraph.core.exceptions import PreconditionError
from proxigraph.models import TruncationParams
from proxigraph.services import CatalogService
from proxigraph.services.catalog import PRINTED_CUBE_BPATH


@pytest.fixture
def catalog():
    return CatalogService()


@pytest.mark.parametrize("name", ["cube-path-graph", "hamming-cube", "four-path", "lattice-truncation", "isolated-corner"])
def test_every_bundle_claim_holds(catalog, name):
    bundle = catalog.build_bundle(name)
    assert bundle.claims
    assert bundle.all_hold(), [claim for claim in bundle.claims if not claim.holds]


def test_unknown_bundle(catalog):
    with pytest.raises(PreconditionError) as e:
        catalog.build_bundle("tesseract")
    assert e.value.code == "unknown-name"


def test_printed_bpath_list_misses_pairs(catalog, cube):
    graph, parts = cube
    assert len(PRINTED_CUBE_BPATH) == 46
    bundle = catalog.build_bundle("hamming-cube")
    assert bundle.errata[0].startswith("印出的 B_path 列表漏掉 18 对")


def test_hamming_cube_errata_flag_invalid_printed_paths(catalog):
    errata = catalog.build_bundle("hamming-cube").errata
    # 第一条印出的路径成立，其余三条都不是 be-路径
    assert sum("x7, x13" in note for note in errata) == 3


def test_hamming_cube_witness_claim(catalog):
    claims = {claim.statement: claim for claim in catalog.build_bundle("hamming-cube").claims}
    assert claims["(x2, x5) ∈ B_path 的见证 be-路径"].observed == "x2 → x6 → x14 → x5"


def test_lattice_truncation_without_real_offsets(catalog):
    bundle = catalog.build_bundle("lattice-truncation", TruncationParams(n=2, m=0, k=1))
    assert bundle.all_hold()
    assert bundle.claims[0].observed == "5/2"


def test_two_point_lattice_truncation_is_ultrametric_and_holds(catalog):
    bundle = catalog.build_bundle("lattice-truncation", TruncationParams(n=1, m=0, k=1))
    assert bundle.all_hold(), [claim for claim in bundle.claims if not claim.holds]
    assert bundle.claims[1].observed == "Ultrametric"


def test_isolated_corner_has_no_partition(catalog):
    bundle = catalog.build_bundle("isolated-corner")
    assert bundle.parts is None
    assert "x1" in bundle.graph.vertices
