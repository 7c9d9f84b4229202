import os
from pathlib import Path

import pytest

import sphereint as si

DATA = Path(os.environ.get("SPHEREINT_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return (DATA / name).read_text()


@pytest.fixture
def theta():
    return si.Graph.parse(load("theta.json"))


def test_cross_and_intersect(theta):
    a0 = si.parse_sphere(theta, load("a0.json"))
    mid = si.parse_sphere(theta, load("sigma_mid.json"))
    assert si.crosses(theta, a0, mid)
    assert not si.crosses(theta, a0, si.translate(theta, mid, "x2,y1"))
    result = si.intersect(theta, a0, mid)
    assert result["count"] == 1
    assert len(result["witnesses"]) == 1
    assert si.circles_over(theta, a0, "x1") == 1


def test_theorem_rows_agree(theta):
    a0 = si.parse_sphere(theta, load("a0.json"))
    rows = si.theorem_check(theta, a0)
    assert [r["edge"] for r in rows] == theta.edge_names()
    assert all(r["equal"] for r in rows)


def test_enumerate_and_complex():
    g = si.Graph.standard(2, "dumbbell-chain")
    classes = si.enumerate(g, 2)
    assert len(classes) == 5
    assert all(si.is_embedded(g, s) for s in classes)
    assert all(si.canonical(g, s) == s for s in classes)
    vertices, edges = si.complex_edges(g, 2)
    assert len(vertices) == len(classes)
    assert all(i < j for i, j in edges)
    assert si.complex_dot(g, 1).startswith("graph sphere_complex {")


def test_round_trips(theta):
    assert si.Graph.parse(theta.serialize()) == theta
    for s in si.enumerate(theta, 3):
        assert si.parse_sphere(theta, si.serialize_sphere(theta, s)) == s


def test_errors_carry_their_name(theta):
    with pytest.raises(si.SphereError) as info:
        si.parse_sphere(theta, '{"pants": [[]], "circles": [{"at": [], "dart": "x1"}],'
                               ' "bits": [{"circle": 0, "aligned": true}]}')
    assert info.value.kind == "CircleDegreeNotTwo"
    with pytest.raises(si.SphereError) as info:
        si.Graph.standard(1)
    assert info.value.kind == "RankTooSmall"
