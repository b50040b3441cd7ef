import pytest

from edgedepth.complexes import is_disconnected, power_degree_complex
from edgedepth.engine import (
    Classification,
    depth_profile,
    depth_zero,
    h1_disconnecting_vector,
    h1_nonzero,
    localized_depth_zero,
    symbolic_depth_one,
)
from edgedepth.graphs import Graph


def test_depth_zero_c5(c5):
    assert [depth_zero(c5, t)[0] for t in (1, 2, 3, 4)] == [
        False,
        False,
        True,
        True,
    ]
    zero, witness = depth_zero(c5, 3)
    assert zero and witness == c5.vertex_set


def test_depth_zero_fig1(fig1):
    assert not depth_zero(fig1, 4)[0]
    assert depth_zero(fig1, 5)[0]


def test_depth_zero_bipartite_never(k2):
    assert all(not depth_zero(k2, t)[0] for t in range(1, 6))


def test_localized_depth_zero(fig1, c5, triangle):
    assert localized_depth_zero(fig1, 7, 3)
    assert not localized_depth_zero(fig1, 7, 2)
    assert all(not localized_depth_zero(c5, v, t) for v in c5.vertices for t in (1, 2, 3))
    assert all(not localized_depth_zero(triangle, v, 2) for v in triangle.vertices)


def test_h1_nonzero(fig2, triangle, c5, fig1):
    ok, witness = h1_nonzero(fig2, 1)
    assert ok and witness["kind"] == "maximal_neighborhood" and witness["v"] == 4
    assert h1_nonzero(triangle, 1)[0]
    assert not h1_nonzero(c5, 1)[0]
    assert not h1_nonzero(c5, 2)[0]
    assert h1_nonzero(fig1, 2)[0]


def test_h1_disconnecting_vector_replays(c5):
    a = h1_disconnecting_vector(c5, 3)
    assert a is not None
    assert is_disconnected(power_degree_complex(c5, a, 3))


def test_symbolic_depth_one(k2, c5, triangle):
    assert symbolic_depth_one(k2, 2)[0]
    assert symbolic_depth_one(c5, 4)[0]
    ok, witness = symbolic_depth_one(triangle, 1)
    assert ok and witness["kind"] == "maximal_neighborhood"


def test_symbolic_depth_one_requires_connected():
    g = Graph.from_edges(4, [(1, 2), (3, 4)])
    with pytest.raises(ValueError):
        symbolic_depth_one(g, 1)


def test_profile_c5(c5):
    profile = depth_profile(c5, 4, with_oracle=True)
    assert [c.classification for c in profile.ordinary] == [
        Classification.GEQ2,
        Classification.GEQ2,
        Classification.ZERO,
        Classification.ZERO,
    ]
    assert [c.exact_depth for c in profile.ordinary] == [2, 2, 0, 0]


def test_profile_fig1(fig1):
    profile = depth_profile(fig1, 5, include_symbolic=False)
    assert [c.classification for c in profile.ordinary[1:]] == [
        Classification.ONE,
        Classification.ONE,
        Classification.ONE,
        Classification.ZERO,
    ]


def test_profile_triangle(triangle):
    profile = depth_profile(triangle, 2)
    assert [c.classification for c in profile.ordinary] == [
        Classification.ONE,
        Classification.ZERO,
    ]
    assert [c.classification for c in profile.symbolic] == [
        Classification.ONE,
        Classification.ONE,
    ]


def test_profile_symbolic_k2(k2):
    # depth R/(x1 x2) is already 1, so the whole symbolic profile is ONE
    profile = depth_profile(k2, 3, with_oracle=True)
    assert [c.classification for c in profile.symbolic] == [
        Classification.ONE,
        Classification.ONE,
        Classification.ONE,
    ]
    assert [c.exact_depth for c in profile.symbolic] == [1, 1, 1]
