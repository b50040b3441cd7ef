from itertools import combinations

from hypothesis import given, settings, strategies as st

from edgedepth.complexes import degree_complex, power_degree_complex
from edgedepth.ears import phi_star
from edgedepth.engine import depth_zero, h1_nonzero
from edgedepth.graphs import (
    Graph,
    closed_neighborhood,
    connected_components,
    is_bipartite,
    is_independent,
    is_strongly_non_bipartite,
    maximal_independent_sets,
    neighborhood,
)
from edgedepth.homology import depth_oracle
from edgedepth.ideals import (
    edge_ideal,
    edge_power_membership,
    power,
    symbolic_power_generators,
)


@st.composite
def graphs(draw, n_max=6):
    n = draw(st.integers(min_value=2, max_value=n_max))
    pool = list(combinations(range(1, n + 1), 2))
    edges = draw(st.sets(st.sampled_from(pool), min_size=1))
    support = sorted({v for e in edges for v in e})
    relabel = {v: i + 1 for i, v in enumerate(support)}
    return Graph.from_edges(
        len(support), [(relabel[u], relabel[v]) for u, v in edges]
    )


@given(graphs())
def test_closed_neighborhood_law(g):
    for v in g.vertices:
        assert closed_neighborhood(g, v) == neighborhood(g, v) | {v}


@given(graphs())
def test_maximal_independent_sets_are_independent_and_maximal(g):
    sets = maximal_independent_sets(g)
    assert sets
    for f in sets:
        assert is_independent(g, f)
        for v in g.vertex_set - f:
            assert not is_independent(g, f | {v})


@given(graphs(), st.integers(min_value=1, max_value=3), st.data())
def test_membership_cap_stability(g, t, data):
    a = tuple(
        data.draw(st.integers(min_value=0, max_value=2 * t), label=f"a_{i}")
        for i in range(g.n)
    )
    capped = tuple(min(x, t) for x in a)
    assert edge_power_membership(g, a, t) == edge_power_membership(g, capped, t)


@settings(max_examples=40, deadline=None)
@given(graphs(n_max=5), st.integers(min_value=1, max_value=2), st.data())
def test_degree_complex_downward_closed_and_cap_invariant(g, t, data):
    a = tuple(
        data.draw(st.integers(min_value=0, max_value=t + 2), label=f"a_{i}")
        for i in range(g.n)
    )
    c = power_degree_complex(g, a, t)
    faces = c.faces()
    for f in faces:
        for v in f:
            assert f - {v} in faces
    capped = tuple(min(x, t) for x in a)
    assert power_degree_complex(g, capped, t) == c
    assert degree_complex(power(edge_ideal(g), t), a) == c


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_phi_star_witness_consistency(g):
    if not is_strongly_non_bipartite(g):
        return
    phi, witnesses = phi_star(g)
    assert len(witnesses) == len(connected_components(g))
    assert sum(w.even_walk_count for w in witnesses) == phi
    for w in witnesses:
        w.validate(g)
    assert (phi + g.n - len(connected_components(g))) % 2 == 0


@settings(max_examples=30, deadline=None)
@given(graphs(n_max=5), st.integers(min_value=1, max_value=3))
def test_bipartite_symbolic_power_collapses(g, t):
    if not is_bipartite(g)[0]:
        return
    assert symbolic_power_generators(g, t) == power(edge_ideal(g), t)


@settings(max_examples=30, deadline=None)
@given(graphs(n_max=5), st.integers(min_value=1, max_value=3))
def test_depth_zero_persists(g, t):
    if depth_zero(g, t)[0]:
        assert depth_zero(g, t + 1)[0]


@settings(max_examples=25, deadline=None)
@given(graphs(n_max=5), st.integers(min_value=1, max_value=2))
def test_engine_matches_oracle(g, t):
    depth = depth_oracle(power(edge_ideal(g), t))
    assert depth_zero(g, t)[0] == (depth == 0)
    if depth > 0:
        assert h1_nonzero(g, t)[0] == (depth == 1)
