from edgedepth.ideals import (
    MonomialIdeal,
    colon_by_variable,
    edge_ideal,
    edge_power_membership,
    localized_membership,
    membership_table,
    power,
    saturation,
    socle_witness,
    symbolic_membership,
    symbolic_power_generators,
    vertex_cover_prime,
)


def test_edge_ideal_generators(k2, triangle, c5):
    assert edge_ideal(k2).gens == ((1, 1),)
    assert set(edge_ideal(triangle).gens) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert len(edge_ideal(c5).gens) == 5
    assert all(sum(m) == 2 for m in edge_ideal(c5).gens)


def test_powers(triangle):
    j = MonomialIdeal.make(2, [(1, 1)])
    assert power(j, 2).gens == ((2, 2),)
    sq = power(edge_ideal(triangle), 2)
    assert len(sq.gens) == 6
    assert all(sum(m) == 4 for m in sq.gens)
    assert power(sq, 1) == sq


def test_minimalization_prunes_divisible_generators():
    j = MonomialIdeal.make(2, [(1, 0), (1, 1), (2, 0)])
    assert j.gens == ((1, 0),)


def test_edge_power_membership(c5):
    assert edge_power_membership(c5, (1, 1, 1, 1, 1), 2)
    assert not edge_power_membership(c5, (1, 1, 1, 1, 1), 3)
    assert edge_power_membership(c5, (0, 0, 0, 0, 0), 0)


def test_localized_membership():
    j = MonomialIdeal.make(2, [(1, 1)])
    assert not localized_membership(j, (1, 0), frozenset({1}))
    assert localized_membership(j, (1, 0), frozenset({2}))
    assert localized_membership(j, (0, 0), frozenset({1, 2}))


def test_symbolic_membership(c5, k2):
    assert symbolic_membership(c5, (1, 1, 1, 1, 1), 3)
    assert not symbolic_membership(c5, (1, 1, 1, 1, 1), 4)
    assert not symbolic_membership(k2, (0, 0), 1)


def test_symbolic_power_generators(k2, triangle, c5):
    assert symbolic_power_generators(k2, 2).gens == ((2, 2),)
    assert symbolic_power_generators(triangle, 1) == edge_ideal(triangle)
    sym3 = symbolic_power_generators(c5, 3)
    assert sym3.contains((1, 1, 1, 1, 1))
    assert not power(edge_ideal(c5), 3).contains((1, 1, 1, 1, 1))


def test_bipartite_symbolic_equals_ordinary(k2):
    path = __import__("edgedepth").Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    for g in (k2, path):
        for t in (1, 2, 3):
            assert symbolic_power_generators(g, t) == power(edge_ideal(g), t)


def test_vertex_cover_prime(c5):
    p = vertex_cover_prime(c5, frozenset({1, 3}))
    assert set(p.gens) == {
        (0, 1, 0, 0, 0),
        (0, 0, 0, 1, 0),
        (0, 0, 0, 0, 1),
    }


def test_socle_witness(triangle, c5):
    j2 = power(edge_ideal(triangle), 2)
    assert socle_witness(j2, 2) == (1, 1, 1)
    assert socle_witness(MonomialIdeal.make(2, [(1, 1)]), 1) is None
    assert socle_witness(power(edge_ideal(c5), 3), 3) is not None


def test_membership_table(triangle):
    j = power(edge_ideal(triangle), 2)
    table = membership_table(j, 2)
    assert table.shape == (3, 3, 3)
    assert not table[1, 1, 1]
    assert table[2, 2, 0] and table[2, 1, 1]


def test_colon_and_saturation():
    j = MonomialIdeal.make(2, [(2, 1)])
    assert colon_by_variable(j, 1).gens == ((1, 1),)
    assert saturation(MonomialIdeal.make(2, [(2, 0), (1, 1)])).gens == ((1, 0),)


def test_saturation_of_prime_power(c5):
    p3 = power(vertex_cover_prime(c5, frozenset({1, 3})), 3)
    assert saturation(p3) == p3


def test_saturation_equals_symbolic_power(c5, triangle):
    for g, ts in ((c5, (1, 2, 3)), (triangle, (1, 2))):
        for t in ts:
            assert saturation(power(edge_ideal(g), t)) == symbolic_power_generators(
                g, t
            )
