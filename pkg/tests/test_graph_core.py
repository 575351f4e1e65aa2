import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chipfire import fixtures
from chipfire.errors import InvalidGraph, NotStronglyConnected
from chipfire.graph_core import (
    LatticeHandle,
    build_digraph,
    is_strongly_connected,
    laplacian,
    lattice_membership,
    period_vector,
    scale_lattice,
)


def test_build_digraph_rejects_loops():
    with pytest.raises(InvalidGraph):
        build_digraph([(0, 0, 1), (0, 1, 1), (1, 0, 1)])


def test_build_digraph_rejects_single_vertex():
    with pytest.raises(InvalidGraph):
        build_digraph([], n_vertices=1)


def test_strong_connectivity():
    assert is_strongly_connected(fixtures.t3())
    assert is_strongly_connected(fixtures.k4u())
    one_way = build_digraph([(0, 1, 1)], n_vertices=2)
    assert not is_strongly_connected(one_way)


def test_laplacian_row_sums_vanish():
    g = fixtures.k4u()
    q = laplacian(g, side="row")
    for row in q:
        assert sum(row) == 0


def test_column_game_fires_transposed_rows():
    from chipfire.games import column_game, row_game

    g = fixtures.b2()
    q = row_game(g).firing_rows
    qt = column_game(g).firing_rows
    n = g.n_vertices
    assert all(q[i][j] == qt[j][i] for i in range(n) for j in range(n))


def test_period_vector_cycle_is_ones():
    assert period_vector(fixtures.t3()) == (1, 1, 1)


def test_period_vector_b2():
    # Q = [[1,-1],[-2,2]]; kernel of Q^T is spanned by (2,1).
    assert period_vector(fixtures.b2()) == (2, 1)


def test_period_vector_requires_connectivity():
    g = build_digraph([(0, 1, 1)], n_vertices=2)
    with pytest.raises(NotStronglyConnected):
        period_vector(g)


def test_period_vector_of_associated_digraph_is_multiplicities():
    from chipfire.arithmetical import associated_digraph

    for ag in (fixtures.ex_a(), fixtures.ex_b(), fixtures.ec(3),
               fixtures.two_vertex(3, 4), fixtures.star(4, 3)):
        assert period_vector(associated_digraph(ag)) == ag.multiplicities


GENS = st.lists(
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
    min_size=1,
    max_size=3,
)


@given(GENS, st.lists(st.integers(-3, 3), min_size=3, max_size=3))
@settings(max_examples=200, deadline=None)
def test_lattice_contains_integer_combinations(gens, coeffs):
    lat = LatticeHandle(gens)
    combo = [0, 0, 0]
    for g, c in zip(gens, coeffs):
        for i in range(3):
            combo[i] += c * g[i]
    assert lat.contains(tuple(combo))


@given(GENS, st.lists(st.integers(-6, 6), min_size=3, max_size=3),
       st.lists(st.integers(-2, 2), min_size=3, max_size=3))
@settings(max_examples=200, deadline=None)
def test_residue_is_coset_invariant(gens, point, coeffs):
    lat = LatticeHandle(gens)
    shifted = list(point)
    for g, c in zip(gens, coeffs):
        for i in range(3):
            shifted[i] += c * g[i]
    assert lat.residue(tuple(point)) == lat.residue(tuple(shifted))
    # the residue differs from the point by a lattice element
    res = lat.residue(tuple(point))
    assert lat.contains(tuple(p - r for p, r in zip(point, res)))


def test_lattice_membership_fractional_rejection():
    lat = LatticeHandle([(3, -2)])
    from fractions import Fraction

    assert lattice_membership(lat, (Fraction(3), Fraction(-2)))
    assert not lattice_membership(lat, (Fraction(3, 2), Fraction(-1)))
    assert not lattice_membership(lat, (Fraction(1), Fraction(0)))


def test_scale_lattice():
    lat = LatticeHandle([(1, -1, 0), (0, 1, -1)])
    scaled = scale_lattice(lat, (2, 3, 5))
    assert scaled.contains((2, -3, 0))
    assert scaled.contains((0, 3, -5))
    assert not scaled.contains((1, -1, 0))
