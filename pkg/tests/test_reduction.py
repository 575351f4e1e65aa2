import pytest

from chipfire import fixtures, oracle
from chipfire.arithmetical import associated_digraph, chip_game
from chipfire.divisor_algebra import apply_firing, equivalent
from chipfire.errors import NotSandpileForm
from chipfire.games import Game, column_game, row_game, scaled_game
from chipfire.graph_core import build_digraph, period_vector
from chipfire.reduction import (
    all_reduced_representatives,
    column_reduce,
    dhar,
    is_gparking,
    is_reduced,
    reduce,
)

from conftest import sandpile_box, small_games


@pytest.mark.parametrize("name,game", small_games())
def test_dhar_matches_bruteforce_reducedness(name, game):
    """Exhaustive over the sandpile-form box: Dhar terminal zero iff no valid
    strategy clears the non-base vertices."""
    for d in sandpile_box(game, 0, slack=1, base_values=(-1, 0)):
        assert is_reduced(game, 0, d) == oracle.reduced_bruteforce(game, 0, d), d


@pytest.mark.parametrize("name,game", small_games())
def test_reduce_returns_equivalent_reduced_divisor(name, game):
    for d in sandpile_box(game, 0, slack=2, base_values=(-3, 0, 4)):
        red, strategy = reduce(game, 0, d)
        assert is_reduced(game, 0, red)
        assert apply_firing(game, d, strategy) == red
        assert equivalent(game.lattice, d, red)


def test_dhar_rejects_negative_off_base():
    game = row_game(fixtures.t3())
    with pytest.raises(NotSandpileForm):
        dhar(game, 0, (0, -1, 0))


@pytest.mark.parametrize("name,game", small_games())
def test_dhar_witnesses_are_the_reduced_representatives(name, game):
    r0 = game.period[0]
    seen = set()
    for d in sandpile_box(game, 0, slack=0, base_values=(-1, 0, 1)):
        if not is_reduced(game, 0, d):
            continue
        reps = all_reduced_representatives(game, 0, d)
        assert len(reps) == r0
        assert d in reps
        assert all(is_reduced(game, 0, r) for r in reps)
        assert all(equivalent(game.lattice, d, r) for r in reps)
        seen.add(reps)
    assert seen


def test_representative_count_on_exb_chip_game():
    """The chip game of the subdivided K4 has r0 = 2; the nu_1 class has the
    two witnesses nu_1 and -chi(v0) + chi(v3) + chi(v5)."""
    game = chip_game(fixtures.ex_b())
    nu1 = (-1, 0, 1, 0, 1, 0)
    reps = all_reduced_representatives(game, 0, nu1)
    assert len(reps) == 2
    assert nu1 in reps
    assert (-1, 0, 0, 1, 0, 1) in reps


def test_representative_count_matches_base_period():
    for game, expected in [
        (row_game(fixtures.b2()), 2),
        (chip_game(fixtures.ec(2)), 1),
    ]:
        reps = all_reduced_representatives(
            game, 0, tuple([-1] + [0] * (game.n_vertices - 1))
        )
        assert len(reps) == expected


def test_first_dhar_witness_is_the_divisor_itself():
    game = chip_game(fixtures.two_vertex(2, 3))
    d = (-1, 1)
    assert is_reduced(game, 0, d)
    trace = dhar(game, 0, d)
    assert trace.reduced_witnesses[0] == d
    assert len(set(trace.reduced_witnesses)) == game.period[0]


@pytest.mark.parametrize("g", [fixtures.t3(), fixtures.b2(), fixtures.p3()])
def test_gparking_matches_subset_oracle(g):
    game = column_game(g)
    for d in sandpile_box(game, 0, slack=1, base_values=(0,)):
        assert is_gparking(g, 0, d) == oracle.gparking_subset_bruteforce(g, 0, d), d


def test_column_reduce_lands_on_gparking():
    g = fixtures.k4u()
    for d in [(0, 4, 0, 2), (-3, 1, 1, 5), (7, 0, 0, 0)]:
        red, _ = column_reduce(g, 0, d)
        assert is_gparking(g, 0, red)


def eulerian_transform(g):
    """The digraph H with arcs i->j of multiplicity arcs[j][i] * R[j]: its row
    game coincides with the scaled column game of g."""
    r = period_vector(g)
    n = g.n_vertices
    arcs = []
    for i in range(n):
        for j in range(n):
            if i != j and g.arcs[j][i]:
                arcs.append((i, j, g.arcs[j][i] * r[j]))
    return build_digraph(arcs, n_vertices=n)


@pytest.mark.parametrize("g", [fixtures.t3(), fixtures.b2(), fixtures.p3(),
                               fixtures.k4u()])
def test_scaled_column_game_is_row_game_on_eulerian_transform(g):
    h = eulerian_transform(g)
    # H is Eulerian: in-degree equals out-degree at each vertex
    n = g.n_vertices
    for v in range(n):
        assert sum(h.arcs[v]) == sum(h.arcs[u][v] for u in range(n))
    scaled = scaled_game(column_game(g))
    hrow = row_game(h)
    assert scaled.firing_rows == hrow.firing_rows
    assert scaled.period == hrow.period
    assert scaled.weight == hrow.weight
