import random

import pytest

from chipfire import fixtures
from chipfire.arithmetical import chip_game, digraph_natural_rr
from chipfire.errors import NotSandpileForm, NotStable
from chipfire.games import row_game
from chipfire.riemann_roch import rr_verdict
from chipfire.sandpile import (
    dual_divisor,
    is_recurrent,
    is_recurrent_oracle,
    is_stable,
    minimal_recurrents,
    natural_rr_via_sandpile,
    stabilize,
)

from conftest import sandpile_box, small_games


def random_schedule_stabilize(game, base, divisor, rng):
    """Fire a uniformly random unstable non-base vertex until stable."""
    d = list(divisor)
    fired = [0] * game.n_vertices
    while True:
        hot = [
            v for v in range(game.n_vertices)
            if v != base and d[v] >= game.threshold(v)
        ]
        if not hot:
            return tuple(d), tuple(fired)
        v = rng.choice(hot)
        row = game.firing_rows[v]
        for i in range(game.n_vertices):
            d[i] -= row[i]
        fired[v] += 1


@pytest.mark.parametrize("name,game", small_games())
def test_stabilization_is_schedule_independent(name, game):
    rng = random.Random(hash(name) & 0xFFFF)
    n = game.n_vertices
    for _ in range(200):
        d = tuple(
            rng.randint(-2, 6) if v == 0 else rng.randint(0, 2 * game.threshold(v))
            for v in range(n)
        )
        expect = stabilize(game, 0, d)
        for _ in range(3):
            assert random_schedule_stabilize(game, 0, d, rng) == expect


def test_stabilize_rejects_negative_configurations():
    game = row_game(fixtures.t3())
    with pytest.raises(NotSandpileForm):
        stabilize(game, 0, (0, -1, 2))


@pytest.mark.parametrize("name,game", small_games())
def test_stable_output_and_fire_counts(name, game):
    d = tuple(
        3 * game.threshold(v) if v else 0 for v in range(game.n_vertices)
    )
    stable, fired = stabilize(game, 0, d)
    assert is_stable(game, 0, stable)
    moved = list(d)
    for v, count in enumerate(fired):
        row = game.firing_rows[v]
        for i in range(game.n_vertices):
            moved[i] -= count * row[i]
    assert tuple(moved) == stable


@pytest.mark.parametrize("name,game", small_games())
def test_recurrence_duality_matches_reachability_oracle(name, game):
    for d in sandpile_box(game, 0, slack=0, base_values=(0,)):
        assert is_recurrent(game, 0, d) == is_recurrent_oracle(game, 0, d, 3), d


def test_is_recurrent_requires_stability():
    game = row_game(fixtures.t3())
    with pytest.raises(NotStable):
        is_recurrent(game, 0, (0, 5, 0))


def test_duality_involution():
    game = row_game(fixtures.k4u())
    for d in sandpile_box(game, 0, slack=0, base_values=(0,)):
        assert dual_divisor(game, dual_divisor(game, d)) == d


def test_k4u_minimal_recurrents_are_dual_to_maximal_reduced():
    """threshold - 1 - D maps minimal recurrent configurations onto reduced
    divisors of maximal non-base degree."""
    from chipfire.reduction import is_reduced

    game = row_game(fixtures.k4u())
    mins = minimal_recurrents(game, 0)
    assert len(mins) == 6
    for m in mins:
        assert is_recurrent(game, 0, m)
        dual = dual_divisor(game, m)
        assert is_reduced(game, 0, dual)
        for v in range(1, 4):
            if m[v] == 0:
                continue
            lowered = tuple(x - (1 if u == v else 0) for u, x in enumerate(m))
            assert not is_recurrent(game, 0, lowered)


@pytest.mark.parametrize("name,game", small_games())
def test_minimal_recurrents_are_minimal(name, game):
    """Lowering any positive non-base entry of a minimal recurrent breaks
    recurrence, and every recurrent config dominates some minimal one."""
    mins = minimal_recurrents(game, 0)
    assert mins
    others = [v for v in range(game.n_vertices) if v != 0]
    for m in mins:
        for v in others:
            if m[v] == 0:
                continue
            lowered = tuple(x - (1 if u == v else 0) for u, x in enumerate(m))
            assert not is_recurrent(game, 0, lowered)
    for d in sandpile_box(game, 0, slack=0, base_values=(0,)):
        if is_recurrent(game, 0, d):
            assert any(all(m[v] <= d[v] for v in others) for m in mins), d


def test_natural_rr_via_sandpile_agrees_on_unit_weight_games():
    """The minimal-recurrent criterion is stated for the row game; agreement
    with the direct canonical-class check on the stock digraphs."""
    from chipfire.arithmetical import associated_digraph

    digraphs = [
        fixtures.k4u(), fixtures.p3(), fixtures.t3(), fixtures.b2(),
        associated_digraph(fixtures.ec(2)),
        associated_digraph(fixtures.ex_a()),
    ]
    for g in digraphs:
        game = row_game(g)
        assert natural_rr_via_sandpile(game, 0) == rr_verdict(game, 0).natural_rr


def test_digraph_natural_rr_matches_sandpile_route():
    from chipfire.arithmetical import associated_digraph
    from chipfire.games import row_game as rg

    for ag in (fixtures.ec(2), fixtures.ex_a()):
        direct = natural_rr_via_sandpile(rg(associated_digraph(ag)), 0)
        assert digraph_natural_rr(ag) == direct
