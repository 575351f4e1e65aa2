"""The unified chip-firing game abstraction.

A game is a triple (F, S, w) on a fixed vertex set:

- ``firing_rows``: firing vertex j once subtracts row F[j] from the divisor,
  so a strategy f moves D to D - sum_j f[j] * F[j].
- ``period``: the strategy period S, a positive integer vector with
  sum_j S[j] * F[j] = 0; strategies act modulo S.
- ``weight``: the degree weight w with F[j] . w = 0 for every j, so every
  firing conserves the w-weighted degree.

The row game on a digraph has F = Q (rows), S = the period vector R, w = 1.
The column game has F = Q^T, S = 1, w = R.  The chip game on an arithmetical
graph (G, R) has F = Q = diag(delta) - A, S = w = R.
"""

from .errors import DimensionError
from .graph_core import LatticeHandle, laplacian, period_vector


class Game:
    """Immutable chip-firing game; carries its equivalence lattice and caches."""

    def __init__(self, firing_rows, period, weight):
        n = len(firing_rows)
        if len(period) != n or len(weight) != n or any(len(r) != n for r in firing_rows):
            raise DimensionError("game components must have matching dimensions")
        self.firing_rows = tuple(tuple(r) for r in firing_rows)
        self.period = tuple(period)
        self.weight = tuple(weight)
        self.n_vertices = n
        combo = [sum(s * row[i] for s, row in zip(period, firing_rows)) for i in range(n)]
        if any(combo):
            raise ValueError("period is not a strategy period: S^T F != 0")
        if any(sum(a * b for a, b in zip(row, weight)) for row in firing_rows):
            raise ValueError("weight is not conserved: F w != 0")
        self.lattice = LatticeHandle(self.firing_rows)
        if self.lattice.rank != n - 1:
            raise ValueError("firing lattice must have corank 1")
        self.sigma_cache = {}
        self.reduced_cache = {}

    def apply(self, divisor, strategy):
        """D - sum_j f[j] F[j], exact."""
        if len(divisor) != self.n_vertices or len(strategy) != self.n_vertices:
            raise DimensionError("divisor/strategy dimension mismatch")
        out = list(divisor)
        for fj, row in zip(strategy, self.firing_rows):
            if fj:
                for i, x in enumerate(row):
                    out[i] -= fj * x
        return tuple(out)

    def threshold(self, v):
        """Diagonal entry F[v][v]: chips lost at v when v fires once."""
        return self.firing_rows[v][v]

    def degree(self, divisor):
        return sum(a * b for a, b in zip(divisor, self.weight))

    def __repr__(self):
        return f"Game(n={self.n_vertices}, period={self.period}, weight={self.weight})"


def row_game(g):
    """Row chip-firing game on a strongly connected digraph."""
    q = laplacian(g, "row")
    r = period_vector(g)
    one = (1,) * g.n_vertices
    return Game(q, r, one)


def column_game(g):
    """Column chip-firing game on a strongly connected digraph."""
    q = laplacian(g, "column")
    n = g.n_vertices
    q_t = [[q[i][j] for i in range(n)] for j in range(n)]
    r = period_vector(g)
    one = (1,) * n
    return Game(q_t, one, r)


def scaled_game(game):
    """The game with every divisor coordinate scaled by its weight.

    Sends the lattice into the weight-one hyperplane lattice: the scaled game
    has weight 1 and the same strategy period.
    """
    w = game.weight
    rows = [[x * w[i] for i, x in enumerate(row)] for row in game.firing_rows]
    one = (1,) * game.n_vertices
    return Game(rows, game.period, one)
