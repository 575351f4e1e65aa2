"""Divisors, degrees, firing strategies, natural form, and equivalence."""

from itertools import product

from .errors import DimensionError, ZeroStrategy
from .graph_core import lattice_membership


def apply_firing(game, divisor, strategy):
    """Play strategy f: returns D - sum_j f[j] F[j]."""
    return game.apply(divisor, strategy)


def degree(weight, divisor):
    """Weighted degree D . w."""
    if len(weight) != len(divisor):
        raise DimensionError("weight/divisor dimension mismatch")
    return sum(a * b for a, b in zip(weight, divisor))


def degree_plus(weight, divisor):
    """Weighted degree of the positive part: sum_i w[i] * max(D[i], 0)."""
    if len(weight) != len(divisor):
        raise DimensionError("weight/divisor dimension mismatch")
    return sum(w * d for w, d in zip(weight, divisor) if d > 0)


def equivalent(lattice, d1, d2):
    """True iff D1 - D2 lies in the lattice."""
    return lattice_membership(lattice, [a - b for a, b in zip(d1, d2)])


def natural_form(period, strategy):
    """The unique translate f - k*S with f - k*S <= S and f - k*S not <= 0.

    k = max_i ceil(f_i / S_i) - 1.
    """
    if not any(strategy):
        raise ZeroStrategy("natural form is undefined for the zero strategy")
    k = max(-(-f // s) for f, s in zip(strategy, period)) - 1
    return tuple(f - k * s for f, s in zip(strategy, period))


def valid_strategies(game, base):
    """All nonzero f with 0 <= f <= S and f[base] = 0, in lexicographic order."""
    n = game.n_vertices
    ranges = [
        range(1) if v == base else range(game.period[v] + 1) for v in range(n)
    ]
    for f in product(*ranges):
        if any(f):
            yield f
