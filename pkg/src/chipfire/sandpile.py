"""Directed sandpile dynamics: stabilization, recurrence, minimal recurrents."""

from itertools import product
from math import prod

from .errors import BudgetExceeded, NotSandpileForm, NotStable
from .divisor_algebra import degree
from .rank_extremes import in_sigma
from .reduction import all_reduced_representatives, is_reduced
from .riemann_roch import natural_divisor


def _check_config(game, base, divisor):
    if any(d < 0 for v, d in enumerate(divisor) if v != base):
        raise NotSandpileForm("sandpile configuration must be nonnegative off the base")


def is_stable(game, base, divisor):
    return all(
        divisor[v] < game.threshold(v)
        for v in range(game.n_vertices)
        if v != base
    )


def stabilize(game, base, divisor, step_cap=None):
    """Fire the lowest-index overfull non-base vertex until none remains.

    Returns the stable configuration and the total firing vector.  The result
    is independent of the firing order (asserted by tests, not assumed here).
    """
    _check_config(game, base, divisor)
    n = game.n_vertices
    rows = game.firing_rows
    current = list(divisor)
    fired = [0] * n
    steps = 0
    while True:
        v = next(
            (
                u
                for u in range(n)
                if u != base and current[u] >= rows[u][u]
            ),
            None,
        )
        if v is None:
            return tuple(current), tuple(fired)
        row = rows[v]
        for i in range(n):
            current[i] -= row[i]
        fired[v] += 1
        steps += 1
        if step_cap is not None and steps > step_cap:
            raise RuntimeError("stabilization exceeded the step cap")


def dual_divisor(game, divisor):
    """The recurrence dual: entrywise threshold - 1 - D."""
    return tuple(
        game.threshold(v) - 1 - divisor[v] for v in range(game.n_vertices)
    )


def is_recurrent(game, base, divisor):
    """Recurrence via duality: D is recurrent iff threshold-1-D is reduced."""
    _check_config(game, base, divisor)
    if not is_stable(game, base, divisor):
        raise NotStable("recurrence is defined for stable configurations")
    return is_reduced(game, base, dual_divisor(game, divisor))


def is_recurrent_oracle(game, base, divisor, headroom):
    """Bounded reachability check: search for an overfull configuration that
    stabilizes to D off the base.  One-sided: False may mean the headroom was
    too small."""
    _check_config(game, base, divisor)
    if not is_stable(game, base, divisor):
        raise NotStable("recurrence is defined for stable configurations")
    n = game.n_vertices
    others = [v for v in range(n) if v != base]
    ranges = [
        range(game.threshold(v), game.threshold(v) + headroom + 1)
        for v in others
    ]
    for combo in product(*ranges):
        start = list(divisor)
        for v, value in zip(others, combo):
            start[v] = value
        stable, _ = stabilize(game, base, start)
        if all(stable[v] == divisor[v] for v in others):
            return True
    return False


def minimal_recurrents(game, base, budget=10_000_000):
    """All recurrent stable configurations minimal under dominance off the base.

    The base entry is stored as 0; the sandpile order ignores it.
    """
    n = game.n_vertices
    others = [v for v in range(n) if v != base]
    total = prod(game.threshold(v) for v in others)
    if total > budget:
        raise BudgetExceeded(total, budget)
    recurrents = []
    for combo in product(*[range(game.threshold(v)) for v in others]):
        divisor = [0] * n
        for v, value in zip(others, combo):
            divisor[v] = value
        divisor = tuple(divisor)
        if is_recurrent(game, base, divisor):
            recurrents.append(divisor)
    minimal = [
        d
        for d in recurrents
        if not any(
            other != d and all(other[v] <= d[v] for v in others)
            for other in recurrents
        )
    ]
    return sorted(minimal)


def natural_rr_via_sandpile(game, base, budget=10_000_000):
    """Natural Riemann-Roch via the sandpile model.

    True iff every minimal recurrent configuration D, shifted at the base so
    that D - 1 has the natural degree g - 1, becomes an extreme divisor:
    it lies in Sigma and for every vertex v some v-reduced representative has
    value exactly -1 at v.  The genus comes from the natural canonical divisor
    (entrywise threshold - 2) via deg K = 2g - 2.
    """
    naturals = natural_divisor(game)
    deg_k = degree(game.weight, naturals)
    if deg_k % 2 != 0:
        return False
    g = deg_k // 2 + 1
    n = game.n_vertices
    for config in minimal_recurrents(game, base, budget=budget):
        shifted = [d - 1 for d in config]
        gap = (g - 1) - degree(game.weight, shifted)
        if gap % game.weight[base] != 0:
            return False
        shifted[base] += gap // game.weight[base]
        shifted = tuple(shifted)
        if not in_sigma(game, base, shifted):
            return False
        for v in range(n):
            reps = all_reduced_representatives(game, v, shifted)
            if not any(rep[v] == -1 for rep in reps):
                return False
    return True
