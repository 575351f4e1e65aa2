"""Base-vertex reduction: the generalized Dhar's algorithm and its consumers."""

from dataclasses import dataclass

from .errors import NotSandpileForm, NotStronglyConnected
from . import games as _games


@dataclass(frozen=True)
class DharTrace:
    """Record of one run of the generalized Dhar's algorithm.

    steps: ordered (strategy after the step, decremented vertex) pairs.
    terminal: the final strategy; zero iff the input divisor is reduced.
    reduced_witnesses: the divisor D - f F at each base-vertex decrement;
    these are reduced divisors equivalent to D.
    """

    steps: tuple
    terminal: tuple
    reduced_witnesses: tuple


def _check_sandpile_form(base, divisor):
    if any(d < 0 for v, d in enumerate(divisor) if v != base):
        raise NotSandpileForm("divisor must be nonnegative away from the base")


def dhar(game, base, divisor):
    """Run the generalized Dhar's algorithm, recording the full trace.

    Start at f = S.  While some non-base vertex is in debt under D - f F,
    decrement the lowest such vertex; otherwise decrement the base while its
    count is positive, recording the current divisor as a reduced witness.
    """
    _check_sandpile_form(base, divisor)
    n = game.n_vertices
    rows = game.firing_rows
    f = list(game.period)
    current = list(divisor)  # D - f F with f = S is D itself
    steps = []
    witnesses = []
    while True:
        debtor = next(
            (v for v in range(n) if v != base and current[v] <= -1), None
        )
        if debtor is not None:
            if f[debtor] <= 0:
                raise AssertionError("Dhar strategy went negative")
            f[debtor] -= 1
            row = rows[debtor]
            for i in range(n):
                current[i] += row[i]
            steps.append((tuple(f), debtor))
        elif f[base] > 0:
            witnesses.append(tuple(current))
            f[base] -= 1
            row = rows[base]
            for i in range(n):
                current[i] += row[i]
            steps.append((tuple(f), base))
        else:
            break
    return DharTrace(tuple(steps), tuple(f), tuple(witnesses))


def _dhar_terminal(game, base, divisor):
    """Terminal strategy of Dhar's algorithm, without trace bookkeeping."""
    _check_sandpile_form(base, divisor)
    n = game.n_vertices
    rows = game.firing_rows
    f = list(game.period)
    current = list(divisor)
    while True:
        debtor = next(
            (v for v in range(n) if v != base and current[v] <= -1), None
        )
        if debtor is None and f[base] <= 0:
            return f
        if debtor is None:
            debtor = base
        if f[debtor] <= 0:
            raise AssertionError("Dhar strategy went negative")
        f[debtor] -= 1
        row = rows[debtor]
        for i in range(n):
            current[i] += row[i]


def is_reduced(game, base, divisor):
    """True iff Dhar's algorithm terminates at the zero strategy."""
    key = (base, tuple(divisor))
    cached = game.reduced_cache.get(key)
    if cached is None:
        cached = not any(_dhar_terminal(game, base, divisor))
        game.reduced_cache[key] = cached
    return cached


def _bfs_layers(game, base):
    """Distance layers from the base along chip-flow arcs (negative entries)."""
    n = game.n_vertices
    rows = game.firing_rows
    dist = [None] * n
    dist[base] = 0
    frontier = [base]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in range(n):
                if rows[u][v] < 0 and dist[v] is None:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    if any(x is None for x in dist):
        raise NotStronglyConnected("some vertex receives no chips from the base")
    return dist


def reduce(game, base, divisor):
    """A reduced divisor equivalent to the input, plus the strategy used.

    Step 1 clears debt layer by layer: for each distance layer, farthest
    first, fire the set of strictly nearer vertices enough times to lift the
    layer out of debt.  Vertices farther than the fired set only gain chips,
    so a single descending pass leaves everything except the base nonnegative.
    Step 2 applies failing Dhar terminals until the divisor is reduced.
    """
    n = game.n_vertices
    rows = game.firing_rows
    dist = _bfs_layers(game, base)
    current = list(divisor)
    total = [0] * n
    for layer in range(max(dist), 0, -1):
        need = max(
            (-current[v] for v in range(n) if dist[v] == layer), default=0
        )
        if need <= 0:
            continue
        inner = [v for v in range(n) if dist[v] < layer]
        for u in inner:
            total[u] += need
            row = rows[u]
            for i in range(n):
                current[i] -= need * row[i]
    while True:
        terminal = _dhar_terminal(game, base, current)
        if not any(terminal):
            break
        for v in range(n):
            total[v] += terminal[v]
        current = list(game.apply(current, terminal))
    return tuple(current), tuple(total)


def all_reduced_representatives(game, base, divisor):
    """The r0 = S[base] distinct reduced divisors equivalent to the input.

    Collected from the Dhar trace witnesses of a reduced representative,
    sorted lexicographically.
    """
    reduced, _ = reduce(game, base, divisor)
    trace = dhar(game, base, reduced)
    reps = tuple(sorted(set(trace.reduced_witnesses)))
    if len(reps) != game.period[base]:
        raise AssertionError(
            f"expected {game.period[base]} representatives, found {len(reps)}"
        )
    return reps


def is_effective_class(game, base, divisor):
    """True iff the divisor is equivalent to an effective divisor.

    Criterion: some reduced representative is effective.
    """
    return any(
        min(rep) >= 0 for rep in all_reduced_representatives(game, base, divisor)
    )


def is_gparking(digraph, base, divisor):
    """True iff the divisor is a directed G-parking function at the base.

    This is exactly column-game reducedness, decided by the burning run of
    Dhar's algorithm for the column game.
    """
    return is_reduced(_games.column_game(digraph), base, divisor)


def column_reduce(digraph, base, divisor):
    """Reduce in the column game: the G-parking representative at the base."""
    return reduce(_games.column_game(digraph), base, divisor)
