"""Arithmetical graphs: validation, the chip game, Euclidean stars, staircases."""

from dataclasses import dataclass
from itertools import permutations
from math import gcd

from .errors import InvalidGraph, NotArithmetical, NotPrimitive
from .divisor_algebra import degree, equivalent
from .games import Game, column_game, scaled_game
from .graph_core import DirectedMultigraph
from .rank_extremes import enumerate_extremes
from .riemann_roch import rr_verdict


@dataclass(frozen=True)
class ArithmeticalGraph:
    """Undirected multigraph with multiplicities R satisfying (diag(delta) - A) R = 0."""

    adjacency: tuple  # symmetric multiplicity matrix, no loops
    multiplicities: tuple
    deltas: tuple

    @property
    def n_vertices(self):
        return len(self.multiplicities)

    def laplacian(self):
        n = self.n_vertices
        return [
            [
                self.deltas[i] if i == j else -self.adjacency[i][j]
                for j in range(n)
            ]
            for i in range(n)
        ]


def validate_arithmetical(adjacency, multiplicities):
    """Validate (G, R): connected base, integral deltas, primitive R."""
    n = len(adjacency)
    if n < 2:
        raise InvalidGraph("need at least two vertices")
    if any(len(row) != n for row in adjacency):
        raise InvalidGraph("adjacency matrix must be square")
    if any(adjacency[i][j] != adjacency[j][i] for i in range(n) for j in range(n)):
        raise InvalidGraph("adjacency matrix must be symmetric")
    if any(adjacency[i][i] != 0 for i in range(n)):
        raise InvalidGraph("loop edges are not allowed")
    if len(multiplicities) != n or any(r < 1 for r in multiplicities):
        raise InvalidGraph("multiplicities must be positive")
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(n):
            if adjacency[u][v] and not seen[v]:
                seen[v] = True
                stack.append(v)
    if not all(seen):
        raise InvalidGraph("base graph must be connected")
    g_all = 0
    for r in multiplicities:
        g_all = gcd(g_all, r)
    if g_all != 1:
        raise NotPrimitive("multiplicities must have gcd 1")
    deltas = []
    for i in range(n):
        neighbor_sum = sum(
            adjacency[i][j] * multiplicities[j] for j in range(n)
        )
        if neighbor_sum % multiplicities[i] != 0:
            raise NotArithmetical(
                f"vertex {i}: neighbor sum {neighbor_sum} not divisible by r={multiplicities[i]}"
            )
        deltas.append(neighbor_sum // multiplicities[i])
    return ArithmeticalGraph(
        adjacency=tuple(tuple(row) for row in adjacency),
        multiplicities=tuple(multiplicities),
        deltas=tuple(deltas),
    )


def g0(ag):
    """The invariant with 2 g0 - 2 = sum_i r_i (delta_i - 2)."""
    total = sum(
        r * (d - 2) for r, d in zip(ag.multiplicities, ag.deltas)
    )
    if total % 2 != 0:
        raise NotArithmetical("g0 is not an integer")
    return total // 2 + 1


def associated_digraph(ag):
    """Replace each edge (v_i, v_j) by r_j arcs i->j and r_i arcs j->i."""
    n = ag.n_vertices
    arcs = [
        [ag.adjacency[i][j] * ag.multiplicities[j] for j in range(n)]
        for i in range(n)
    ]
    return DirectedMultigraph(arcs)


def chip_game(ag):
    """The chip game on (G, R): firing matrix Q = diag(delta) - A, period and
    degree weight both R."""
    return Game(ag.laplacian(), ag.multiplicities, ag.multiplicities)


def chip_game_lattice(ag):
    return chip_game(ag).lattice


def column_rr_always(ag, base=0, budget=10_000_000):
    """Riemann-Roch verdict for the column game on the associated digraph."""
    game = column_game(associated_digraph(ag))
    return rr_verdict(game, base, budget=budget).rr_property


def digraph_natural_rr(ag, base=0, budget=10_000_000):
    """Natural Riemann-Roch for the row game on the associated digraph.

    The scaled chip game is the digraph row game, so the digraph canonical is
    the transported chip canonical; natural Riemann-Roch holds iff it is
    equivalent to the entrywise out-degree-minus-2 divisor in the scaled
    lattice.
    """
    report = rr_verdict(chip_game(ag), base, budget=budget)
    if not report.rr_property:
        return False
    scaled = scaled_game(chip_game(ag))
    transported = tuple(
        r * (k + 2) - 2 for r, k in zip(ag.multiplicities, report.canonical)
    )
    naturals = tuple(scaled.threshold(v) - 2 for v in range(scaled.n_vertices))
    return equivalent(scaled.lattice, transported, naturals)


@dataclass(frozen=True)
class EuclideanSequence:
    """Strictly decreasing r_0 > r_1 > ... > r_m with r_{i+1} = delta_i r_i - r_{i-1}."""

    values: tuple
    deltas: tuple  # interior deltas delta_1 ... delta_{m-1}

    @property
    def chain_deltas(self):
        """Delta values along a chain realizing the sequence: the interior
        recursion deltas followed by the chain-end value r_{m-1} / r_m."""
        values = self.values
        return self.deltas + (values[-2] // values[-1],)


def euclidean_sequence(r0, r1):
    """The unique decreasing sequence ending at gcd(r0, r1)."""
    if not r0 > r1 >= 1:
        raise ValueError("need r0 > r1 >= 1")
    values = [r0, r1]
    deltas = []
    while values[-2] % values[-1] != 0:
        prev, cur = values[-2], values[-1]
        delta = prev // cur + 1
        values.append(delta * cur - prev)
        deltas.append(delta)
    assert values[-1] == gcd(r0, r1)
    return EuclideanSequence(values=tuple(values), deltas=tuple(deltas))


@dataclass(frozen=True)
class GoodRepresentation:
    coefficients: tuple  # t_1 ... t_m with 0 <= t_i <= delta_i - 1


def good_representation(r0, r1, x):
    """The unique good representation of x over the Euclidean sequence, or None.

    x = sum t_i r_i with 0 <= t_i <= delta_i - 1 and no run
    (delta-1, delta-2, ..., delta-2, delta-1).  Exists iff 0 <= x <= r0 - 1.
    """
    if gcd(r0, r1) != 1:
        raise ValueError("good representations require gcd(r0, r1) = 1")
    if x < 0:
        return None
    seq = euclidean_sequence(r0, r1)
    values = seq.values[1:]  # r_1 ... r_m
    deltas = seq.chain_deltas
    m = len(values)
    suffix_max = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + (deltas[i] - 1) * values[i]
    dead = set()

    def search(i, rem, armed):
        if i == m:
            return () if rem == 0 else None
        if rem > suffix_max[i] or (i, rem, armed) in dead:
            return None
        for t in range(min(deltas[i] - 1, rem // values[i]), -1, -1):
            if armed and t == deltas[i] - 1:
                continue
            next_armed = t == deltas[i] - 1 or (armed and t == deltas[i] - 2)
            tail = search(i + 1, rem - t * values[i], next_armed)
            if tail is not None:
                return (t,) + tail
        dead.add((i, rem, armed))
        return None

    found = search(0, x, False)
    if found is None:
        return None
    return GoodRepresentation(coefficients=found)


def euclidean_star(r0, r1):
    """The Euclidean star: center of multiplicity r0 with r0 identical chains."""
    seq = euclidean_sequence(r0, r1)
    chain = seq.values[1:]
    m = len(chain)
    n = 1 + r0 * m
    adjacency = [[0] * n for _ in range(n)]
    mults = [r0] + list(chain) * r0
    for c in range(r0):
        first = 1 + c * m
        adjacency[0][first] = adjacency[first][0] = 1
        for i in range(m - 1):
            a, b = first + i, first + i + 1
            adjacency[a][b] = adjacency[b][a] = 1
    return validate_arithmetical(adjacency, mults)


def staircase_divisors(star_ag, r0, r1):
    """All staircase divisors of the Euclidean star: -1 at the center and one
    good representation of each of 0 .. r0-1 laid along the chains, over all
    r0! chain labelings."""
    if gcd(r0, r1) != 1:
        raise ValueError("staircase divisors require gcd(r0, r1) = 1")
    seq = euclidean_sequence(r0, r1)
    m = len(seq.values) - 1
    reps = []
    for x in range(r0):
        rep = good_representation(r0, r1, x)
        assert rep is not None
        reps.append(rep.coefficients)
    out = set()
    for perm in permutations(range(r0)):
        divisor = [-1] + [0] * (r0 * m)
        for c, which in enumerate(perm):
            for i, t in enumerate(reps[which]):
                divisor[1 + c * m + i] = t
        out.add(tuple(divisor))
    return sorted(out)


def gmax_bound_check(ag, base=0, budget=10_000_000):
    """Assert g_max <= g0 for the chip game; when equal, also check the
    canonical pairing with K = (delta - 2): a class of top degree g_max - 1
    pairs with K minus itself inside the extreme set, and conversely."""
    game = chip_game(ag)
    extremes = enumerate_extremes(game, base, budget=budget)
    bound = g0(ag)
    if extremes.g_max > bound:
        return False
    if extremes.g_max == bound:
        k = tuple(d - 2 for d in ag.deltas)
        residues = {game.lattice.residue(c.rep) for c in extremes.classes}
        for cls in extremes.classes:
            partner = game.lattice.residue(
                tuple(a - b for a, b in zip(k, cls.rep))
            )
            top = degree(game.weight, cls.rep) == extremes.g_max - 1
            if top != (partner in residues):
                return False
    return True
