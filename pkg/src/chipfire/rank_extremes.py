"""The Sigma region, the rank function, and extreme divisor classes."""

from dataclasses import dataclass
from itertools import product
from math import prod

from .errors import BudgetExceeded
from .divisor_algebra import degree, degree_plus
from .reduction import all_reduced_representatives, is_reduced


@dataclass(frozen=True)
class ExtremeClass:
    """One extreme class: scan representative, weighted degree, all reduced reps."""

    rep: tuple
    degree: int
    all_reps: tuple


@dataclass(frozen=True)
class ExtremeClassSet:
    classes: tuple
    g_min: int
    g_max: int

    @property
    def uniform(self):
        return self.g_min == self.g_max


def in_sigma(game, base, divisor):
    """True iff the divisor is not equivalent to an effective divisor.

    Memoized per equivalence class (keyed by the lattice residue).
    """
    if degree(game.weight, divisor) < 0:
        return True
    key = game.lattice.residue(divisor)
    cached = game.sigma_cache.get(key)
    if cached is None:
        cached = not any(
            min(rep) >= 0
            for rep in all_reduced_representatives(game, base, divisor)
        )
        game.sigma_cache[key] = cached
    return cached


def _effective_of_degree(weight, target):
    """All effective divisors of exact weighted degree, lexicographically."""

    def rec(prefix, idx, remaining):
        if idx == len(weight) - 1:
            q, r = divmod(remaining, weight[idx])
            if r == 0:
                yield tuple(prefix + [q])
            return
        w = weight[idx]
        for e in range(remaining // w + 1):
            yield from rec(prefix + [e], idx + 1, remaining - e * w)

    yield from rec([], 0, target)


def rank(game, base, divisor):
    """The rank: min weighted degree of effective E with D - E in Sigma, minus 1.

    Enumerates effective E by nondecreasing weighted degree, lexicographic
    within a degree; the first hit is the minimum.
    """
    if in_sigma(game, base, divisor):
        return -1
    deg = degree(game.weight, divisor)
    d = 0
    while True:
        d += 1
        if deg - d < 0:
            # Any effective E of this degree drives the degree negative.
            if any(True for _ in _effective_of_degree(game.weight, d)):
                return d - 1
            continue
        for eff in _effective_of_degree(game.weight, d):
            cand = tuple(a - b for a, b in zip(divisor, eff))
            if in_sigma(game, base, cand):
                return d - 1


def _effective_classes_by_degree(game, target):
    """Residues of effective-divisor classes, per weighted degree, cached.

    Built by the one-chip recursion: every effective divisor of degree d is an
    effective divisor of degree d - w[v] plus one chip at v.
    """
    cache = getattr(game, "_eff_class_cache", None)
    if cache is None:
        cache = {0: {game.lattice.residue((0,) * game.n_vertices)}}
        game._eff_class_cache = cache
    lat = game.lattice
    n = game.n_vertices
    for d in range(max(cache) + 1, target + 1):
        found = set()
        for v in range(n):
            prev = d - game.weight[v]
            if prev >= 0:
                for res in cache.get(prev, ()):
                    bumped = list(res)
                    bumped[v] += 1
                    found.add(lat.residue(bumped))
        cache[d] = found
    return cache.get(target, set())


def rank_fast(game, base, divisor):
    """Rank computed at class level: agrees with rank, memoized per class.

    Works on lattice residues: the Sigma test and the degree are both class
    invariants, and the effective test classes per degree come from the
    one-chip recursion rather than a full composition scan.
    """
    lat = game.lattice
    res = lat.residue(divisor)
    memo = getattr(game, "_rank_cache", None)
    if memo is None:
        memo = {}
        game._rank_cache = memo
    if res in memo:
        return memo[res]
    value = None
    if in_sigma(game, base, res):
        value = -1
    else:
        deg = degree(game.weight, res)
        d = 0
        while value is None:
            d += 1
            eff_classes = _effective_classes_by_degree(game, d)
            if not eff_classes:
                continue
            if deg - d < 0:
                value = d - 1
                break
            for res_e in eff_classes:
                cand = tuple(a - b for a, b in zip(res, res_e))
                if in_sigma(game, base, cand):
                    value = d - 1
                    break
    memo[res] = value
    return value


def is_extreme(game, base, divisor):
    """True iff D is in Sigma and every single added chip leaves Sigma."""
    if not in_sigma(game, base, divisor):
        return False
    n = game.n_vertices
    for v in range(n):
        bumped = list(divisor)
        bumped[v] += 1
        if in_sigma(game, base, bumped):
            return False
    return True


def enumerate_extremes(game, base, budget=10_000_000):
    """All extreme classes, by exhaustive scan over reduced normal forms.

    Scans divisors with value -1 at the base and 0 <= D(v) < F[v][v]
    elsewhere (the reduced-divisor coordinate bound), keeping those that are
    reduced, in Sigma, and extreme; classes are deduplicated by their full
    representative sets.
    """
    n = game.n_vertices
    others = [v for v in range(n) if v != base]
    total = prod(game.threshold(v) for v in others)
    if total > budget:
        raise BudgetExceeded(total, budget)
    classes = {}
    for combo in product(*[range(game.threshold(v)) for v in others]):
        divisor = [0] * n
        divisor[base] = -1
        for v, value in zip(others, combo):
            divisor[v] = value
        divisor = tuple(divisor)
        if not is_reduced(game, base, divisor):
            continue
        if not in_sigma(game, base, divisor):
            continue
        if not is_extreme(game, base, divisor):
            continue
        reps = tuple(all_reduced_representatives(game, base, divisor))
        if reps not in classes:
            classes[reps] = ExtremeClass(
                rep=divisor,
                degree=degree(game.weight, divisor),
                all_reps=reps,
            )
    ordered = tuple(sorted(classes.values(), key=lambda c: c.rep))
    if not ordered:
        raise AssertionError("no extreme classes found; scan bounds violated")
    degrees = [c.degree for c in ordered]
    return ExtremeClassSet(
        classes=ordered, g_min=min(degrees) + 1, g_max=max(degrees) + 1
    )


def rank_via_extremes(game, base, divisor, box_radius, extremes=None):
    """Bounded rank cross-check via extreme translates.

    min over extreme classes and lattice translates (basis coefficients in
    [-box_radius, box_radius]) of the positive-part degree of the difference,
    minus 1.  Monotone nonincreasing in the radius; equals the rank once the
    box is large enough.
    """
    from . import reduction

    if extremes is None:
        extremes = enumerate_extremes(game, base)
    basis = game.lattice.basis()
    n = game.n_vertices
    best = None
    for cls in extremes.classes:
        # Center the translate search on the reduced difference; the raw
        # difference may sit far from the minimizing coset representative.
        start = list(
            reduction.reduce(
                game, base, tuple(d - r for d, r in zip(divisor, cls.rep))
            )[0]
        )
        for coeffs in product(
            range(-box_radius, box_radius + 1), repeat=len(basis)
        ):
            diff = list(start)
            for c, b in zip(coeffs, basis):
                if c:
                    for i in range(n):
                        diff[i] -= c * b[i]
            val = degree_plus(game.weight, diff)
            if best is None or val < best:
                best = val
    return best - 1
