"""Uniformity, reflection invariance, the Riemann-Roch verdict, and scaling."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .divisor_algebra import degree, equivalent
from .games import scaled_game
from .graph_core import lattice_membership
from .rank_extremes import enumerate_extremes, rank_fast
from .reduction import all_reduced_representatives


@dataclass(frozen=True)
class RRReport:
    """Verdict record for one lattice."""

    extremes: object
    uniform: bool
    reflection_invariant: bool
    rr_property: bool
    canonical: tuple | None
    natural_rr: bool
    g: int | None
    reflection_witness: tuple | None
    pairing: tuple | None


def project(weight, point):
    """Exact projection along the weight vector onto its orthogonal hyperplane.

    pi(p) = p - ((p . R) / ||R||^2) R.
    """
    coords = [Fraction(x) for x in point]
    r = [Fraction(x) for x in weight]
    lam = sum(a * b for a, b in zip(coords, r)) / sum(x * x for x in r)
    return tuple(a - lam * b for a, b in zip(coords, r))


def delta_distance(weight, p, q):
    """The gauge max_i (q_i - p_i) / r_i, exact rational."""
    return max(
        (Fraction(qi) - Fraction(pi)) / Fraction(ri)
        for pi, qi, ri in zip(p, q, weight)
    )


def crit_points(extremes, weight):
    """One critical point per extreme class: pi(rep + 1)."""
    return [
        project(weight, [x + 1 for x in cls.rep]) for cls in extremes.classes
    ]


def _match_translation(points, lattice, translation):
    """The matching sigma with -p_i - v - p_sigma(i) in the lattice, if any."""
    sigma = []
    for p in points:
        target = [-a - v for a, v in zip(p, translation)]
        hit = None
        for j, q in enumerate(points):
            if lattice_membership(lattice, [t - b for t, b in zip(target, q)]):
                hit = j
                break
        if hit is None:
            return None
        sigma.append(hit)
    if sorted(sigma) != list(range(len(points))):
        return None
    return tuple(sigma)


def reflection_invariant(extremes, lattice, weight):
    """Decide whether the negated critical set is a lattice translate of itself.

    Any valid translation must send some critical point to -p_0, so the
    candidates are v = -p_0 - p_j; each candidate is checked for a perfect
    matching through exact lattice membership.

    Returns (flag, translation witness or None, matching or None).
    """
    points = crit_points(extremes, weight)
    p0 = points[0]
    for q in points:
        translation = tuple(-a - b for a, b in zip(p0, q))
        sigma = _match_translation(points, lattice, translation)
        if sigma is not None:
            return True, translation, sigma
    return False, None, None


def _canonical_from_pairing(game, base, extremes, sigma):
    """The canonical divisor nu_i + nu_sigma(i) of maximal weighted degree,
    normalized to its lexicographically least reduced representative."""
    best = None
    for i, cls in enumerate(extremes.classes):
        partner = extremes.classes[sigma[i]]
        candidate = tuple(a + b for a, b in zip(cls.rep, partner.rep))
        deg = degree(game.weight, candidate)
        if best is None or deg > best[0]:
            best = (deg, candidate)
    _, raw = best
    return min(all_reduced_representatives(game, base, raw))


def natural_divisor(game):
    """The entrywise divisor F[v][v] - 2: out-degree minus 2 in the row game,
    delta minus 2 in the chip game."""
    return tuple(game.threshold(v) - 2 for v in range(game.n_vertices))


def rr_verdict(game, base, budget=10_000_000):
    """Full Riemann-Roch report for the game's lattice."""
    extremes = enumerate_extremes(game, base, budget=budget)
    uniform = extremes.uniform
    invariant, witness, sigma = reflection_invariant(
        extremes, game.lattice, game.weight
    )
    rr = uniform and invariant
    canonical = None
    if invariant:
        canonical = _canonical_from_pairing(game, base, extremes, sigma)
    natural = bool(
        rr and equivalent(game.lattice, canonical, natural_divisor(game))
    )
    return RRReport(
        extremes=extremes,
        uniform=uniform,
        reflection_invariant=invariant,
        rr_property=rr,
        canonical=canonical,
        natural_rr=natural,
        g=extremes.g_min if uniform else None,
        reflection_witness=witness,
        pairing=sigma,
    )


def rr_formula_check(game, base, report, sample_box):
    """Verify r(D) - r(K-D) = deg(D) - g + 1 on the sample box.

    Both sides are class invariants, so distinct lattice residues are checked
    once each.
    """
    if not report.rr_property:
        raise ValueError("formula check requires the Riemann-Roch property")
    k = report.canonical
    g = report.g
    n = game.n_vertices
    seen = set()
    for entries in product(range(-sample_box, sample_box + 1), repeat=n):
        res = game.lattice.residue(entries)
        if res in seen:
            continue
        seen.add(res)
        lhs = rank_fast(game, base, res) - rank_fast(
            game, base, tuple(a - b for a, b in zip(k, res))
        )
        if lhs != degree(game.weight, res) - g + 1:
            return False
    return True


def canonical_inequality_check(game, base, report, sample_box):
    """Verify the two-sided canonical inequality on the sample box:

    deg(D) - 3 g_max + 2 g_min + 1 <= r(D) - r(K-D) <= deg(D) - g_min + 1.
    """
    if not report.reflection_invariant:
        raise ValueError("inequality check requires reflection invariance")
    k = report.canonical
    g_min = report.extremes.g_min
    g_max = report.extremes.g_max
    n = game.n_vertices
    seen = set()
    for entries in product(range(-sample_box, sample_box + 1), repeat=n):
        res = game.lattice.residue(entries)
        if res in seen:
            continue
        seen.add(res)
        diff = rank_fast(game, base, res) - rank_fast(
            game, base, tuple(a - b for a, b in zip(k, res))
        )
        deg = degree(game.weight, res)
        if not (deg - 3 * g_max + 2 * g_min + 1 <= diff <= deg - g_min + 1):
            return False
    return True


def transport_canonical(weight, canonical_scaled):
    """Pull a canonical divisor of the scaled lattice back through the scaling:
    R^{-1}(K + 2*1) - 2*1.  Returns None when the result is not integral."""
    out = []
    for w, k in zip(weight, canonical_scaled):
        num = k + 2
        if num % w != 0:
            return None
        out.append(num // w - 2)
    return tuple(out)


def scaling_bridge(game, base, budget=10_000_000):
    """Riemann-Roch verdicts agree before and after weight scaling, and the
    canonical divisors relate by the transport formula.  Returns True iff both
    assertions hold."""
    report = rr_verdict(game, base, budget=budget)
    scaled = scaled_game(game)
    scaled_report = rr_verdict(scaled, base, budget=budget)
    if report.rr_property != scaled_report.rr_property:
        return False
    if report.rr_property:
        pulled = transport_canonical(game.weight, scaled_report.canonical)
        if pulled is None:
            return False
        if not equivalent(game.lattice, pulled, report.canonical):
            return False
    return True
