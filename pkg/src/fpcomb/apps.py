"""Collinear triples, ratio sets, non-averaging sets and mixed energies.

The collinear-triple count is pinned to the geometric definition: ordered
triples of points of the grid A x A lying on a common affine line, where
triples with repeated points are collinear and an all-equal triple counts
once.  The fast line-sweep formula carries the exact correction term for
that convention and the brute enumerator is the ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import random

from .avoidance import SearchResult, count_solutions
from .energy import additive_energy
from .errors import BadOrder, BudgetExceeded, TooSmall, ZeroInX
from .families import AffineEquation
from .field import PrimeField, ResidueSet, dilate
from .harmonic import IntegerProfile, convolve_add

_BRUTE_COLLINEAR_MAX = 8
_EXHAUSTIVE_NONAVG_MAX_P = 31


def q_lambda(a: ResidueSet) -> dict[int, int]:
    """q(lambda) = #{(a1, a2, a0) in A^3 : (a1-a0)/(a2-a0) = lambda, a2 != a0}.

    Exact O(|A|^3) double loop; q(0) = q(1) = |A|(|A|-1).
    """
    if len(a) < 2:
        raise TooSmall("q_lambda needs |A| >= 2")
    p = a.p
    counts = [0] * p
    elems = a.elements
    inv_cache = {x: a.field.inverse(x) for x in range(1, p)}
    for a0 in elems:
        for a2 in elems:
            if a2 == a0:
                continue
            denom_inv = inv_cache[(a2 - a0) % p]
            for a1 in elems:
                counts[(a1 - a0) * denom_inv % p] += 1
    return {lam: c for lam, c in enumerate(counts) if c > 0}


def ratio_set(a: ResidueSet) -> ResidueSet:
    """R[A]: support of q(lambda); contains {0, 1} whenever |A| >= 2."""
    if len(a) < 2:
        return ResidueSet(a.field, ())
    return ResidueSet(a.field, tuple(q_lambda(a)))


@dataclass(frozen=True)
class CollinearStats:
    total: int
    expected: Fraction  # |A|^6 / p
    q_profile: dict[int, int]
    ratio_set: ResidueSet


def _collinear_brute(a: ResidueSet) -> int:
    p = a.p
    grid = [(x, y) for x in a for y in a]
    total = 0
    for p1 in grid:
        for p2 in grid:
            dx1 = (p2[0] - p1[0]) % p
            dy1 = (p2[1] - p1[1]) % p
            for p3 in grid:
                dx2 = (p3[0] - p1[0]) % p
                dy2 = (p3[1] - p1[1]) % p
                if (dx1 * dy2 - dy1 * dx2) % p == 0:
                    total += 1
    return total


def _collinear_fast(a: ResidueSet) -> int:
    """sum over the p^2 + p affine lines of n_l^3, minus the overcount of
    all-equal triples (each grid point lies on p + 1 lines)."""
    p = a.p
    n = len(a)
    ind = IntegerProfile.from_set(a)
    # horizontal lines y = b and vertical lines x = c: |A|^3 for each b, c in A
    total = 2 * n**4
    # slanted lines y = m x + b, m != 0: n_{m,b} = (A_{-m} * A)(b)
    for m in range(1, p):
        dil = IntegerProfile.from_set(dilate(a, (-m) % p))
        conv = convolve_add(dil, ind)
        total += sum(v**3 for v in conv.values)
    return total - p * n * n


def collinear_triples(
    a: ResidueSet, mode: Literal["brute", "fast"] = "fast"
) -> CollinearStats:
    """T(A): ordered point triples of A x A on a common affine line."""
    if mode == "brute":
        if len(a) > _BRUTE_COLLINEAR_MAX:
            raise BudgetExceeded(
                f"brute mode supports |A| <= {_BRUTE_COLLINEAR_MAX}"
            )
        total = _collinear_brute(a)
    else:
        total = _collinear_fast(a)
    qp = q_lambda(a) if len(a) >= 2 else {}
    return CollinearStats(
        total=total,
        expected=Fraction(len(a) ** 6, a.p),
        q_profile=qp,
        ratio_set=ResidueSet(a.field, tuple(qp)),
    )


@dataclass(frozen=True)
class DeviationReport:
    total: int
    expected: Fraction
    deviation: Fraction  # |T - |A|^6/p|
    reference: float  # |A|^(40/9) p^(2/9)
    ratio: float


def collinear_deviation(a: ResidueSet) -> DeviationReport:
    """|T(A) - |A|^6/p| against |A|^(40/9) p^(2/9); trend report only."""
    total = _collinear_fast(a)
    expected = Fraction(len(a) ** 6, a.p)
    deviation = abs(Fraction(total) - expected)
    reference = len(a) ** (40 / 9) * a.p ** (2 / 9) if len(a) else 1.0
    return DeviationReport(
        total=total,
        expected=expected,
        deviation=deviation,
        reference=reference,
        ratio=float(deviation) / reference,
    )


def _averaging_equation(fld: PrimeField, m: int, n: int) -> AffineEquation:
    return AffineEquation(m % fld.p, n % fld.p, (-(m + n)) % fld.p, 0)


def is_nonaveraging(a: ResidueSet, t: int) -> bool:
    """True iff m X1 + n X2 = (m+n) X3 has only diagonal solutions in A
    for every 1 <= m, n <= t."""
    if t < 1 or 2 * t >= a.p:
        raise BadOrder(f"need 1 <= t with 2t < p; got t={t}, p={a.p}")
    fld = a.field
    for m in range(1, t + 1):
        for n in range(1, t + 1):
            eq = _averaging_equation(fld, m, n)
            if count_solutions(fld, eq, a, a, a).count != len(a):
                return False
    return True


def has_three_term_progression(a: ResidueSet) -> bool:
    """Direct scanner for x + y = 2z with (x, y, z) not all equal."""
    p = a.p
    elems = a.elements
    aset = a.as_set()
    inv2 = a.field.inverse(2)
    for x in elems:
        for y in elems:
            z = (x + y) * inv2 % p
            if z in aset and not (x == y == z):
                return True
    return False


def max_nonaveraging(
    fld: PrimeField,
    t: int,
    mode: Literal["exhaustive", "greedy", "randomized"] = "exhaustive",
    budget: int = 50,
    seed: int = 0,
) -> SearchResult:
    """Largest non-averaging set of order t (exhaustive) or a witness."""
    if t < 1 or 2 * t >= fld.p:
        raise BadOrder(f"need 1 <= t with 2t < p; got t={t}, p={fld.p}")
    p = fld.p
    eqs = [
        _averaging_equation(fld, m, n)
        for m in range(1, t + 1)
        for n in range(1, t + 1)
    ]

    def extends_ok(members: list[int], r: int) -> bool:
        pool = members + [r]
        pool_set = set(pool)
        for eq in eqs:
            cinv = fld.inverse(eq.c)
            ainv = fld.inverse(eq.a)
            for u in pool:
                for x, y in ((r, u), (u, r)):
                    z = -(eq.a * x + eq.b * y) * cinv % p
                    if z in pool_set and not (x == y == z):
                        return False
                x = -(eq.b * u + eq.c * r) * ainv % p
                if x in pool_set and not (x == u == r):
                    return False
        return True

    if mode == "exhaustive":
        if p > _EXHAUSTIVE_NONAVG_MAX_P:
            raise BudgetExceeded(
                f"exhaustive mode supports p <= {_EXHAUSTIVE_NONAVG_MAX_P}"
            )
        best: list[int] = []

        def extend(chosen: list[int], start: int) -> None:
            nonlocal best
            if len(chosen) > len(best):
                best = list(chosen)
            if len(chosen) + (p - start) <= len(best):
                return
            for r in range(start, p):
                if extends_ok(chosen, r):
                    chosen.append(r)
                    extend(chosen, r + 1)
                    chosen.pop()

        extend([], 0)
        return SearchResult(len(best), ResidueSet(fld, tuple(best)))

    rng = random.Random(seed)
    best_found: list[int] = []
    rounds = 1 if mode == "greedy" else max(1, budget)
    for trial in range(rounds):
        candidates = list(range(p))
        if mode == "randomized" and trial > 0:
            rng.shuffle(candidates)
        chosen: list[int] = []
        for r in candidates:
            if extends_ok(chosen, r):
                chosen.append(r)
        if len(chosen) > len(best_found):
            best_found = sorted(chosen)
    return SearchResult(len(best_found), ResidueSet(fld, tuple(best_found)))


def naive_max_nonaveraging(fld: PrimeField, t: int) -> int:
    """2^p oracle for small p."""
    p = fld.p
    best = 0
    for mask in range(1 << p):
        elems = tuple(r for r in range(p) if mask >> r & 1)
        if len(elems) <= best:
            continue
        if is_nonaveraging(ResidueSet(fld, elems), t):
            best = len(elems)
    return best


@dataclass(frozen=True)
class MixedEnergyReport:
    total: int
    expected: Fraction  # |X| |A|^4 / p
    deviation: Fraction


def mixed_energy_sum(a: ResidueSet, x: ResidueSet) -> MixedEnergyReport:
    """sum over x in X of E+(A, xA), exactly, with its expectation."""
    if 0 in x:
        raise ZeroInX("X must avoid 0")
    total = 0
    for s in x:
        total += additive_energy(a, dilate(a, s)).value
    expected = Fraction(len(x) * len(a) ** 4, a.p)
    return MixedEnergyReport(
        total=total, expected=expected, deviation=Fraction(total) - expected
    )
