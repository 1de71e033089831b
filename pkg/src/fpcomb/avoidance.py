"""Solution counting, avoiding sets, the parity construction, exhaustive
and heuristic avoiding-set search, and the exponent catalog for reports."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import (
    BadParameter,
    BudgetExceeded,
    EmptyFamily,
    FieldMismatch,
)
from .families import AffineEquation, EquationFamily, parity_family_equations
from .field import PrimeField, ResidueSet
from .harmonic import IntegerProfile, convolve_add

_EXHAUSTIVE_MAX_P = 31

# Above this work estimate count_solutions switches to one exact convolution.
_PAIRWISE_WORK_LIMIT = 250_000


@dataclass(frozen=True)
class SolutionCount:
    equation: AffineEquation
    count: int
    expected: Fraction  # |A1||A2||A3| / p


@dataclass(frozen=True)
class SearchResult:
    size: int
    witness: ResidueSet


@dataclass(frozen=True)
class BoundCatalogEntry:
    """One exponent kappa from the bound table; threshold is p / t^kappa."""

    name: str
    kappa: Fraction
    hypothesis: str
    source: str

    def __post_init__(self) -> None:
        if not 0 < self.kappa <= 1:
            raise ValueError(f"kappa must lie in (0, 1], got {self.kappa}")


BOUND_CATALOG: tuple[BoundCatalogEntry, ...] = (
    BoundCatalogEntry(
        "avoiding-headline", Fraction(3, 20), "|A| >> p^(39/47)", "headline"
    ),
    BoundCatalogEntry(
        "avoiding-T", Fraction(10, 31), "|A| >> p^(39/47)", "main-T"
    ),
    BoundCatalogEntry(
        "avoiding-Tstar", Fraction(3, 10), "|A| >> p^(39/47)", "main-Tstar"
    ),
    BoundCatalogEntry(
        "avoiding-Tstar-energy",
        Fraction(35, 159),
        "|A| >> p^(7/9), T* < p^(2/3); scaled by (E+_*/|A|^3)^(22/159)",
        "main-Tstar-energy",
    ),
    BoundCatalogEntry(
        "avoiding-Tstar-energy-alt",
        Fraction(69, 183),
        "second branch of the energy-weighted bound",
        "main-Tstar-energy",
    ),
    BoundCatalogEntry(
        "avoiding-family-size", Fraction(5, 31), "|A| >> p^(39/47)", "family-size"
    ),
    BoundCatalogEntry(
        "non-averaging", Fraction(2, 3), "t < sqrt(p)", "non-averaging"
    ),
    BoundCatalogEntry(
        "lower-construction", Fraction(1, 2), "parity construction", "lower-bound"
    ),
    BoundCatalogEntry(
        "avoiding-simple", Fraction(1, 3), "general field argument", "simple-proof"
    ),
)


def bound_threshold(entry: BoundCatalogEntry, p: int, t: int) -> float:
    """p / t^kappa; report-only, the implied constants are unspecified."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return p / t ** float(entry.kappa)


def count_solutions(
    fld: PrimeField,
    eq: AffineEquation,
    a1: ResidueSet,
    a2: ResidueSet,
    a3: ResidueSet,
) -> SolutionCount:
    """Exact |{(x,y,z) in A1 x A2 x A3 : a x + b y + c z = d}|."""
    p = fld.p
    for s in (a1, a2, a3):
        if s.p != p:
            raise FieldMismatch(f"set over p={s.p}, equation over p={p}")
    expected = Fraction(len(a1) * len(a2) * len(a3), p)
    if len(a1) * len(a2) > _PAIRWISE_WORK_LIMIT:
        # one exact convolution: count = sum_z (aA1 * bA2)(d - c z)
        fa = [0] * p
        for x in a1:
            fa[eq.a * x % p] += 1
        fb = [0] * p
        for y in a2:
            fb[eq.b * y % p] += 1
        conv = convolve_add(
            IntegerProfile(fld, tuple(fa)), IntegerProfile(fld, tuple(fb))
        )
        count = sum(conv[(eq.d - eq.c * z) % p] for z in a3)
        return SolutionCount(eq, count, expected)
    a3set = a3.as_set()
    cinv = fld.inverse(eq.c)
    count = 0
    for x in a1:
        ax = eq.a * x % p
        for y in a2:
            z = (eq.d - ax - eq.b * y) * cinv % p
            if z in a3set:
                count += 1
    return SolutionCount(eq, count, expected)


def avoids(a: ResidueSet, family: EquationFamily) -> bool:
    """True iff A has no solution of any equation; short-circuits."""
    if a.p != family.p:
        raise FieldMismatch(f"set over p={a.p}, family over p={family.p}")
    for eq in family.equations:
        if count_solutions(family.field, eq, a, a, a).count > 0:
            return False
    return True


@dataclass(frozen=True)
class ParityConstruction:
    a: ResidueSet
    family: EquationFamily


def construct_parity_set(fld: PrimeField, q: int) -> ParityConstruction:
    """Odd residues below p/q avoid the even-coefficient family.

    |A| = ceil((ceil(p/q) - 1) / 2) and |E| = floor(q/4)^2; the parity of
    i x + j y forces a contradiction, so avoids() is true by construction.
    """
    p = fld.p
    eqs = parity_family_equations(fld, q)  # validates q
    if not eqs:
        raise BadParameter(f"q = {q} yields an empty family")
    limit = -(-p // q)  # ceil(p / q)
    elements = tuple(x for x in range(1, limit) if x % 2 == 1)
    return ParityConstruction(
        ResidueSet(fld, elements), EquationFamily(fld, tuple(eqs))
    )


def _has_violation_with(
    fld: PrimeField,
    family: EquationFamily,
    members: list[int],
    newcomer: int,
) -> bool:
    """Does adding `newcomer` create a solution of some equation?

    Only triples involving the newcomer need checking.
    """
    p = fld.p
    pool = members + [newcomer]
    pool_set = set(pool)
    for eq in family.equations:
        ainv = fld.inverse(eq.a)
        binv = fld.inverse(eq.b)
        cinv = fld.inverse(eq.c)
        r = newcomer
        for u in pool:
            # r fixed as x
            if (eq.d - eq.a * r - eq.b * u) * cinv % p in pool_set:
                return True
            # r fixed as y
            if (eq.d - eq.a * u - eq.b * r) * cinv % p in pool_set:
                return True
            # r fixed as z
            if (eq.d - eq.c * r - eq.b * u) * ainv % p in pool_set:
                return True
            if (eq.d - eq.c * r - eq.a * u) * binv % p in pool_set:
                return True
    return False


def _constraint_order(fld: PrimeField, family: EquationFamily) -> list[int]:
    """Residues ordered by ascending participation in degenerate solutions.

    A residue r that solves x = y = z already, or that pairs with many
    residues, is considered last; ties broken by value for determinism.
    """
    p = fld.p
    score = [0] * p
    for eq in family.equations:
        for r in range(p):
            if (eq.a + eq.b + eq.c) * r % p == eq.d % p:
                score[r] += 1  # diagonal solution: immediately blocked
    return sorted(range(p), key=lambda r: (score[r], r))


def max_avoiding(
    fld: PrimeField,
    family: EquationFamily,
    mode: Literal["exhaustive", "greedy", "randomized"] = "exhaustive",
    budget: int = 50,
    seed: int = 0,
) -> SearchResult:
    """Largest avoiding set (exhaustive) or a valid witness (heuristics)."""
    if len(family) == 0:
        raise EmptyFamily("cannot search against an empty family")
    if family.p != fld.p:
        raise FieldMismatch(f"family over p={family.p}, field p={fld.p}")
    p = fld.p
    order = _constraint_order(fld, family)

    if mode == "exhaustive":
        if p > _EXHAUSTIVE_MAX_P:
            raise BudgetExceeded(f"exhaustive mode supports p <= {_EXHAUSTIVE_MAX_P}")
        best: list[int] = []

        def extend(chosen: list[int], pos: int) -> None:
            nonlocal best
            if len(chosen) > len(best):
                best = list(chosen)
            if len(chosen) + (len(order) - pos) <= len(best):
                return
            for i in range(pos, len(order)):
                r = order[i]
                if not _has_violation_with(fld, family, chosen, r):
                    chosen.append(r)
                    extend(chosen, i + 1)
                    chosen.pop()

        extend([], 0)
        return SearchResult(len(best), ResidueSet(fld, tuple(best)))

    rng = random.Random(seed)
    best_greedy: list[int] = []
    rounds = 1 if mode == "greedy" else max(1, budget)
    for trial in range(rounds):
        candidates = list(order)
        if mode == "randomized" and trial > 0:
            rng.shuffle(candidates)
        chosen: list[int] = []
        for r in candidates:
            if not _has_violation_with(fld, family, chosen, r):
                chosen.append(r)
        if len(chosen) > len(best_greedy):
            best_greedy = sorted(chosen)
    return SearchResult(len(best_greedy), ResidueSet(fld, tuple(best_greedy)))


def naive_max_avoiding(fld: PrimeField, family: EquationFamily) -> int:
    """2^p subset enumeration (oracle for p <= 13ish)."""
    if len(family) == 0:
        raise EmptyFamily("cannot search against an empty family")
    p = fld.p
    best = 0
    for mask in range(1 << p):
        elems = [r for r in range(p) if mask >> r & 1]
        if len(elems) <= best:
            continue
        if avoids(ResidueSet(fld, tuple(elems)), family):
            best = len(elems)
    return best


@dataclass(frozen=True)
class RegimeEntry:
    equation: AffineEquation
    count: int
    low: Fraction
    high: Fraction
    regime: Literal["below", "typical", "above"]


def deviation_regime(
    family: EquationFamily, a: ResidueSet
) -> list[RegimeEntry]:
    """Classify each equation's solution count against |A|^3/(4p), 2|A|^3/p."""
    p = family.p
    low = Fraction(len(a) ** 3, 4 * p)
    high = Fraction(2 * len(a) ** 3, p)
    out = []
    for eq in family.equations:
        cnt = count_solutions(family.field, eq, a, a, a).count
        if cnt <= low:
            regime: Literal["below", "typical", "above"] = "below"
        elif cnt >= high:
            regime = "above"
        else:
            regime = "typical"
        out.append(RegimeEntry(eq, cnt, low, high, regime))
    return out
