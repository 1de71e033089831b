from fractions import Fraction

import pytest

from fpcomb import (
    BadOrder,
    BudgetExceeded,
    PrimeField,
    ResidueSet,
    TooSmall,
    ZeroInX,
    additive_energy,
    collinear_deviation,
    collinear_triples,
    has_three_term_progression,
    is_nonaveraging,
    max_nonaveraging,
    mixed_energy_sum,
    multiplicative_subgroup,
    naive_max_nonaveraging,
    q_lambda,
    ratio_set,
)
from conftest import random_residue_set


class TestQLambda:
    def test_identities(self, rng):
        for p in (11, 101):
            fld = PrimeField(p)
            for _ in range(8):
                a = random_residue_set(rng, fld, rng.randint(2, min(p - 1, 10)))
                q = q_lambda(a)
                n = len(a)
                assert q[0] == n * (n - 1)
                assert q[1] == n * (n - 1)
                assert sum(q.values()) == n * n * (n - 1)

    def test_too_small(self):
        with pytest.raises(TooSmall):
            q_lambda(ResidueSet.of(7, [1]))

    def test_ratio_set_contains_zero_one(self, rng):
        fld = PrimeField(31)
        a = random_residue_set(rng, fld, 5)
        r = ratio_set(a)
        assert 0 in r and 1 in r


class TestCollinear:
    def test_pinned_value(self):
        a = ResidueSet.of(5, [0, 1])
        assert collinear_triples(a, "brute").total == 40
        assert collinear_triples(a, "fast").total == 40

    def test_modes_agree(self, rng):
        for p in (5, 7, 11, 13, 31):
            fld = PrimeField(p)
            for _ in range(4):
                a = random_residue_set(rng, fld, rng.randint(1, min(p - 1, 5)))
                brute = collinear_triples(a, "brute").total
                fast = collinear_triples(a, "fast").total
                assert brute == fast, (p, a.elements)

    def test_brute_budget(self, rng):
        a = random_residue_set(rng, PrimeField(31), 9)
        with pytest.raises(BudgetExceeded):
            collinear_triples(a, "brute")

    def test_full_grid(self):
        # every point triple of the full plane is collinear iff it lies on
        # one of the p^2 + p lines; for A = F_p the count is known exactly:
        # each line has p points, plus the correction for equal triples.
        p = 5
        a = ResidueSet.of(p, range(p))
        total = collinear_triples(a, "fast").total
        assert total == (p * p + p) * p**3 - p * p * p


class TestCollinearDeviation:
    def test_report_fields(self, rng):
        fld = PrimeField(31)
        a = random_residue_set(rng, fld, 8)
        rep = collinear_deviation(a)
        assert rep.expected == Fraction(len(a) ** 6, 31)
        assert rep.deviation == abs(Fraction(rep.total) - rep.expected)
        assert rep.ratio == pytest.approx(float(rep.deviation) / rep.reference)


class TestNonAveraging:
    def test_agrees_with_3ap_scanner(self, rng):
        for p in (7, 11, 31, 101):
            fld = PrimeField(p)
            for _ in range(15):
                a = random_residue_set(rng, fld, rng.randint(1, p - 1))
                assert is_nonaveraging(a, 1) == (
                    not has_three_term_progression(a)
                )

    def test_order_validation(self):
        a = ResidueSet.of(7, [1])
        with pytest.raises(BadOrder):
            is_nonaveraging(a, 0)
        with pytest.raises(BadOrder):
            is_nonaveraging(a, 4)  # 2t >= p

    def test_exhaustive_matches_naive(self):
        for p in (5, 7, 11):
            fld = PrimeField(p)
            for t in (1, 2):
                if 2 * t >= p:
                    continue
                ex = max_nonaveraging(fld, t, "exhaustive")
                assert ex.size == naive_max_nonaveraging(fld, t)
                assert ex.size == 0 or is_nonaveraging(ex.witness, t)

    def test_heuristics_valid(self):
        fld = PrimeField(101)
        g = max_nonaveraging(fld, 2, "greedy")
        assert is_nonaveraging(g.witness, 2)
        r = max_nonaveraging(fld, 2, "randomized", budget=5, seed=1)
        assert is_nonaveraging(r.witness, 2)
        assert r == max_nonaveraging(fld, 2, "randomized", budget=5, seed=1)

    def test_exhaustive_budget(self):
        with pytest.raises(BudgetExceeded):
            max_nonaveraging(PrimeField(37), 1, "exhaustive")


class TestMixedEnergy:
    def test_x_is_one_reduces_to_energy(self, rng):
        for p in (7, 31, 101):
            fld = PrimeField(p)
            for _ in range(5):
                a = random_residue_set(rng, fld, rng.randint(1, min(p - 1, 10)))
                rep = mixed_energy_sum(a, ResidueSet.of(fld, [1]))
                assert rep.total == additive_energy(a, a).value

    def test_subgroup_pinned(self):
        fld = PrimeField(7)
        g = multiplicative_subgroup(fld, 3)
        rep = mixed_energy_sum(g, ResidueSet.of(fld, [2]))
        assert rep.total == 15

    def test_full_set_zero_deviation(self):
        p = 11
        fld = PrimeField(p)
        a = ResidueSet.of(fld, range(p))
        x = ResidueSet.of(fld, range(1, p))
        rep = mixed_energy_sum(a, x)
        assert rep.deviation == 0

    def test_zero_in_x_rejected(self):
        a = ResidueSet.of(7, [1, 2])
        with pytest.raises(ZeroInX):
            mixed_energy_sum(a, ResidueSet.of(7, [0, 1]))

    def test_cauchy_schwarz_lower_bound(self, rng):
        fld = PrimeField(101)
        for _ in range(10):
            a = random_residue_set(rng, fld, rng.randint(1, 30))
            x = ResidueSet.of(
                fld, rng.sample(range(1, 101), rng.randint(1, 10))
            )
            rep = mixed_energy_sum(a, x)
            assert rep.total >= rep.expected
