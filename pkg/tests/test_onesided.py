"""Tests for lower/upper reals as monotone bound streams."""

import pytest

from streaks.cauchy import CauchyReal, cs_to_real
from streaks.core import NO, YES, Order, Sampler, axiom_suite
from streaks.onesided import (
    BOTTOM,
    LowerReal,
    NotEventuallyPositive,
    NotLocatedWithinBudget,
    UpperReal,
    lower_add,
    lower_cmp_rat,
    lower_mul_pos,
    lower_sup,
    pair_to_real,
    real_to_pair,
    upper_add,
    upper_cmp_rat,
    upper_inf,
    upper_mul_pos,
)
from streaks.rational import Rational
from streaks.real import real_cmp_rat, real_from_rational
from streaks.registry import get_streak


def q(*args):
    return Rational(*args)


def approaching_one():
    return lower_sup(lambda k: LowerReal.from_rational(q(1) - q(1, k + 1)))


class TestComparisons:
    def test_constant_lower(self):
        x = LowerReal.from_rational(q(1))
        assert lower_cmp_rat(q(1, 2), x, 10) is YES
        for budget in (1, 50, 1000):
            assert lower_cmp_rat(q(1), x, budget) is NO

    def test_sup_threshold(self):
        assert lower_cmp_rat(q(9, 10), approaching_one(), 100) is YES

    def test_bottom_prefix_skipped(self):
        x = LowerReal(lambda k: BOTTOM if k < 3 else q(5))
        assert lower_cmp_rat(q(4), x, 10) is YES
        assert lower_cmp_rat(q(6), x, 10) is NO

    def test_constant_upper(self):
        x = UpperReal.from_rational(q(1))
        assert upper_cmp_rat(x, q(2), 10) is YES
        assert upper_cmp_rat(x, q(1), 100) is NO

    def test_forced_monotone(self):
        # a raw stream that regresses is folded into its running max
        w = LowerReal(lambda k: q(10 - k))
        assert w.approx(5) == q(10)
        u = UpperReal(lambda k: q(k))
        assert u.approx(5) == q(0)


class TestArithmetic:
    def test_constant_sum(self):
        s = lower_add(LowerReal.from_rational(q(2)), LowerReal.from_rational(q(3)))
        assert lower_cmp_rat(q(9, 2), s, 10) is YES
        assert lower_cmp_rat(q(5), s, 100) is NO

    def test_sum_with_converging_part(self):
        s = lower_add(approaching_one(), LowerReal.from_rational(q(1)))
        assert lower_cmp_rat(q(19, 10), s, 200) is YES
        assert lower_cmp_rat(q(2), s, 400) is NO

    def test_product_of_converging_parts(self):
        p = lower_mul_pos(approaching_one(), approaching_one())
        assert lower_cmp_rat(q(9, 10), p, 500) is YES
        assert lower_cmp_rat(q(1), p, 500) is NO

    def test_mul_needs_positive_entries(self):
        with pytest.raises(NotEventuallyPositive):
            lower_mul_pos(
                LowerReal.from_rational(q(-1)), LowerReal.from_rational(q(2))
            )

    def test_upper_duals(self):
        s = upper_add(UpperReal.from_rational(q(2)), UpperReal.from_rational(q(3)))
        assert upper_cmp_rat(s, q(11, 2), 10) is YES
        assert upper_cmp_rat(s, q(5), 100) is NO
        p = upper_mul_pos(UpperReal.from_rational(q(2)), UpperReal.from_rational(q(3)))
        assert upper_cmp_rat(p, q(7), 10) is YES


class TestCountableLattice:
    def test_sup_of_constant_family(self):
        s = lower_sup(lambda k: LowerReal.from_rational(q(3, 7)))
        assert lower_cmp_rat(q(2, 7), s, 10) is YES
        assert lower_cmp_rat(q(3, 7), s, 100) is NO

    def test_unbounded_family_represents_infinity(self):
        s = lower_sup(lambda k: LowerReal.from_rational(q(k)))
        for probe in (q(10), q(100), q(1000)):
            assert lower_cmp_rat(probe, s, 10**4) is YES

    def test_sup_dominates_members(self):
        family = lambda k: LowerReal.from_rational(q(1) - q(1, k + 1))
        s = lower_sup(family)
        for k in (0, 3, 9):
            member_bound = q(1) - q(1, k + 1) - q(1, 100)
            if lower_cmp_rat(member_bound, family(k), 50) is YES:
                assert lower_cmp_rat(member_bound, s, 200) is YES

    def test_inf_threshold(self):
        i = upper_inf(lambda k: UpperReal.from_rational(q(1) + q(1, k + 1)))
        assert upper_cmp_rat(i, q(11, 10), 100) is YES
        assert upper_cmp_rat(i, q(1), 200) is NO


class TestConversions:
    def test_round_trip(self):
        x = real_from_rational(q(1, 3))
        back = pair_to_real(*real_to_pair(x), 100)
        assert back.refine(10) == (q(1, 3), q(1, 3))
        assert real_cmp_rat(back, q(1, 3), 64) is Order.UNKNOWN

    def test_interval_endpoints_are_one_sided_bounds(self):
        x = cs_to_real(CauchyReal(lambda i: q(1, i + 1), lambda n: n))
        lower, upper = real_to_pair(x)
        assert lower_cmp_rat(q(-1, 2), lower, 20) is YES
        assert upper_cmp_rat(upper, q(1, 2), 20) is YES

    def test_unlocated_pair_rejected(self):
        gap_lower = LowerReal(lambda k: q(1) - q(1, k + 1))
        gap_upper = UpperReal.from_rational(q(2))
        with pytest.raises(NotLocatedWithinBudget):
            pair_to_real(gap_lower, gap_upper, 50).refine(4)

    def test_symmetric_squeeze(self):
        lo = LowerReal(lambda k: q(-1, k + 1))
        hi = UpperReal(lambda k: q(1, k + 1))
        x = pair_to_real(lo, hi, 10**4)
        for n in (1, 4, 16):
            a, b = x.refine(n)
            assert a <= q(0) <= b
            assert b - a <= q(2, n)

    def test_negation_swaps_streams(self):
        from streaks.real import real_neg

        x = cs_to_real(CauchyReal(lambda i: q(1, i + 1), lambda n: n))
        lower, upper = real_to_pair(x)
        neg_lower, neg_upper = real_to_pair(real_neg(x))
        for k in range(10):
            assert neg_lower.approx(k) == -upper.approx(k)
            assert neg_upper.approx(k) == -lower.approx(k)


class TestShiftInvariance:
    def test_integer_shifts_preserve_cut_answers(self):
        x = approaching_one()
        for n in (1, 3, 7):
            shifted = lower_add(x, LowerReal.from_rational(q(n)))
            for probe in (q(1, 2), q(9, 10), q(1), q(3, 2)):
                assert lower_cmp_rat(probe, x, 300) is lower_cmp_rat(
                    probe + q(n), shifted, 300
                )


class TestHandles:
    def test_lower_laws_one_sided(self):
        report = axiom_suite(get_streak("lower"), Sampler(2), 40, budget=32)
        assert report.passed, report.summary()

    def test_upper_laws_one_sided(self):
        report = axiom_suite(get_streak("upper"), Sampler(2), 40, budget=32)
        assert report.passed, report.summary()
