"""Tests for interval-refinement reals and their certified operations."""

import pytest
from hypothesis import given, settings, strategies as st

from streaks.cauchy import CauchyReal, cs_to_real
from streaks.core import Element, Order, Sampler, axiom_suite
from streaks.rational import Rational
from streaks.real import (
    Apartness,
    ApartnessUndecided,
    Certificate,
    InvalidCertificate,
    Sign,
    _shifted_product,
    derive_apartness,
    real_abs,
    real_add,
    real_cmp_rat,
    real_dist,
    real_embed,
    real_from_rational,
    real_inf,
    real_mul_pos,
    real_mul_total,
    real_neg,
    real_recip,
    real_sub,
    real_sup,
    real_to_decimal,
)
from streaks.registry import get_streak


def q(*args):
    return Rational(*args)


def harmonic_real():
    return cs_to_real(CauchyReal(lambda i: q(1, i + 1), lambda n: n))


def overlap(x, y, n):
    xlo, xhi = x.refine(n)
    ylo, yhi = y.refine(n)
    return max(xlo, ylo) <= min(xhi, yhi)


small_rationals = st.builds(Rational, st.integers(-40, 40), st.integers(1, 15))


class TestFromRational:
    def test_degenerate_everywhere(self):
        assert real_from_rational(q(0)).refine(7) == (q(0), q(0))
        assert real_from_rational(q(22, 7)).refine(1) == (q(22, 7), q(22, 7))


class TestAdditive:
    def test_rational_sum_degenerate(self):
        s = real_add(real_from_rational(q(1, 2)), real_from_rational(q(1, 3)))
        assert s.refine(4) == (q(5, 6), q(5, 6))

    def test_symmetric_cancellation(self):
        x = harmonic_real()
        s = real_add(x, real_neg(x))
        for n in (1, 4, 16, 64):
            lo, hi = s.refine(n)
            assert lo <= q(0) <= hi
            assert hi - lo <= q(2, n)

    def test_sub_self_contains_zero(self):
        d = real_sub(real_from_rational(q(1)), real_from_rational(q(1)))
        lo, hi = d.refine(9)
        assert lo <= q(0) <= hi


class TestPositiveMultiplication:
    def test_rational_products(self):
        two, three = real_from_rational(q(2)), real_from_rational(q(3))
        cert = lambda x: derive_apartness(x, 8)
        assert real_mul_pos(two, three, cert(two), cert(three)).refine(5) == (q(6), q(6))
        x = real_from_rational(q(3, 2))
        assert real_mul_pos(x, x, cert(x), cert(x)).refine(3) == (q(9, 4), q(9, 4))

    def test_containment_and_width(self):
        x = cs_to_real(CauchyReal(lambda i: q(1) + q(1, i + 1), lambda n: n))
        y = real_from_rational(q(2))
        p = real_mul_pos(x, y, derive_apartness(x, 8), derive_apartness(y, 8))
        for n in (1, 3, 9, 27, 64):
            lo, hi = p.refine(n)
            assert lo <= q(2) <= hi
            assert hi - lo <= q(2, n)

    def test_invalid_certificate_rejected(self):
        x = real_from_rational(q(2))
        bogus = Apartness(Sign.POSITIVE, q(5), 1)  # claims x > 5
        with pytest.raises(InvalidCertificate):
            real_mul_pos(x, x, bogus, derive_apartness(x, 8))


class TestTotalMultiplication:
    def test_sign_cases(self):
        assert real_mul_total(
            real_from_rational(q(-2)), real_from_rational(q(3))
        ).refine(4) == (q(-6), q(-6))
        assert real_mul_total(
            real_from_rational(q(-1)), real_from_rational(q(-1))
        ).refine(4) == (q(1), q(1))

    def test_zero_absorbs_up_to_width(self):
        p = real_mul_total(real_from_rational(q(0)), harmonic_real())
        for n in (1, 8, 32):
            lo, hi = p.refine(n)
            assert lo <= q(0) <= hi

    def test_shift_choice_does_not_matter(self):
        x, y = real_from_rational(q(-3, 2)), real_from_rational(q(5, 3))
        a = _shifted_product(x, y, 2, 1)
        b = _shifted_product(x, y, 3, 3)
        for n in (1, 4, 16, 64):
            assert overlap(a, b, n)
        assert real_cmp_rat(real_sub(a, b), q(0), 64) is Order.UNKNOWN


class TestLattice:
    def test_inf_sup_of_rationals(self):
        one, two = real_from_rational(q(1)), real_from_rational(q(2))
        assert real_inf(one, two).refine(3) == (q(1), q(1))
        assert real_sup(one, two).refine(3) == (q(2), q(2))

    def test_sup_idempotent_overlaps(self):
        x = harmonic_real()
        s = real_sup(x, x)
        for n in (1, 8, 32):
            assert overlap(s, x, n)

    def test_inf_against_converging_sequence(self):
        z = real_inf(real_from_rational(q(1, 3)), harmonic_real())
        assert real_cmp_rat(z, q(1, 4), 64) is Order.LESS


class TestAbsDist:
    def test_rational_abs(self):
        assert real_abs(real_from_rational(q(-5, 2))).refine(4) == (q(5, 2), q(5, 2))

    def test_near_zero_band(self):
        x = harmonic_real()
        band = real_abs(real_sub(x, x))
        for n in (1, 8, 32):
            lo, hi = band.refine(n)
            assert q(0) <= hi and lo <= q(2, n)

    def test_multiplicativity_never_apart(self):
        left = real_abs(real_mul_total(real_from_rational(q(3)), real_from_rational(q(-2))))
        right = real_mul_total(
            real_abs(real_from_rational(q(3))), real_abs(real_from_rational(q(-2)))
        )
        assert real_cmp_rat(real_sub(left, right), q(0), 64) is Order.UNKNOWN

    def test_dist(self):
        assert real_dist(real_from_rational(q(1)), real_from_rational(q(4))).refine(3) == (
            q(3),
            q(3),
        )
        x, y = harmonic_real(), real_from_rational(q(1, 5))
        assert overlap(real_dist(x, y), real_dist(y, x), 16)


class TestReciprocal:
    def test_rational_reciprocal(self):
        two = real_from_rational(q(2))
        r = real_recip(two, derive_apartness(two, 8))
        assert r.refine(6) == (q(1, 2), q(1, 2))

    def test_involution_overlaps(self):
        four = real_from_rational(q(4))
        once = real_recip(four, derive_apartness(four, 8))
        twice = real_recip(once, derive_apartness(once, 8))
        for n in (1, 8, 32):
            assert overlap(twice, four, n)

    def test_negative_operand(self):
        x = real_from_rational(q(-1, 2))
        r = real_recip(x, Apartness(Sign.NEGATIVE, q(1, 4), 1))
        assert r.refine(8) == (q(-2), q(-2))

    def test_stale_certificate_rejected(self):
        x = real_from_rational(q(1, 8))
        with pytest.raises(InvalidCertificate):
            real_recip(x, Apartness(Sign.POSITIVE, q(1), 1))

    def test_apartness_underivable_for_zero(self):
        with pytest.raises(ApartnessUndecided):
            derive_apartness(real_from_rational(q(0)), 64)


class TestComparison:
    def test_equality_never_decided(self):
        x = real_from_rational(q(1, 3))
        assert real_cmp_rat(x, q(1, 3), 256) is Order.UNKNOWN

    def test_strict_gap_decided(self):
        x = real_from_rational(q(1, 3))
        assert real_cmp_rat(x, q(1, 2), 64) is Order.LESS
        y = cs_to_real(CauchyReal(lambda i: q(1) + q(1, i + 1), lambda n: n))
        assert real_cmp_rat(y, q(2), 16) is Order.LESS


class TestEmbedding:
    def test_rational_element(self):
        rat = get_streak("rat")
        r = real_embed(Element(rat, q(5, 3)), 1 << 12)
        assert r.refine(3) == (q(4, 3), q(2))

    def test_zero(self):
        rat = get_streak("rat")
        r = real_embed(Element(rat, q(0)), 1 << 12)
        for n in (1, 5, 25):
            lo, hi = r.refine(n)
            assert lo <= q(0) <= hi

    def test_difference_pair_matches_rational(self):
        from streaks.reflections import FormalDifference

        ring = get_streak("ring:rat")
        r = real_embed(Element(ring, FormalDifference(q(2), q(5))), 1 << 12)
        direct = real_from_rational(q(-3))
        for n in (1, 8, 32):
            assert overlap(r, direct, n)
        assert real_cmp_rat(real_sub(r, direct), q(0), 64) is Order.UNKNOWN


class TestDecimal:
    def test_third(self):
        text, cert = real_to_decimal(real_from_rational(q(1, 3)), 3, 1 << 20)
        assert text == "0.333"
        assert cert.hi - cert.lo <= q(1, 1000)

    def test_exact_integer(self):
        text, _ = real_to_decimal(real_from_rational(q(2)), 5, 1 << 20)
        assert text == "2.00000"

    def test_geometric_series(self):
        geo = cs_to_real(
            CauchyReal(
                lambda i: q(2) - q(1, 2 ** i),
                lambda n: max(n.bit_length(), 1),
                monotone=True,
            )
        )
        text, _ = real_to_decimal(geo, 4, 1 << 22)
        assert text in ("1.9999", "2.0000")

    def test_certificate_line_format(self):
        cert = Certificate(q(1, 3), q(2, 3), 12)
        assert cert.line() == "interval lo=1/3 hi=2/3 precision=12"


class TestInvariants:
    @given(a=small_rationals, b=small_rationals)
    @settings(max_examples=40, deadline=None)
    def test_add_width_and_nesting(self, a, b):
        s = real_add(real_from_rational(a), real_from_rational(b))
        prev = None
        for n in range(1, 33):
            lo, hi = s.refine(n)
            assert lo <= a + b <= hi
            assert hi - lo <= q(2, n)
            if prev is not None:
                assert prev[0] <= lo and hi <= prev[1]
            prev = (lo, hi)

    def test_streak_handle_laws(self):
        report = axiom_suite(get_streak("real"), Sampler(11), 40, budget=24)
        assert report.passed, report.summary()
