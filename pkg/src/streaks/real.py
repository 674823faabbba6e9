"""Interval-refinement reals: the library's canonical real number type.

A RefinedReal is a deterministic oracle: precision n >= 1 maps to a
rational interval [lo, hi] of width at most 2/n containing the number.
Emitted intervals are intersected with everything emitted before, so
refinement is nested and width monotone.  Arithmetic queries operands
at internally inflated precisions chosen so the output width contract
holds; partial operations (reciprocal, positive product) take explicit
apartness certificates.
"""

from __future__ import annotations

import enum

from .core import (
    NO,
    YES,
    BudgetExceeded,
    Element,
    Order,
    StreakHandle,
    locate,
)
from .rational import Rational, rat_decimal


class InvalidCertificate(Exception):
    pass


class ApartnessUndecided(Exception):
    pass


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


class Apartness:
    """A certificate that |x| > bound, re-checkable at its precision."""

    __slots__ = ("sign", "bound", "precision")

    def __init__(self, sign, bound, precision):
        bound = Rational(bound)
        if not Rational(0) < bound:
            raise ValueError("apartness bound must be positive")
        self.sign = sign
        self.bound = bound
        self.precision = int(precision)

    def check(self, x):
        lo, hi = x.refine(self.precision)
        if self.sign is Sign.POSITIVE:
            return self.bound < lo
        return hi < -self.bound

    def __repr__(self):
        return "Apartness(%s, bound=%s, precision=%d)" % (
            self.sign.name,
            self.bound,
            self.precision,
        )


class RefinedReal:
    """A memoized nested-interval oracle; see the module docstring."""

    __slots__ = ("_raw", "_memo", "_current")

    def __init__(self, raw):
        self._raw = raw
        self._memo = {}
        self._current = None  # intersection of everything emitted so far

    def refine(self, n):
        n = int(n)
        if n < 1:
            raise ValueError("precision must be at least 1")
        if n in self._memo:
            lo, hi = self._memo[n]
        else:
            lo, hi = self._raw(n)
            lo, hi = Rational(lo), Rational(hi)
        if self._current is not None:
            clo, chi = self._current
            lo, hi = max(lo, clo), min(hi, chi)
        if hi < lo:
            raise ValueError("refinement produced an empty interval at n=%d" % n)
        self._memo[n] = (lo, hi)
        self._current = (lo, hi)
        return lo, hi

    def width(self, n):
        lo, hi = self.refine(n)
        return hi - lo

    def __repr__(self):
        lo, hi = self.refine(1)
        return "RefinedReal[%s, %s]" % (lo, hi)


def real_from_rational(q):
    q = Rational(q)
    return RefinedReal(lambda n: (q, q))


def real_add(x, y):
    return RefinedReal(
        lambda n: tuple(a + b for a, b in zip(x.refine(2 * n), y.refine(2 * n)))
    )


def real_neg(x):
    def raw(n):
        lo, hi = x.refine(n)
        return -hi, -lo

    return RefinedReal(raw)


def real_sub(x, y):
    def raw(n):
        xlo, xhi = x.refine(2 * n)
        ylo, yhi = y.refine(2 * n)
        return xlo - yhi, xhi - ylo

    return RefinedReal(raw)


def real_scale(c, x):
    """Multiplication by a fixed rational (sign handled by cases)."""
    c = Rational(c)
    if c.num == 0:
        return real_from_rational(0)
    mag = abs(c)
    inflate = mag.num // mag.den + 1

    def raw(n):
        lo, hi = x.refine(inflate * n)
        if c.num > 0:
            return c * lo, c * hi
        return c * hi, c * lo

    return RefinedReal(raw)


def _upper_bound(x):
    """A rational magnitude bound from the coarsest refinement."""
    lo, hi = x.refine(1)
    return max(abs(lo), abs(hi), Rational(1))


def real_mul_pos(x, y, cert_x, cert_y):
    """Endpoint product of two certified-positive reals.

    The internal precision grows with the operand magnitudes so the
    2/n width contract survives multiplication; lower endpoints are
    clamped to the certified bounds, which keeps them non-negative
    without losing soundness.
    """
    for cert, operand in ((cert_x, x), (cert_y, y)):
        if cert.sign is not Sign.POSITIVE or not cert.check(operand):
            raise InvalidCertificate("positive multiplication needs valid "
                                     "positivity certificates")
    bound = max(_upper_bound(x), _upper_bound(y))
    inflate = (2 * bound).num // (2 * bound).den + 1

    def raw(n):
        p = inflate * n
        xlo, xhi = x.refine(p)
        ylo, yhi = y.refine(p)
        xlo = max(xlo, cert_x.bound)
        ylo = max(ylo, cert_y.bound)
        return xlo * ylo, xhi * yhi

    return RefinedReal(raw)


def real_mul_total(x, y, budget=64):
    """Total multiplication via positive shifts:
    x*y = (x+m)(y+n) - n*x - m*y - m*n for naturals m, n making the
    shifted factors positive.  The smallest such shifts are found by
    probing the coarsest refinement; any valid choice agrees up to
    interval overlap."""
    m = _smallest_shift(x, budget)
    n = _smallest_shift(y, budget)
    return _shifted_product(x, y, m, n)


def _smallest_shift(x, budget):
    lo, hi = x.refine(1)
    for m in range(int(budget) + 1):
        if Rational(0) < lo + Rational(m):
            return m
    raise BudgetExceeded("could not bound the operand below")


def _shifted_product(x, y, m, n):
    """The shift formula with explicit shifts (exposed for the
    shift-independence checks)."""
    xs = real_add(x, real_from_rational(m))
    ys = real_add(y, real_from_rational(n))
    cert_x = derive_apartness(xs, 4)
    cert_y = derive_apartness(ys, 4)
    if cert_x.sign is not Sign.POSITIVE or cert_y.sign is not Sign.POSITIVE:
        raise InvalidCertificate("shift did not make the factor positive")
    prod = real_mul_pos(xs, ys, cert_x, cert_y)
    correction = real_add(
        real_add(real_scale(n, x), real_scale(m, y)),
        real_from_rational(Rational(m * n)),
    )
    return real_sub(prod, correction)


def real_inf(x, y):
    def raw(n):
        xlo, xhi = x.refine(n)
        ylo, yhi = y.refine(n)
        return min(xlo, ylo), min(xhi, yhi)

    return RefinedReal(raw)


def real_sup(x, y):
    def raw(n):
        xlo, xhi = x.refine(n)
        ylo, yhi = y.refine(n)
        return max(xlo, ylo), max(xhi, yhi)

    return RefinedReal(raw)


def real_abs(x):
    return real_sup(x, real_neg(x))


def real_dist(x, y):
    return real_abs(real_sub(x, y))


def real_recip(x, cert):
    """Reciprocal licensed by an apartness certificate with bound b:
    precision inflates by 1/b^2 to absorb the distortion of inversion."""
    if not cert.check(x):
        raise InvalidCertificate("certificate does not re-verify")
    if cert.sign is Sign.NEGATIVE:
        inner = real_recip(real_neg(x), Apartness(Sign.POSITIVE, cert.bound, cert.precision))
        return real_neg(inner)
    beta = cert.bound

    def raw(n):
        p = (Rational(n) / (beta * beta))
        p = p.num // p.den + 1
        p = max(p, cert.precision)
        lo, hi = x.refine(p)
        lo = max(lo, beta)
        return Rational(1) / hi, Rational(1) / lo

    return RefinedReal(raw)


def real_cmp_rat(x, q, budget):
    """Refine until the interval clears q on either side, up to budget."""
    q = Rational(q)
    for n in range(1, int(budget) + 1):
        lo, hi = x.refine(n)
        if hi < q:
            return Order.LESS
        if q < lo:
            return Order.GREATER
    return Order.UNKNOWN


def derive_apartness(x, budget):
    """Find a certificate separating x from zero by refining at doubling
    precisions; the bound is half the cleared margin."""
    n = 1
    while n <= max(int(budget), 1):
        lo, hi = x.refine(n)
        if Rational(0) < lo:
            return Apartness(Sign.POSITIVE, lo / Rational(2), n)
        if hi < Rational(0):
            return Apartness(Sign.NEGATIVE, -hi / Rational(2), n)
        n *= 2
    raise ApartnessUndecided("could not separate from zero within budget %s" % budget)


def real_embed(x, budget):
    """The canonical embedding of any archimedean streak element: at
    precision n, locating x on the 1/n grid gives the interval."""

    def raw(n):
        i = locate(x, n, budget)
        return Rational(i - 1, n), Rational(i + 1, n)

    return RefinedReal(raw)


class Certificate:
    """The printed evidence for a decimal output: the final interval and
    the precision at which it was emitted."""

    __slots__ = ("lo", "hi", "precision")

    def __init__(self, lo, hi, precision):
        self.lo = Rational(lo)
        self.hi = Rational(hi)
        self.precision = int(precision)

    def line(self):
        return "interval lo=%s hi=%s precision=%d" % (self.lo, self.hi, self.precision)

    def __repr__(self):
        return "Certificate(%s)" % self.line()


def real_to_decimal(x, digits, budget):
    """Refine until the width drops to 10^-digits, then print the interval
    midpoint truncated toward zero; |x - printed| <= 2 * 10^-digits."""
    digits = int(digits)
    target = Rational(1, 10**digits)
    n = 1
    while True:
        lo, hi = x.refine(n)
        if hi - lo <= target:
            break
        if n >= int(budget):
            raise BudgetExceeded(
                "width %s still above %s at precision %d" % (hi - lo, target, n)
            )
        n = min(2 * n, int(budget))
    mid = (lo + hi) / Rational(2)
    return rat_decimal(mid, digits), Certificate(lo, hi, n)


# -- the reals as a registered streak --------------------------------------


def real_streak_handle():
    """The (semidecidable) streak of interval-refinement reals: budget is
    read as the refinement depth for comparisons."""

    def below(q, v, budget):
        return YES if real_cmp_rat(v, q, max(budget, 1)) is Order.GREATER else NO

    def above(v, q, budget):
        return YES if real_cmp_rat(v, q, max(budget, 1)) is Order.LESS else NO

    def mul(u, v):
        cu = derive_apartness(u, 64)
        cv = derive_apartness(v, 64)
        return real_mul_pos(u, v, cu, cv)

    def sample(rng):
        return real_from_rational(Rational(rng.randint(-24, 24), rng.randint(1, 12)))

    handle = StreakHandle(
        name="real",
        below=below,
        above=above,
        add=real_add,
        zero=real_from_rational(0),
        mul_pos=mul,
        one=real_from_rational(1),
        decidable=False,
        sample=sample,
        describe=lambda v: repr(v),
    )
    handle.mul_total = real_mul_total
    handle.neg = real_neg
    handle.sub = real_sub
    return handle
