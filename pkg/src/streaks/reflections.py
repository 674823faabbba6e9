"""Constructors that build new streaks from old.

Each constructor takes a base StreakHandle and returns a handle whose
values wrap base values: the positive part with a total multiplication,
the archimedean filter, finite-subset meet/join semilattice completions,
the ring of formal differences, the field of formal fractions, and the
halved (dyadic) ring.  Comparison against a rational q is always pushed
down to the base streak by writing q = (i - j)/k with naturals i, j and
k > 0 and clearing denominators.
"""

from __future__ import annotations

import enum
import math

from .core import (
    YES,
    NO,
    Element,
    MixedStreaks,
    Order,
    StreakHandle,
    strict_lt,
)
from .rational import Rational


class NotPositive(Exception):
    pass


class EmptySet(Exception):
    pass


class NotApartFromZero(Exception):
    pass


class ApproxEq(enum.Enum):
    EQUIVALENT_WITHIN_BUDGET = "equivalent-within-budget"
    APART = "apart"


# -- value-level helpers ---------------------------------------------------


def scale_value(streak, n, v):
    """The n-fold sum of a raw value (n a non-negative int)."""
    n = int(n)
    if n < 0:
        raise ValueError("scale factor must be a natural number")
    acc = streak.zero
    base = v
    while n:
        if n & 1:
            acc = streak.add(acc, base)
        n >>= 1
        if n:
            base = streak.add(base, base)
    return acc


def _is_zero(streak, v, budget=8):
    if streak.eq is not None:
        return streak.eq(v, streak.zero)
    # fall back: not certified positive
    return streak.below(Rational(0), v, budget) is not YES


def _value_cmp(streak, u, v, budget=8):
    """Three-way comparison of raw values; None when undecided."""
    if streak.cmp is not None:
        return streak.cmp(u, v)
    order = strict_lt(Element(streak, u), Element(streak, v), budget)
    if order is Order.LESS:
        return -1
    if order is Order.GREATER:
        return 1
    return None


def _rational_parts(q):
    """Write q = (i - j)/k with i, j naturals and k > 0."""
    q = Rational(q)
    if q.num >= 0:
        return q.num, 0, q.den
    return 0, -q.num, q.den


def mul_total_nonneg(streak, u, v, budget=8):
    """Total multiplication on the non-negative part: zero absorbs."""
    if _is_zero(streak, u, budget) or _is_zero(streak, v, budget):
        return streak.zero
    return streak.mul_pos(u, v)


# -- positive part ---------------------------------------------------------


def pos_part(streak, budget=32):
    """The streak on X_{>0} with zero adjoined and total multiplication."""

    def make(v):
        if _is_zero(streak, v, budget):
            return streak.zero
        if streak.below(Rational(0), v, budget) is not YES:
            raise NotPositive("value %s not certified >= 0" % streak.describe(v))
        return v

    def sample(rng):
        if streak.sample is None:
            raise ValueError("base streak has no sampler")
        for _ in range(64):
            v = streak.sample(rng)
            if _is_zero(streak, v, budget) or streak.below(Rational(0), v, budget) is YES:
                return v
        return streak.zero

    handle = StreakHandle(
        name="pos:%s" % streak.name,
        below=streak.below,
        above=streak.above,
        add=streak.add,
        zero=streak.zero,
        mul_pos=streak.mul_pos,
        one=streak.one,
        decidable=streak.decidable,
        cmp=streak.cmp,
        eq=streak.eq,
        sample=sample,
        describe=streak.describe,
    )
    handle.base = streak
    handle.make = make
    handle.mul_total = lambda u, v: mul_total_nonneg(streak, u, v, budget)
    return handle


# -- archimedean filter ----------------------------------------------------


def arch_member(x, budget):
    """Search for n with x < n and -n < x; YES is stable under budget growth."""
    s, v = x.streak, x.value
    for n in range(1, budget + 1):
        if s.above(v, Rational(n), budget) is YES and s.below(Rational(-n), v, budget) is YES:
            return YES, n
    return NO, None


def arch_lt(a, b, budget):
    """Semidecide the filtered order: exists n with n*a + 1 < n*b."""
    if a.streak is not b.streak:
        raise MixedStreaks("%s vs %s" % (a.streak.name, b.streak.name))
    s = a.streak
    one = Element(s, s.one)
    from .core import nat_scale

    for n in range(1, budget + 1):
        lhs = nat_scale(n, a) + one
        rhs = nat_scale(n, b)
        if strict_lt(lhs, rhs, budget) is Order.LESS:
            return YES, n
    return NO, None


# -- finite subset semilattice lifts ---------------------------------------


class FiniteSubset:
    """A non-empty finite list of base values; order of entries and
    duplicates do not affect the semantics."""

    __slots__ = ("elements",)

    def __init__(self, elements):
        elements = list(elements)
        if not elements:
            raise EmptySet("finite subsets here are inhabited")
        self.elements = elements

    def __repr__(self):
        return "FiniteSubset(%r)" % (self.elements,)


def subset_lt_exists_forall(streak, A, B):
    """A < B as: some a in A is below every b in B."""
    return any(
        all(_value_cmp(streak, a, b) == -1 for b in B.elements) for a in A.elements
    )


def subset_lt_forall_exists(streak, A, B):
    """The swapped form: every b in B has some a in A below it."""
    return all(
        any(_value_cmp(streak, a, b) == -1 for a in A.elements) for b in B.elements
    )


def _extreme(streak, values, want_max):
    best = values[0]
    for v in values[1:]:
        c = _value_cmp(streak, v, best)
        if c is None:
            raise ValueError("finite subset lift needs a decidable base")
        if (c == 1) == want_max and c != 0:
            best = v
    return best


def finset_meet_lift(streak):
    """Meet-semilattice completion: [A] behaves as the infimum of A."""
    if not streak.decidable:
        raise ValueError("finite subset lifts require a decidable base streak")

    def below(q, A, budget):
        ok = all(streak.below(q, a, budget) is YES for a in A.elements)
        return YES if ok else NO

    def above(A, q, budget):
        ok = any(streak.above(a, q, budget) is YES for a in A.elements)
        return YES if ok else NO

    def add(A, B):
        return FiniteSubset([streak.add(a, b) for a in A.elements for b in B.elements])

    def mul(A, B):
        return FiniteSubset(
            [streak.mul_pos(a, b) for a in A.elements for b in B.elements]
        )

    def cmp(A, B):
        c = _value_cmp(streak, _extreme(streak, A.elements, False),
                       _extreme(streak, B.elements, False))
        return c

    def sample(rng):
        size = rng.randint(1, 4)
        return FiniteSubset([streak.sample(rng) for _ in range(size)])

    handle = StreakHandle(
        name="finmeet:%s" % streak.name,
        below=below,
        above=above,
        add=add,
        zero=FiniteSubset([streak.zero]),
        mul_pos=mul,
        one=FiniteSubset([streak.one]),
        decidable=True,
        cmp=cmp,
        eq=lambda A, B: cmp(A, B) == 0,
        sample=sample,
        describe=lambda A: "inf{%s}" % ", ".join(streak.describe(a) for a in A.elements),
    )
    handle.base = streak
    handle.inf = lambda A, B: FiniteSubset(A.elements + B.elements)
    return handle


def positive_representative(streak, A, budget=16):
    """Entries of A exceeding zero, valid when [A] is positive in the
    join lift: fix a positive entry, keep each entry whose positivity
    is affirmed first among the disjuncts 0 < a_i or a_i < witness."""
    witness = None
    for a in A.elements:
        if streak.below(Rational(0), a, budget) is YES:
            witness = a
            break
    if witness is None:
        raise NotPositive("no positive entry found")
    kept = [a for a in A.elements if streak.below(Rational(0), a, budget) is YES]
    return FiniteSubset(kept)


def finset_join_lift(streak):
    """Join-semilattice completion: [A] behaves as the supremum of A."""
    if not streak.decidable:
        raise ValueError("finite subset lifts require a decidable base streak")

    def below(q, A, budget):
        ok = any(streak.below(q, a, budget) is YES for a in A.elements)
        return YES if ok else NO

    def above(A, q, budget):
        ok = all(streak.above(a, q, budget) is YES for a in A.elements)
        return YES if ok else NO

    def add(A, B):
        return FiniteSubset([streak.add(a, b) for a in A.elements for b in B.elements])

    def mul(A, B):
        PA = positive_representative(streak, A)
        PB = positive_representative(streak, B)
        return FiniteSubset(
            [streak.mul_pos(a, b) for a in PA.elements for b in PB.elements]
        )

    def cmp(A, B):
        return _value_cmp(streak, _extreme(streak, A.elements, True),
                          _extreme(streak, B.elements, True))

    def sample(rng):
        size = rng.randint(1, 4)
        return FiniteSubset([streak.sample(rng) for _ in range(size)])

    handle = StreakHandle(
        name="finjoin:%s" % streak.name,
        below=below,
        above=above,
        add=add,
        zero=FiniteSubset([streak.zero]),
        mul_pos=mul,
        one=FiniteSubset([streak.one]),
        decidable=True,
        cmp=cmp,
        eq=lambda A, B: cmp(A, B) == 0,
        sample=sample,
        describe=lambda A: "sup{%s}" % ", ".join(streak.describe(a) for a in A.elements),
    )
    handle.base = streak
    handle.sup = lambda A, B: FiniteSubset(A.elements + B.elements)
    return handle


# -- ring of formal differences --------------------------------------------


class FormalDifference:
    """A pair (pos, neg) of non-negative base values representing pos - neg."""

    __slots__ = ("pos", "neg")

    def __init__(self, pos, neg):
        self.pos = pos
        self.neg = neg

    def __repr__(self):
        return "FormalDifference(%r, %r)" % (self.pos, self.neg)


def ring_lift(streak, canon=None, budget=8):
    """The ring streak of formal differences over the non-negative part.

    Order: (a, b) < (c, d) iff a + d < c + b in the base; comparison
    with q = (i - j)/k clears denominators the same way.  Negation
    swaps the components, making subtraction total, and multiplication
    (a, b)(c, d) = (ac + bd, ad + bc) is total because zero absorbs on
    the non-negative part.
    """
    base = streak

    def normalize(v):
        return canon(v) if canon is not None else v

    def mul_nn(u, v):
        return mul_total_nonneg(base, u, v, budget)

    def below(q, fd, bgt):
        i, j, k = _rational_parts(q)
        # (i - j)/k < a - b  iff  i + k*b < k*a + j
        lhs = base.add(scale_value(base, i, base.one), scale_value(base, k, fd.neg))
        rhs = base.add(scale_value(base, k, fd.pos), scale_value(base, j, base.one))
        c = _value_cmp(base, lhs, rhs, bgt)
        return YES if c == -1 else NO

    def above(fd, q, bgt):
        i, j, k = _rational_parts(q)
        lhs = base.add(scale_value(base, k, fd.pos), scale_value(base, j, base.one))
        rhs = base.add(scale_value(base, i, base.one), scale_value(base, k, fd.neg))
        c = _value_cmp(base, lhs, rhs, bgt)
        return YES if c == -1 else NO

    def add(u, v):
        return normalize(
            FormalDifference(base.add(u.pos, v.pos), base.add(u.neg, v.neg))
        )

    def mul(u, v):
        return normalize(
            FormalDifference(
                base.add(mul_nn(u.pos, v.pos), mul_nn(u.neg, v.neg)),
                base.add(mul_nn(u.pos, v.neg), mul_nn(u.neg, v.pos)),
            )
        )

    def cmp(u, v):
        return _value_cmp(base, base.add(u.pos, v.neg), base.add(v.pos, u.neg), budget)

    def sample(rng):
        p = pos_handle.sample(rng)
        n = pos_handle.sample(rng)
        return normalize(FormalDifference(p, n))

    pos_handle = pos_part(base)

    handle = StreakHandle(
        name="ring:%s" % base.name,
        below=below,
        above=above,
        add=add,
        zero=normalize(FormalDifference(base.zero, base.zero)),
        mul_pos=mul,
        one=normalize(FormalDifference(base.one, base.zero)),
        decidable=base.decidable,
        cmp=cmp if base.decidable else None,
        eq=(lambda u, v: cmp(u, v) == 0) if base.decidable else None,
        sample=sample,
        describe=lambda v: "(%s - %s)" % (base.describe(v.pos), base.describe(v.neg)),
    )
    handle.base = base
    handle.neg = lambda v: normalize(FormalDifference(v.neg, v.pos))
    handle.sub = lambda u, v: add(u, handle.neg(v))
    handle.mul_total = mul

    def rho(x_value, bgt=32):
        """Embed a base element as [(x + n, n)] for the least n making
        x + n positive."""
        for n in range(bgt + 1):
            shifted = base.add(x_value, scale_value(base, n, base.one))
            if base.below(Rational(0), shifted, bgt) is YES or _is_zero(base, shifted, bgt):
                return normalize(
                    FormalDifference(shifted, scale_value(base, n, base.one))
                )
        raise NotPositive("could not shift %s into the non-negative part" %
                          base.describe(x_value))

    handle.rho = rho
    return handle


# -- field of formal fractions ---------------------------------------------


class FormalFraction:
    """A pair (num, den) of ring values with den > 0, representing num/den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def __repr__(self):
        return "FormalFraction(%r, %r)" % (self.num, self.den)


def field_lift(ring, canon=None, budget=8):
    """The field streak of formal fractions over a ring streak.

    Order: (a, b) < (c, d) iff a*d < b*c.  The reciprocal of a positive
    fraction swaps the pair; negatives go through negate-invert-negate.
    """
    if not hasattr(ring, "mul_total"):
        raise ValueError("field_lift needs a ring streak (total multiplication)")
    base = ring

    def normalize(v):
        return canon(v) if canon is not None else v

    def make(num, den):
        if base.below(Rational(0), den, budget) is not YES:
            raise NotPositive("denominator not certified positive")
        return normalize(FormalFraction(num, den))

    def below(q, fr, bgt):
        i, j, k = _rational_parts(q)
        # (i - j)/k < a/b  iff  i*b < k*a + j*b   (b > 0, k > 0)
        lhs = scale_value(base, i, fr.den)
        rhs = base.add(scale_value(base, k, fr.num), scale_value(base, j, fr.den))
        return YES if _value_cmp(base, lhs, rhs, bgt) == -1 else NO

    def above(fr, q, bgt):
        i, j, k = _rational_parts(q)
        lhs = base.add(scale_value(base, k, fr.num), scale_value(base, j, fr.den))
        rhs = scale_value(base, i, fr.den)
        return YES if _value_cmp(base, lhs, rhs, bgt) == -1 else NO

    def add(u, v):
        return normalize(
            FormalFraction(
                base.add(base.mul_total(u.num, v.den), base.mul_total(v.num, u.den)),
                base.mul_total(u.den, v.den),
            )
        )

    def mul(u, v):
        return normalize(
            FormalFraction(base.mul_total(u.num, v.num), base.mul_total(u.den, v.den))
        )

    def cmp(u, v):
        return _value_cmp(
            base, base.mul_total(u.num, v.den), base.mul_total(u.den, v.num), budget
        )

    def sample(rng):
        num = base.sample(rng)
        for _ in range(64):
            den = base.sample(rng)
            if base.below(Rational(0), den, budget) is YES:
                return normalize(FormalFraction(num, den))
        return normalize(FormalFraction(num, base.one))

    handle = StreakHandle(
        name="field:%s" % base.name,
        below=below,
        above=above,
        add=add,
        zero=normalize(FormalFraction(base.zero, base.one)),
        mul_pos=mul,
        one=normalize(FormalFraction(base.one, base.one)),
        decidable=base.decidable,
        cmp=cmp if base.decidable else None,
        eq=(lambda u, v: cmp(u, v) == 0) if base.decidable else None,
        sample=sample,
        describe=lambda v: "(%s / %s)" % (base.describe(v.num), base.describe(v.den)),
    )
    handle.base = base
    handle.make = make
    handle.neg = lambda v: normalize(FormalFraction(base.neg(v.num), v.den))
    handle.sub = lambda u, v: add(u, handle.neg(v))
    handle.mul_total = mul

    def recip(v, bgt=budget):
        if below(Rational(0), v, bgt) is YES:
            return normalize(FormalFraction(v.den, v.num))
        if above(v, Rational(0), bgt) is YES:
            return normalize(FormalFraction(base.neg(v.den), base.neg(v.num)))
        raise NotApartFromZero("reciprocal of %s undecided" % handle.describe(v))

    handle.recip = recip
    return handle


# -- halved (dyadic) ring --------------------------------------------------


class Dyadic:
    """A pair (mantissa, exponent) representing mantissa / 2^exponent."""

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa, exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError("exponent must be a natural number")
        self.mantissa = mantissa
        self.exponent = exponent

    def __repr__(self):
        return "Dyadic(%r, %d)" % (self.mantissa, self.exponent)


def halved_lift(ring, canon=None, budget=8):
    """The halved ring streak over a ring streak: a formal half operator.

    Exponents align through cutoff subtraction m ∸ n = max(m, n) - n:
    (a, m) < (b, n) iff a * 2^(n ∸ m) < b * 2^(m ∸ n).
    """
    if not hasattr(ring, "mul_total"):
        raise ValueError("halved_lift needs a ring streak")
    base = ring

    def normalize(v):
        return canon(v) if canon is not None else v

    def int_in_ring(m):
        v = scale_value(base, abs(m), base.one)
        return base.neg(v) if m < 0 else v

    def below(q, d, bgt):
        q = Rational(q)
        # q < x/2^n  iff  q.num * 2^n * 1 < q.den * x
        lhs = int_in_ring(q.num * 2**d.exponent)
        rhs = scale_value(base, q.den, d.mantissa)
        return YES if _value_cmp(base, lhs, rhs, bgt) == -1 else NO

    def above(d, q, bgt):
        q = Rational(q)
        lhs = scale_value(base, q.den, d.mantissa)
        rhs = int_in_ring(q.num * 2**d.exponent)
        return YES if _value_cmp(base, lhs, rhs, bgt) == -1 else NO

    def add(u, v):
        m, n = u.exponent, v.exponent
        top = max(m, n)
        return normalize(
            Dyadic(
                base.add(
                    base.mul_total(u.mantissa, int_in_ring(2 ** (top - m))),
                    base.mul_total(v.mantissa, int_in_ring(2 ** (top - n))),
                ),
                top,
            )
        )

    def mul(u, v):
        return normalize(
            Dyadic(base.mul_total(u.mantissa, v.mantissa), u.exponent + v.exponent)
        )

    def cmp(u, v):
        m, n = u.exponent, v.exponent
        return _value_cmp(
            base,
            base.mul_total(u.mantissa, int_in_ring(2 ** (max(m, n) - m))),
            base.mul_total(v.mantissa, int_in_ring(2 ** (max(m, n) - n))),
            budget,
        )

    def sample(rng):
        return normalize(Dyadic(base.sample(rng), rng.randint(0, 5)))

    handle = StreakHandle(
        name="dyadic:%s" % base.name,
        below=below,
        above=above,
        add=add,
        zero=normalize(Dyadic(base.zero, 0)),
        mul_pos=mul,
        one=normalize(Dyadic(base.one, 0)),
        decidable=base.decidable,
        cmp=cmp if base.decidable else None,
        eq=(lambda u, v: cmp(u, v) == 0) if base.decidable else None,
        sample=sample,
        describe=lambda v: "%s/2^%d" % (base.describe(v.mantissa), v.exponent),
    )
    handle.base = base
    handle.neg = lambda v: normalize(Dyadic(base.neg(v.mantissa), v.exponent))
    handle.sub = lambda u, v: add(u, handle.neg(v))
    handle.mul_total = mul
    handle.half = lambda v: normalize(Dyadic(v.mantissa, v.exponent + 1))
    return handle


# -- equivalence up to budget ----------------------------------------------


def approx_eq(x, y, budget):
    """APART when the strict order decides either way within budget;
    the computational face of quotienting by mutual <=."""
    if x.streak is not y.streak:
        raise MixedStreaks("%s vs %s" % (x.streak.name, y.streak.name))
    order = strict_lt(x, y, budget)
    if order is Order.UNKNOWN:
        return ApproxEq.EQUIVALENT_WITHIN_BUDGET
    return ApproxEq.APART
