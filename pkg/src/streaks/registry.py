"""Streak registry: resolve names like `rat`, `ring:nat`, `finmeet:rat`.

Composite names apply a reflection to the named base, recursively:
`field:ring:nat` is the field of fractions of the ring of differences
over the naturals.  The towers built from `nat` canonicalize their
representatives (differences of naturals reduce so one side is zero,
fractions over integers gcd-reduce), which keeps equality structural.
"""

from __future__ import annotations

import math

from .core import NO, YES, StreakHandle
from .rational import Integer, Natural, Rational
from .reflections import (
    Dyadic,
    FormalDifference,
    FormalFraction,
    field_lift,
    finset_join_lift,
    finset_meet_lift,
    halved_lift,
    ring_lift,
)


class UnknownStreak(Exception):
    pass


def _decidable_handle(name, to_rat, **extra):
    """A decidable streak whose values convert exactly to rationals."""

    def below(q, v, budget):
        return YES if Rational(q) < to_rat(v) else NO

    def above(v, q, budget):
        return YES if to_rat(v) < Rational(q) else NO

    def cmp(u, v):
        a, b = to_rat(u), to_rat(v)
        return -1 if a < b else 1 if b < a else 0

    return StreakHandle(
        name,
        below=below,
        above=above,
        decidable=True,
        cmp=cmp,
        **extra,
    )


def _natural_handle():
    h = _decidable_handle(
        "nat",
        to_rat=lambda v: Rational(int(v)),
        add=lambda u, v: u + v,
        zero=Natural(0),
        mul_pos=lambda u, v: u * v,
        one=Natural(1),
        eq=lambda u, v: u == v,
        sample=lambda rng: Natural(rng.randint(0, 15)),
        describe=str,
    )
    return h


def _integer_handle():
    h = _decidable_handle(
        "int",
        to_rat=lambda v: Rational(int(v)),
        add=lambda u, v: u + v,
        zero=Integer(0),
        mul_pos=lambda u, v: u * v,
        one=Integer(1),
        eq=lambda u, v: u == v,
        sample=lambda rng: Integer(rng.randint(-15, 15)),
        describe=str,
    )
    # the integers form a ring streak: total multiplication and negation
    h.mul_total = lambda u, v: u * v
    h.neg = lambda v: -v
    h.sub = lambda u, v: u - v
    return h


def _rat_midpoint(q, r):
    return (Rational(q) + Rational(r)) / Rational(2)


def _rational_handle():
    def sample(rng):
        return Rational(rng.randint(-24, 24), rng.randint(1, 12))

    h = _decidable_handle(
        "rat",
        to_rat=lambda v: v,
        add=lambda u, v: u + v,
        zero=Rational(0),
        mul_pos=lambda u, v: u * v,
        one=Rational(1),
        eq=lambda u, v: u == v,
        sample=sample,
        describe=str,
    )
    h.interpolate = _rat_midpoint
    h.mul_total = lambda u, v: u * v
    h.neg = lambda v: -v
    h.sub = lambda u, v: u - v
    return h


def _canon_nat_difference(fd):
    """Reduce a difference of naturals so that one component is zero."""
    p, n = int(fd.pos), int(fd.neg)
    d = min(p, n)
    return FormalDifference(Natural(p - d), Natural(n - d))


def _fd_int(fd):
    return int(fd.pos) - int(fd.neg)


def _canon_nat_fraction(fr):
    """Gcd-reduce a fraction of natural-differences, denominator positive."""
    num, den = _fd_int(fr.num), _fd_int(fr.den)
    if den < 0:
        num, den = -num, -den
    g = math.gcd(num, den) or 1
    num, den = num // g, den // g
    return FormalFraction(
        FormalDifference(Natural(max(num, 0)), Natural(max(-num, 0))),
        FormalDifference(Natural(den), Natural(0)),
    )


def _canon_int_dyadic(dy):
    """Reduce to odd mantissa or exponent zero."""
    m, e = int(dy.mantissa), dy.exponent
    while e > 0 and m % 2 == 0:
        m //= 2
        e -= 1
    return Dyadic(Integer(m), e)


def _dyadic_handle():
    h = halved_lift(_integer_handle(), canon=_canon_int_dyadic)
    h.name = "dyadic"

    def interpolate(q, r):
        q, r = Rational(q), Rational(r)
        e = 0
        step = Rational(1)
        while not step < r - q:
            e += 1
            step = step / Rational(2)
        j = q.num * 2**e // q.den + 1  # floor(q * 2^e) + 1
        return _canon_int_dyadic(Dyadic(Integer(j), e))

    h.interpolate = interpolate
    return h


_BASES = {
    "nat": _natural_handle,
    "int": _integer_handle,
    "rat": _rational_handle,
    "dyadic": _dyadic_handle,
}

_PREFIXES = ("finmeet", "finjoin", "ring", "field")

_cache = {}


def get_streak(name):
    """Resolve a registry name to a StreakHandle (cached per name)."""
    if name in _cache:
        return _cache[name]
    handle = _build(name)
    _cache[name] = handle
    return handle


def _build(name):
    if name in _BASES:
        return _BASES[name]()
    if name == "real":
        from .real import real_streak_handle

        return real_streak_handle()
    if name == "lower":
        from .onesided import lower_streak_handle

        return lower_streak_handle()
    if name == "upper":
        from .onesided import upper_streak_handle

        return upper_streak_handle()
    if ":" in name:
        prefix, rest = name.split(":", 1)
        if prefix not in _PREFIXES:
            raise UnknownStreak(name)
        base = get_streak(rest)
        if prefix == "finmeet":
            return finset_meet_lift(base)
        if prefix == "finjoin":
            return finset_join_lift(base)
        if prefix == "ring":
            canon = _canon_nat_difference if rest == "nat" else None
            return ring_lift(base, canon=canon)
        canon = _canon_nat_fraction if rest == "ring:nat" else None
        return field_lift(base, canon=canon)
    raise UnknownStreak(name)


def registered_names():
    """Concrete names plus the composable prefixes (e.g. `ring:nat`)."""
    return sorted(_BASES) + ["real", "lower", "upper"] + [
        "%s:<base>" % p for p in _PREFIXES
    ]
