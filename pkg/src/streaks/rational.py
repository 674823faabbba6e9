"""Arbitrary-precision naturals, integers and rationals with decidable order.

Every comparison in the rest of the library is ultimately a comparison
against a rational number, so this module is the measuring stick for
everything else.  Values are immutable and kept in canonical form at
construction time: integers are sign + magnitude with zero forced to
positive sign, rationals are gcd-reduced with a strictly positive
denominator.  Equality is therefore structural.
"""

from __future__ import annotations

import enum
import math
import re


class DivisionByZero(ArithmeticError):
    """Raised on division by zero (exact arithmetic has no inf/nan)."""


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class Natural:
    """A non-negative arbitrary-precision integer."""

    __slots__ = ("magnitude",)

    def __init__(self, magnitude):
        if isinstance(magnitude, Natural):
            magnitude = magnitude.magnitude
        magnitude = int(magnitude)
        if magnitude < 0:
            raise ValueError("Natural must be non-negative: %r" % magnitude)
        object.__setattr__(self, "magnitude", magnitude)

    def __setattr__(self, name, value):
        raise AttributeError("Natural is immutable")

    def __add__(self, other):
        return Natural(self.magnitude + _nat_mag(other))

    def __mul__(self, other):
        return Natural(self.magnitude * _nat_mag(other))

    def __int__(self):
        return self.magnitude

    def __eq__(self, other):
        return isinstance(other, Natural) and self.magnitude == other.magnitude

    def __hash__(self):
        return hash(("Natural", self.magnitude))

    def __lt__(self, other):
        return self.magnitude < _nat_mag(other)

    def __le__(self, other):
        return self.magnitude <= _nat_mag(other)

    def __repr__(self):
        return "Natural(%d)" % self.magnitude

    def __str__(self):
        return str(self.magnitude)


def _nat_mag(x):
    if isinstance(x, Natural):
        return x.magnitude
    if isinstance(x, int):
        if x < 0:
            raise ValueError("negative value where Natural expected")
        return x
    raise TypeError("expected Natural or int, got %r" % type(x).__name__)


class Integer:
    """Sign-and-magnitude integer; canonical form gives zero a positive sign."""

    __slots__ = ("sign", "magnitude")

    def __init__(self, value, magnitude=None):
        if magnitude is None:
            if isinstance(value, Integer):
                sign, mag = value.sign, value.magnitude
            else:
                v = int(value)
                sign, mag = (1 if v >= 0 else -1), abs(v)
        else:
            sign = 1 if int(value) >= 0 else -1
            mag = _nat_mag(magnitude) if isinstance(magnitude, Natural) else int(magnitude)
            if mag < 0:
                raise ValueError("magnitude must be non-negative")
        if mag == 0:
            sign = 1
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "magnitude", mag)

    def __setattr__(self, name, value):
        raise AttributeError("Integer is immutable")

    def __int__(self):
        return self.sign * self.magnitude

    def __add__(self, other):
        return Integer(int(self) + int(Integer(other)))

    def __sub__(self, other):
        return Integer(int(self) - int(Integer(other)))

    def __mul__(self, other):
        return Integer(int(self) * int(Integer(other)))

    def __neg__(self):
        return Integer(-int(self))

    def __eq__(self, other):
        return (
            isinstance(other, Integer)
            and self.sign == other.sign
            and self.magnitude == other.magnitude
        )

    def __hash__(self):
        return hash(("Integer", int(self)))

    def __lt__(self, other):
        return int(self) < int(Integer(other))

    def __le__(self, other):
        return int(self) <= int(Integer(other))

    def __repr__(self):
        return "Integer(%d)" % int(self)

    def __str__(self):
        return str(int(self))


class Rational:
    """An exact fraction in lowest terms with positive denominator.

    Accepts int, Natural, Integer, Rational or a num/den pair.  All
    arithmetic returns canonical values, so `a == b` iff the fractions
    are equal as numbers.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, Rational) and den == 1:
            object.__setattr__(self, "num", num.num)
            object.__setattr__(self, "den", num.den)
            return
        n = _as_int(num)
        d = _as_int(den)
        if isinstance(num, Rational) or isinstance(den, Rational):
            # general fraction of fractions
            a = num if isinstance(num, Rational) else Rational(num)
            b = den if isinstance(den, Rational) else Rational(den)
            if b.num == 0:
                raise DivisionByZero("denominator is zero")
            n = a.num * b.den
            d = a.den * b.num
        if d == 0:
            raise DivisionByZero("denominator is zero")
        if d < 0:
            n, d = -n, -d
        g = math.gcd(n, d)
        object.__setattr__(self, "num", n // g)
        object.__setattr__(self, "den", d // g)

    def __setattr__(self, name, value):
        raise AttributeError("Rational is immutable")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = _as_rat(other)
        return Rational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_rat(other)
        return Rational(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return _as_rat(other) - self

    def __mul__(self, other):
        o = _as_rat(other)
        return Rational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_rat(other)
        if o.num == 0:
            raise DivisionByZero("division by zero")
        return Rational(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return _as_rat(other) / self

    def __neg__(self):
        return Rational(-self.num, self.den)

    def __abs__(self):
        return Rational(abs(self.num), self.den)

    def __pow__(self, k):
        k = int(k)
        if k >= 0:
            return Rational(self.num**k, self.den**k)
        if self.num == 0:
            raise DivisionByZero("0 has no negative power")
        return Rational(self.den ** (-k), self.num ** (-k))

    # -- order ------------------------------------------------------------

    def _cmp_key(self, other):
        o = _as_rat(other)
        return self.num * o.den - o.num * self.den

    def __eq__(self, other):
        if not isinstance(other, (Rational, int, Integer, Natural)):
            return NotImplemented
        return self._cmp_key(other) == 0

    def __hash__(self):
        return hash(("Rational", self.num, self.den))

    def __lt__(self, other):
        return self._cmp_key(other) < 0

    def __le__(self, other):
        return self._cmp_key(other) <= 0

    def __gt__(self, other):
        return self._cmp_key(other) > 0

    def __ge__(self, other):
        return self._cmp_key(other) >= 0

    def __repr__(self):
        return "Rational(%d, %d)" % (self.num, self.den)

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return "%d/%d" % (self.num, self.den)

    def __bool__(self):
        return self.num != 0


def _as_int(x):
    if isinstance(x, (Natural, Integer)):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        return 0  # handled by caller
    raise TypeError("cannot build a Rational from %r" % type(x).__name__)


def _as_rat(x):
    if isinstance(x, Rational):
        return x
    if isinstance(x, (int, Integer, Natural)):
        return Rational(x)
    raise TypeError("cannot interpret %r as a Rational" % type(x).__name__)


# -- module operations ----------------------------------------------------

_OPS = {"add", "sub", "mul", "div"}


def rat_arith(op, a, b):
    """Apply one of {add, sub, mul, div} to two rationals, exactly."""
    if op not in _OPS:
        raise ValueError("unknown operation %r" % op)
    a, b = _as_rat(a), _as_rat(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a / b


def rat_cmp(a, b):
    """Three-way total-order comparison, consistent with the sign of a - b."""
    key = _as_rat(a)._cmp_key(b)
    if key < 0:
        return Cmp.LT
    if key > 0:
        return Cmp.GT
    return Cmp.EQ


def rat_decimal(a, digits):
    """Decimal expansion of `a` truncated toward zero at `digits` places.

    The printed value p satisfies |a - p| < 10^-digits.
    """
    a = _as_rat(a)
    digits = int(digits) if not isinstance(digits, Natural) else int(digits)
    if digits < 0:
        raise ValueError("digits must be non-negative")
    negative = a.num < 0
    scaled = abs(a.num) * 10**digits // a.den  # truncation toward zero
    text = str(scaled).rjust(digits + 1, "0")
    if digits:
        text = text[:-digits] + "." + text[-digits:]
    if negative and scaled != 0:
        text = "-" + text
    elif negative:
        # -0.0004 truncates to 0 at 3 digits; sign would be misleading
        pass
    return text


_RAT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")
_DEC_RE = re.compile(r"^(-?)(\d+)\.(\d+)$")


def parse_rational(text):
    """Parse `[-]digits[/digits]` or a decimal literal `[-]digits.digits`."""
    text = text.strip()
    m = _RAT_RE.match(text)
    if m:
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise DivisionByZero("zero denominator in %r" % text)
        return Rational(num, den)
    m = _DEC_RE.match(text)
    if m:
        sign = -1 if m.group(1) else 1
        whole, frac = m.group(2), m.group(3)
        num = int(whole + frac)
        return Rational(sign * num, 10 ** len(frac))
    raise ValueError("not a rational literal: %r" % text)
