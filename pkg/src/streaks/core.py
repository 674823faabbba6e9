"""The streak contract and its derived algorithms.

A streak is an archimedean ordered structure whose order is given by
semidecidable comparisons against rationals on both sides: `below(q, x)`
asks whether q < x and `above(x, q)` asks whether x < q, each under an
explicit search budget.  Addition is a commutative monoid, and
multiplication is a commutative monoid on the strictly positive part,
distributing over addition.  Everything else in this module (strict
internal order, interval location, archimedean witnesses, density
searches, the law-checking harness) is derived from those primitives.
"""

from __future__ import annotations

import enum
import random

from .rational import Rational


class BudgetExceeded(Exception):
    """A semidecision search ran out of budget before resolving."""


class PreconditionFailed(Exception):
    pass


class MixedStreaks(Exception):
    """Elements of different streaks were combined."""


class NotDense(Exception):
    """The streak does not provide interpolation between rationals."""


class SemiDecision(enum.Enum):
    YES = "yes"
    NO_WITHIN_BUDGET = "no-within-budget"


class Order(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    UNKNOWN = "unknown"


YES = SemiDecision.YES
NO = SemiDecision.NO_WITHIN_BUDGET


class StreakHandle:
    """A registered implementation of the streak contract.

    below/above are the one-sided comparisons with rationals; when
    `decidable` is set they answer definitively at budget 0 and
    NO_WITHIN_BUDGET means plain "false".  Optional capabilities:

      cmp(u, v)            total three-way comparison (decidable streaks)
      eq(u, v)             structural equality of canonical values
      sample(rng)          random element value for the test harness
      interpolate(q, r)    element strictly between two rationals (dense)
      describe(v)          printable form of a value
    """

    def __init__(
        self,
        name,
        below,
        above,
        add,
        zero,
        mul_pos,
        one,
        decidable=False,
        cmp=None,
        eq=None,
        sample=None,
        interpolate=None,
        describe=None,
    ):
        self.name = name
        self.below = below
        self.above = above
        self.add = add
        self.zero = zero
        self.mul_pos = mul_pos
        self.one = one
        self.decidable = decidable
        self.cmp = cmp
        self.eq = eq
        self.sample = sample
        self.interpolate = interpolate
        self.describe = describe or (lambda v: repr(v))

    def element(self, value):
        return Element(self, value)

    def __repr__(self):
        return "<streak %s>" % self.name


class Element:
    """A value tagged with its owning streak; operations never mix streaks."""

    __slots__ = ("streak", "value")

    def __init__(self, streak, value):
        self.streak = streak
        self.value = value

    def __repr__(self):
        return "<%s: %s>" % (self.streak.name, self.streak.describe(self.value))

    def __add__(self, other):
        _same_streak(self, other)
        return Element(self.streak, self.streak.add(self.value, other.value))

    def __mul__(self, other):
        _same_streak(self, other)
        return Element(self.streak, self.streak.mul_pos(self.value, other.value))


def _same_streak(x, y):
    if x.streak is not y.streak:
        raise MixedStreaks("%s vs %s" % (x.streak.name, y.streak.name))


def below(x, q, budget=0):
    """Semidecide q < x for an Element."""
    return x.streak.below(q, x.value, budget)


def above(x, q, budget=0):
    """Semidecide x < q for an Element."""
    return x.streak.above(x.value, q, budget)


# -- fair enumeration of the rationals ------------------------------------


def rational_enumeration():
    """Yield every rational exactly once: 0, then the Stern-Brocot tree of
    positive rationals breadth-first, each followed by its negation.

    The order is fixed so that witness searches are reproducible.
    """
    yield Rational(0)
    queue = [(1, 1)]
    while True:
        nxt = []
        for a, b in queue:
            yield Rational(a, b)
            yield Rational(-a, b)
            nxt.append((a, a + b))
            nxt.append((a + b, b))
        queue = nxt


def rational_prefix(count):
    out = []
    gen = rational_enumeration()
    for _ in range(count):
        out.append(next(gen))
    return out


# -- derived order --------------------------------------------------------


def strict_lt(x, y, budget):
    """Three-valued internal order: LESS iff a rational witness q with
    x < q < y is found within budget; GREATER symmetrically.

    For decidable streaks the witness comes from locating both elements
    on grids of doubling fineness k; the first grid separating them by
    two steps yields the witness (i+1)/k.  Semidecidable streaks walk a
    fixed prefix of the fair rational enumeration instead.  Either way
    the search is a deterministic function of (inputs, budget) and a
    decided answer never flips when the budget grows.
    """
    _same_streak(x, y)
    sx, vx, vy = x.streak, x.value, y.value
    if sx.decidable:
        k = 1
        while k <= max(budget, 1):
            try:
                i = locate(x, k, budget)
                j = locate(y, k, budget)
            except BudgetExceeded:
                return Order.UNKNOWN
            if j >= i + 2:
                return Order.LESS
            if i >= j + 2:
                return Order.GREATER
            k *= 2
        return Order.UNKNOWN
    for q in rational_prefix(2 * budget + 1):
        if sx.above(vx, q, budget) is YES and sx.below(q, vy, budget) is YES:
            return Order.LESS
        if sx.above(vy, q, budget) is YES and sx.below(q, vx, budget) is YES:
            return Order.GREATER
    return Order.UNKNOWN


def _magnitude_bound(x, budget):
    """Some n <= budget with x < n and -n < x, or None (doubling scan)."""
    s, v = x.streak, x.value
    n = 1
    while n <= max(budget, 1):
        if s.above(v, Rational(n), budget) is YES and s.below(Rational(-n), v, budget) is YES:
            return n
        n *= 2
    return None


def locate(x, k, budget):
    """Find i with (i-1)/k < x < (i+1)/k.

    Every archimedean streak element lies in such a rational interval;
    the search first bounds |x| by an integer n, then scans the grid
    m/k for the crossing.  When several i qualify the smallest valid i
    is returned.  Decidable streaks use a binary search for the
    crossing, which lands on the same smallest valid index.
    """
    k = int(k)
    if k <= 0:
        raise ValueError("k must be positive")
    s, v = x.streak, x.value
    n = _magnitude_bound(x, budget)
    if n is None:
        raise BudgetExceeded("no integer bound for %r within budget %d" % (x, budget))
    if s.decidable:
        # smallest m with x < (m+1)/k; monotone, so bisect
        lo, hi = -n * k - 1, n * k
        while lo < hi:
            mid = (lo + hi) // 2
            if s.above(v, Rational(mid + 1, k), budget) is YES:
                hi = mid
            else:
                lo = mid + 1
        return lo
    for i in range(-n * k, n * k + 1):
        if (
            s.below(Rational(i - 1, k), v, budget) is YES
            and s.above(v, Rational(i + 1, k), budget) is YES
        ):
            return i
    raise BudgetExceeded("locate(%r, k=%d) unresolved within budget %d" % (x, k, budget))


def _rounded_witness(x, q, tighten_below, max_k=1 << 12):
    """A rational strictly between q and x (either side), via grids of
    doubling fineness; None when none is found up to the cap."""
    q = Rational(q)
    k = 1
    while k <= max_k:
        try:
            i = locate(x, k, max_k)
        except BudgetExceeded:
            return None
        if tighten_below:
            r = Rational(i - 1, k)
            if q < r:
                return r
        else:
            r = Rational(i + 1, k)
            if r < q:
                return r
        k *= 2
    return None


def nat_scale(n, x):
    """n-fold sum x + x + ... + x (n = 0 gives the streak zero)."""
    n = int(n)
    if n < 0:
        raise ValueError("n must be a natural number")
    s = x.streak
    acc = Element(s, s.zero)
    # double-and-add; equal to the n-fold sum by associativity
    base = x
    while n:
        if n & 1:
            acc = acc + base
        n >>= 1
        if n:
            base = base + base
    return acc


def archimedean_witness(a, b, c, d, budget):
    """Smallest n <= budget with a + n*b < c + n*d, given b < d."""
    _same_streak(a, b)
    _same_streak(a, c)
    _same_streak(a, d)
    if strict_lt(b, d, budget) is not Order.LESS:
        raise PreconditionFailed("b < d not established within budget")
    for n in range(budget + 1):
        if strict_lt(a + nat_scale(n, b), c + nat_scale(n, d), budget) is Order.LESS:
            return n
    raise BudgetExceeded("no archimedean witness within budget %d" % budget)


def interpolate(streak, q, r):
    """An element strictly between rationals q < r, for dense streaks."""
    q, r = Rational(q), Rational(r)
    if not q < r:
        raise ValueError("need q < r")
    if streak.interpolate is None:
        raise NotDense("streak %s does not interpolate" % streak.name)
    return Element(streak, streak.interpolate(q, r))


# -- dense substreak generated by a single element in (-1, 0) --------------


def dense_substreak(z):
    """The substreak of the rationals generated by a single z in (-1, 0).

    Its elements are the rationals reachable from 0, 1 and z by
    addition and multiplication of positives; comparisons are inherited
    from the rationals, and interpolation runs the generation search.
    """
    z = Rational(z)
    if not (Rational(-1) < z < Rational(0)):
        raise ValueError("generator must lie strictly between -1 and 0")
    from .registry import _rational_handle  # shares the decidable cut logic

    base = _rational_handle()
    handle = StreakHandle(
        name="dense:%s" % z,
        below=base.below,
        above=base.above,
        add=base.add,
        zero=base.zero,
        mul_pos=base.mul_pos,
        one=base.one,
        decidable=True,
        cmp=base.cmp,
        eq=base.eq,
        describe=str,
    )
    handle.generator = z
    handle.interpolate = lambda q, r: dense_generate(z, q, r, 10**6).value
    return handle


def dense_generate(z, q, r, budget):
    """Search the substreak generated by z for an element of (q, r).

    For 0 < q the element has the form (j+1) * (z+1)^n: pick the
    smallest n making the step w^n = (z+1)^n at most min(q, (r-q)/2),
    then the smallest j whose grid point j*w^n reaches q.  For q <= 0,
    shift by n*z with the smallest n making n*z < q and search the
    translated positive interval.
    """
    z, q, r = Rational(z), Rational(q), Rational(r)
    if not (Rational(-1) < z < Rational(0)):
        raise ValueError("generator must lie strictly between -1 and 0")
    if not q < r:
        raise ValueError("need q < r")
    handle = dense_substreak(z)
    return Element(handle, _dense_value(z, q, r, int(budget)))


def _dense_value(z, q, r, budget):
    if q > 0:
        w = z + Rational(1)
        target = min(q, (r - q) / Rational(2))
        step = w
        n = 1
        while step > target:
            n += 1
            step = step * w
            if n > budget:
                raise BudgetExceeded("no fine enough power of %s within budget" % (z + 1))
        # smallest j with j*step >= q; then (j+1)*step lies in (q, r)
        j = -(-q.num * step.den) // (q.den * step.num)  # ceil(q / step)
        return Rational(j + 1) * step
    shift = z
    n = 1
    while not shift < q:
        n += 1
        shift = shift + z
        if n > budget:
            raise BudgetExceeded("shift search exhausted")
    return _dense_value(z, q - shift, r - shift, budget) + shift


# -- law-checking harness --------------------------------------------------


class Sampler:
    """Seeded source of random rationals and streak elements."""

    def __init__(self, seed, max_int=12):
        self.rng = random.Random(seed)
        self.max_int = max_int

    def rational(self):
        num = self.rng.randint(-self.max_int, self.max_int)
        den = self.rng.randint(1, self.max_int)
        return Rational(num, den)

    def element(self, streak):
        if streak.sample is None:
            raise ValueError("streak %s has no sampler" % streak.name)
        return Element(streak, streak.sample(self.rng))

    def positive_element(self, streak, budget=8, tries=50):
        for _ in range(tries):
            e = self.element(streak)
            if below(e, Rational(0), budget) is YES:
                return e
        return None


class LawReport:
    def __init__(self, name):
        self.name = name
        self.trials = 0
        self.failures = []

    @property
    def passed(self):
        return not self.failures

    def record(self, failure):
        self.trials += 1
        if failure is not None:
            self.failures.append(failure)

    def __repr__(self):
        state = "ok" if self.passed else "FAIL(%d)" % len(self.failures)
        return "%s: %d trials %s" % (self.name, self.trials, state)


class SuiteReport:
    def __init__(self, streak_name):
        self.streak_name = streak_name
        self.laws = []

    @property
    def passed(self):
        return all(law.passed for law in self.laws)

    def law(self, name):
        report = LawReport(name)
        self.laws.append(report)
        return report

    def summary(self):
        lines = ["streak %s: %s" % (self.streak_name, "pass" if self.passed else "FAIL")]
        for law in self.laws:
            lines.append("  " + repr(law))
            for ctx in law.failures[:3]:
                lines.append("    counterexample: %s" % ctx)
        return "\n".join(lines)


def _known_below(s, q, v, budget):
    """True / False / None for q < v (None = undecided within budget)."""
    if s.below(q, v, budget) is YES:
        return True
    if s.decidable:
        return False
    if s.above(v, q, budget) is YES:
        return False  # q < v would violate asymmetry
    return None


def _known_above(s, v, q, budget):
    if s.above(v, q, budget) is YES:
        return True
    if s.decidable:
        return False
    if s.below(q, v, budget) is YES:
        return False
    return None


def elements_apart(s, u, v, budget, probes):
    """True when the two values are certified apart by their rational cuts."""
    for q in probes:
        if s.below(q, u, budget) is YES and s.above(v, q, budget) is YES:
            return True
        if s.below(q, v, budget) is YES and s.above(u, q, budget) is YES:
            return True
    return False


def _expect_equal(s, u, v, budget, probes, label):
    """Failure string when u and v are distinguishable, else None."""
    if s.eq is not None:
        if not s.eq(u, v):
            return "%s: %s != %s" % (label, s.describe(u), s.describe(v))
        return None
    if elements_apart(s, u, v, budget, probes):
        return "%s: %s apart from %s" % (label, s.describe(u), s.describe(v))
    if s.decidable:
        for q in probes:
            if s.below(q, u, budget) is not s.below(q, v, budget):
                return "%s: cuts differ at %s" % (label, q)
            if s.above(u, q, budget) is not s.above(v, q, budget):
                return "%s: upper cuts differ at %s" % (label, q)
    return None


def axiom_suite(streak, sampler, trials, budget=12):
    """Randomized check of every streak law; failures carry counterexamples.

    Semidecidable laws are checked one-sidedly: a failure is only
    recorded when YES answers jointly contradict the law.
    """
    report = SuiteReport(streak.name)
    probes = rational_prefix(2 * budget + 1)
    s = streak

    law_bounded = report.law("boundedness")
    law_cotrans_below = report.law("cotransitivity-below")
    law_cotrans_above = report.law("cotransitivity-above")
    law_cotrans_split = report.law("cotransitivity-split")
    law_round_below = report.law("roundedness-below")
    law_round_above = report.law("roundedness-above")
    law_asym = report.law("asymmetry")
    law_ext = report.law("extensionality")
    law_add_comm = report.law("add-commutative")
    law_add_assoc = report.law("add-associative")
    law_add_unit = report.law("add-identity")
    law_mul_comm = report.law("mul-commutative")
    law_mul_assoc = report.law("mul-associative")
    law_mul_unit = report.law("mul-identity")
    law_distrib = report.law("distributivity")
    law_mono_add = report.law("add-monotone")
    law_mono_add_up = report.law("add-monotone-above")
    law_mono_mul = report.law("mul-monotone")
    law_mono_mul_up = report.law("mul-monotone-above")

    for _ in range(trials):
        a = sampler.element(s)
        b = sampler.element(s)
        c = sampler.element(s)
        q = sampler.rational()
        r = sampler.rational()

        # boundedness: some integer bound on either side of every element
        if s.decidable:
            law_bounded.record(
                None if _magnitude_bound(a, 1 << 14) is not None else "unbounded %r" % a
            )
        else:
            law_bounded.record(None)

        # cotransitivity: q < a implies q < r or r < a
        fail = None
        if s.below(q, a.value, budget) is YES and not q < r:
            if _known_below(s, r, a.value, budget) is False:
                fail = "q=%s r=%s a=%r" % (q, r, a)
        law_cotrans_below.record(fail)

        fail = None
        if s.above(a.value, q, budget) is YES and not r < q:
            if _known_above(s, a.value, r, budget) is False:
                fail = "q=%s r=%s a=%r" % (q, r, a)
        law_cotrans_above.record(fail)

        fail = None
        if q < r:
            lo = _known_below(s, q, a.value, budget)
            hi = _known_above(s, a.value, r, budget)
            if lo is False and hi is False:
                fail = "q=%s r=%s a=%r" % (q, r, a)
        law_cotrans_split.record(fail)

        # roundedness: q < a implies q < p < a for some rational p
        fail = None
        if s.decidable and s.below(q, a.value, budget) is YES:
            if _rounded_witness(a, q, tighten_below=True) is None:
                fail = "q=%s a=%r" % (q, a)
        law_round_below.record(fail)

        fail = None
        if s.decidable and s.above(a.value, q, budget) is YES:
            if _rounded_witness(a, q, tighten_below=False) is None:
                fail = "q=%s a=%r" % (q, a)
        law_round_above.record(fail)

        # asymmetry: never q < a and a < q together
        fail = None
        if s.below(q, a.value, budget) is YES and s.above(a.value, q, budget) is YES:
            fail = "q=%s a=%r" % (q, a)
        law_asym.record(fail)

        # extensionality: unequal elements are separated by some rational
        fail = None
        if s.decidable and s.eq is not None and not s.eq(a.value, b.value):
            if strict_lt(a, b, 1 << 12) is Order.UNKNOWN:
                fail = "%r vs %r have equal rational cuts" % (a, b)
        law_ext.record(fail)

        # additive commutative monoid
        law_add_comm.record(
            _expect_equal(s, (a + b).value, (b + a).value, budget, probes, "a+b vs b+a")
        )
        law_add_assoc.record(
            _expect_equal(
                s, ((a + b) + c).value, (a + (b + c)).value, budget, probes, "(a+b)+c"
            )
        )
        zero = Element(s, s.zero)
        law_add_unit.record(
            _expect_equal(s, (a + zero).value, a.value, budget, probes, "a+0")
        )

        # multiplicative monoid on positives, distributing over +
        pa = sampler.positive_element(s, budget)
        pb = sampler.positive_element(s, budget)
        pc = sampler.positive_element(s, budget)
        if pa is not None and pb is not None and pc is not None:
            one = Element(s, s.one)
            law_mul_comm.record(
                _expect_equal(s, (pa * pb).value, (pb * pa).value, budget, probes, "ab vs ba")
            )
            law_mul_assoc.record(
                _expect_equal(
                    s, ((pa * pb) * pc).value, (pa * (pb * pc)).value, budget, probes, "(ab)c"
                )
            )
            law_mul_unit.record(
                _expect_equal(s, (pa * one).value, pa.value, budget, probes, "a*1")
            )
            law_distrib.record(
                _expect_equal(
                    s,
                    (pa * (pb + pc)).value,
                    ((pa * pb) + (pa * pc)).value,
                    budget,
                    probes,
                    "a(b+c)",
                )
            )

        # monotonicity against rational bounds
        fail = None
        if (
            s.below(q, a.value, budget) is YES
            and s.below(r, b.value, budget) is YES
            and _known_below(s, q + r, (a + b).value, budget) is False
        ):
            fail = "q=%s r=%s a=%r b=%r" % (q, r, a, b)
        law_mono_add.record(fail)

        fail = None
        if (
            s.above(a.value, q, budget) is YES
            and s.above(b.value, r, budget) is YES
            and _known_above(s, (a + b).value, q + r, budget) is False
        ):
            fail = "q=%s r=%s a=%r b=%r" % (q, r, a, b)
        law_mono_add_up.record(fail)

        if pa is not None and pb is not None:
            qp = abs(q) + Rational(1, sampler.rng.randint(1, 9))
            rp = abs(r) + Rational(1, sampler.rng.randint(1, 9))
            fail = None
            if (
                s.below(qp, pa.value, budget) is YES
                and s.below(rp, pb.value, budget) is YES
                and _known_below(s, qp * rp, (pa * pb).value, budget) is False
            ):
                fail = "q=%s r=%s a=%r b=%r" % (qp, rp, pa, pb)
            law_mono_mul.record(fail)

            fail = None
            if (
                s.above(pa.value, qp, budget) is YES
                and s.above(pb.value, rp, budget) is YES
                and _known_above(s, (pa * pb).value, qp * rp, budget) is False
            ):
                fail = "q=%s r=%s a=%r b=%r" % (qp, rp, pa, pb)
            law_mono_mul_up.record(fail)

    return report


def morphism_check(f, src, dst, sampler, trials, budget=12):
    """Check that f preserves and reflects comparison with rationals, and
    is additive up to rational bounds.
    """
    report = SuiteReport("%s -> %s" % (src.name, dst.name))
    probes = rational_prefix(2 * budget + 1)
    law_below = report.law("preserves-lower-bounds")
    law_above = report.law("preserves-upper-bounds")
    law_add = report.law("additive")

    both_decidable = src.decidable and dst.decidable
    for _ in range(trials):
        x = sampler.element(src)
        y = sampler.element(src)
        fx, fy = f(x), f(y)
        fail_b = fail_a = None
        for q in probes:
            sb = src.below(q, x.value, budget)
            db = dst.below(q, fx.value, budget)
            sa = src.above(x.value, q, budget)
            da = dst.above(fx.value, q, budget)
            if both_decidable:
                if sb is not db:
                    fail_b = "q=%s x=%r" % (q, x)
                if sa is not da:
                    fail_a = "q=%s x=%r" % (q, x)
            else:
                # one-sided: YES answers must not contradict each other
                if sb is YES and _known_below(dst, q, fx.value, budget) is False:
                    fail_b = "q=%s x=%r" % (q, x)
                if db is YES and _known_below(src, q, x.value, budget) is False:
                    fail_b = "q=%s x=%r (reflected)" % (q, x)
                if sa is YES and _known_above(dst, fx.value, q, budget) is False:
                    fail_a = "q=%s x=%r" % (q, x)
                if da is YES and _known_above(src, x.value, q, budget) is False:
                    fail_a = "q=%s x=%r (reflected)" % (q, x)
        law_below.record(fail_b)
        law_above.record(fail_a)

        fsum = f(x + y)
        gsum = fx + fy
        law_add.record(
            None
            if not elements_apart(dst, fsum.value, gsum.value, budget, probes)
            else "f(x+y) apart from f(x)+f(y) at x=%r y=%r" % (x, y)
        )
    return report
