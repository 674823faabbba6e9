"""The streak interface: ordered structures probed through rational cuts.

A streak exposes two semidecidable comparisons with rationals --
below(q, x) asks "q < x?" and above(x, q) asks "x < q?" -- plus
addition and multiplication on positives.  Everything else is derived.

Run with: python3 demos/02_streak_laws.py
"""

from streaks import (
    Element,
    Order,
    Sampler,
    archimedean_witness,
    axiom_suite,
    dense_generate,
    get_streak,
    locate,
    strict_lt,
)
from streaks.rational import Rational

rat = get_streak("rat")
x = Element(rat, Rational(5, 3))
y = Element(rat, Rational(2))

# the internal strict order searches for a separating rational
print("5/3 < 2?", strict_lt(x, y, budget=16).name)

# every element can be trapped in a rational interval of width 2/k
i = locate(x, 3, budget=64)
print("5/3 lies in (%s/3, %s/3)" % (i - 1, i + 1))

# the archimedean property is a terminating witness search:
# smallest n with 10 + n*0 < 0 + n*1
n = archimedean_witness(
    Element(rat, Rational(10)), Element(rat, Rational(0)),
    Element(rat, Rational(0)), Element(rat, Rational(1)), budget=64,
)
print("archimedean witness for 10 < n:", n)

# the substreak generated by a single z in (-1, 0) is dense; the search
# procedure produces a member of any requested interval
got = dense_generate(Rational(-1, 2), Rational(1, 4), Rational(1, 2), 1 << 12)
print("dense element of (1/4, 1/2) generated from -1/2:", got.value)

# the randomized law suite checks every axiom with counterexample reporting
report = axiom_suite(rat, Sampler(seed=1), trials=200)
print(report.summary().splitlines()[0])
