"""One-sided reals: streams of lower bounds, streams of upper bounds.

Dropping one side of the interval buys closure under countable sup
(for lower bounds) and countable inf (for upper bounds), at the cost
of decidable width.  Unbounded values are first-class.

Run with: python3 demos/06_one_sided_bounds.py
"""

from streaks import (
    LowerReal,
    UpperReal,
    lower_add,
    lower_cmp_rat,
    lower_sup,
    pair_to_real,
    real_from_rational,
    real_to_pair,
    upper_cmp_rat,
    upper_inf,
)
from streaks.rational import Rational

# a constant stream of lower bounds: everything under 2/3 is confirmed
x = LowerReal.from_rational(Rational(2, 3))
print("1/2 < x?", lower_cmp_rat(Rational(1, 2), x, 64).name)
print("  1 < x?", lower_cmp_rat(Rational(1), x, 64).name)

# sup of the family 1 - 1/(k+1): every rational below 1 is eventually
# beaten, but 1 itself never is
approach = lower_sup(lambda i: LowerReal.from_rational(Rational(1) - Rational(1, i + 2)))
print("9/10 < sup?", lower_cmp_rat(Rational(9, 10), approach, 1 << 10).name)
print("  1 < sup?", lower_cmp_rat(Rational(1), approach, 1 << 10).name)

# sums work entrywise; the sup shifts with them
shifted = lower_add(approach, LowerReal.from_rational(Rational(1)))
print("19/10 < sup + 1?", lower_cmp_rat(Rational(19, 10), shifted, 1 << 10).name)

# infinity is just a family with no upper bound
infinite = lower_sup(lambda i: LowerReal.from_rational(Rational(i)))
print("10**6 < unbounded sup?", lower_cmp_rat(Rational(10**6), infinite, 1 << 21).name)

# upper reals are the mirror image
y = upper_inf(lambda i: UpperReal.from_rational(Rational(1, i + 1)))
print("inf{1/(k+1)} < 1/100?", upper_cmp_rat(y, Rational(1, 100), 1 << 10).name)

# an interval real splits into its two cut halves and rejoins exactly
third = real_from_rational(Rational(1, 3))
lo, hi = real_to_pair(third)
back = pair_to_real(lo, hi, budget=64)
print("1/3 round trip at precision 30:", back.refine(30))
