#!/usr/bin/env python3
"""Karlsson-Minton summation in action.

When every upper parameter exceeds its lower partner by a nonnegative
integer m_i and the leading parameter is -(m_1+...+m_n), the series
terminates and collapses to a single quotient of factorials and rising
factorials. Push the leading parameter further down and the sum is 0.
"""

from fractions import Fraction

from supercongruences import KmInstance, evaluate_exact, km_lhs, km_rhs, km_vanishing, series

F = Fraction

inst = KmInstance((1, 1), (F(1, 2), F(1, 3)))
print("Instance with shifts (1, 1) over parameters (1/2, 1/3):")
print(f"  series value: {km_lhs(inst)}")
print(f"  closed form : {km_rhs(inst)}")

print()
print("The vanishing form: leading parameter -M with M larger than the")
print("total shift gives exactly zero:")
for M in (3, 4, 5):
    print(f"  M = {M}: sum = {km_vanishing(M, inst)}")

print()
print("The same machinery evaluates the deformed terminating sums behind")
print("the p ≡ -1 (mod d) congruences. With d = 4, p = 7 (so m = 2) and")
print("deformations x = 1/5, y = -1/3, the series")
x, y = F(1, 5), F(-1, 3)
m = 2
spec = series(
    [1 - 7, m - 1 + x, m + 1 + y, m + 1, m + 1],
    [1 + x, 1 + y, 1, 1],
    1,
    6,
)
deformed = KmInstance((m - 2, m, m, m), (1 + x, 1 + y, F(1), F(1)))
print(f"  evaluates to {evaluate_exact(spec)}")
print(f"  while the closed form gives {km_rhs(deformed)}")
print("The shifts sum to p - 1 = 6, matching the leading parameter 1 - p.")
