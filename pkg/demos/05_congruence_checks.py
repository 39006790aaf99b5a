#!/usr/bin/env python3
"""Running the congruence verifiers and reading their reports.

Every verifier returns both sides of the congruence as residues, never a
bare boolean, so a failure (which would be a mathematical discovery)
could be archived and diagnosed.
"""

import json
from fractions import Fraction

from supercongruences import (
    primes_in_class,
    verify_dflst,
    verify_guo_even,
    verify_guo_odd,
    verify_rodriguez_villegas,
    verify_sun,
)

F = Fraction

print("The smallest even-d companion instance (d = 4, p = 7):")
report = verify_guo_even(4, 7)
print(f"  lhs = {report.lhs.value}, rhs = {report.rhs.value} (mod {report.modulus})")
print(f"  verdict: {'pass' if report.verdict else 'FAIL'} in {report.elapsed * 1000:.1f} ms")

print()
print("Reports serialize to JSON and round-trip losslessly:")
print(json.dumps(report.to_dict(), indent=2))

print()
print("The d = 2 case of the Gamma-side congruence agrees with the plain")
print("sign form: same series, and the reflection identity makes the two")
print("right sides literally equal residues:")
for p in primes_in_class(1, 2, 30):
    if p < 5:
        continue
    a = verify_dflst(2, p, 2)
    b = verify_rodriguez_villegas(p)
    print(f"  p = {p:2d}: dflst rhs = {a.rhs.value:4d}, sign rhs = {b.rhs.value:4d}, equal = {a.rhs == b.rhs}")

print()
print("A sweep of the odd-d companion over its admissible primes:")
for d in (3, 5):
    for p in primes_in_class(-1, d, 60):
        r = verify_guo_odd(d, p)
        print(f"  d = {d}, p = {p:2d}: lhs = {r.lhs.value:5d}  rhs = {r.rhs.value:5d}  {'pass' if r.verdict else 'FAIL'}")

print()
print("General-alpha form at a few awkward rationals:")
for alpha in (F(2, 5), F(5, 7)):
    r = verify_sun(alpha, 13)
    print(f"  alpha = {alpha}: both sides {r.lhs.value} (mod 169), pass = {r.verdict}")
