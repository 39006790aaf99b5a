#!/usr/bin/env python3
"""The p-adic Gamma function: definition, functional equations, and the
first-order expansion in the direction of p.

Gamma_p(n) is (-1)^n times the product of the integers below n that are
coprime to p; it extends to all p-adic integers by continuity, so a
rational argument is evaluated at its representative mod p^k.
"""

from fractions import Fraction

from supercongruences import (
    GammaContext,
    PrimePower,
    g1_estimate,
    gamma_p_int,
    least_nonneg_residue,
    reduce_mod,
)

F = Fraction

p = 7
ctx = PrimePower(p, 2)
gc = GammaContext(ctx)

print(f"Small integer values mod {ctx}:")
for n in range(5):
    print(f"  Gamma_{p}({n}) = {gamma_p_int(n, ctx).value}")

print()
print("A rational argument goes through its residue representative:")
half = reduce_mod(F(1, 2), ctx)
print(f"  1/2 ≡ {half.value} (mod {ctx.modulus}), so Gamma_7(1/2) = Gamma_7({half.value})")
print(f"  Gamma_7(1/2) = {gc.gamma(F(1, 2)).value}")

print()
print("Shift: Gamma(x+1) = -x Gamma(x) for units, -Gamma(x) on pZ_p:")
x = F(2, 3)
print(f"  Gamma(5/3) = {gc.gamma(x + 1).value}")
print(f"  -2/3 * Gamma(2/3) = {(reduce_mod(-x, ctx) * gc.gamma(x)).value}")

print()
print("Reflection: Gamma(x)Gamma(1-x) is a sign determined by <-x>_p:")
for x in (F(1, 2), F(1, 3), F(2, 5)):
    sign = (-1) ** (least_nonneg_residue(-x, p) - 1)
    product = gc.gamma(x) * gc.gamma(1 - x)
    print(f"  x = {x}: product = {product.centered():+d}, predicted sign = {sign:+d}")

print()
print("First-order behavior: Gamma(x + tp) ≡ Gamma(x)(1 + g t p) mod p^2,")
print("with g extracted from the single step t = 1:")
x = F(1, 4)
g = g1_estimate(x, p)
print(f"  g at x = 1/4, p = 7 is {g.value} (mod {p})")
for t in (-2, -1, 2, 3):
    direct = gc.gamma(x + t * p)
    predicted = gc.gamma(x) * reduce_mod(1 + g.value * t * p, ctx)
    marker = "ok" if direct == predicted else "MISMATCH"
    print(f"  t = {t:+d}: direct {direct.value:3d}  predicted {predicted.value:3d}  {marker}")
