#!/usr/bin/env python3
"""Scanning the integrality conjecture with resumable state.

For n ≡ -1 (mod d), n > d-1, the prefactor (n-1)!^d d^(dn-d) / n^2 is
conjectured to clear every denominator of the combined truncated series.
The scan evaluates each admissible cell exactly and persists the result,
so interrupted or repeated runs never recompute a finished cell.
"""

import tempfile
from pathlib import Path

from supercongruences import conjecture_value, scan_conjecture

print("Exact values for d = 2 (all conjectured to be integers):")
for n in (3, 5, 7, 9):
    print(f"  n = {n}: {conjecture_value(2, n)}")

print()
state = Path(tempfile.mkdtemp()) / "scan-state.txt"
print(f"Scanning d = 3 up to n = 26 with state at {state}")
cells = scan_conjecture(3, 26, state)
for cell in cells:
    digits = len(str(cell.value.numerator))
    print(f"  n = {cell.n:2d}: integer with {digits} digits, integral = {cell.is_integer}")

print()
print("Re-scanning reuses every persisted cell and extends the range:")
cells = scan_conjecture(3, 35, state)
print(f"  now {len(cells)} cells on disk:")
print("  " + ", ".join(str(c.n) for c in cells))
print(f"  all integral: {all(c.is_integer for c in cells)}")
