"""Deterministic primality and prime enumeration at desk scale."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    r = math.isqrt(n)
    while f <= r:
        if n % f == 0:
            return False
        f += 2
    return True


def odd_primes_up_to(limit: int) -> list[int]:
    """Ascending odd primes p <= limit."""
    return [p for p in range(3, limit + 1, 2) if is_prime(p)]


def primes_in_class(residue: int, modulus: int, limit: int) -> list[int]:
    """Ascending odd primes p <= limit with p ≡ residue (mod modulus)."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    residue %= modulus
    return [p for p in odd_primes_up_to(limit) if p % modulus == residue]
