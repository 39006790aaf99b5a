"""Truncated hypergeometric series with exact rational terms.

A series spec holds upper parameters a_0..a_r, lower parameters b_1..b_r,
an argument z, and an inclusive truncation index n; the k-th term is

    (a_0)_k ... (a_r)_k / ((b_1)_k ... (b_r)_k) * z^k / k!

Terms are generated through the ratio recurrence (one rational multiply
per term); the modular value of a sum is always the exact sum reduced
afterwards, never a per-term modular accumulation, so terms that are not
individually p-integral cost nothing extra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import ZeroLowerPochhammer
from .exact import RationalLike, shifted_harmonic
from .padic import PrimePower, Residue, reduce_mod


@dataclass(frozen=True)
class SeriesSpec:
    """A truncated hypergeometric sum; validation is eager.

    Construction rejects any lower parameter whose Pochhammer vanishes at
    or below the truncation index, turning a latent division by zero into
    an immediate error.
    """

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", tuple(Fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))
        object.__setattr__(self, "z", Fraction(self.z))
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError(
                f"need one more upper than lower parameter, got "
                f"{len(self.upper)} upper / {len(self.lower)} lower"
            )
        if self.n < 0:
            raise ValueError(f"truncation index must be >= 0, got {self.n}")
        for b in self.lower:
            for j in range(self.n):
                if b + j == 0:
                    raise ZeroLowerPochhammer(
                        f"lower parameter {b} has ({b})_{j + 1} = 0 within "
                        f"truncation {self.n}"
                    )


def series(
    upper: list[RationalLike] | tuple[RationalLike, ...],
    lower: list[RationalLike] | tuple[RationalLike, ...],
    z: RationalLike,
    n: int,
) -> SeriesSpec:
    """Convenience constructor accepting ints and Fractions."""
    return SeriesSpec(tuple(upper), tuple(lower), Fraction(z), n)


def terms(spec: SeriesSpec) -> Iterator[Fraction]:
    """Yield the exact terms t_0..t_n via the ratio recurrence

    t_{k+1} = t_k * z * prod(a_i + k) / (prod(b_j + k) * (k+1)).
    """
    t = Fraction(1)
    yield t
    for k in range(spec.n):
        num = spec.z
        for a in spec.upper:
            num *= a + k
        den = Fraction(k + 1)
        for b in spec.lower:
            den *= b + k
        t = t * num / den
        yield t


def term(spec: SeriesSpec, k: int) -> Fraction:
    """The exact k-th term, 0 <= k <= spec.n."""
    if not 0 <= k <= spec.n:
        raise ValueError(f"term index {k} outside [0, {spec.n}]")
    for i, t in enumerate(terms(spec)):
        if i == k:
            return t
    raise AssertionError("unreachable")


def evaluate_exact(spec: SeriesSpec) -> Fraction:
    """Exact value of the truncated sum."""
    return sum(terms(spec), Fraction(0))


def evaluate_mod(spec: SeriesSpec, ctx: PrimePower) -> Residue:
    """Exact sum reduced mod p^k.

    Raises NonIntegralDenominator when the exact value is not p-integral,
    which means the congruence being probed is ill-posed for these
    parameters.
    """
    return reduce_mod(evaluate_exact(spec), ctx)


@dataclass(frozen=True)
class AffineWeight:
    """Per-term weight slope*k + intercept."""

    slope: Fraction
    intercept: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "intercept", Fraction(self.intercept))

    def at(self, k: int) -> Fraction:
        return self.slope * k + self.intercept


def affine_weighted_sum(w: AffineWeight, spec: SeriesSpec) -> Fraction:
    """Exact sum of (slope*k + intercept) * t_k over the truncation range."""
    return sum(w.at(k) * t for k, t in enumerate(terms(spec)))


def harmonic_weighted_sum(spec: SeriesSpec, c1: RationalLike, c2: RationalLike) -> Fraction:
    """Exact sum of t_k * (sum_{j<k} 1/(c1+j) - sum_{j<k} 1/(c2+j)).

    The two shifted harmonic sums are accumulated incrementally; a zero
    summand denominator within range is rejected up front.
    """
    c1 = Fraction(c1)
    c2 = Fraction(c2)
    # surface bad weights before any work, matching shifted_harmonic
    shifted_harmonic(c1, spec.n)
    shifted_harmonic(c2, spec.n)
    acc = Fraction(0)
    h1 = Fraction(0)
    h2 = Fraction(0)
    for k, t in enumerate(terms(spec)):
        if k > 0:
            h1 += 1 / (c1 + (k - 1))
            h2 += 1 / (c2 + (k - 1))
        acc += t * (h1 - h2)
    return acc
