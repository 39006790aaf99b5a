"""Integrality scan for the combined-series prefactor conjecture.

For d >= 2 and n ≡ -1 (mod d) with n > d-1, the quantity

    (n-1)!^d * d^(dn-d) / n^2 * dF_{d-1}(1/d-1, 1/d, (1+1/d)^{d-2}; 1^{d-1} | 1)_{n-1}

is conjectured to be an integer. The scan evaluates every admissible cell
exactly and records it; a non-integral cell would be a counterexample and
is reported loudly, never swallowed.

State persists as append-only UTF-8 lines, one cell per line:
``d n numerator denominator is_integer`` (five decimal integers,
is_integer as 0/1), so exactness survives serialization and re-scans
resume instead of recomputing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import HypothesisViolated
from .exact import factorial
from .hypergeom import evaluate_exact
from .verifiers import combined_series

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjectureCell:
    d: int
    n: int
    value: Fraction
    is_integer: bool

    def line(self) -> str:
        return (
            f"{self.d} {self.n} {self.value.numerator} {self.value.denominator} "
            f"{1 if self.is_integer else 0}"
        )

    @classmethod
    def from_line(cls, line: str) -> ConjectureCell:
        d, n, num, den, flag = line.split()
        return cls(int(d), int(n), Fraction(int(num), int(den)), flag == "1")


def admissible_n(d: int, n_max: int) -> list[int]:
    """All n <= n_max with n ≡ -1 (mod d) and n > d-1, ascending."""
    return [n for n in range(d, n_max + 1) if n % d == d - 1]


def conjecture_value(d: int, n: int) -> Fraction:
    """Exact value of the prefactored truncated sum at an admissible (d, n)."""
    if d < 2:
        raise HypothesisViolated(f"need d >= 2, got {d}")
    if n % d != d - 1:
        raise HypothesisViolated(f"need n ≡ -1 (mod {d}), got n = {n}")
    if n <= d - 1:
        raise HypothesisViolated(f"need n > d-1 = {d - 1}, got n = {n}")
    prefactor = Fraction(factorial(n - 1) ** d * d ** (d * n - d), n * n)
    return prefactor * evaluate_exact(combined_series(d, n - 1))


def load_cells(state_path: str | Path) -> dict[tuple[int, int], ConjectureCell]:
    """Read persisted cells keyed by (d, n); a missing file is empty state."""
    path = Path(state_path)
    if not path.exists():
        return {}
    cells: dict[tuple[int, int], ConjectureCell] = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line:
            continue
        cell = ConjectureCell.from_line(line)
        cells[(cell.d, cell.n)] = cell
    return cells


def scan_conjecture(
    d: int, n_max: int, state_path: str | Path | None = None
) -> list[ConjectureCell]:
    """Evaluate every admissible n <= n_max, reusing persisted cells.

    Returns all cells for this d in ascending n order. New cells are
    appended to the state file as they are produced, so an interrupted
    scan resumes where it stopped.
    """
    if d < 2:
        raise HypothesisViolated(f"need d >= 2, got {d}")
    known = load_cells(state_path) if state_path is not None else {}
    out: list[ConjectureCell] = []
    for n in admissible_n(d, n_max):
        cell = known.get((d, n))
        if cell is None:
            value = conjecture_value(d, n)
            cell = ConjectureCell(d, n, value, value.denominator == 1)
            if state_path is not None:
                _append(state_path, cell)
        if not cell.is_integer:
            log.warning("non-integral cell at d=%d n=%d: %s", cell.d, cell.n, cell.value)
        out.append(cell)
    return out


def _append(state_path: str | Path, cell: ConjectureCell) -> None:
    try:
        with open(state_path, "a", encoding="utf-8") as fh:
            fh.write(cell.line() + "\n")
    except OSError as exc:
        raise OSError(f"persisting cell d={cell.d} n={cell.n}: {exc}") from exc
