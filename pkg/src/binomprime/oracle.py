"""Brute-force ground truth built only from Pascal's additive recurrence.

Nothing here touches ``binom_exact`` or the Lucas evaluator, so agreement with
those paths is evidence rather than tautology.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characterization import CongruenceCheck
from .errors import DomainError, SizeError

DEFAULT_MAX_ROWS = 20000
DEFAULT_MAX_SWEEP = 10**6


@dataclass(frozen=True)
class PascalTriangleModM:
    modulus: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1


def build_pascal_mod(modulus: int, n_max: int, *, max_rows: int = DEFAULT_MAX_ROWS) -> PascalTriangleModM:
    if modulus < 2:
        raise DomainError(f"modulus >= 2 required, got {modulus}")
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max}")
    if n_max > max_rows:
        raise SizeError(f"{n_max} rows exceeds triangle cap {max_rows}")
    one = 1 % modulus
    row = (one,)
    rows = [row]
    for _ in range(n_max):
        inner = [(a + b) % modulus for a, b in zip(row, row[1:])]
        row = (one, *inner, one)
        rows.append(row)
    return PascalTriangleModM(modulus, tuple(rows))


def oracle_binom_mod(triangle: PascalTriangleModM, n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError(f"arguments must be non-negative, got ({n}, {k})")
    if n > triangle.n_max:
        raise IndexError(f"row {n} beyond triangle of {triangle.n_max} rows")
    if k > n:
        return 0
    return triangle.rows[n][k]


def sweep_thm21(
    p_range: tuple[int, int],
    n_range: tuple[int, int],
    *,
    max_rows: int = DEFAULT_MAX_ROWS,
    max_checks: int = DEFAULT_MAX_SWEEP,
) -> list[CongruenceCheck]:
    """Check C(n, p) == floor(n/p) (mod p) for every (p, n), ordered by (p, n)."""
    p_lo, p_hi = p_range
    n_lo, n_hi = n_range
    if p_lo > p_hi or n_lo > n_hi:
        raise DomainError("ranges must be nonempty")
    if p_lo < 2 or n_lo < 0:
        raise DomainError("p >= 2 and n >= 0 required")
    if (p_hi - p_lo + 1) * (n_hi - n_lo + 1) > max_checks:
        raise SizeError(f"sweep exceeds {max_checks} checks")
    out = []
    for p in range(p_lo, p_hi + 1):
        tri = build_pascal_mod(p, n_hi, max_rows=max_rows)
        for n in range(n_lo, n_hi + 1):
            out.append(
                CongruenceCheck(
                    oracle_binom_mod(tri, n, p),
                    (n // p) % p,
                    p,
                    f"C({n},{p}) == floor({n}/{p}) (mod {p})",
                )
            )
    return out
