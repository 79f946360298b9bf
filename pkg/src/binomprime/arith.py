"""Exact integer primitives: binomials, trial division, prime-power splits."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import gmpy2

from .errors import DomainError, PrimeInputError, SizeError

# Trial division beyond this is refused rather than left to run unbounded.
DEFAULT_MAX_FACTOR_INPUT = 10**12


def binom_exact(n: int, k: int) -> int:
    """Exact C(n, k) for naturals, with C(n, k) = 0 when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial arguments must be non-negative, got ({n}, {k})")
    if k > n:
        return 0
    return int(gmpy2.comb(n, k))


def _check_cap(p: int, cap: int) -> None:
    if p > cap:
        raise SizeError(f"input {p} exceeds trial-division cap {cap}")


def smallest_prime_factor(p: int, *, cap: int = DEFAULT_MAX_FACTOR_INPUT) -> int:
    """Least prime dividing ``p``; equals ``p`` exactly when ``p`` is prime."""
    if p < 2:
        raise DomainError(f"p >= 2 required, got {p}")
    _check_cap(p, cap)
    if p % 2 == 0:
        return 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return d
    return p


def is_prime_trial(p: int, *, cap: int = DEFAULT_MAX_FACTOR_INPUT) -> bool:
    if p < 2:
        return False
    return smallest_prime_factor(p, cap=cap) == p


@dataclass(frozen=True)
class PrimePowerSplit:
    """Composite ``p`` written as ``q**x * k`` with ``q`` its least prime factor."""

    p: int
    q: int
    x: int
    k: int

    def __post_init__(self) -> None:
        if self.q**self.x * self.k != self.p:
            raise DomainError(f"{self.q}^{self.x}*{self.k} != {self.p}")
        if gcd(self.q, self.k) != 1:
            raise DomainError(f"gcd({self.q}, {self.k}) != 1")
        if self.x < 1 or self.k < 1:
            raise DomainError("x and k must be positive")

    @property
    def qx(self) -> int:
        return self.q**self.x


def prime_power_split(p: int, *, cap: int = DEFAULT_MAX_FACTOR_INPUT) -> PrimePowerSplit:
    q = smallest_prime_factor(p, cap=cap)
    if q == p:
        raise PrimeInputError(f"prime input {p}: a composite is required")
    x, k = 0, p
    while k % q == 0:
        k //= q
        x += 1
    return PrimePowerSplit(p=p, q=q, x=x, k=k)
