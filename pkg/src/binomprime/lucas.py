"""Base-p digits and binomial coefficients modulo a prime via Lucas' theorem."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest

from .arith import binom_exact, is_prime_trial
from .errors import DomainError


@dataclass(frozen=True)
class BaseDigits:
    base: int
    digits: tuple[int, ...]  # least-significant first
    value: int

    def reconstruct(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.base + d
        return total


@dataclass(frozen=True)
class CoeffVectorModM:
    modulus: int
    coefficients: tuple[int, ...]

    def interior(self) -> tuple[int, ...]:
        return self.coefficients[1:-1]


def digits_base(value: int, base: int) -> BaseDigits:
    if base < 2:
        raise DomainError(f"base >= 2 required, got {base}")
    if value < 0:
        raise DomainError(f"value must be non-negative, got {value}")
    if value == 0:
        return BaseDigits(base, (0,), 0)
    out = []
    v = value
    while v:
        v, d = divmod(v, base)
        out.append(d)
    return BaseDigits(base, tuple(out), value)


def binom_mod_prime_lucas(n: int, k: int, p: int) -> int:
    """C(n, k) mod p as the product of digit-wise binomials in base p.

    >>> binom_mod_prime_lucas(13, 7, 5)
    1
    """
    if not is_prime_trial(p):
        raise DomainError(f"Lucas' theorem requires a prime modulus, got {p}")
    if n < 0 or k < 0:
        raise DomainError(f"binomial arguments must be non-negative, got ({n}, {k})")
    return _lucas(n, k, p)


def _lucas(n: int, k: int, p: int) -> int:
    # caller guarantees p prime and n, k >= 0
    if k > n:
        return 0
    result = 1
    while k:
        n, a = divmod(n, p)
        k, b = divmod(k, p)
        if b > a:
            return 0
        result = result * binom_exact(a, b) % p
    return result


def lucas_factors(n: int, k: int, p: int) -> list[tuple[int, int]]:
    """Aligned digit pairs ``(a_i, b_i)``, shorter expansion zero-padded."""
    a = digits_base(n, p).digits
    b = digits_base(k, p).digits
    return list(zip_longest(a, b, fillvalue=0))


def binom_p_divisibility(p: int, k: int) -> bool:
    """Whether ``p`` divides C(p, k); for prime ``p`` this is exactly 0 < k < p."""
    if not is_prime_trial(p):
        raise DomainError(f"p must be prime, got {p}")
    if not 0 <= k <= p:
        raise DomainError(f"0 <= k <= p required, got k={k}, p={p}")
    return binom_exact(p, k) % p == 0


def freshman_dream_coeffs(m: int, deg_cap: int | None = None) -> CoeffVectorModM:
    """Coefficients of (1+x)^m reduced mod m, truncated after degree ``deg_cap``."""
    if m < 2:
        raise DomainError(f"m >= 2 required, got {m}")
    top = m if deg_cap is None else min(m, deg_cap)
    if top < 0:
        raise DomainError(f"deg_cap must be non-negative, got {deg_cap}")
    return CoeffVectorModM(m, tuple(binom_exact(m, i) % m for i in range(top + 1)))
