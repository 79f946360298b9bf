"""Checkers and bounded explorers for classical binomial congruences.

Checkers for proven statements (Lucas corollary, Bailey, Apostol) raise
``InvariantViolation`` when a valid instance fails, since that can only be a
bug. The Mestrovic falsifier and the power explorer are empirical searches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import binom_exact, is_prime_trial
from .characterization import CongruenceCheck, congruence
from .errors import DomainError, HypothesisError, InvariantViolation
from .lucas import _lucas

DEFAULT_FALSIFIER_BOUND = 50


@dataclass(frozen=True)
class FalsifierResult:
    d: int
    q: int
    search_bound: int
    counterexample: tuple[int, int] | None
    checks_performed: int

    @property
    def found(self) -> bool:
        return self.counterexample is not None


@dataclass(frozen=True)
class PowerExplorationReport:
    p: int
    k: int
    sweep_bound: int
    max_l: int
    tightness_example: tuple[int, int]


@dataclass(frozen=True)
class ApostolResult:
    applicable: bool
    # None when the hypothesis p^alpha | floor(n/p) is not met
    verdict: bool | None
    binom_residue: int
    modulus: int


def _require_prime(p: int, what: str) -> None:
    if not is_prime_trial(p):
        raise DomainError(f"{what} requires a prime p, got {p}")


def _require_bailey(p: int) -> None:
    if p < 5 or not is_prime_trial(p):
        raise HypothesisError(f"Bailey's congruence requires p >= 5 prime, got p={p}")


def _must_hold(check: CongruenceCheck, strict: bool) -> CongruenceCheck:
    if strict and not check.holds:
        raise InvariantViolation(f"proven congruence failed: {check.description}")
    return check


def check_lucas_corollary(n: int, m: int, p: int, *, strict: bool = True) -> CongruenceCheck:
    _require_prime(p, "the Lucas corollary")
    if not n >= m >= 0:
        raise DomainError(f"n >= m >= 0 required, got n={n}, m={m}")
    return _must_hold(
        CongruenceCheck(
            _lucas(n * p, m * p, p),
            _lucas(n, m, p),
            p,
            f"C({n}*{p},{m}*{p}) == C({n},{m}) (mod {p})",
        ),
        strict,
    )


def check_bailey_np_rp(n: int, r: int, p: int, *, strict: bool = True) -> CongruenceCheck:
    _require_bailey(p)
    if n < 0 or r < 0:
        raise DomainError(f"n, r must be non-negative, got n={n}, r={r}")
    mod = p**3
    return _must_hold(
        congruence(
            binom_exact(n * p, r * p),
            binom_exact(n, r),
            mod,
            f"C({n}*{p},{r}*{p}) == C({n},{r}) (mod {p}^3)",
        ),
        strict,
    )


def check_bailey_digits(N: int, R: int, n: int, r: int, p: int, *, strict: bool = True) -> CongruenceCheck:
    _require_bailey(p)
    if min(N, R, n, r) < 0:
        raise DomainError("N, R, n, r must be non-negative")
    if n >= p or r >= p:
        raise HypothesisError(f"Bailey's digit congruence requires n, r < p, got n={n}, r={r}, p={p}")
    mod = p**3
    return _must_hold(
        congruence(
            binom_exact(N * mod + n, R * mod + r),
            binom_exact(N, R) * binom_exact(n, r),
            mod,
            f"C({N}*{p}^3+{n},{R}*{p}^3+{r}) == C({N},{R})*C({n},{r}) (mod {p}^3)",
        ),
        strict,
    )


def check_apostol(n: int, p: int, alpha: int, *, strict: bool = True) -> ApostolResult:
    """If p^alpha divides floor(n/p) then p^alpha divides C(n, p)."""
    if alpha < 1:
        raise DomainError(f"alpha must be a positive integer, got {alpha}")
    _require_prime(p, "Apostol's divisibility")
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    mod = p**alpha
    residue = binom_exact(n, p) % mod
    if (n // p) % mod:
        return ApostolResult(False, None, residue, mod)
    if residue and strict:
        raise InvariantViolation(f"{p}^{alpha} | floor({n}/{p}) but not C({n},{p})")
    return ApostolResult(True, residue == 0, residue, mod)


def mestrovic_falsify(d: int, q: int, search_bound: int = DEFAULT_FALSIFIER_BOUND) -> FalsifierResult:
    """Search for ``C(n*d, m*d) != C(n, m) (mod q)`` over n <= search_bound.

    Pairs are visited in increasing ``(n, m)`` so the first hit is canonical.
    """
    if d <= 1 or q <= 1:
        raise DomainError(f"d > 1 and q > 1 required, got d={d}, q={q}")
    if search_bound < 0:
        raise DomainError(f"search_bound must be non-negative, got {search_bound}")
    checks = 0
    for n in range(search_bound + 1):
        for m in range(n + 1):
            checks += 1
            if (binom_exact(n * d, m * d) - binom_exact(n, m)) % q:
                return FalsifierResult(d, q, search_bound, (n, m), checks)
    return FalsifierResult(d, q, search_bound, None, checks)


def _valuation(x: int, p: int) -> int | None:
    if x == 0:
        return None
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def explore_power_congruence(p: int, k: int, sweep_bound: int) -> PowerExplorationReport:
    """Largest l with C(n p^k, m p^k) == C(n, m) (mod p^l) on 1 <= m <= n <= bound."""
    _require_prime(p, "the power explorer")
    if k < 1:
        raise DomainError(f"k >= 1 required, got {k}")
    if sweep_bound < 2:
        raise DomainError(f"sweep_bound >= 2 required, got {sweep_bound}")
    scale = p**k
    best: tuple[int, tuple[int, int]] | None = None
    for n in range(1, sweep_bound + 1):
        for m in range(1, n + 1):
            v = _valuation(binom_exact(n * scale, m * scale) - binom_exact(n, m), p)
            if v is not None and (best is None or v < best[0]):
                best = (v, (n, m))
    # (2, 1) is always swept and C(2p^k, p^k) > 2, so some difference is nonzero
    assert best is not None
    return PowerExplorationReport(p, k, sweep_bound, best[0], best[1])
