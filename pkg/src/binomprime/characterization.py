"""The prime characterization C(n, p) = floor(n/p) (mod p) and its witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .arith import PrimePowerSplit, binom_exact, is_prime_trial, prime_power_split
from .errors import DomainError, InvariantViolation, SizeError
from .lucas import _lucas

DEFAULT_BLOCK_CAP = 8


@dataclass(frozen=True)
class CongruenceCheck:
    lhs_residue: int
    rhs_residue: int
    modulus: int
    description: str = ""

    @property
    def holds(self) -> bool:
        return self.lhs_residue == self.rhs_residue


def congruence(lhs: int, rhs: int, modulus: int, description: str = "") -> CongruenceCheck:
    return CongruenceCheck(lhs % modulus, rhs % modulus, modulus, description)


@dataclass(frozen=True)
class WitnessReport:
    p: int
    split: PrimePowerSplit
    witness_n: int
    binom_residue_mod_qx: int
    predicted_residue_mod_qx: int
    floor_residue_mod_qx: int
    check_mod_p: CongruenceCheck


@dataclass(frozen=True)
class PrimalityVerdict:
    p: int
    verdict: bool
    witness: WitnessReport | None = None
    # prime case: check_thm21(n, p) held for every n in [0, verified_n_max]
    verified_n_max: int | None = None


@dataclass(frozen=True)
class BlockDecomposition:
    n: int
    p: int
    q: int
    r: int
    full_block_count: int
    mixed_terms: tuple[tuple[tuple[int, ...], int], ...] = field(default=())

    @property
    def mixed_sum(self) -> int:
        return sum(v for _, v in self.mixed_terms)

    @property
    def total(self) -> int:
        return self.full_block_count + self.mixed_sum


def _thm21_label(n: int, p: int) -> str:
    return f"C({n},{p}) == floor({n}/{p}) (mod {p})"


def check_thm21(n: int, p: int, *, cross_check: bool = False) -> CongruenceCheck:
    """Compare C(n, p) and floor(n/p) modulo ``p``.

    Prime ``p`` goes through Lucas' theorem, composite ``p`` through the exact
    binomial. ``cross_check`` evaluates both routes and raises on disagreement.
    """
    if p < 2:
        raise DomainError(f"p > 1 required, got {p}")
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if is_prime_trial(p):
        lhs = _lucas(n, p, p)
        if cross_check and lhs != binom_exact(n, p) % p:
            raise InvariantViolation(f"Lucas and exact binomial disagree at n={n}, p={p}")
    else:
        lhs = binom_exact(n, p) % p
    return CongruenceCheck(lhs, (n // p) % p, p, _thm21_label(n, p))


def witness_predicted_residue(split: PrimePowerSplit) -> int:
    """(q^(x-1) k + 1) mod q^x, the residue of C(p+q, p) modulo q^x."""
    return (split.q ** (split.x - 1) * split.k + 1) % split.qx


def composite_witness(p: int) -> WitnessReport:
    """Build the refuting instance n = p + q for composite ``p``."""
    if p < 4:
        raise DomainError(f"composite p >= 4 required, got {p}")
    split = prime_power_split(p)
    n = p + split.q
    big = binom_exact(n, p)
    qx = split.qx
    report = WitnessReport(
        p=p,
        split=split,
        witness_n=n,
        binom_residue_mod_qx=big % qx,
        predicted_residue_mod_qx=witness_predicted_residue(split),
        floor_residue_mod_qx=(n // p) % qx,
        check_mod_p=CongruenceCheck(big % p, (n // p) % p, p, _thm21_label(n, p)),
    )
    if report.binom_residue_mod_qx != report.predicted_residue_mod_qx:
        raise InvariantViolation(f"witness residue formula failed for p={p}")
    if report.check_mod_p.holds:
        raise InvariantViolation(f"witness n={n} does not refute p={p}")
    return report


def is_prime_by_characterization(p: int, n_max: int | None = None) -> PrimalityVerdict:
    """Primality decided by the congruence, with evidence for the verdict.

    Composite ``p`` is refuted constructively; prime ``p`` is backed by an
    exhaustive check of every n in ``[0, n_max]`` (default ``4 * p``).
    """
    if p < 2:
        raise DomainError(f"p > 1 required, got {p}")
    if not is_prime_trial(p):
        return PrimalityVerdict(p, False, witness=composite_witness(p))
    if n_max is None:
        n_max = 4 * p
    for n in range(n_max + 1):
        if _lucas(n, p, p) != (n // p) % p:
            raise InvariantViolation(f"congruence failed for prime p={p} at n={n}")
    return PrimalityVerdict(p, True, verified_n_max=n_max)


def _compositions(q: int, p: int, r: int):
    # tuples (a_1..a_q, a_{q+1}) summing to p, a_i <= p, a_{q+1} <= r, lexicographic
    caps = [p] * q + [r]
    suffix = [0] * (len(caps) + 1)
    for i in range(len(caps) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    prefix: list[int] = []

    def rec(i: int, remaining: int):
        if i == len(caps):
            if remaining == 0:
                yield tuple(prefix)
            return
        lo = max(0, remaining - suffix[i + 1])
        for a in range(lo, min(caps[i], remaining) + 1):
            prefix.append(a)
            yield from rec(i + 1, remaining - a)
            prefix.pop()

    yield from rec(0, p)


def block_selection_decomposition(n: int, p: int, *, cap: int = DEFAULT_BLOCK_CAP) -> BlockDecomposition:
    """Split the C(n, p) selections into single-full-block and mixed selections.

    The ``n`` items are laid out as ``q = n // p`` blocks of ``p`` followed by a
    remainder block of ``r = n % p``. A composition ``(a_1, ..., a_q, a_{q+1})``
    counts the items drawn from each block and contributes
    ``C(r, a_{q+1}) * prod C(p, a_i)`` selections.
    """
    if p < 2:
        raise DomainError(f"p >= 2 required, got {p}")
    if n < p:
        raise DomainError(f"n >= p required, got n={n}, p={p}")
    q, r = divmod(n, p)
    if q > cap:
        raise SizeError(f"{q} full blocks exceeds enumeration cap {cap}")
    full = 0
    mixed = []
    for comp in _compositions(q, p, r):
        if p in comp[:q]:
            full += 1
            continue
        term = binom_exact(r, comp[q]) * prod(binom_exact(p, a) for a in comp[:q])
        mixed.append((comp, term))
    return BlockDecomposition(n, p, q, r, full, tuple(mixed))
