"""Binomial congruences, Lucas' theorem, and the C(n, p) primality characterization."""

from .arith import PrimePowerSplit, binom_exact, is_prime_trial, prime_power_split, smallest_prime_factor
from .characterization import (
    BlockDecomposition,
    CongruenceCheck,
    PrimalityVerdict,
    WitnessReport,
    block_selection_decomposition,
    check_thm21,
    composite_witness,
    is_prime_by_characterization,
    witness_predicted_residue,
)
from .congruences import (
    ApostolResult,
    FalsifierResult,
    PowerExplorationReport,
    check_apostol,
    check_bailey_digits,
    check_bailey_np_rp,
    check_lucas_corollary,
    explore_power_congruence,
    mestrovic_falsify,
)
from .errors import DomainError, HypothesisError, InvariantViolation, PrimeInputError, SizeError
from .lucas import BaseDigits, CoeffVectorModM, binom_mod_prime_lucas, binom_p_divisibility, digits_base, freshman_dream_coeffs
from .oracle import PascalTriangleModM, build_pascal_mod, oracle_binom_mod, sweep_thm21

__version__ = "0.1.0"
