import pytest

from binomprime.congruences import (
    check_apostol,
    check_bailey_digits,
    check_bailey_np_rp,
    check_lucas_corollary,
    explore_power_congruence,
    mestrovic_falsify,
)
from binomprime.errors import DomainError, HypothesisError

from conftest import comb_ref


@pytest.mark.parametrize("n,m,p,res", [(2, 1, 3, 2), (9, 0, 7, 1), (3, 2, 5, 3)])
def test_lucas_corollary_examples(n, m, p, res):
    c = check_lucas_corollary(n, m, p)
    assert c.holds and c.lhs_residue == res == c.rhs_residue


def test_lucas_corollary_sweep_and_errors():
    for p in (2, 3, 5, 7, 11, 13):
        for n in range(40):
            for m in range(n + 1):
                c = check_lucas_corollary(n, m, p)
                assert c.holds and c.lhs_residue == comb_ref(n * p, m * p) % p
    with pytest.raises(DomainError):
        check_lucas_corollary(2, 1, 4)
    with pytest.raises(DomainError):
        check_lucas_corollary(1, 2, 5)


@pytest.mark.parametrize("n,r,p,res", [(2, 1, 5, 2), (1, 1, 7, 1), (3, 2, 5, 3), (2, 5, 5, 0)])
def test_bailey_np_rp_examples(n, r, p, res):
    c = check_bailey_np_rp(n, r, p)
    assert c.holds and c.modulus == p**3 and c.lhs_residue == res
    assert (comb_ref(n * p, r * p) - comb_ref(n, r)) % p**3 == 0


def test_bailey_pinned_difference():
    assert comb_ref(10, 5) - comb_ref(2, 1) == 250
    assert comb_ref(127, 126) - 2 == 125


@pytest.mark.parametrize("p", [2, 3, 4, 9, 25])
def test_bailey_rejects_outside_hypothesis(p):
    with pytest.raises(HypothesisError, match="p >= 5"):
        check_bailey_np_rp(2, 1, p)
    with pytest.raises(HypothesisError):
        check_bailey_digits(1, 1, 0, 0, p)


@pytest.mark.parametrize("N,R,n,r,p,res", [(1, 1, 2, 1, 5, 2), (0, 0, 4, 2, 5, 6), (2, 1, 3, 2, 5, 6)])
def test_bailey_digits_examples(N, R, n, r, p, res):
    c = check_bailey_digits(N, R, n, r, p)
    assert c.holds and c.lhs_residue == res
    assert comb_ref(N * p**3 + n, R * p**3 + r) % p**3 == res


def test_bailey_digits_requires_small_digits():
    with pytest.raises(HypothesisError, match="n, r < p"):
        check_bailey_digits(1, 1, 5, 1, 5)


def test_bailey_would_fail_for_p3():
    # the p >= 5 hypothesis is material: mod 27 the congruence breaks for p = 3
    assert (comb_ref(6, 3) - comb_ref(2, 1)) % 27 != 0


@pytest.mark.parametrize(
    "n,p,alpha,applicable,verdict", [(27, 3, 2, True, True), (50, 5, 2, False, None), (8, 2, 2, True, True)]
)
def test_apostol_examples(n, p, alpha, applicable, verdict):
    res = check_apostol(n, p, alpha)
    assert res.applicable is applicable and res.verdict is verdict
    assert res.binom_residue == comb_ref(n, p) % p**alpha


def test_apostol_errors():
    with pytest.raises(DomainError, match="positive integer"):
        check_apostol(10, 2, 0)
    with pytest.raises(DomainError):
        check_apostol(10, 4, 1)


@pytest.mark.parametrize("d,q,ce", [(2, 3, (2, 1)), (6, 2, (3, 1)), (2, 2, None), (9, 3, None), (2, 8, (2, 1))])
def test_mestrovic_examples(d, q, ce):
    res = mestrovic_falsify(d, q, 50)
    assert res.counterexample == ce
    if ce is None:
        assert res.checks_performed == 51 * 52 // 2
    else:
        n, m = ce
        assert (comb_ref(n * d, m * d) - comb_ref(n, m)) % q
        # nothing earlier in (n, m) order violates the congruence
        earlier = [(a, b) for a in range(n + 1) for b in range(a + 1) if (a, b) < (n, m)]
        assert all((comb_ref(a * d, b * d) - comb_ref(a, b)) % q == 0 for a, b in earlier)
        assert res.checks_performed == len(earlier) + 1


def test_mestrovic_deterministic_and_errors():
    assert mestrovic_falsify(10, 7, 30) == mestrovic_falsify(10, 7, 30)
    with pytest.raises(DomainError):
        mestrovic_falsify(1, 3)
    with pytest.raises(DomainError):
        mestrovic_falsify(3, 1)


def _brute_max_l(p, k, bound):
    best = None
    for l in range(1, 60):
        mod = p**l
        bad = [
            (n, m)
            for n in range(1, bound + 1)
            for m in range(1, n + 1)
            if (comb_ref(n * p**k, m * p**k) - comb_ref(n, m)) % mod
        ]
        if bad:
            return l - 1, bad
    return best, []


@pytest.mark.parametrize(
    "p,k,bound,max_l", [(5, 1, 6, 3), (2, 1, 6, 2), (5, 1, 2, 3), (3, 1, 6, 2), (7, 1, 8, 3), (3, 2, 5, None)]
)
def test_explore_power_congruence(p, k, bound, max_l):
    rep = explore_power_congruence(p, k, bound)
    brute_l, violators = _brute_max_l(p, k, bound)
    assert rep.max_l == brute_l
    if max_l is not None:
        assert rep.max_l == max_l
    assert rep.tightness_example in violators
    n, m = rep.tightness_example
    diff = comb_ref(n * p**k, m * p**k) - comb_ref(n, m)
    assert diff % p**rep.max_l == 0 and diff % p ** (rep.max_l + 1)


def test_explore_power_lower_bound_for_p_at_least_5():
    for p in (5, 7):
        for bound in range(2, 9):
            assert explore_power_congruence(p, 1, bound).max_l >= 3


def test_explore_power_errors():
    with pytest.raises(DomainError):
        explore_power_congruence(6, 1, 5)
    with pytest.raises(DomainError):
        explore_power_congruence(5, 0, 5)
    with pytest.raises(DomainError):
        explore_power_congruence(5, 1, 1)
