import math
import random

from pretenders.period import (
    minimality_witnesses,
    period_constant,
    periodicity_check,
    primorial,
    verify_lcm,
)
from pretenders.tables import load_golden_period


def test_primorial_values():
    assert primorial(0) == 1
    assert primorial(1) == 2
    assert primorial(4) == 210
    assert primorial(9) == 223092870
    # p#_k is squarefree and divisible by exactly k primes
    n = primorial(12)
    assert all(n % (p * p) != 0 for p in (2, 3, 5, 7, 11, 13))


def test_period_constant_value():
    pc = period_constant()
    assert pc.value == primorial(59) * primorial(9)
    assert pc.num_digits == 122
    assert pc.digits.startswith("195685843334")
    assert pc.digits.endswith("2360439300")
    assert (pc.prime_index_major, pc.prime_index_minor) == (59, 9)


def test_period_matches_golden_digit_string():
    assert period_constant().digits == load_golden_period()


def test_period_factorization():
    pc = period_constant()
    exps = {pp.p: pp.e for pp in pc.factorization}
    assert len(exps) == 59
    assert all(exps[p] == 2 for p in (2, 3, 5, 7, 11, 13, 17, 19, 23))
    assert all(e == 1 for p, e in exps.items() if p >= 29)
    assert max(exps) == 277


def test_lcm_of_entry_moduli_is_the_period(cascade):
    check = verify_lcm(cascade)
    assert check.equal
    assert check.entry_lcm == check.period_value
    # and each modulus individually divides it
    for e in cascade.entries:
        assert check.period_value % e.root_modulus == 0


def test_periodicity_sampled(cascade):
    rep = periodicity_check(cascade, samples=300)
    assert rep.ok
    assert rep.checked == 300
    assert rep.failures == ()


def test_periodicity_alternate_seed(cascade):
    assert periodicity_check(cascade, samples=100, seed=7).ok


def test_periodicity_by_hand(cascade):
    n = period_constant().value
    rng = random.Random(41)
    for _ in range(25):
        b = rng.randrange(0, 10**150)
        assert cascade.classify(b) == cascade.classify(b + n)


def test_minimality_witness_per_prime_divisor(cascade):
    rep = minimality_witnesses(cascade)
    assert rep.ok
    assert not rep.failed
    assert len(rep.witnesses) == 59
    n = period_constant().value
    for p, w in rep.witnesses.items():
        assert w.prime == p and n % p == 0
        assert w.shifted - w.base == n // p
        # re-verify both classifications from scratch
        assert cascade.classify(w.base) == w.value
        assert cascade.classify(w.shifted) == w.shifted_value
        assert w.value != w.shifted_value


def test_no_proper_divisor_through_witnesses(cascade):
    # every maximal proper divisor N/p fails to be a period, so no proper
    # divisor of N is one
    rep = minimality_witnesses(cascade)
    n = period_constant().value
    primes = sorted(rep.witnesses)
    assert math.prod(primes) * primorial(9) == n
