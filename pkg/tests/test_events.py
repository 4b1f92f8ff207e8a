import math
import random
from fractions import Fraction

import pytest

from pretenders.arith import PrimePower, sieve_and_factor
from pretenders.events import (
    FormViolation,
    PreemptionLedger,
    PrimePowerEvent,
    composite_event,
    lift_residues,
    prime_power_event,
)

SIEVE = sieve_and_factor(561)


def test_event_enumeration_spots():
    assert prime_power_event(10, PrimePower(5, 1)).residues == {0, 1}
    assert prime_power_event(6, PrimePower(3, 1)).residues == {0, 1}
    assert prime_power_event(4, PrimePower(2, 2)).residues == {0, 1}
    # 9 at 3^2: units of order dividing gcd(8, 6) = 2
    assert prime_power_event(9, PrimePower(3, 2)).residues == {0, 1, 8}


def test_event_always_contains_zero_and_one():
    for q in (4, 6, 9, 10, 15, 21, 25, 341, 561):
        for pp in SIEVE.factorization(q):
            ev = prime_power_event(q, pp)
            assert 0 in ev and 1 in ev


def test_event_cardinality_for_single_primes():
    # at p^1 the event is {0} plus the units of order dividing q-1
    rng = random.Random(21)
    for _ in range(200):
        q = rng.choice(SIEVE.composites)
        for pp in SIEVE.factorization(q):
            if pp.e != 1:
                continue
            ev = prime_power_event(q, pp)
            assert len(ev.residues) == 1 + math.gcd(q - 1, pp.p - 1)


def test_event_trivial_means_full():
    ev = prime_power_event(6, PrimePower(2, 1))   # r^6 = r mod 2 always
    assert ev.trivial
    assert ev.residues == {0, 1}
    assert not prime_power_event(10, PrimePower(5, 1)).trivial
    # the universal pretender is trivial at every component
    assert all(c.trivial for c in composite_event(561, SIEVE))


def test_event_requires_exact_prime_power_of_q():
    with pytest.raises(ValueError):
        prime_power_event(12, PrimePower(2, 1))   # 4 divides 12
    with pytest.raises(ValueError):
        prime_power_event(12, PrimePower(2, 3))   # 8 does not divide 12
    prime_power_event(12, PrimePower(2, 2))       # exact: fine


def test_composite_event_components():
    evs = composite_event(341, SIEVE)
    assert [ev.pp.p for ev in evs] == [11, 31]
    assert [len(ev.residues) for ev in evs] == [11, 11]   # 1 + gcd(340, p-1)


def test_lift_residues():
    lifted = lift_residues(frozenset({0, 1}), 5, 25)
    assert lifted == {0, 5, 10, 15, 20, 1, 6, 11, 16, 21}
    assert lift_residues(frozenset({3}), 4, 4) == {3}
    with pytest.raises(ValueError):
        lift_residues(frozenset({0}), 4, 10)


def test_ledger_tracked_exponents():
    ledger = PreemptionLedger(SIEVE)
    assert ledger.exponents[2] == 9
    assert ledger.exponents[3] == 5
    assert ledger.exponents[5] == 3
    assert ledger.exponents[7] == 3
    for p in (11, 13, 17, 19, 23):
        assert ledger.exponents[p] == 2
    singles = [p for p, e in ledger.exponents.items() if e == 1]
    assert min(singles) == 29 and max(singles) == 277
    assert len(ledger.exponents) == 59


def test_ledger_residual_before_any_ingest():
    ledger = PreemptionLedger(SIEVE)
    res = ledger.residual(4)
    assert res.density == Fraction(1, 2)
    assert not res.empty_primes


def test_ledger_ingest_then_preempt():
    ledger = PreemptionLedger(SIEVE)
    ledger.ingest(composite_event(4, SIEVE))
    assert ledger.blocked_primes() == (2,)
    # 6's component at 3 is untouched, at 2 everything = 0,1 mod 4 is gone
    res = ledger.residual(6)
    assert res.density == Fraction(1, 3)
    # 8's residual is empty: its event mod 8 is {0,1}, both preempted by 4
    res8 = ledger.residual(8)
    assert res8.density == 0
    assert res8.empty_primes == (2,)


def test_ledger_rejects_two_nontrivial_components():
    ledger = PreemptionLedger(SIEVE)
    fake = [PrimePowerEvent(35, PrimePower(5, 1), frozenset({0, 1})),
            PrimePowerEvent(35, PrimePower(7, 1), frozenset({0, 1}))]
    with pytest.raises(FormViolation):
        ledger.ingest(fake)


def test_ledger_ingest_of_all_trivial_is_noop():
    ledger = PreemptionLedger(SIEVE)
    ledger.ingest(composite_event(561, SIEVE))
    assert not ledger.blocked_primes()


def test_blocked_never_fills_a_prime():
    # replay the real walk: at no point may a prime lose all residues
    ledger = PreemptionLedger(SIEVE)
    for q in SIEVE.composites:
        res = ledger.residual(q)
        if res.density == 0:
            continue
        events = composite_event(q, SIEVE)
        nontrivial = [ev for ev in events if not ev.trivial]
        if len(nontrivial) <= 1:
            ledger.ingest(events)
        for p in ledger.blocked_primes():
            assert ledger.free(p), f"prime {p} exhausted after q={q}"
