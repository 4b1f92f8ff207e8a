"""The period of the primary-pretender function and its minimality.

classify(b) consults b only through b mod m for the entry moduli m, so it
repeats with period lcm(all entry moduli).  That lcm factors as two
primorials: the product of all primes up to the largest prime factor of
any composite in range (277, the 59th prime) times the product of all
primes up to the largest repeated prime factor (23, the 9th prime) -- a
122-digit number.  Minimality is witnessed prime by prime: for each p
dividing the period N, a pair of bases congruent mod N/p that classify
differently, so no proper divisor of N is a period.
"""

import random
from dataclasses import dataclass
from math import lcm

from .arith import PrimePower, crt, sieve_and_factor
from .cascade import Cascade

__all__ = [
    "LcmCheck",
    "MinimalityReport",
    "PeriodConstant",
    "PeriodicityReport",
    "Witness",
    "minimality_witnesses",
    "period_constant",
    "periodicity_check",
    "primorial",
]


def primorial(k: int) -> int:
    """Product of the first k primes."""
    if k < 0:
        raise ValueError("primorial of a negative index")
    sieve = sieve_and_factor(600 if k <= 100 else 10 * k * max(k, 10))
    if k > len(sieve.primes):
        raise ValueError(f"primorial index {k} beyond supported range")
    out = 1
    for p in sieve.primes[:k]:
        out *= p
    return out


@dataclass(frozen=True)
class PeriodConstant:
    value: int
    prime_index_major: int   # primes up to the largest prime factor
    prime_index_minor: int   # primes up to the largest repeated prime factor

    @property
    def digits(self) -> str:
        return str(self.value)

    @property
    def num_digits(self) -> int:
        return len(self.digits)

    @property
    def factorization(self) -> tuple[PrimePower, ...]:
        sieve = sieve_and_factor(600)
        major = sieve.primes[:self.prime_index_major]
        minor = set(sieve.primes[:self.prime_index_minor])
        return tuple(PrimePower(p, 2 if p in minor else 1) for p in major)


def period_constant(limit: int = 561) -> PeriodConstant:
    """The claimed period: primorial at the largest prime factor of any
    composite <= limit, times primorial at the largest repeated one.
    Both bounds are read off the sieve, not hardcoded."""
    sieve = sieve_and_factor(limit)
    largest = 0
    largest_repeated = 0
    for n in sieve.composites:
        for pp in sieve.factorization(n):
            largest = max(largest, pp.p)
            if pp.e >= 2:
                largest_repeated = max(largest_repeated, pp.p)
    i_major = sieve.prime_count_upto(largest)
    i_minor = sieve.prime_count_upto(largest_repeated)
    return PeriodConstant(primorial(i_major) * primorial(i_minor),
                          i_major, i_minor)


@dataclass(frozen=True)
class LcmCheck:
    equal: bool
    entry_lcm: int
    period_value: int


def verify_lcm(cascade: Cascade) -> LcmCheck:
    """The lcm of the 132 entry moduli must equal the period constant."""
    entry_lcm = lcm(*(e.root_modulus for e in cascade.entries))
    value = period_constant(cascade.sieve.limit).value
    return LcmCheck(entry_lcm == value, entry_lcm, value)


@dataclass(frozen=True)
class PeriodicityReport:
    period: int
    checked: int
    failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def periodicity_check(cascade: Cascade, samples: int = 1000,
                      seed: int = 20260822, digits: int = 150) -> PeriodicityReport:
    """classify(b) == classify(b + N) over small bases plus random bases
    of ~``digits`` digits (wider than N itself)."""
    n = period_constant(cascade.sieve.limit).value
    rng = random.Random(seed)
    bases = list(range(min(samples // 2, 200)))
    while len(bases) < samples:
        bases.append(rng.randrange(10 ** (digits - 1), 10 ** digits))
    failures = tuple(b for b in bases
                     if cascade.classify(b) != cascade.classify(b + n))
    return PeriodicityReport(n, len(bases), failures)


@dataclass(frozen=True)
class Witness:
    prime: int
    base: int
    shifted: int        # base + N/prime
    value: int          # classify(base)
    shifted_value: int  # classify(shifted), must differ


@dataclass(frozen=True)
class MinimalityReport:
    witnesses: dict[int, Witness]
    failed: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failed


def minimality_witnesses(cascade: Cascade) -> MinimalityReport:
    """For each prime p | N, build b with b = b + N/p (mod N/p) but
    classify(b) != classify(b + N/p).

    Construction: take the first entry whose constrained modulus carries
    the full power of p present in N, and assemble b by CRT from the
    entry's insertion-time allowed residues, picking the p-residue so that
    the shift by N/p knocks it out of the entry's event.  classify(b) is
    then the entry's q and classify(b + N/p) cannot be.
    """
    n = period_constant(cascade.sieve.limit).value
    ledger = cascade.ledger
    target_exp: dict[int, int] = {}
    value = n
    for p in ledger.tracked_primes:
        e = 0
        while value % p == 0:
            value //= p
            e += 1
        if e:
            target_exp[p] = e
    assert value == 1, "period must factor over the tracked primes"

    witnesses: dict[int, Witness] = {}
    failed: list[int] = []
    for p, exp in sorted(target_exp.items()):
        target_modulus = p ** exp
        entry = next((e for e in cascade.entries
                      if e.prime == p and e.root_modulus == target_modulus),
                     None)
        if entry is None:
            failed.append(p)
            continue
        shift = n // p
        chosen = next((r for r in sorted(entry.allowed[p])
                       if (r + shift) % entry.root_modulus not in entry.event),
                      None)
        if chosen is None:
            failed.append(p)
            continue
        residues, moduli = [], []
        for tp in ledger.tracked_primes:
            slot = entry.allowed.get(tp)
            if tp == p:
                residues.append(chosen)
            elif slot:
                residues.append(min(slot))
            else:
                residues.append(0)
            moduli.append(ledger.moduli[tp])
        b = crt(residues, moduli)
        v, sv = cascade.classify(b), cascade.classify(b + shift)
        if v != entry.q or sv == v or (b - (b + shift)) % shift != 0:
            failed.append(p)
            continue
        witnesses[p] = Witness(p, b, b + shift, v, sv)
    return MinimalityReport(witnesses, tuple(failed))
