"""Residue analysis of the self-power congruence, one prime power at a time.

For composite q and a maximal prime power p**e || q, the congruence
b**q = b (mod q) holds iff it holds modulo every such component, and the
component condition depends only on b mod p**e.  The *event* of the pair
(q, p**e) is the set of residues r mod p**e with r**q = r (mod p**e),
found here by plain enumeration of all p**e candidates.  It always
contains 0 and 1; for e = 1 it is {0} plus the gcd(q-1, p-1) roots of
unity, and it is the full residue system exactly when the component
places no constraint on b.

The ``PreemptionLedger`` accumulates, per prime, the residues already
claimed by earlier winners of the least-pretender contest.  Each winner
constrains a single prime, so the unclaimed bases stay a product of
per-prime free sets and every residual density is an exact product of
per-prime fractions.  Tracked exponents are the maximal prime powers
occurring in any composite up to the sieve limit, derived from the sieve.
"""

from dataclasses import dataclass
from fractions import Fraction

from .arith import PrimePower, Sieve

__all__ = [
    "FormViolation",
    "PrimePowerEvent",
    "PreemptionLedger",
    "Residual",
    "composite_event",
    "lift_residues",
    "prime_power_event",
]


class FormViolation(RuntimeError):
    """A winner constrained more than one prime, breaking the product
    bookkeeping.  Never expected to fire; kept as a checked assumption."""


@dataclass(frozen=True)
class PrimePowerEvent:
    q: int
    pp: PrimePower
    residues: frozenset[int]

    @property
    def modulus(self) -> int:
        return self.pp.modulus

    @property
    def trivial(self) -> bool:
        """True when every residue satisfies the component congruence."""
        return len(self.residues) == self.modulus

    def __contains__(self, b: int) -> bool:
        return b % self.modulus in self.residues


def prime_power_event(q: int, pp: PrimePower) -> PrimePowerEvent:
    """Enumerate {r mod p**e : r**q = r (mod p**e)} for p**e maximal in q."""
    m = pp.modulus
    if q % m != 0 or q % (m * pp.p) == 0:
        raise ValueError(f"{pp} is not a maximal prime power of {q}")
    residues = frozenset(r for r in range(m) if pow(r, q, m) == r)
    return PrimePowerEvent(q, pp, residues)


def composite_event(q: int, sieve: Sieve) -> tuple[PrimePowerEvent, ...]:
    """Per-component events of q, one per maximal prime power."""
    if sieve.is_prime(q) or q < 4:
        raise ValueError(f"{q} is not composite")
    return tuple(prime_power_event(q, pp) for pp in sieve.factorization(q))


def lift_residues(residues: frozenset[int], base_modulus: int,
                  target_modulus: int) -> frozenset[int]:
    """Preimage of a residue set under reduction from a larger modulus.

    Density is preserved: len grows by exactly target/base.
    """
    if target_modulus % base_modulus != 0:
        raise ValueError(
            f"cannot lift mod {base_modulus} to non-multiple {target_modulus}")
    return frozenset(r + k * base_modulus
                     for r in residues
                     for k in range(target_modulus // base_modulus))


@dataclass
class Residual:
    """Unclaimed slice of a composite's event set at some ledger state.

    ``allowed`` holds, for every prime whose factor is not 1, the residues
    (mod the tracked power) that are inside the event and still free.
    The density is the product of len(allowed[p]) / p**E_p; it is zero
    exactly when some allowed set is empty.
    """

    q: int
    allowed: dict[int, frozenset[int]]
    density: Fraction

    @property
    def empty_primes(self) -> tuple[int, ...]:
        return tuple(p for p, s in self.allowed.items() if not s)


class PreemptionLedger:
    """Per-prime blocked/free residue bookkeeping for the cascade build."""

    def __init__(self, sieve: Sieve):
        self.sieve = sieve
        exponents: dict[int, int] = {}
        for n in sieve.composites:
            for pp in sieve.factorization(n):
                if pp.e > exponents.get(pp.p, 0):
                    exponents[pp.p] = pp.e
        self.exponents = dict(sorted(exponents.items()))
        self.moduli = {p: p ** e for p, e in self.exponents.items()}
        self._blocked: dict[int, set[int]] = {p: set() for p in self.exponents}
        self._full = {p: frozenset(range(m)) for p, m in self.moduli.items()}

    @property
    def tracked_primes(self) -> tuple[int, ...]:
        return tuple(self.exponents)

    def blocked(self, p: int) -> frozenset[int]:
        return frozenset(self._blocked[p])

    def free(self, p: int) -> frozenset[int]:
        return self._full[p] - self._blocked[p]

    def blocked_primes(self) -> tuple[int, ...]:
        return tuple(p for p, s in self._blocked.items() if s)

    def residual(self, q: int,
                 events: tuple[PrimePowerEvent, ...] | None = None) -> Residual:
        """Event set of q minus everything already claimed, as per-prime
        allowed sets with their exact joint density."""
        if events is None:
            events = composite_event(q, self.sieve)
        allowed: dict[int, frozenset[int]] = {}
        for ev in events:
            p = ev.pp.p
            lifted = (self._full[p] if ev.trivial
                      else lift_residues(ev.residues, ev.modulus, self.moduli[p]))
            cut = lifted - self._blocked[p]
            if len(cut) != self.moduli[p]:
                allowed[p] = cut
        event_primes = {ev.pp.p for ev in events}
        for p in self.blocked_primes():
            if p not in event_primes:
                allowed[p] = self.free(p)
        density = Fraction(1)
        for p, residues in allowed.items():
            density *= Fraction(len(residues), self.moduli[p])
        return Residual(q, allowed, density)

    def ingest(self, events: tuple[PrimePowerEvent, ...]) -> None:
        """Mark a winner's event as claimed.  The winner must constrain at
        most one prime; otherwise the product structure would be lost and
        FormViolation is raised."""
        nontrivial = [ev for ev in events if not ev.trivial]
        if len(nontrivial) > 1:
            primes = [ev.pp.p for ev in nontrivial]
            raise FormViolation(
                f"winner {events[0].q} constrains several primes {primes}")
        if not nontrivial:
            return  # universal pretender: nothing left to claim after it
        ev = nontrivial[0]
        p = ev.pp.p
        self._blocked[p] |= lift_residues(ev.residues, ev.modulus, self.moduli[p])
