"""The decision list for the least-composite self-power match.

Walk the composites 4, 6, 8, 9, ... 561 in increasing order, keeping a
ledger of which bases are already spoken for.  A composite whose event
set is entirely preempted never wins anything and is skipped (8 and 12
are the first casualties).  A composite with a positive-density residual
becomes an *entry*: it is the primary pretender of exactly the bases in
its residual, and its event is added to the ledger.

Two facts make the bookkeeping exact.  First, every winner below the
universal pretender constrains a single prime (checked at build time via
FormViolation), so the unclaimed bases always form a product of per-prime
residue sets and each entry's base share is an exact rational.  Second,
the final composite 561 pretends to every base, so the leftover density
is absorbed and the shares sum to exactly 1.

Each entry also carries a closed-form description: its event modulo the
constrained prime power m is contained in the k-th roots of 0 or 1
(mod m) with k = gcd(q-1, phi(m)), and inside the cascade the two sets
select the same new bases (the surplus roots of 0 are always preempted).
``derive_k_m`` re-derives and verifies that description; ``classify``
never uses it, walking the exact event sets instead.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import Sieve, reciprocal, render_decimal, sieve_and_factor
from .events import (FormViolation, PreemptionLedger, composite_event,
                     lift_residues)
from .pretender import UNIVERSAL_PRETENDER

__all__ = [
    "Cascade",
    "Characterization",
    "FamilyReport",
    "RootDescription",
    "RootDescriptionError",
    "SkippedComposite",
    "build_cascade",
    "derive_k_m",
    "family_check",
]


@dataclass
class Characterization:
    """One decision-list entry and the insertion-time state behind it."""

    q: int
    root_degree: int           # k in "k-th roots of 0 or 1 (mod m)"
    root_modulus: int          # m: the constrained prime power, 1 if none
    prime: int | None          # constrained prime, None for the universal entry
    event: frozenset[int]      # residues mod root_modulus satisfying the event
    event_lifted: frozenset[int] | None   # same, mod the tracked prime power
    new_residues: frozenset[int]          # event minus blocked, mod tracked power
    free_before: frozenset[int] | None    # free residues of `prime` at insertion
    allowed: dict[int, frozenset[int]]    # per-prime factors of the new base set
    density: Fraction          # exact share of bases claimed by this entry
    first_base: int | None = None         # filled in by the census scan

    @property
    def rarity(self) -> Fraction:
        return reciprocal(self.density)

    @property
    def rarity_display(self) -> str:
        return render_decimal(self.rarity, 2)

    def row(self) -> dict:
        return {
            "q": self.q,
            "k": self.root_degree,
            "m": self.root_modulus,
            "first_base": self.first_base,
            "density_num": self.density.numerator,
            "density_den": self.density.denominator,
            "rarity": self.rarity_display,
        }


@dataclass(frozen=True)
class SkippedComposite:
    """A composite whose residual was empty: it never wins a base."""

    q: int
    empty_primes: tuple[int, ...]


class Cascade:
    """Immutable decision list; safe to share across threads."""

    def __init__(self, entries: tuple[Characterization, ...],
                 ledger: PreemptionLedger,
                 skipped: tuple[SkippedComposite, ...], sieve: Sieve):
        self.entries = entries
        self.ledger = ledger
        self.skipped = skipped
        self.sieve = sieve
        self._by_q = {e.q: e for e in entries}
        self._walk = [(e.q, e.root_modulus, e.event) for e in entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def qs(self) -> list[int]:
        return [e.q for e in self.entries]

    def entry_for(self, q: int) -> Characterization:
        try:
            return self._by_q[q]
        except KeyError:
            raise KeyError(f"{q} is not a decision-list entry") from None

    def classify(self, b: int) -> int:
        """Primary pretender of b: first entry whose event contains b.

        Works for arbitrarily large b; only b mod each entry modulus is
        consulted, so the result is periodic in b.
        """
        for q, m, event in self._walk:
            if b % m in event:
                return q
        raise AssertionError("unreachable: the universal entry matches")

    def rows(self) -> list[dict]:
        return [e.row() for e in self.entries]

    def to_csv_text(self) -> str:
        lines = ["q,k,m,density_num,density_den,rarity"]
        for e in self.entries:
            lines.append(f"{e.q},{e.root_degree},{e.root_modulus},"
                         f"{e.density.numerator},{e.density.denominator},"
                         f"{e.rarity_display}")
        return "\n".join(lines) + "\n"

    def to_json_text(self) -> str:
        return json.dumps(self.rows(), indent=2) + "\n"


def build_cascade(sieve: Sieve | None = None) -> Cascade:
    """Derive the full decision list by the ascending-composite walk."""
    if sieve is None:
        sieve = sieve_and_factor(UNIVERSAL_PRETENDER)
    ledger = PreemptionLedger(sieve)
    entries: list[Characterization] = []
    skipped: list[SkippedComposite] = []
    for q in sieve.composites:
        events = composite_event(q, sieve)
        res = ledger.residual(q, events)
        if res.density == 0:
            skipped.append(SkippedComposite(q, res.empty_primes))
            continue
        nontrivial = [ev for ev in events if not ev.trivial]
        if len(nontrivial) > 1:
            ledger.ingest(events)  # raises FormViolation with the details
            raise FormViolation(f"winner {q} constrains several primes")
        if nontrivial:
            ev = nontrivial[0]
            p = ev.pp.p
            phi = (p - 1) * ev.modulus // p
            entry = Characterization(
                q=q,
                root_degree=gcd(q - 1, phi),
                root_modulus=ev.modulus,
                prime=p,
                event=ev.residues,
                event_lifted=lift_residues(ev.residues, ev.modulus,
                                           ledger.moduli[p]),
                new_residues=res.allowed[p],
                free_before=ledger.free(p),
                allowed=dict(res.allowed),
                density=res.density,
            )
            ledger.ingest(events)
        else:
            # universal pretender: every base matches, absorbing the rest
            entry = Characterization(
                q=q, root_degree=1, root_modulus=1, prime=None,
                event=frozenset({0}), event_lifted=None,
                new_residues=frozenset({0}), free_before=None,
                allowed=dict(res.allowed), density=res.density,
            )
        entries.append(entry)
    return Cascade(tuple(entries), ledger, tuple(skipped), sieve)


class RootDescriptionError(RuntimeError):
    """An entry's k-th-roots description failed verification."""


@dataclass(frozen=True)
class RootDescription:
    q: int
    degree: int
    modulus: int
    formula_set: frozenset[int]   # k-th roots of 0 or 1 mod m
    surplus: frozenset[int]       # formula_set minus the exact event


def derive_k_m(cascade: Cascade, q: int, verify: bool = True) -> RootDescription:
    """Re-derive an entry's (degree, modulus) description and verify that

    (a) the exact event is contained in the k-th roots of 0 or 1 (mod m);
    (b) inside the cascade the description selects exactly the entry's
        new bases, i.e. every surplus root was already preempted.
    """
    entry = cascade.entry_for(q)
    if entry.prime is None:
        return RootDescription(q, 1, 1, frozenset({0}), frozenset())
    p, m = entry.prime, entry.root_modulus
    phi = (p - 1) * m // p
    degree = gcd(q - 1, phi)
    formula = frozenset(r for r in range(m) if pow(r, degree, m) in (0, 1))
    if verify:
        if degree != entry.root_degree:
            raise RootDescriptionError(
                f"entry {q}: stored degree {entry.root_degree} != {degree}")
        if not entry.event <= formula:
            raise RootDescriptionError(
                f"entry {q}: event escapes the k-th-roots description")
        lifted = lift_residues(formula, m, cascade.ledger.moduli[p])
        if (lifted & entry.free_before) != entry.new_residues:
            raise RootDescriptionError(
                f"entry {q}: surplus roots of 0 were not all preempted")
    return RootDescription(q, degree, m, formula, formula - entry.event)


@dataclass(frozen=True)
class FamilyReport:
    matches: bool
    missing: tuple[int, ...]   # in the closed-form family, not in the cascade
    extra: tuple[int, ...]     # in the cascade, not in the family
    group_sizes: dict[str, int]


def family_check(cascade: Cascade) -> FamilyReport:
    """Compare the derived entry set against its closed-form description:
    products of a small factor with primes in fixed ranges, a few squares,
    and the universal pretender."""
    primes = cascade.sieve.primes
    groups = {
        "2p for p <= 277": {2 * p for p in primes if p <= 277},
        "3p for 3 <= p <= 181": {3 * p for p in primes if 3 <= p <= 181},
        "5p for p = 1 (mod 4), 5 <= p <= 109":
            {5 * p for p in primes if p % 4 == 1 and 5 <= p <= 109},
        "7p for p = 1 (mod 3), 7 <= p <= 79":
            {7 * p for p in primes if p % 3 == 1 and 7 <= p <= 79},
        "11p for p in {11, 31, 41}": {11 * p for p in (11, 31, 41)},
        "13p for p in {13, 37}": {13 * p for p in (13, 37)},
        "squares of 17, 19, 23": {17 ** 2, 19 ** 2, 23 ** 2},
        "universal": {UNIVERSAL_PRETENDER},
    }
    family: set[int] = set()
    for members in groups.values():
        assert not family & members, "family groups must be disjoint"
        family |= members
    derived = set(cascade.qs())
    return FamilyReport(
        matches=family == derived,
        missing=tuple(sorted(family - derived)),
        extra=tuple(sorted(derived - family)),
        group_sizes={name: len(members) for name, members in groups.items()},
    )
