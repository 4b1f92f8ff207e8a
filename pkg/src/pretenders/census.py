"""Counting over the decision list: densities, first bases, extremes.

The scan for first bases classifies a contiguous base range in chunks.
Each chunk is resolved entry by entry with numpy table lookups on b mod m,
narrowing to the still-unresolved indices as entries claim their bases;
chunks merge by per-entry minima, so any partition of the range gives the
same answer.  Density checks recount everything from raw congruences so
they do not lean on the event machinery they are checking.
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .arith import render_decimal
from .cascade import Cascade
from .pretender import primary_pretender_oracle

__all__ = [
    "CensusReport",
    "Extremes",
    "FirstBaseScan",
    "classify_range",
    "densities",
    "density_by_residue_count",
    "entry_period_lcm",
    "extremes",
    "first_bases",
    "oracle_period_census",
    "rarity_regression",
    "verify_skipped",
]

DEFAULT_MAX_BASE = 11_000_000   # covers the latest first appearance, 10009487


def densities(cascade: Cascade) -> dict[int, Fraction]:
    return {e.q: e.density for e in cascade.entries}


def _lookup_tables(cascade: Cascade) -> list[tuple[int, int, np.ndarray]]:
    tables = []
    for e in cascade.entries:
        hit = np.zeros(e.root_modulus, dtype=bool)
        hit[list(e.event)] = True
        tables.append((e.q, e.root_modulus, hit))
    return tables


def classify_range(cascade: Cascade, start: int, stop: int,
                   tables=None) -> np.ndarray:
    """Vector of primary pretenders for b in [start, stop)."""
    if tables is None:
        tables = _lookup_tables(cascade)
    bases = np.arange(start, stop, dtype=np.int64)
    out = np.zeros(stop - start, dtype=np.int32)
    open_idx = np.arange(stop - start, dtype=np.int64)
    for q, m, hit in tables:
        if open_idx.size == 0:
            break
        matched = hit[bases[open_idx] % m]
        out[open_idx[matched]] = q
        open_idx = open_idx[~matched]
    assert open_idx.size == 0, "universal entry must resolve every base"
    return out


@dataclass
class FirstBaseScan:
    found: dict[int, int]
    max_base: int
    missing: tuple[int, ...]
    seconds: float


def first_bases(cascade: Cascade, max_base: int = DEFAULT_MAX_BASE,
                chunk_size: int = 1_000_000) -> FirstBaseScan:
    """Least base for every entry, scanning [0, max_base) in chunks."""
    t0 = time.perf_counter()
    tables = _lookup_tables(cascade)
    found: dict[int, int] = {}
    want = set(cascade.qs())
    for lo in range(0, max_base, chunk_size):
        hi = min(lo + chunk_size, max_base)
        vals = classify_range(cascade, lo, hi, tables)
        for q in np.unique(vals):
            q = int(q)
            if q in want:
                found[q] = lo + int(np.argmax(vals == q))
                want.discard(q)
        if not want:
            break
    return FirstBaseScan(found=dict(sorted(found.items())), max_base=max_base,
                         missing=tuple(sorted(want)),
                         seconds=time.perf_counter() - t0)


@dataclass
class CensusReport:
    cascade: Cascade
    density: dict[int, Fraction]
    rarity_display: dict[int, str]
    first_base: dict[int, int]
    scan: FirstBaseScan

    @classmethod
    def build(cls, cascade: Cascade,
              max_base: int = DEFAULT_MAX_BASE) -> "CensusReport":
        scan = first_bases(cascade, max_base)
        for e in cascade.entries:
            e.first_base = scan.found.get(e.q)
        return cls(
            cascade=cascade,
            density=densities(cascade),
            rarity_display={e.q: e.rarity_display for e in cascade.entries},
            first_base=scan.found,
            scan=scan,
        )

    def to_csv_text(self) -> str:
        lines = ["q,k,m,first_base,density_num,density_den,rarity"]
        for e in self.cascade.entries:
            first = self.first_base.get(e.q, "")
            lines.append(f"{e.q},{e.root_degree},{e.root_modulus},{first},"
                         f"{e.density.numerator},{e.density.denominator},"
                         f"{e.rarity_display}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Extremes:
    latest_first_base: tuple[int, int]     # (q, base)
    rarest: tuple[int, Fraction]           # (q, rarity)
    first_base_ties: tuple[int, ...]
    rarity_ties: tuple[int, ...]


def extremes(report: CensusReport) -> Extremes:
    fb = report.first_base
    q_fb = max(fb, key=lambda q: fb[q])
    fb_ties = tuple(sorted(q for q in fb if fb[q] == fb[q_fb]))
    rar = {e.q: e.rarity for e in report.cascade.entries}
    q_r = max(rar, key=lambda q: rar[q])
    r_ties = tuple(sorted(q for q in rar if rar[q] == rar[q_r]))
    return Extremes((q_fb, fb[q_fb]), (q_r, rar[q_r]), fb_ties, r_ties)


@dataclass(frozen=True)
class RarityMismatch:
    q: int
    field: str
    expected: object
    actual: object


def rarity_regression(report: CensusReport, golden_rows,
                      tol: Fraction = Fraction(1, 100)) -> list[RarityMismatch]:
    """Diff the derived per-entry summary against golden (q, k, m,
    first_base, rarity) rows; rarity compares as |delta| <= tol after
    rendering to two decimals."""
    out: list[RarityMismatch] = []
    derived = {e.q: e for e in report.cascade.entries}
    golden_qs = [row.q for row in golden_rows]
    if sorted(golden_qs) != sorted(derived):
        for q in sorted(set(golden_qs) ^ set(derived)):
            out.append(RarityMismatch(q, "q", q in golden_qs, q in derived))
        return out
    for row in golden_rows:
        e = derived[row.q]
        if e.root_degree != row.k:
            out.append(RarityMismatch(row.q, "k", row.k, e.root_degree))
        if e.root_modulus != row.m:
            out.append(RarityMismatch(row.q, "m", row.m, e.root_modulus))
        mine_first = report.first_base.get(row.q)
        if mine_first != row.first_base:
            out.append(RarityMismatch(row.q, "first_base",
                                      row.first_base, mine_first))
        mine = Fraction(render_decimal(e.rarity, 2))
        theirs = Fraction(row.rarity)
        if abs(mine - theirs) > tol:
            out.append(RarityMismatch(row.q, "rarity", row.rarity,
                                      render_decimal(e.rarity, 2)))
    return out


# ---------------------------------------------------------------------------
# independent density checks

def entry_period_lcm(cascade: Cascade, upto_q: int) -> int:
    """lcm of the entry moduli for entries <= upto_q; the set of bases
    claimed by those entries repeats with exactly this period."""
    return lcm(*(e.root_modulus for e in cascade.entries if e.q <= upto_q))


def oracle_period_census(limit: int) -> dict[int, int]:
    """Count primary pretenders over [0, limit) by the brute-force oracle."""
    counts: dict[int, int] = {}
    for b in range(limit):
        q = primary_pretender_oracle(b)
        counts[q] = counts.get(q, 0) + 1
    return counts


def density_by_residue_count(cascade: Cascade, q: int) -> Fraction:
    """Recount an entry's density from raw congruences.

    For each prime with a tracked power P: enumerate all residues r mod P,
    keep those satisfying q's component congruence that no earlier entry
    claims, and take count/P.  The product over primes is the density.
    Everything is recomputed with pow(); the only cascade inputs are the
    earlier winners' q values and constrained moduli.
    """
    entry = cascade.entry_for(q)
    earlier = [(e.q, e.prime, e.root_modulus)
               for e in cascade.entries if e.q < q and e.prime is not None]
    q_components = {pp.p: pp.modulus for pp in cascade.sieve.factorization(q)}
    primes = set(q_components) | {p for (_, p, _) in earlier}
    density = Fraction(1)
    for p in sorted(primes):
        tracked = cascade.ledger.moduli[p]
        claimers = [(w, m) for (w, wp, m) in earlier if wp == p]
        count = 0
        for r in range(tracked):
            cm = q_components.get(p)
            if cm is not None and pow(r % cm, q, cm) != r % cm:
                continue
            if any(pow(r % m, w, m) == r % m for (w, m) in claimers):
                continue
            count += 1
        density *= Fraction(count, tracked)
    return density


def verify_skipped(cascade: Cascade, q: int) -> bool:
    """Confirm from raw congruences that a skipped composite truly has an
    empty residual: some prime's component event is fully preempted."""
    skip = next(s for s in cascade.skipped if s.q == q)
    earlier = [(e.q, e.prime, e.root_modulus)
               for e in cascade.entries if e.q < q and e.prime is not None]
    for p in skip.empty_primes:
        tracked = cascade.ledger.moduli[p]
        cm = next((pp.modulus for pp in cascade.sieve.factorization(q)
                   if pp.p == p), None)
        claimers = [(w, m) for (w, wp, m) in earlier if wp == p]
        for r in range(tracked):
            if cm is not None and pow(r % cm, q, cm) != r % cm:
                continue
            if any(pow(r % m, w, m) == r % m for (w, m) in claimers):
                continue
            return False  # found a free residue: the skip was wrong
    return bool(skip.empty_primes)
