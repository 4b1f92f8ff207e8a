"""Integer and exact-rational groundwork for the pretender computations.

Arbitrary-precision naturals are Python ints.  Exact rationals are
``fractions.Fraction`` (re-exported as ``ExactRational``): always reduced,
denominator positive, so densities and rarities never touch floats.  The
sieve is a smallest-prime-factor table, which gives primality, full
factorizations into maximal prime powers, and the composite list in one
pass.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

__all__ = [
    "ExactRational",
    "PrimePower",
    "Sieve",
    "crt",
    "mod_pow",
    "nth_prime",
    "prime_count_upto",
    "reciprocal",
    "render_decimal",
    "sieve_and_factor",
]

ExactRational = Fraction


@dataclass(frozen=True, slots=True)
class PrimePower:
    """A maximal prime-power divisor p**e of some integer."""

    p: int
    e: int

    @property
    def modulus(self) -> int:
        return self.p ** self.e

    def __str__(self) -> str:
        return f"{self.p}^{self.e}" if self.e > 1 else str(self.p)


class Sieve:
    """Primality, factorizations and composites for every n up to ``limit``."""

    def __init__(self, limit: int):
        if limit < 4:
            raise ValueError(f"sieve limit must be at least 4, got {limit}")
        self.limit = limit
        # smallest prime factor of n at index n; 0 for n < 2
        spf = list(range(limit + 1))
        spf[0] = spf[1] = 0
        for p in range(2, isqrt(limit) + 1):
            if spf[p] == p:
                for n in range(p * p, limit + 1, p):
                    if spf[n] == n:
                        spf[n] = p
        self._spf = spf
        self.primes = [n for n in range(2, limit + 1) if spf[n] == n]
        self.composites = [n for n in range(4, limit + 1) if spf[n] != n]

    def is_prime(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise ValueError(f"{n} outside sieve range [0, {self.limit}]")
        return n >= 2 and self._spf[n] == n

    def factorization(self, n: int) -> tuple[PrimePower, ...]:
        """Maximal prime powers of n, in increasing prime order."""
        if not 2 <= n <= self.limit:
            raise ValueError(f"{n} outside sieve range [2, {self.limit}]")
        out = []
        while n > 1:
            p = self._spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append(PrimePower(p, e))
        return tuple(out)

    def nth_prime(self, k: int) -> int:
        """The k-th prime, 1-indexed: nth_prime(1) == 2."""
        if k < 1 or k > len(self.primes):
            raise ValueError(f"prime index {k} outside sieve range")
        return self.primes[k - 1]

    def prime_count_upto(self, x: int) -> int:
        if x > self.limit:
            raise ValueError(f"{x} beyond sieve limit {self.limit}")
        lo, hi = 0, len(self.primes)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.primes[mid] <= x:
                lo = mid + 1
            else:
                hi = mid
        return lo


@lru_cache(maxsize=None)
def sieve_and_factor(limit: int) -> Sieve:
    return Sieve(limit)


def nth_prime(k: int) -> int:
    if k < 1:
        raise ValueError("prime indices start at 1")
    bound = 600
    while True:
        sieve = sieve_and_factor(bound)
        if len(sieve.primes) >= k:
            return sieve.nth_prime(k)
        bound *= 2


def prime_count_upto(x: int) -> int:
    if x < 2:
        return 0
    return sieve_and_factor(max(x, 4)).prime_count_upto(x)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus by binary exponentiation (O(log exp) products)."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    return pow(base % modulus, exp, modulus)


def reciprocal(x) -> Fraction:
    f = Fraction(x)
    if f == 0:
        raise ZeroDivisionError("reciprocal of zero")
    return 1 / f


def render_decimal(x: Fraction, places: int = 2) -> str:
    """Render an exact rational to ``places`` decimals, half-to-even,
    then trim trailing zeros (and a bare trailing point).

    render_decimal(Fraction(45, 2))    -> '22.5'
    render_decimal(Fraction(1925, 8))  -> '240.62'   (exact tie, 2 is even)
    render_decimal(Fraction(2))        -> '2'
    """
    if places < 0:
        raise ValueError("places must be nonnegative")
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    scaled, rem = divmod(num * 10 ** places, den)
    if 2 * rem > den or (2 * rem == den and scaled % 2 == 1):
        scaled += 1
    text = str(scaled).rjust(places + 1, "0")
    if places:
        text = text[:-places] + "." + text[-places:]
        text = text.rstrip("0").rstrip(".")
    return sign + text if text else "0"


def crt(residues: list[int], moduli: list[int]) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli; 0 <= x < prod."""
    if len(residues) != len(moduli):
        raise ValueError("residue/modulus length mismatch")
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        # garner step: adjust x by a multiple of m to hit r mod mi
        t = ((r - x) * pow(m, -1, mi)) % mi
        x += m * t
        m *= mi
    return x % m
