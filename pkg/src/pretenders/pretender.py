"""Fermat-type congruences at composite moduli.

A composite q is a *prime pretender* to base b when b**q = b (mod q) --
the self-power congruence every prime satisfies.  The *primary pretender*
of b is the least such composite.  It never exceeds 561 = 3*11*17, the
smallest Carmichael number, which pretends to every base; so the
brute-force search below always terminates inside the composite list.

The classical *Fermat pseudoprime* condition b**(q-1) = 1 (mod q) is the
unit form of the same congruence; it is strictly stronger at bases
sharing a factor with q and impossible altogether for base 2 at even q.
"""

from .arith import Sieve, sieve_and_factor

__all__ = [
    "UNIVERSAL_PRETENDER",
    "NotCompositeError",
    "is_prime_pretender",
    "is_fermat_pseudoprime",
    "primary_pretender_oracle",
    "pretender_profile",
]

# Smallest composite that pretends to every base (verified in the tests
# by enumerating all residues); hard upper bound for the oracle search.
UNIVERSAL_PRETENDER = 561


class NotCompositeError(ValueError):
    """Raised when a pretender query is made for a modulus that is not
    a composite number - such calls are caller bugs, not falsehoods."""


def _require_composite(q: int) -> None:
    if q < 4:
        raise NotCompositeError(f"modulus {q} is below the least composite 4")
    if q <= UNIVERSAL_PRETENDER:
        if _sieve().is_prime(q):
            raise NotCompositeError(f"modulus {q} is prime")
        return
    for d in range(2, q):
        if d * d > q:
            raise NotCompositeError(f"modulus {q} is prime")
        if q % d == 0:
            return


def _sieve() -> Sieve:
    return sieve_and_factor(UNIVERSAL_PRETENDER)


def is_prime_pretender(q: int, b: int) -> bool:
    """True iff composite q satisfies b**q = b (mod q)."""
    _require_composite(q)
    r = b % q
    return pow(r, q, q) == r


def is_fermat_pseudoprime(q: int, b: int) -> bool:
    """True iff composite q satisfies b**(q-1) = 1 (mod q)."""
    _require_composite(q)
    return pow(b % q, q - 1, q) == 1


def primary_pretender_oracle(b: int) -> int:
    """Least composite q with b**q = b (mod q), by direct search.

    Ground truth for the fast classifier; always returns a value
    <= UNIVERSAL_PRETENDER.
    """
    for q in _sieve().composites:
        r = b % q
        if pow(r, q, q) == r:
            return q
    raise AssertionError("unreachable: 561 pretends to every base")


def pretender_profile(b: int, limit: int = UNIVERSAL_PRETENDER) -> list[int]:
    """All composite q <= limit with b**q = b (mod q), in increasing order."""
    if limit < 4:
        return []
    sieve = _sieve() if limit <= UNIVERSAL_PRETENDER else sieve_and_factor(limit)
    out = []
    for q in sieve.composites:
        if q > limit:
            break
        r = b % q
        if pow(r, q, q) == r:
            out.append(q)
    return out
