"""Integer and prime utilities: sieves, factorization, arithmetic functions.

Everything here is a pure function of its arguments. Sieves are immutable
once built and can be shared.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

SIEVE_LIMIT_MAX = 10**8
FACTORIZE_MAX = 10**12


class BoundsError(ValueError):
    """An argument is outside the supported (resource-guarded) range."""


@dataclass(frozen=True)
class PrimeSieve:
    """Eratosthenes sieve of ``[0, limit]``.

    ``is_prime`` is a boolean array of length ``limit + 1`` and ``primes``
    the ascending array of primes up to ``limit``.
    """

    limit: int
    is_prime: np.ndarray = field(repr=False)
    primes: np.ndarray = field(repr=False)

    def __contains__(self, n: int) -> bool:
        if n < 0 or n > self.limit:
            raise BoundsError(f"{n} outside sieve range [0, {self.limit}]")
        return bool(self.is_prime[n])

    def count(self, x: int) -> int:
        """pi(x) for 0 <= x <= limit."""
        if x > self.limit:
            raise BoundsError(f"{x} exceeds sieve limit {self.limit}")
        if x < 2:
            return 0
        return int(np.searchsorted(self.primes, x, side="right"))

    def primes_between(self, lo: int, hi: int) -> np.ndarray:
        """Primes p with lo <= p <= hi."""
        i = np.searchsorted(self.primes, lo, side="left")
        j = np.searchsorted(self.primes, hi, side="right")
        return self.primes[i:j]


def sieve(limit: int) -> PrimeSieve:
    if limit < 2 or limit > SIEVE_LIMIT_MAX:
        raise BoundsError(f"sieve limit must be in [2, {SIEVE_LIMIT_MAX}], got {limit}")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for i in range(3, math.isqrt(limit) + 1, 2):
        if flags[i]:
            flags[i * i :: 2 * i] = False
    flags.setflags(write=False)
    primes = np.flatnonzero(flags).astype(np.int64)
    primes.setflags(write=False)
    return PrimeSieve(limit, flags, primes)


@lru_cache(maxsize=16)
def cached_sieve(limit: int) -> PrimeSieve:
    return sieve(limit)


def _base_primes(bound: int) -> np.ndarray:
    # grow in powers of two so the cache stays small
    size = 1 << max(10, (bound - 1).bit_length())
    return cached_sieve(min(size, SIEVE_LIMIT_MAX)).primes_between(2, bound)


@lru_cache(maxsize=None)
def _trial_primes_list(size: int) -> list[int]:
    return cached_sieve(size).primes.tolist()


def _trial_primes(bound: int) -> list[int]:
    # a superset of the primes <= bound, as a plain list for fast iteration
    if bound < 1 << 10:
        return _trial_primes_list(1 << 10)
    return _trial_primes_list(1 << 20)


def segment_is_prime(lo: int, hi: int) -> np.ndarray:
    """Primality flags for the integers ``lo..hi`` (segmented sieve)."""
    if lo < 0 or hi > 10**13 or hi < lo:
        raise BoundsError(f"bad segment [{lo}, {hi}]")
    flags = np.ones(hi - lo + 1, dtype=bool)
    for n in range(lo, min(hi, 1) + 1):
        flags[n - lo] = False
    for q in _base_primes(math.isqrt(hi)).tolist():
        start = max(q * q, (lo + q - 1) // q * q)
        if start <= hi:
            flags[start - lo :: q] = False
    return flags


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    if n <= (1 << 20):
        return bool(cached_sieve(1 << 20).is_prime[n])
    return factorize(n) == [(n, 1)]


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n`` as ascending ``(prime, exponent)`` pairs.

    Trial division by sieved primes; ``n`` is limited to ``10**12``.
    """
    if n < 1 or n > FACTORIZE_MAX:
        raise BoundsError(f"factorize needs 1 <= n <= {FACTORIZE_MAX}, got {n}")
    pairs = []
    r = math.isqrt(n)
    for q in _trial_primes(r):
        if q > r:
            break
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            pairs.append((q, e))
            r = math.isqrt(n)
    if n > 1:
        pairs.append((n, 1))
    return pairs


def prime_factors(n: int) -> list[int]:
    return [q for q, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorize(n):
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` if ``n == p**k`` with k >= 1, else None."""
    if n < 2:
        return None
    fac = factorize(n)
    return fac[0] if len(fac) == 1 else None


def von_mangoldt(n: int) -> float:
    """Lambda(n): log p when n is a power of the prime p, otherwise 0."""
    pk = prime_power(n)
    return math.log(pk[0]) if pk else 0.0


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius needs n >= 1")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    phi = n
    for q, _ in factorize(n):
        phi -= phi // q
    return phi


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    _check_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@lru_cache(maxsize=4096)
def _smallest_nonresidue(p: int) -> int:
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    return z


def sqrt_mod(a: int, p: int) -> int | None:
    """Square root of ``a`` modulo the odd prime ``p`` (Tonelli-Shanks).

    Returns the smaller of the two roots, or None when ``a`` is a
    non-residue.
    """
    _check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        c = pow(_smallest_nonresidue(p), q, p)
        r = pow(a, (q + 1) // 2, p)
        t = pow(a, q, p)
        m = s
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            r = r * b % p
            c = b * b % p
            t = t * c % p
            m = i
    return min(r, p - r)


def iter_primes(lo: int, hi: int) -> Iterator[int]:
    """Ascending primes in ``[lo, hi]``."""
    if hi < 2:
        return
    if hi <= 1 << 24:
        yield from _base_primes(hi)[np.searchsorted(_base_primes(hi), lo) :].tolist()
    else:
        lo = max(lo, 0)
        flags = segment_is_prime(lo, hi)
        yield from (lo + np.flatnonzero(flags)).tolist()


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n) for odd n > 0
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
