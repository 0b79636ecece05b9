"""Euler-product density constants and predicted counting integrals.

Each product factor is formed as an exact rational, converted to float
once, and accumulated in log space with ``math.fsum``. Every result carries
a rigorous bound on the omitted tail p > cutoff.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from scipy import integrate

from .numtheory import BoundsError, iter_primes, prime_factors

CUTOFF_MIN = 100
CUTOFF_MAX = 10**8


@dataclass(frozen=True)
class DensityResult:
    value: float
    prime_cutoff: int
    tail_bound: float  # |value - limit| <= tail_bound
    prefactor: Fraction = Fraction(1)  # exact rational multiplier applied to the product
    product: float = 0.0  # the truncated Euler product before the prefactor

    def __str__(self) -> str:
        return f"{self.value:.12g} (cutoff {self.prime_cutoff}, tail <= {self.tail_bound:.3g})"


def _check_cutoff(cutoff: int) -> None:
    if cutoff < CUTOFF_MIN or cutoff > CUTOFF_MAX:
        raise BoundsError(f"cutoff must be in [{CUTOFF_MIN}, {CUTOFF_MAX}]")


def koblitz_factor(p: int) -> Fraction:
    """1 - (p^2 - p - 1) / ((p - 1)^3 (p + 1))."""
    return 1 - Fraction(p * p - p - 1, (p - 1) ** 3 * (p + 1))


def _log_product(terms) -> float:
    # terms are u_p with factor 1 + u_p, exact rationals
    return math.fsum(math.log1p(float(u)) for u in terms)


def _tail(value: float, log_tail: float) -> float:
    # |exp(t) - 1| <= exp(|t|) - 1
    return abs(value) * math.expm1(log_tail)


def koblitz_constant(cutoff: int = 10**6) -> DensityResult:
    """Truncated product over p <= cutoff of 1 - (p^2-p-1)/((p-1)^3 (p+1)).

    For p >= 5 the subtracted term u_p satisfies 0 < u_p <= 2/p^2, hence
    |log(1 - u_p)| <= u_p / (1 - u_p) <= 2.2/p^2, and the tail is at most
    2.2 * sum_{n > cutoff} 1/n^2 < 2.2/cutoff in log space.
    """
    _check_cutoff(cutoff)
    logp = _log_product(koblitz_factor(p) - 1 for p in iter_primes(2, cutoff))
    value = math.exp(logp)
    return DensityResult(value, cutoff, _tail(value, 2.2 / cutoff), Fraction(1), value)


def serre_prefactor(D: int) -> Fraction:
    """1 + prod_{q | D} 1/(q^3 - 2q^2 - q + 3) if D = 1 mod 4; 1 if D = 0 mod 4."""
    if D == 0:
        raise ValueError("D must be nonzero")
    r = D % 4
    if r == 0:
        return Fraction(1)
    if r != 1:
        raise ValueError(f"D = {D} is neither 0 nor 1 mod 4")
    prod = Fraction(1)
    for q in prime_factors(abs(D)):
        prod /= q**3 - 2 * q**2 - q + 3
    return 1 + prod


def delta_serre(D: int, cutoff: int = 10**6) -> DensityResult:
    """Density of prime orders for a Serre curve with d_E = 1."""
    pre = serre_prefactor(D)
    base = koblitz_constant(cutoff)
    value = float(pre) * base.value
    return DensityResult(value, cutoff, float(pre) * base.tail_bound, pre, base.value)


def _chi4(p: int) -> int:
    # (-1)^((p-1)/2) for odd p
    return 1 if p % 4 == 1 else -1


def cm_quartic_factor(p: int) -> Fraction:
    """1 - chi(p) (p^2 - p - 1) / ((p - chi(p)) (p - 1)^2) with chi(p) = (-1)^((p-1)/2)."""
    c = _chi4(p)
    return 1 - c * Fraction(p * p - p - 1, (p - c) * (p - 1) ** 2)


def delta_cm_quartic(cutoff: int = 10**6, accelerate: bool = True) -> DensityResult:
    """(1/2) prod_{3 <= p} cm_quartic_factor(p), truncated at ``cutoff``.

    The factors are 1 - chi(p)/p + O(1/p^2), so the plain product converges
    only conditionally. With ``accelerate`` each factor is divided by
    (1 - chi(p)/p) and the quotient product is multiplied by
    prod_p (1 - chi(p)/p) = 1/L(1, chi) = 4/pi. The remaining factors are
    1 + h_p with |h_p| <= 3/p^2 for p >= 5, so the log tail is below
    3.2/cutoff. Without ``accelerate`` the raw partial product is returned
    and its tail bound is |raw - accelerated| + accelerated tail.
    """
    _check_cutoff(cutoff)
    primes = list(iter_primes(3, cutoff))
    if accelerate:
        logp = _log_product(cm_quartic_factor(p) / (1 - Fraction(_chi4(p), p)) - 1 for p in primes)
        prod = math.exp(logp) * 4 / math.pi
        value = prod / 2
        return DensityResult(value, cutoff, _tail(value, 3.2 / cutoff), Fraction(1, 2), prod)
    prod = math.exp(_log_product(cm_quartic_factor(p) - 1 for p in primes))
    acc = delta_cm_quartic(cutoff, True)
    value = prod / 2
    return DensityResult(value, cutoff, abs(value - acc.value) + acc.tail_bound, Fraction(1, 2), prod)


QUAD_RTOL = 1e-8


def predicted_count(x: float, delta: float, d: int = 1, x0: float = 2.0, rtol: float = QUAD_RTOL) -> float:
    """delta * integral_{x0}^{x} dt / ((log(t+1) - log d) log t)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if x0 < 2 or x0 + 1 <= d:
        raise ValueError(f"integrand singular: need x0 >= 2 and x0 + 1 > d (x0={x0}, d={d})")
    if x < x0:
        raise ValueError("need x >= x0")
    if x == x0:
        return 0.0
    logd = math.log(d)

    # substitute t = e^s to tame the long range
    def f(s: float) -> float:
        t = math.exp(s)
        return t / ((math.log1p(t) - logd) * s)

    val, _ = integrate.quad(f, math.log(x0), math.log(x), epsabs=0.0, epsrel=rtol, limit=500)
    return delta * val


def predicted_count_literal(x: float, delta: float, x0: float = 2.0, rtol: float = QUAD_RTOL) -> float:
    """delta * integral_{x0}^{x} dt / (t log(t+1)), the form with a 1/t measure."""
    if x0 <= 0 or x < x0:
        raise ValueError("need 0 < x0 <= x")

    def f(s: float) -> float:
        return 1.0 / math.log1p(math.exp(s))

    val, _ = integrate.quad(f, math.log(x0), math.log(x), epsabs=0.0, epsrel=rtol, limit=500)
    return delta * val
