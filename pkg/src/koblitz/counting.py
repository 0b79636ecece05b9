"""Group orders #E(F_p): character-sum counting and baby-step/giant-step."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .curve import CurveSpec, ReducedCurve
from .numtheory import BoundsError

NAIVE_MAX_P = 10**7
# scans count with order_naive up to here, BSGS above
NAIVE_THRESHOLD = 10**4
BSGS_MAX_POINTS = 8


@dataclass(frozen=True)
class HasseInterval:
    """Integer endpoints of the range holding #E(F_p).

    ``lo``/``hi`` are centred at p + 1 (true group orders);
    ``literal_lo``/``literal_hi`` are the p-centred range
    p - 2 sqrt(p) <= n <= p + 2 sqrt(p) used by the prime-weighted measures.
    """

    p: int
    lo: int
    hi: int
    literal_lo: int
    literal_hi: int

    @property
    def width(self) -> int:
        return self.hi - self.lo

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi


def hasse_interval(p: int) -> HasseInterval:
    r = math.isqrt(4 * p)  # floor(2 sqrt p), exactly
    return HasseInterval(p, p + 1 - r, p + 1 + r, p - r, p + r)


def _square_counts(p: int) -> np.ndarray:
    # number of y in F_p with y^2 = v, for each v
    y = np.arange(p, dtype=np.int64)
    return np.bincount(y * y % p, minlength=p)


def order_naive(curve: ReducedCurve) -> int:
    """#E(F_p) = 1 + sum over x of #{y : y^2 = x^3 + ax + b}."""
    p = curve.p
    if p > NAIVE_MAX_P:
        raise BoundsError(f"order_naive limited to p <= {NAIVE_MAX_P}")
    x = np.arange(p, dtype=np.int64)
    f = (x * x % p * x + curve.a * x + curve.b) % p
    return 1 + int(_square_counts(p)[f].sum())


def nonsingular_count(spec: CurveSpec, p: int) -> int:
    """Points (with O) on the nonsingular locus of y^2 = x^3 + ax + b mod p.

    Works for every prime p, including 2, 3 and primes of bad reduction.
    """
    a, b = spec.a % p, spec.b % p
    if p == 2:
        return 1 + sum(
            1
            for x in range(2)
            for y in range(2)
            if (y * y - x**3 - a * x - b) % 2 == 0 and (3 * x * x + a) % 2
        )
    x = np.arange(p, dtype=np.int64)
    f = (x * x % p * x + a * x + b) % p
    df = (3 * (x * x % p) + a) % p
    singular = int(np.count_nonzero((f == 0) & (df == 0)))
    return 1 + int(_square_counts(p)[f].sum()) - singular


def _annihilating_orders(curve: ReducedCurve, P, lo: int, hi: int) -> set[int]:
    """All N in [lo, hi] with N P = O, by baby-step/giant-step."""
    width = hi - lo
    m = math.isqrt(width) + 1
    baby: dict = {}
    R = None
    for j in range(m):
        if R in baby:
            # P has order j < m; its multiples are the answer
            r = j - baby[R]
            return set(range(-(-lo // r) * r, hi + 1, r))
        baby[R] = j
        R = curve._add(R, P)
    giant = curve._mul(m, P)
    Q = curve._mul(lo, P)
    found = set()
    for i in range(width // m + 1):
        # (lo + i m) P + j P = O  <=>  j P = -Q
        j = baby.get(curve.neg(Q))
        if j is not None:
            N = lo + i * m + j
            if N <= hi:
                found.add(N)
        Q = curve._add(Q, giant)
    return found


def _random_point(curve: ReducedCurve, rng: random.Random):
    while True:
        pts = curve.lift_x(rng.randrange(curve.p))
        if pts:
            return rng.choice(pts)


def order_bsgs(curve: ReducedCurve, seed: int = 0) -> int:
    """#E(F_p) from Hasse-interval candidates shared by random points.

    Falls back to :func:`order_naive` if the candidates stay ambiguous.
    """
    iv = hasse_interval(curve.p)
    rng = random.Random(seed * 1_000_003 + curve.p)
    cands: set[int] | None = None
    for _ in range(BSGS_MAX_POINTS):
        P = _random_point(curve, rng)
        found = _annihilating_orders(curve, P, iv.lo, iv.hi)
        cands = found if cands is None else cands & found
        if len(cands) == 1:
            return cands.pop()
    return order_naive(curve)


def group_order(curve: ReducedCurve) -> int:
    if curve.p <= NAIVE_THRESHOLD:
        return order_naive(curve)
    return order_bsgs(curve)


def trace(curve: ReducedCurve, n: int | None = None) -> int:
    """Frobenius trace a_p = p + 1 - #E(F_p)."""
    if n is None:
        n = group_order(curve)
    return curve.p + 1 - n
