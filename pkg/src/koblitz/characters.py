"""Discrete logarithms on cyclic E(F_p) and the additive elliptic character.

Character values are roots of unity e^{2 pi i k/n}. They are carried as
:class:`UnitAngle` objects, so every identity below is checked with integer
arithmetic only. Floating point is used only by :meth:`UnitAngle.value`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

from .curve import Point, ReducedCurve
from .divpoly import primitive_test_lucas
from .numtheory import euler_phi, factorize, is_prime, moebius

LOG_TABLE_MAX = 10**6


@dataclass(frozen=True)
class UnitAngle:
    """The root of unity e^{2 pi i k/n}, with k reduced mod n."""

    k: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "k", self.k % self.n)

    def __mul__(self, other: "UnitAngle") -> "UnitAngle":
        n = math.lcm(self.n, other.n)
        return UnitAngle(self.k * (n // self.n) + other.k * (n // other.n), n)

    def __pow__(self, e: int) -> "UnitAngle":
        return UnitAngle(self.k * e, self.n)

    def conjugate(self) -> "UnitAngle":
        return UnitAngle(-self.k, self.n)

    def is_one(self) -> bool:
        return self.k == 0

    def order(self) -> int:
        return self.n // math.gcd(self.k, self.n)

    def value(self) -> complex:
        return cmath.exp(2j * math.pi * self.k / self.n)


def root_sum(angles: Iterable[UnitAngle]) -> int:
    """Exact integer value of a sum of roots of unity.

    Supported when, for each reduced denominator d occurring, every
    primitive d-th root occurs equally often; the primitive d-th roots then
    contribute mu(d) per copy. Any other multiset raises ValueError.
    """
    counts: dict[tuple[int, int], int] = {}
    for t in angles:
        g = math.gcd(t.k, t.n)
        key = (t.k // g, t.n // g)  # reduced fraction k/n
        counts[key] = counts.get(key, 0) + 1
    total = 0
    by_den: dict[int, dict[int, int]] = {}
    for (k, d), c in counts.items():
        by_den.setdefault(d, {})[k] = c
    for d, ks in by_den.items():
        mult = set(ks.values())
        if len(ks) != euler_phi(d) or len(mult) != 1:
            raise ValueError("sum is not a union of complete root-of-unity orbits")
        total += mult.pop() * moebius(d)
    return total


@dataclass(frozen=True)
class LogTable:
    """Discrete logarithm to a primitive base point T of a cyclic E(F_p)."""

    curve: ReducedCurve
    base: Point
    n: int
    logs: dict
    points: list

    def log(self, Q: Point) -> int:
        try:
            return self.logs[Q]
        except KeyError:
            raise ValueError(f"{Q} is not a point of the group") from None

    def point(self, m: int) -> Point:
        """m T."""
        return self.points[m % self.n]


def build_log_table(curve: ReducedCurve, T: Point, n: int) -> LogTable:
    if n > LOG_TABLE_MAX:
        raise ValueError(f"log tables limited to n <= {LOG_TABLE_MAX}")
    logs = {}
    points = []
    Q = None
    for m in range(n):
        if Q in logs:
            raise ValueError(f"{T} has order {m} < {n}; not a primitive point")
        logs[Q] = m
        points.append(Q)
        Q = curve._add(Q, T)
    if Q is not None:
        raise ValueError(f"{n} T != O; {n} is not the order of {T}")
    return LogTable(curve, T, n, logs, points)


def find_primitive_point(curve: ReducedCurve, n: int, fac=None) -> Point | None:
    """First point in enumeration order whose order is n (None if E(F_p) is not cyclic)."""
    fac = factorize(n) if fac is None else fac
    if n == 1:
        return None
    for x in range(curve.p):
        for P in curve.lift_x(x):
            if primitive_test_lucas(curve, P, n, fac):
                return P
    return None


def character(table: LogTable, Q: Point) -> UnitAngle:
    """chi(Q) = e^{2 pi i log_T(Q) / n}."""
    return UnitAngle(table.log(Q), table.n)


def psi_divisor(table: LogTable, P: Point, fac=None, literal: bool = False) -> int:
    """Primitive-point indicator as a Moebius-weighted divisor sum.

    Sum over d | n of mu(d)/d * sum_{0 <= t < d} chi_d(tP), where
    chi_d(Q) = e^{2 pi i log_T(Q)/d}. With ``literal`` the inner sums are
    formed from character values; otherwise the inner sum is d exactly when
    d divides log_T(P).
    """
    n = table.n
    L = table.log(P)
    primes = [q for q, _ in (fac if fac is not None else factorize(n))]
    total = 0
    # only squarefree d have mu(d) != 0
    for mask in range(1 << len(primes)):
        d, mu = 1, 1
        for i, q in enumerate(primes):
            if mask >> i & 1:
                d *= q
                mu = -mu
        if literal:
            inner = root_sum(UnitAngle(t * L, d) for t in range(d))
        else:
            inner = d if L % d == 0 else 0
        total += mu * inner // d
    return total


def psi_divisor_free(table: LogTable, P: Point, literal: bool = False) -> int:
    """Primitive-point indicator without divisors of n.

    (1/n) sum over units m mod n of sum_{0 <= r < n} chi((mT - P) r). The
    inner sum is n when mT = P and 0 otherwise.
    """
    n = table.n
    L = table.log(P)
    if not literal:
        return int(math.gcd(L, n) == 1)
    curve = table.curve
    negP = curve.neg(P)
    total = 0
    for m in range(n):
        if math.gcd(m, n) != 1:
            continue
        Q = curve._add(table.point(m), negP)
        chi = character(table, Q)
        total += root_sum(chi ** r for r in range(n))
    assert total % n == 0
    return total // n


def ramanujan_sum(n: int, k: int) -> int:
    """c_n(k) = sum over units m mod n of e^{2 pi i m k/n}, exactly."""
    g = math.gcd(n, k)
    q = n // g
    return moebius(q) * euler_phi(n) // euler_phi(q)


def geometric_sum_check(n: int, k: int) -> tuple[int, int]:
    """Both root-of-unity sums that evaluate to -1 for prime n and n not dividing k.

    Returns ``(sum_{0<r<n} e^{-2 pi i r k/n}, sum_{gcd(m,n)=1} e^{2 pi i m k/n})``.
    """
    if not is_prime(n):
        raise ValueError(f"{n} is not prime")
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < {n}")
    full = root_sum(UnitAngle(-r * k, n) for r in range(n))
    punctured = full - 1  # drop the r = 0 term, which is 1
    units = root_sum(UnitAngle(m * k, n) for m in range(1, n) if math.gcd(m, n) == 1)
    assert units == ramanujan_sum(n, k)
    return punctured, units


@dataclass(frozen=True)
class PsiSweep:
    p_max: int
    cyclic_curves: int
    points: int
    mismatches: list  # (p, a, b, P)


def psi_equivalence_sweep(p_max: int, p_min: int = 5) -> PsiSweep:
    """Compare both Psi forms with the order test on every cyclic y^2 = x^3 + ax + b mod p.

    The order oracle is independent of discrete logs: n P = O and
    (n/q) P != O for every prime q | n, with the points enumerated directly.
    """
    from .curve import CurveSpec
    from .numtheory import iter_primes

    cyc = pts = 0
    bad = []
    for p in iter_primes(max(p_min, 5), p_max):
        for a in range(p):
            for b in range(p):
                spec = CurveSpec(a, b)
                if not spec.has_good_reduction(p):
                    continue
                curve = spec.reduce(p)
                allp = curve.points()
                n = len(allp)
                fac = factorize(n)
                T = find_primitive_point(curve, n, fac)
                if T is None:
                    continue
                cyc += 1
                table = build_log_table(curve, T, n)
                for P in allp:
                    pts += 1
                    gen = curve._mul(n, P) is None and all(curve._mul(n // q, P) is not None for q, _ in fac)
                    if not psi_divisor(table, P, fac) == psi_divisor_free(table, P) == int(gen):
                        bad.append((p, a, b, P))
    return PsiSweep(p_max, cyc, pts, bad)
