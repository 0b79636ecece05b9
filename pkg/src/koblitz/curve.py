"""Short Weierstrass curves y^2 = x^3 + a x + b over Q and over F_p.

Points of a reduced curve are plain tuples ``(x, y)`` of residues; the point
at infinity is ``None`` (exported as :data:`O`).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .numtheory import BoundsError, factorize, is_prime, sqrt_mod

Point = Optional[Tuple[int, int]]
O: Point = None

ENUMERATE_MAX_P = 10**4


class BadReductionError(ValueError):
    """The prime divides the discriminant, so the reduction is singular."""


class UnsupportedCharacteristicError(ValueError):
    """Characteristic 2 or 3; the short Weierstrass group law is not used there."""


class NotOnCurveError(ValueError):
    pass


class InconsistentOrderError(ValueError):
    """The supplied group order does not annihilate the point."""


@dataclass(frozen=True)
class CurveSpec:
    a: int
    b: int
    label: str | None = None

    @classmethod
    def parse(cls, text: str) -> "CurveSpec":
        """Parse ``"a,b"`` or ``"a,b#label"``."""
        m = re.fullmatch(r"\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:#(.+))?", text)
        if not m:
            raise ValueError(f"curve must look like 'a,b' or 'a,b#label', got {text!r}")
        return cls(int(m[1]), int(m[2]), m[3])

    def __str__(self) -> str:
        s = f"{self.a},{self.b}"
        return f"{s}#{self.label}" if self.label else s

    @property
    def discriminant(self) -> int:
        return discriminant(self)

    @property
    def j_invariant(self) -> Fraction:
        return j_invariant(self)

    def is_singular(self) -> bool:
        return self.discriminant == 0

    def has_good_reduction(self, p: int) -> bool:
        return self.discriminant % p != 0

    def reduce(self, p: int) -> "ReducedCurve":
        return reduce(self, p)


def discriminant(spec: CurveSpec) -> int:
    return -16 * (4 * spec.a**3 + 27 * spec.b**2)


def j_invariant(spec: CurveSpec) -> Fraction:
    """c4^3 / disc with c4 = -48 a."""
    disc = discriminant(spec)
    if disc == 0:
        raise ValueError(f"curve {spec} is singular")
    return Fraction((-48 * spec.a) ** 3, disc)


def reduce(spec: CurveSpec, p: int) -> "ReducedCurve":
    if p in (2, 3):
        raise UnsupportedCharacteristicError(f"characteristic {p} is not supported")
    if p < 5 or not is_prime(p):
        raise ValueError(f"{p} is not a prime >= 5")
    if discriminant(spec) % p == 0:
        raise BadReductionError(f"bad reduction: {p} divides the discriminant {discriminant(spec)}")
    return ReducedCurve(spec.a % p, spec.b % p, p)


@dataclass(frozen=True)
class ReducedCurve:
    """E(F_p) for a prime p >= 5 of good reduction."""

    a: int
    b: int
    p: int

    def rhs(self, x: int) -> int:
        p = self.p
        return (x * x % p * x + self.a * x + self.b) % p

    def contains(self, P: Point) -> bool:
        if P is None:
            return True
        x, y = P
        return 0 <= x < self.p and 0 <= y < self.p and (y * y - self.rhs(x)) % self.p == 0

    def _check(self, P: Point) -> None:
        if not self.contains(P):
            raise NotOnCurveError(f"{P} is not on y^2 = x^3 + {self.a}x + {self.b} mod {self.p}")

    def neg(self, P: Point) -> Point:
        if P is None:
            return None
        return (P[0], -P[1] % self.p)

    def _add(self, P: Point, Q: Point) -> Point:
        # unchecked chord-tangent addition
        if P is None:
            return Q
        if Q is None:
            return P
        p = self.p
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return None
            lam = (3 * x1 * x1 + self.a) * pow(2 * y1, -1, p) % p
        else:
            lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (lam * lam - x1 - x2) % p
        return (x3, (lam * (x1 - x3) - y1) % p)

    def add(self, P: Point, Q: Point) -> Point:
        self._check(P)
        self._check(Q)
        return self._add(P, Q)

    def _mul(self, k: int, P: Point) -> Point:
        R: Point = None
        while k:
            if k & 1:
                R = self._add(R, P)
            P = self._add(P, P)
            k >>= 1
        return R

    def mul(self, k: int, P: Point) -> Point:
        """k P by double-and-add; negative k multiplies -P."""
        self._check(P)
        if k < 0:
            return self._mul(-k, self.neg(P))
        return self._mul(k, P)

    def point_order(self, P: Point, n: int, fac: list[tuple[int, int]] | None = None) -> int:
        """Order of ``P`` given a multiple ``n`` of it (e.g. the group order)."""
        self._check(P)
        if self._mul(n, P) is not None:
            raise InconsistentOrderError(f"{n} P != O for P = {P}")
        d = n
        for q, _ in fac if fac is not None else factorize(n):
            while d % q == 0 and self._mul(d // q, P) is None:
                d //= q
        return d

    def lift_x(self, x: int) -> list[Point]:
        """All points with abscissa ``x``, smaller y first."""
        x %= self.p
        y = sqrt_mod(self.rhs(x), self.p)
        if y is None:
            return []
        if y == 0:
            return [(x, 0)]
        return [(x, y), (x, self.p - y)]

    def points(self) -> list[Point]:
        """Every point of E(F_p), identity first, then by (x, y)."""
        if self.p > ENUMERATE_MAX_P:
            raise BoundsError(f"enumeration limited to p <= {ENUMERATE_MAX_P}")
        pts: list[Point] = [None]
        for x in range(self.p):
            pts.extend(self.lift_x(x))
        return pts

    def __str__(self) -> str:
        return f"y^2 = x^3 + {self.a}x + {self.b} over F_{self.p}"


# module-level spellings of the group operations
def add(curve: ReducedCurve, P: Point, Q: Point) -> Point:
    return curve.add(P, Q)


def scalar_mul(curve: ReducedCurve, k: int, P: Point) -> Point:
    return curve.mul(k, P)


def point_order(curve: ReducedCurve, P: Point, n: int, fac=None) -> int:
    return curve.point_order(P, n, fac)


def lift_x(curve: ReducedCurve, x: int) -> list[Point]:
    return curve.lift_x(x)


def enumerate_points(curve: ReducedCurve) -> list[Point]:
    return curve.points()


def reduce_rational_point(curve: ReducedCurve, P) -> Point:
    """Reduce a point with rational coordinates (or None) modulo p."""
    if P is None:
        return None
    p = curve.p
    coords = []
    for c in P:
        c = Fraction(c)
        if c.denominator % p == 0:
            # the point reduces to the identity
            return None
        coords.append(c.numerator * pow(c.denominator, -1, p) % p)
    pt = (coords[0], coords[1])
    curve._check(pt)
    return pt
