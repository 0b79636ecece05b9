"""Division polynomials evaluated at points of E(F_p), and primitive-point tests.

psi_m is split as psi_m = f_m for odd m and psi_m = 2y f_m for even m, where
f_m is a polynomial in x once y^2 is replaced by x^3 + ax + b. Working with
f_m keeps the even-index recurrence free of the division by 2y, so 2-torsion
points (y = 0) need no special casing.
"""
from __future__ import annotations

from .curve import O, Point, ReducedCurve

PSI_MAX_INDEX = 10**4


class PsiEvaluator:
    """Memoized psi_m(P) for one point P on one curve."""

    def __init__(self, curve: ReducedCurve, P: Point):
        if P is None:
            raise ValueError("division polynomials are not evaluated at the identity")
        curve._check(P)
        self.curve = curve
        self.point = P
        p, a, b = curve.p, curve.a, curve.b
        x, y = P
        self._F = 4 * curve.rhs(x) % p  # (2y)^2
        x2 = x * x % p
        x3 = x2 * x % p
        x4 = x2 * x2 % p
        x6 = x3 * x3 % p
        self._f = {
            0: 0,
            1: 1,
            2: 1,
            3: (3 * x4 + 6 * a * x2 + 12 * b * x - a * a) % p,
            4: 2 * (x6 + 5 * a * x4 + 20 * b * x3 - 5 * a * a * x2 - 4 * a * b * x - 8 * b * b - a**3) % p,
        }

    def _fm(self, m: int) -> int:
        f = self._f
        if m in f:
            return f[m]
        # iterative post-order over the O(log m) indices the recurrence needs
        stack = [m]
        while stack:
            n = stack[-1]
            k = n // 2
            deps = (k - 2, k - 1, k, k + 1, k + 2) if n % 2 == 0 else (k - 1, k, k + 1, k + 2)
            missing = [d for d in deps if d not in f]
            if missing:
                stack.extend(missing)
                continue
            stack.pop()
            p, F = self.curve.p, self._F
            if n % 2:
                # psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3
                u = f[k + 2] * pow(f[k], 3, p)
                v = f[k - 1] * pow(f[k + 1], 3, p)
                if k % 2 == 0:
                    u = u * F % p * F
                else:
                    v = v * F % p * F
                f[n] = (u - v) % p
            else:
                # psi_{2k} = psi_k / (2y) * (psi_{k+2} psi_{k-1}^2 - psi_{k-2} psi_{k+1}^2)
                f[n] = f[k] * (f[k + 2] * f[k - 1] ** 2 - f[k - 2] * f[k + 1] ** 2) % p
        return f[m]

    def __call__(self, m: int) -> int:
        if m < 1 or m > PSI_MAX_INDEX:
            raise ValueError(f"psi index must be in [1, {PSI_MAX_INDEX}], got {m}")
        v = self._fm(m)
        if m % 2 == 0:
            v = 2 * self.point[1] * v
        return v % self.curve.p


def psi_eval(curve: ReducedCurve, P: Point, m: int) -> int:
    """psi_m(P) mod p."""
    return PsiEvaluator(curve, P)(m)


def primitive_test_lucas(curve: ReducedCurve, P: Point, n: int, fac: list[tuple[int, int]]) -> bool:
    """True iff (n/q) P != O for every prime q dividing n."""
    if P is O:
        return n == 1
    curve._check(P)
    return all(curve._mul(n // q, P) is not None for q, _ in fac)


def primitive_test_psi(curve: ReducedCurve, P: Point, n: int, fac: list[tuple[int, int]]) -> bool:
    """True iff psi_{n/q}(P) != 0 for every prime q dividing n."""
    psi = PsiEvaluator(curve, P)
    return all(psi(n // q) != 0 for q, _ in fac)
