"""
Counting points on y^2 = x^3 + 2
================================

Reduce a curve modulo a few primes, count its points two ways and watch the
trace of Frobenius stay inside the Hasse bound.
"""
import math

from koblitz.counting import hasse_interval, order_bsgs, order_naive
from koblitz.curve import CurveSpec

E = CurveSpec.parse("0,2")
print("discriminant", E.discriminant, "j =", E.j_invariant)

# small primes: enumerate and add points by hand
E13 = E.reduce(13)
pts = E13.points()
print(len(pts), "points mod 13, e.g.", pts[1:4])
P = (12, 1)
print("2P =", E13.mul(2, P), " 19P =", E13.mul(19, P))

# larger primes: Legendre-symbol counting against baby-step giant-step
for p in (877, 10007, 99991, 1000003):
    Ep = E.reduce(p)
    n = order_bsgs(Ep)
    iv = hasse_interval(p)
    check = "" if p > 10**5 else f" (naive {order_naive(Ep)})"
    print(f"p={p:>8} #E={n:>8}{check}  a_p={p + 1 - n:>5}  |a_p|/2sqrt(p)={abs(p + 1 - n) / (2 * math.sqrt(p)):.3f}  in [{iv.lo}, {iv.hi}]")
