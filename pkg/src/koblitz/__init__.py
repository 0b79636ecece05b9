"""Elliptic curves over prime fields, Koblitz primes and their densities.

Submodules:

* :mod:`koblitz.numtheory`  sieves, factoring, Legendre symbols, square roots
* :mod:`koblitz.curve`      short Weierstrass curves and the affine group law
* :mod:`koblitz.counting`   #E(F_p) by Legendre sums or baby-step giant-step
* :mod:`koblitz.divpoly`    division polynomials and primitive-point tests
* :mod:`koblitz.characters` discrete logs, elliptic characters, Psi_E
* :mod:`koblitz.measures`   von Mangoldt interval sums and Hasse measures
* :mod:`koblitz.scan`       Koblitz-prime scans, caches, tables, L-series
* :mod:`koblitz.densities`  Euler-product constants and predicted counts
"""
from .counting import group_order, hasse_interval, order_bsgs, order_naive, trace
from .curve import CurveSpec, ReducedCurve
from .densities import DensityResult, delta_cm_quartic, delta_serre, koblitz_constant, predicted_count
from .numtheory import BoundsError
from .scan import ScanCache, count_koblitz, koblitz_primes, reproduce_table

__version__ = "0.1.0"

__all__ = [
    "BoundsError",
    "CurveSpec",
    "DensityResult",
    "ReducedCurve",
    "ScanCache",
    "count_koblitz",
    "delta_cm_quartic",
    "delta_serre",
    "group_order",
    "hasse_interval",
    "koblitz_constant",
    "koblitz_primes",
    "order_bsgs",
    "order_naive",
    "predicted_count",
    "reproduce_table",
    "trace",
]
