import math
from fractions import Fraction

import mpmath
import pytest
import sympy

from koblitz import densities as D
from koblitz.numtheory import BoundsError
from koblitz.reference import P0_REFERENCE


def test_factors():
    assert D.koblitz_factor(2) == Fraction(2, 3)
    assert D.cm_quartic_factor(3) == Fraction(21, 16)  # 1.3125
    assert D.cm_quartic_factor(5) == Fraction(45, 64)  # 0.703125
    assert D.serre_prefactor(-3) == Fraction(10, 9)
    assert D.serre_prefactor(-4) == 1
    with pytest.raises(ValueError):
        D.serre_prefactor(-5 * 2 + 4)  # -6 = 2 mod 4


def test_koblitz_constant_against_mpmath():
    # 30-digit product over the same primes
    mpmath.mp.dps = 30
    prod = mpmath.mpf(1)
    for p in sympy.primerange(2, 10**4 + 1):
        prod *= 1 - mpmath.mpf(p * p - p - 1) / ((p - 1) ** 3 * (p + 1))
    res = D.koblitz_constant(10**4)
    assert res.value == pytest.approx(float(prod), rel=1e-14)
    assert abs(res.value - float(P0_REFERENCE)) <= res.tail_bound


def test_cutoff_bounds():
    with pytest.raises(BoundsError):
        D.koblitz_constant(99)


def test_monotone_and_unit_interval():
    vals = [D.koblitz_constant(c).value for c in (100, 1000, 10**4, 10**5)]
    assert vals == sorted(vals, reverse=True)
    assert abs(vals[0] - float(P0_REFERENCE)) < 1e-2
    for r in (D.delta_serre(-3, 1000), D.delta_cm_quartic(1000), D.delta_cm_quartic(1000, False)):
        assert 0 < r.value < 1 and r.tail_bound >= 0


def test_serre_ratio_exact():
    r = D.delta_serre(-3, 1000)
    assert r.prefactor == Fraction(10, 9)
    assert r.value == float(Fraction(10, 9)) * D.koblitz_constant(1000).value


def test_tail_bounds_are_honest():
    far = D.koblitz_constant(10**6).value
    for c in (100, 1000, 10**4):
        r = D.koblitz_constant(c)
        assert abs(r.value - far) <= r.tail_bound
    far = D.delta_cm_quartic(10**6).value
    for c in (100, 1000, 10**4):
        for acc in (True, False):
            r = D.delta_cm_quartic(c, acc)
            assert abs(r.value - far) <= r.tail_bound


def test_predicted_count():
    assert D.predicted_count(10, 0.5, 1, 10) == 0
    with pytest.raises(ValueError):
        D.predicted_count(100, 0.5, 8, 7)
    direct = mpmath.quad(lambda t: 1 / ((mpmath.log(t + 1) - mpmath.log(8)) * mpmath.log(t)), [9, 100, 10**4, 10**6])
    assert D.predicted_count(10**6, 1.0, 8, 9) == pytest.approx(float(direct), rel=1e-8)
    tight = D.predicted_count(10**6, 1.0, 1, 2, rtol=1e-10)
    assert D.predicted_count(10**6, 1.0, 1, 2) == pytest.approx(tight, rel=1e-8)
    lit = D.predicted_count_literal(10**6, 1.0)
    assert lit == pytest.approx(float(mpmath.quad(lambda t: 1 / (mpmath.log(t + 1) * t), [2, 10**6])), rel=1e-8)
