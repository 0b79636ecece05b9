import cmath
import math

import pytest
from hypothesis import given, strategies as st

from koblitz import characters as ch
from koblitz.curve import CurveSpec
from koblitz.numtheory import euler_phi, factorize, iter_primes


def test_unit_angle_algebra():
    u = ch.UnitAngle(1, 6)
    assert (u**6).is_one()
    assert u.order() == 6
    assert (u * u.conjugate()).is_one()
    assert (ch.UnitAngle(1, 2) * ch.UnitAngle(1, 3)) == ch.UnitAngle(5, 6)
    assert u.value() == pytest.approx(cmath.exp(1j * math.pi / 3))


def test_root_sum():
    assert ch.root_sum(ch.UnitAngle(k, 5) for k in range(5)) == 0
    assert ch.root_sum(ch.UnitAngle(k, 5) for k in range(1, 5)) == -1
    with pytest.raises(ValueError):
        ch.root_sum([ch.UnitAngle(1, 4)])


@given(st.integers(1, 200), st.integers(-500, 500))
def test_ramanujan_against_floats(n, k):
    s = sum(cmath.exp(2j * math.pi * m * k / n) for m in range(n) if math.gcd(m, n) == 1)
    assert ch.ramanujan_sum(n, k) == pytest.approx(s.real, abs=1e-7)


def test_geometric_sums():
    for n in iter_primes(2, 200):
        for k in range(1, n):
            assert ch.geometric_sum_check(n, k) == (-1, -1)


def cyclic(spec, p):
    E = spec.reduce(p)
    pts = E.points()
    n = len(pts)
    T = ch.find_primitive_point(E, n)
    return E, pts, n, T


def test_log_table_and_character():
    E, pts, n, T = cyclic(CurveSpec(0, 2), 13)  # n = 19
    table = ch.build_log_table(E, T, n)
    for P in pts:
        for Q in pts:
            # chi is a homomorphism
            assert ch.character(table, E.add(P, Q)) == ch.character(table, P) * ch.character(table, Q)
        assert table.point(table.log(P)) == P


def test_non_cyclic_has_no_primitive_point():
    # y^2 = x^3 - x mod 5 is Z/2 x Z/4
    E = CurveSpec(-1, 0).reduce(5)
    assert ch.find_primitive_point(E, 8) is None


def test_psi_forms_exhaustive_small():
    # x^3 - x splits mod every p, so y^2 = x^3 - x is never cyclic; use Z/12 instead
    assert cyclic(CurveSpec(-1, 0), 7)[3] is None
    E, pts, n, T = cyclic(CurveSpec(0, 1), 11)
    assert n == 12
    table = ch.build_log_table(E, T, n)
    fac = factorize(n)
    vals = []
    for P in pts:
        lit = ch.psi_divisor(table, P, fac, literal=True)
        assert lit == ch.psi_divisor(table, P, fac)
        assert lit == ch.psi_divisor_free(table, P) == ch.psi_divisor_free(table, P, literal=True)
        assert lit == int(E.point_order(P, n) == n)
        vals.append(lit)
    assert sum(vals) == euler_phi(n)


def test_sweep_small():
    sw = ch.psi_equivalence_sweep(17)
    assert sw.mismatches == []
    assert sw.cyclic_curves > 0
