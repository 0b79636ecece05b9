from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from koblitz import curve as C
from koblitz.numtheory import iter_primes


def test_parse_roundtrip():
    s = C.CurveSpec.parse("-1,0#congruent")
    assert (s.a, s.b, s.label) == (-1, 0, "congruent")
    assert C.CurveSpec.parse(str(s)) == s
    with pytest.raises(ValueError):
        C.CurveSpec.parse("1;2")


def test_invariants():
    assert C.CurveSpec(0, 2).discriminant == -1728
    assert C.CurveSpec(-1, 0).discriminant == 64
    assert C.CurveSpec(0, 2).j_invariant == 0
    assert C.CurveSpec(-1, 0).j_invariant == 1728
    # j = 1728 * 4a^3 / (4a^3 + 27b^2)
    s = C.CurveSpec(6, -2)
    assert s.j_invariant == Fraction(1728 * 4 * 216, 4 * 216 + 27 * 4)


def test_reduce_errors():
    s = C.CurveSpec(0, 2)
    with pytest.raises(C.UnsupportedCharacteristicError):
        s.reduce(3)
    with pytest.raises(C.BadReductionError):
        C.CurveSpec(-3, 2).reduce(5)  # disc = -16 * 0


def test_group_law_examples():
    E = C.CurveSpec(-1, 0).reduce(5)
    assert E.add((0, 0), (1, 0)) == (4, 0)
    assert E.add((0, 0), (0, 0)) is None
    assert E.lift_x(2) == [(2, 1), (2, 4)]
    assert len(C.CurveSpec(0, 2).reduce(5).points()) == 6
    with pytest.raises(C.NotOnCurveError):
        E.add((1, 1), (0, 0))


def test_rational_point_reduction():
    E = C.CurveSpec(0, 2).reduce(13)
    assert C.reduce_rational_point(E, (-1, 1)) == (12, 1)
    assert C.reduce_rational_point(E, (Fraction(1, 13), 1)) is None


small = st.sampled_from(list(iter_primes(5, 61)))


@st.composite
def curve_and_points(draw):
    p = draw(small)
    a, b = draw(st.integers(0, p - 1)), draw(st.integers(0, p - 1))
    s = C.CurveSpec(a, b)
    if not s.has_good_reduction(p):
        s = C.CurveSpec(a, b + 1)
    if not s.has_good_reduction(p):
        s = C.CurveSpec(1, 1) if C.CurveSpec(1, 1).has_good_reduction(p) else C.CurveSpec(2, 1)
    E = s.reduce(p)
    pts = E.points()
    pick = st.sampled_from(pts)
    return E, draw(pick), draw(pick), draw(pick)


@given(curve_and_points())
def test_group_axioms(data):
    E, P, Q, R = data
    assert E.add(P, Q) == E.add(Q, P)
    assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
    assert E.add(P, E.neg(P)) is None
    assert E.add(P, None) == P
    assert E.contains(E.add(P, Q))


@given(curve_and_points(), st.integers(-200, 200), st.integers(-200, 200))
def test_scalar_mul(data, j, k):
    E, P, _, _ = data
    assert E.add(E.mul(j, P), E.mul(k, P)) == E.mul(j + k, P)
    n = len(E.points())
    assert E.mul(n, P) is None
    assert n % E.point_order(P, n) == 0
