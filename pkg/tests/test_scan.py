import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from koblitz import scan as S
from koblitz.curve import CurveSpec
from koblitz.reference import TABLES


@pytest.fixture(scope="module")
def cache02():
    return S.scan(CurveSpec(0, 2), 3000)


def test_scan_records(cache02):
    by_p = {r.p: r for r in cache02.records}
    assert 3 not in by_p and 2 not in by_p  # bad primes and p < 5
    assert by_p[877].n == 937 and by_p[877].ap == -59
    assert all(r.n + r.ap == r.p + 1 for r in cache02.records)
    assert [r.p for r in cache02.records] == list(sympy.primerange(5, 3001))


def test_koblitz_counts(cache02):
    hits = [r.p for r in S.koblitz_primes(cache02, 1000)]
    oracle = [r.p for r in cache02.upto(1000) if sympy.isprime(r.n)]
    assert hits == oracle
    assert S.count_koblitz(cache02, 1000) == 19
    assert S.count_koblitz(cache02, 4) == 0
    assert S.brun_partial_sum(cache02, 1000) == sum(Fraction(1, p) for p in oracle)


def test_incremental_scan_matches_fresh(cache02):
    partial = S.scan(CurveSpec(0, 2), 1000)
    assert S.scan(CurveSpec(0, 2), 3000, partial).records == cache02.records
    with pytest.raises(S.CoverageError):
        partial.upto(2000)
    with pytest.raises(S.CacheMismatchError):
        S.scan(CurveSpec(0, 1), 2000, partial)


def test_cache_roundtrip(tmp_path, cache02):
    path = cache02.save(tmp_path)
    assert path.name == "0_2.scan.csv"
    assert path.read_text().splitlines()[:2] == ["# a=0 b=2 disc=-1728 x=3000", "p,n,ap"]
    assert S.ScanCache.load(CurveSpec(0, 2), tmp_path) == cache02
    assert S.ScanCache.load(CurveSpec(5, 7), tmp_path).records == []


def test_cache_dir_precedence(monkeypatch):
    monkeypatch.setenv(S.CACHE_ENV, "/env/dir")
    assert str(S.cache_dir("/flag")) == "/flag"
    assert str(S.cache_dir()) == "/env/dir"
    monkeypatch.delenv(S.CACHE_ENV)
    assert str(S.cache_dir()) == "."


def test_split_modulus():
    assert S.split_modulus_for(-3) == (3, frozenset({1}))
    assert S.split_modulus_for(-4) == (4, frozenset({1}))
    m, res = S.split_modulus_for(-7)
    assert m == 7 and res == {1, 2, 4}


@pytest.mark.parametrize(
    "ab, d",
    [((0, 2), 1), ((0, 1), 12), ((0, 4), 3), ((0, -108), 3), ((0, 64), 12), ((-1, 0), 8),
     ((1, 0), 4), ((4, 0), 8), ((2, 0), 2), ((-4, 0), 4), ((-140, -784), 4), ((-30, -56), 2),
     ((-1056, -13552), 1), ((-608, -5776), 1)],
)
def test_cm_lookup_matches_split_gcd(ab, d):
    spec = CurveSpec(*ab)
    D, dE = S.cm_family(spec)
    assert dE == d
    cache = S.scan(spec, 3000)
    g = S.elliptic_divisor_empirical(cache, S.split_modulus_for(D))
    assert g == d and 24 % g == 0


def test_cm_lookup_pm27_as_tabulated():
    # the printed (0, 27c^6) row disagrees with the split gcd; the lookup
    # follows the table and the empirical gcd shows the sign swap
    split = S.split_modulus_for(-3)
    assert S.cm_divisor_lookup(CurveSpec(0, 27)) == 12
    assert S.elliptic_divisor_empirical(S.scan(CurveSpec(0, 27), 3000), split) == 4
    assert S.cm_divisor_lookup(CurveSpec(0, -27)) == 4
    assert S.elliptic_divisor_empirical(S.scan(CurveSpec(0, -27), 3000), split) == 12


def test_non_cm():
    assert S.cm_divisor_lookup(CurveSpec(6, -2)) is None
    assert S.cm_divisor_lookup(CurveSpec(-35, 98)) is None


def brute_ap(spec, p):
    n = 1 + sum(1 for x in range(p) for y in range(p) if (y * y - x**3 - spec.a * x - spec.b) % p == 0)
    return p + 1 - n


@pytest.mark.parametrize("ab", [(0, 2), (6, -2), (-1, 0), (0, 1)])
def test_lseries_against_point_counts(ab):
    spec = CurveSpec(*ab)
    a = S.lseries_coeffs(spec, 300)
    for p in sympy.primerange(5, 120):
        if spec.discriminant % p:
            assert a[p - 1] == brute_ap(spec, p)
    for m in range(2, 301):
        for n in range(2, 300 // m + 1):
            if math.gcd(m, n) == 1:
                assert a[m * n - 1] == a[m - 1] * a[n - 1]


def test_lseries_examples():
    a = S.lseries_coeffs(CurveSpec(0, 2), 50)
    assert a[49 - 1] == -6  # a_7^2 - 7
    assert a[7 - 1] == -1 and a[13 - 1] == -5


def test_reproduce_table_reports():
    rep = S.reproduce_table(1)
    assert [r.p for r in rep.excluded] == [3]
    assert {r.p: r.computed for r in rep.mismatches} == {547: 547}
    assert [r.p for r in rep.unlisted] == [379, 787]
    rep4 = S.reproduce_table(4)
    assert {r.p for r in rep4.mismatches} == {293, 317, 389, 487, 541, 631, 661}
    for tid in (2, 3, 5):
        assert S.reproduce_table(tid).all_matched
    assert "excluded (bad reduction)" in rep.render_text()
    assert rep.render_csv().splitlines()[0] == "table,p,expected,computed,status,note"
    assert len(TABLES) == 5
