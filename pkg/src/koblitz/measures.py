"""Von Mangoldt sums over short intervals and prime-weighted Hasse measures."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .characters import build_log_table, find_primitive_point, psi_divisor_free
from .counting import group_order
from .curve import CurveSpec, Point, ReducedCurve, reduce_rational_point
from .numtheory import (
    BoundsError,
    _base_primes,
    cached_sieve,
    factorize,
    iter_primes,
    prime_power,
    segment_is_prime,
)

LAMBDA_MAX = 10**8
SURVEY_MAX = 10**7
BT_MAX = 10**7
MAIN_TERM_MAX = 10**6


@dataclass(frozen=True)
class IntervalSumReport:
    center: int
    lo: int
    hi: int
    lambda_sum: float
    threshold: float
    passed: bool


def _lambda_segment(lo: int, hi: int) -> np.ndarray:
    """Lambda(n) for n = lo..hi as a float array."""
    lam = np.zeros(hi - lo + 1)
    flags = segment_is_prime(lo, hi)
    idx = np.flatnonzero(flags)
    lam[idx] = np.log((lo + idx).astype(np.float64))
    # higher prime powers q^k, k >= 2, have q <= sqrt(hi)
    for q in _base_primes(math.isqrt(hi)).tolist():
        qk = q * q
        while qk <= hi:
            if qk >= lo:
                lam[qk - lo] = math.log(q)
            qk *= q
    return lam


def lambda_sum(lo: int, hi: int) -> float:
    """Sum of Lambda(n) over lo <= n <= hi."""
    if lo < 1 or hi < lo or hi > LAMBDA_MAX:
        raise BoundsError(f"need 1 <= lo <= hi <= {LAMBDA_MAX}, got [{lo}, {hi}]")
    return math.fsum(_lambda_segment(lo, hi).tolist())


@lru_cache(maxsize=2)
def _lambda_table(limit: int) -> np.ndarray:
    return _lambda_segment(0, limit)


def short_interval_survey(x_lo: int, x_hi: int) -> list[IntervalSumReport]:
    """For each prime p in [x_lo, x_hi], test sum of Lambda over p +- 2 sqrt(p) > 2 sqrt(p)."""
    if x_hi > SURVEY_MAX:
        raise BoundsError(f"survey limited to x <= {SURVEY_MAX}")
    if x_hi < max(x_lo, 2):
        return []
    top = x_hi + math.isqrt(4 * x_hi) + 1
    lam = _lambda_table(1 << (top.bit_length()))
    out = []
    for p in iter_primes(max(x_lo, 2), x_hi):
        r = math.isqrt(4 * p)
        lo, hi = p - r, p + r
        s = float(lam[lo : hi + 1].sum())
        thr = 2 * math.sqrt(p)
        out.append(IntervalSumReport(p, lo, hi, s, thr, s > thr))
    return out


def exception_count(reports: list[IntervalSumReport]) -> int:
    return sum(not r.passed for r in reports)


def survey_csv(reports: list[IntervalSumReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "lo", "hi", "lambda_sum", "threshold", "pass"])
    for r in reports:
        w.writerow([r.center, r.lo, r.hi, repr(r.lambda_sum), repr(r.threshold), int(r.passed)])
    return buf.getvalue()


def read_survey_csv(text: str) -> list[IntervalSumReport]:
    rows = csv.DictReader(io.StringIO(text))
    return [
        IntervalSumReport(
            int(r["p"]), int(r["lo"]), int(r["hi"]),
            float(r["lambda_sum"]), float(r["threshold"]), r["pass"] == "1",
        )
        for r in rows
    ]


@dataclass(frozen=True)
class BrunTitchmarshCheck:
    x: int
    prime_count: int  # pi(x + 4 sqrt x) - pi(x)
    bound: float  # 12 sqrt(x) / log x
    holds: bool


def brun_titchmarsh_check(x: int) -> BrunTitchmarshCheck:
    """Check pi(x + 4 sqrt x) - pi(x) <= 3 * 4 sqrt(x) / log x."""
    if x < 2 or x > BT_MAX:
        raise BoundsError(f"need 2 <= x <= {BT_MAX}")
    top = x + math.isqrt(16 * x)  # floor(x + 4 sqrt x)
    count = int(np.count_nonzero(segment_is_prime(x + 1, top)))
    bound = 12 * math.sqrt(x) / math.log(x)
    return BrunTitchmarshCheck(x, count, bound, count <= bound)


def _in_literal_interval(p: int, n: int) -> bool:
    # p - 2 sqrt p <= n <= p + 2 sqrt p, decided in integers
    return (n - p) ** 2 <= 4 * p


def primitive_indicator(curve: ReducedCurve, P: Point, n: int) -> int:
    """1 if P generates E(F_p) (of order n), else 0, via the divisor-free form."""
    fac = factorize(n)
    T = find_primitive_point(curve, n, fac)
    if T is None:
        return 0  # E(F_p) is not cyclic, no point has order n
    return psi_divisor_free(build_log_table(curve, T, n), P)


def hasse_measure(curve: ReducedCurve, P, n: int | None = None) -> float:
    """(1/(4 sqrt p)) * sum over p - 2 sqrt p <= m <= p + 2 sqrt p of Lambda(m)/log(m) * Psi(P).

    Psi(P) is the primitive-point indicator for the group of order
    n = #E(F_p), so at most the term m = n survives; Lambda(n)/log(n) is 1/k
    for n = q^k. ``P`` may be a reduced point or a rational (x, y) pair.
    """
    p = curve.p
    if n is None:
        n = group_order(curve)
    if P is not None and not curve.contains(P):
        P = reduce_rational_point(curve, P)
    weight = measure_weight(p, n)
    if weight == 0:
        return 0.0
    return float(weight) * primitive_indicator(curve, P, n) / (4 * math.sqrt(p))


def measure_weight(p: int, n: int) -> Fraction:
    """Lambda(n)/log(n) = 1/k if n = q^k lies in the p-centred interval, else 0."""
    if not _in_literal_interval(p, n):
        return Fraction(0)
    pk = prime_power(n)
    return Fraction(1, pk[1]) if pk else Fraction(0)


def measure_sum(spec: CurveSpec, P, x: int) -> float:
    """Sum of :func:`hasse_measure` over good primes 5 <= p <= x."""
    total = []
    for p in iter_primes(5, x):
        if not spec.has_good_reduction(p):
            continue
        total.append(hasse_measure(spec.reduce(p), P))
    return math.fsum(total)


def main_term_M(x: int) -> float:
    """M(x) = sum_{x<=p<=2x} 1/(4 sqrt p) sum_{|n-p|<=2 sqrt p} Lambda(n)/log(n) * phi(n)/n.

    For n = q^k the summand weight is (1/k)(1 - 1/q).
    """
    if x < 1 or x > MAIN_TERM_MAX:
        raise BoundsError(f"need 1 <= x <= {MAIN_TERM_MAX}")
    top = 2 * x + math.isqrt(8 * x) + 1
    w = np.zeros(top + 1)
    for q in cached_sieve(max(top, 2)).primes.tolist():
        qk, k = q, 1
        while qk <= top:
            w[qk] = (1 - 1 / q) / k
            qk *= q
            k += 1
    prefix = np.concatenate(([0.0], np.cumsum(w)))
    terms = []
    for p in iter_primes(x, 2 * x):
        r = math.isqrt(4 * p)
        terms.append((prefix[p + r + 1] - prefix[max(p - r, 0)]) / (4 * math.sqrt(p)))
    return math.fsum(terms)


def main_term_ratio(x: int) -> float:
    """M(x) log^2(x) / x."""
    return main_term_M(x) * math.log(x) ** 2 / x
