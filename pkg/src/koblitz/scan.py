"""Scans of a curve over good primes: group orders, Koblitz primes, divisors.

A scan caches one :class:`ScanRecord` per good prime 5 <= p <= x. Caches
persist as ``<a>_<b>.scan.csv``: a ``#`` metadata line, the header
``p,n,ap``, then one row per prime in ascending order.
"""
from __future__ import annotations

import csv
import io
import math
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .counting import group_order, nonsingular_count
from .curve import CurveSpec
from .numtheory import BoundsError, factorize, is_prime, iter_primes, kronecker
from .reference import TABLE_BOUND, TABLES

SCAN_MAX = 10**6
LSERIES_MAX = 10**5
CACHE_ENV = "KOBLITZ_CACHE_DIR"


class CoverageError(ValueError):
    """The cache does not reach the requested bound."""


class CacheMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class ScanRecord:
    p: int
    n: int
    ap: int

    @property
    def koblitz_for(self) -> list[int]:
        """Divisors t of n with n/t prime."""
        return sorted(self.n // q for q, _ in factorize(self.n))

    def is_koblitz(self, t: int) -> bool:
        return self.n % t == 0 and is_prime(self.n // t)


@dataclass
class ScanCache:
    a: int
    b: int
    records: list[ScanRecord] = field(default_factory=list)
    x: int = 4

    @classmethod
    def empty(cls, spec: CurveSpec) -> "ScanCache":
        return cls(spec.a, spec.b)

    @property
    def spec(self) -> CurveSpec:
        return CurveSpec(self.a, self.b)

    def filename(self) -> str:
        return f"{self.a}_{self.b}.scan.csv"

    def upto(self, x: int) -> list[ScanRecord]:
        if x > self.x:
            raise CoverageError(f"cache covers p <= {self.x}, asked for {x}")
        return [r for r in self.records if r.p <= x]

    def to_csv(self) -> str:
        buf = io.StringIO()
        disc = self.spec.discriminant
        buf.write(f"# a={self.a} b={self.b} disc={disc} x={self.x}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "n", "ap"])
        for r in self.records:
            w.writerow([r.p, r.n, r.ap])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "ScanCache":
        first, _, body = text.partition("\n")
        m = re.fullmatch(r"# a=(-?\d+) b=(-?\d+) disc=(-?\d+) x=(\d+)", first.strip())
        if not m:
            raise ValueError("missing scan metadata line")
        a, b, disc, x = map(int, m.groups())
        if CurveSpec(a, b).discriminant != disc:
            raise ValueError("metadata discriminant does not match (a, b)")
        recs = [ScanRecord(int(r["p"]), int(r["n"]), int(r["ap"])) for r in csv.DictReader(io.StringIO(body))]
        return cls(a, b, recs, x)

    def save(self, directory: str | os.PathLike) -> Path:
        path = Path(directory) / self.filename()
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(self.to_csv())
        tmp.replace(path)
        return path

    @classmethod
    def load(cls, spec: CurveSpec, directory: str | os.PathLike) -> "ScanCache":
        """Cached scan for ``spec`` from ``directory``, or an empty one."""
        path = Path(directory) / cls.empty(spec).filename()
        if not path.exists():
            return cls.empty(spec)
        return cls.from_csv(path.read_text())


def cache_dir(flag: str | None = None) -> Path:
    """Cache location: explicit flag, then $KOBLITZ_CACHE_DIR, then the cwd."""
    return Path(flag or os.environ.get(CACHE_ENV) or ".")


def scan(spec: CurveSpec, x: int, cache: ScanCache | None = None) -> ScanCache:
    """Extend ``cache`` to every good prime 5 <= p <= x."""
    if x > SCAN_MAX:
        raise BoundsError(f"scans limited to x <= {SCAN_MAX}")
    if cache is None:
        cache = ScanCache.empty(spec)
    if (cache.a, cache.b) != (spec.a, spec.b):
        raise CacheMismatchError(f"cache is for ({cache.a}, {cache.b}), not ({spec.a}, {spec.b})")
    if x <= cache.x:
        return cache
    disc = spec.discriminant
    new = []
    for p in iter_primes(max(5, cache.x + 1), x):
        if disc % p == 0:
            continue
        n = group_order(spec.reduce(p))
        new.append(ScanRecord(p, n, p + 1 - n))
    return ScanCache(cache.a, cache.b, cache.records + new, max(x, cache.x))


def koblitz_primes(cache: ScanCache, x: int, t: int = 1) -> list[ScanRecord]:
    return [r for r in cache.upto(x) if r.is_koblitz(t)]


def count_koblitz(cache: ScanCache, x: int, t: int = 1) -> int:
    """#{p <= x : t | #E(F_p) and #E(F_p)/t is prime}."""
    return len(koblitz_primes(cache, x, t))


def brun_partial_sum(cache: ScanCache, x: int, t: int = 1) -> Fraction:
    """Exact sum of 1/p over the Koblitz primes p <= x for divisor t."""
    return sum((Fraction(1, r.p) for r in koblitz_primes(cache, x, t)), Fraction(0))


def split_modulus_for(D: int) -> tuple[int, frozenset[int]]:
    """Residue classes of the primes that split in Q(sqrt D)."""
    m = abs(D)
    res = frozenset(r for r in range(1, m) if math.gcd(r, m) == 1 and kronecker(D, r) == 1)
    return m, res


def elliptic_divisor_empirical(cache: ScanCache, split_modulus: tuple[int, set[int]] | None = None) -> int:
    """gcd of #E(F_p) over the cached primes, optionally only split primes."""
    recs = cache.records
    if split_modulus is not None:
        m, residues = split_modulus
        recs = [r for r in recs if r.p % m in residues]
    if not recs:
        raise ValueError("no qualifying primes in the cache")
    g = 0
    for r in recs:
        g = math.gcd(g, r.n)
    return g


def _exact_root(v: int, k: int) -> int | None:
    # integer c with c**k == v, preferring c > 0
    if v == 0:
        return None
    if v < 0 and k % 2 == 0:
        return None
    r = round(abs(v) ** (1 / k))
    for c in (r - 1, r, r + 1):
        if c > 0 and c**k == abs(v):
            return c if v > 0 else -c
    return None


def _is_power(v: int, k: int) -> bool:
    return _exact_root(v, k) is not None


def _scaled(a: int, b: int, A: int, B: int) -> bool:
    # (a, b) == (A c^2, B c^3) for some nonzero integer c
    if a % A or b % B:
        return False
    c = _exact_root(a // A, 2)
    return c is not None and (b == B * c**3 or b == B * (-c) ** 3)


# (D, d_E, predicate on (a, b)); most specific family first within each D
CM_FAMILIES = [
    (-3, 12, lambda a, b: a == 0 and (_is_power(b, 6) or (b % 27 == 0 and _is_power(b // 27, 6)))),
    (-3, 4, lambda a, b: a == 0 and _is_power(b, 3)),
    (-3, 3, lambda a, b: a == 0 and (_is_power(b, 2) or (b % 27 == 0 and _is_power(-b // 27, 2)))),
    (-3, 1, lambda a, b: a == 0 and b != 0),
    (-4, 8, lambda a, b: b == 0 and (_is_power(-a, 4) or (a % 4 == 0 and _is_power(a // 4, 4)))),
    (-4, 4, lambda a, b: b == 0 and (_is_power(a, 2) or _is_power(-a, 2))),
    (-4, 2, lambda a, b: b == 0 and a != 0),
    (-7, 4, lambda a, b: _scaled(a, b, -140, -784)),
    (-8, 2, lambda a, b: _scaled(a, b, -30, -56)),
    (-11, 1, lambda a, b: _scaled(a, b, -1056, -13552)),
    (-19, 1, lambda a, b: _scaled(a, b, -608, -5776)),
    (-43, 1, lambda a, b: _scaled(a, b, -13760, -621264)),
    (-67, 1, lambda a, b: _scaled(a, b, -117920, -15585808)),
    (-163, 1, lambda a, b: _scaled(a, b, -34790720, -78984748304)),
]


def cm_family(spec: CurveSpec) -> tuple[int, int] | None:
    """(D, d_E) of the first matching CM family, or None."""
    for D, d, pred in CM_FAMILIES:
        if pred(spec.a, spec.b):
            return D, d
    return None


def cm_divisor_lookup(spec: CurveSpec) -> int | None:
    """Tabulated elliptic divisor d_E for CM curves; None when not in the table."""
    fam = cm_family(spec)
    return fam[1] if fam else None


def lseries_coeffs(spec: CurveSpec, N: int) -> list[int]:
    """[a_1, ..., a_N] of the L-series of E.

    a_p = p + 1 - #E(F_p) at good p >= 5; at p in {2, 3} and at bad primes
    a_p = p - #E_ns(F_p). Prime powers follow
    a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}} (just a_p^k at bad primes), and
    coprime products multiply.
    """
    if N < 1 or N > LSERIES_MAX:
        raise BoundsError(f"need 1 <= N <= {LSERIES_MAX}")
    disc = spec.discriminant
    a = [0] * (N + 1)
    a[1] = 1
    spf = np.zeros(N + 1, dtype=np.int64)
    for p in iter_primes(2, N):
        if spf[p] == 0:
            spf[p::p][spf[p::p] == 0] = p
        good = p >= 5 and disc % p != 0
        ap = p + 1 - group_order(spec.reduce(p)) if good else p - nonsingular_count(spec, p)
        prev, cur, pk = 1, ap, p
        while pk <= N:
            a[pk] = cur
            prev, cur = cur, (ap * cur - p * prev if good else ap * cur)
            pk *= p
    spf_list = spf.tolist()
    for n in range(2, N + 1):
        p = spf_list[n]
        m = n
        while m % p == 0:
            m //= p
        if m != 1:
            a[n] = a[n // m] * a[m]
    return a[1:]


@dataclass(frozen=True)
class TableRow:
    p: int
    expected: int
    computed: int | None  # #E(F_p)/t, None when excluded
    status: str  # "match", "mismatch", "excluded (bad reduction)"
    note: str = ""


@dataclass(frozen=True)
class TableReport:
    table_id: int
    spec: CurveSpec
    divisor: int
    rows: list[TableRow]
    unlisted: list[ScanRecord]  # Koblitz primes p <= bound missing from the table
    brun_sum: Fraction
    brun_sum_rows: Fraction  # 1/p summed over the listed good-reduction rows
    brun_printed: str

    @property
    def mismatches(self) -> list[TableRow]:
        return [r for r in self.rows if r.status == "mismatch"]

    @property
    def excluded(self) -> list[TableRow]:
        return [r for r in self.rows if r.status.startswith("excluded")]

    @property
    def all_matched(self) -> bool:
        return not self.mismatches

    def render_text(self) -> str:
        lines = [
            f"table {self.table_id}: y^2 = x^3 + {self.spec.a}x + {self.spec.b}, n/{self.divisor}",
            f"{'p':>5} {'expected':>9} {'computed':>9}  status",
        ]
        for r in self.rows:
            comp = "-" if r.computed is None else str(r.computed)
            tail = f" ({r.note})" if r.note else ""
            lines.append(f"{r.p:>5} {r.expected:>9} {comp:>9}  {r.status}{tail}")
        if self.unlisted:
            lines.append("unlisted hits: " + " ".join(f"{r.p}:{r.n // self.divisor}" for r in self.unlisted))
        lines.append(
            f"brun partial sum (scan) {float(self.brun_sum):.12g}; "
            f"over listed rows {float(self.brun_sum_rows):.12g}; printed {self.brun_printed}"
        )
        return "\n".join(lines)

    def render_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["table", "p", "expected", "computed", "status", "note"])
        for r in self.rows:
            w.writerow([self.table_id, r.p, r.expected, "" if r.computed is None else r.computed, r.status, r.note])
        return buf.getvalue()


def reproduce_table(table_id: int, cache: ScanCache | None = None) -> TableReport:
    """Recompute one reference table and compare it row by row."""
    ref = TABLES[table_id]
    spec = CurveSpec(ref.a, ref.b)
    cache = scan(spec, TABLE_BOUND, cache)
    by_p = {r.p: r for r in cache.upto(TABLE_BOUND)}
    rows = []
    for p, expected in ref.rows:
        if spec.discriminant % p == 0:
            rows.append(TableRow(p, expected, None, "excluded (bad reduction)", f"{p} divides {spec.discriminant}"))
            continue
        n = by_p[p].n
        if n % ref.divisor:
            rows.append(TableRow(p, expected, None, "mismatch", f"#E = {n} not divisible by {ref.divisor}"))
            continue
        comp = n // ref.divisor
        note = "" if is_prime(comp) else f"{comp} is not prime"
        rows.append(TableRow(p, expected, comp, "match" if comp == expected else "mismatch", note))
    listed = {p for p, _ in ref.rows}
    unlisted = [r for r in koblitz_primes(cache, TABLE_BOUND, ref.divisor) if r.p not in listed]
    brun_rows = sum((Fraction(1, r.p) for r in rows if not r.status.startswith("excluded")), Fraction(0))
    return TableReport(
        table_id, spec, ref.divisor, rows, unlisted,
        brun_partial_sum(cache, TABLE_BOUND, ref.divisor), brun_rows, ref.brun_constant,
    )
