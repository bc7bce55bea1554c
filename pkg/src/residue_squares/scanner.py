"""Empirical scans: three-term representation counts, exception hunts,
and oracle-certified lower-bound witnesses.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd, isqrt

from .arith import is_prime
from .engine import (
    NoSU,
    OutOfRange,
    ResidueClass,
    min_squares_oracle,
    su_exists,
    su_value,
)


class SearchExhausted(Exception):
    """The witness search hit its configured limit."""


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a three-term scan over n ≡ 3d² (mod m·M).

    Only term counts r ≡ 3d²·(d²)⁻¹ = 3 with t ≡ 0 (mod M) admit three
    squares, so the scan walks the residue 3d² modulo m·M; exceptions
    are the scanned n with no ordered triple at all.
    """

    cls: ResidueClass
    n_lo: int
    n_hi: int
    target_residue: int
    modulus: int
    exceptions: tuple[int, ...]
    counts: tuple[tuple[int, int], ...] | None


@dataclass(frozen=True)
class ExceptionClassification:
    """n classified as 3*ell² for an odd prime ell, or anything else."""

    n: int
    kind: str  # "3ell^2" or "other"
    ell: int | None = None
    ell_mod_12: int | None = None


def _members(m: int, d: int, sqlimit: int) -> list[int]:
    """All y ≡ d (mod m) with y² ≤ sqlimit."""
    out = []
    y = d
    while y * y <= sqlimit:
        out.append(y)
        y += m
    y = d - m
    while y * y <= sqlimit:
        out.append(y)
        y -= m
    return out


def count_three_term(n: int, cls: ResidueClass) -> int:
    """Exact number of ordered triples of class members whose squares sum to n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    m, d = cls.m, cls.d
    cnt = 0
    for y1 in _members(m, d, n):
        r1 = n - y1 * y1
        for y2 in _members(m, d, r1):
            rem = r1 - y2 * y2
            y3 = isqrt(rem)
            if y3 * y3 == rem:
                if y3 == 0:
                    cnt += (0 - d) % m == 0
                else:
                    cnt += (y3 - d) % m == 0
                    cnt += (-y3 - d) % m == 0
    return cnt


def _square_mults(m: int, d: int, limit: int) -> list[tuple[int, int]]:
    """(square, member multiplicity) pairs with square ≤ limit, ascending."""
    mult: dict[int, int] = {}
    for y in _members(m, d, limit):
        q = y * y
        mult[q] = mult.get(q, 0) + 1
    return sorted(mult.items())


def _scan_chunk(args: tuple[int, int, list[int]]) -> list[tuple[int, int]]:
    """Count ordered triples for each target n; one independent work item."""
    m, d, targets = args
    if not targets:
        return []
    limit = targets[-1]
    squares = _square_mults(m, d, limit)
    pair_counts: dict[int, int] = {}
    for q1, c1 in squares:
        for q2, c2 in squares:
            s = q1 + q2
            if s > limit:
                break
            pair_counts[s] = pair_counts.get(s, 0) + c1 * c2
    out = []
    for n in targets:
        cnt = 0
        for q3, c3 in squares:
            if q3 > n:
                break
            cnt += c3 * pair_counts.get(n - q3, 0)
        out.append((n, cnt))
    return out


def scan_exceptions(
    cls: ResidueClass,
    n_max: int,
    jobs: int = 1,
    keep_counts: bool = False,
) -> ScanReport:
    """Scan every n ≤ n_max with n ≡ 3d² (mod m·M) for three-term gaps.

    The result is independent of the jobs count; chunks are disjoint and
    merged in ascending order.
    """
    if n_max < 1:
        raise ValueError("n_max must be a positive integer")
    m, d = cls.m, cls.d
    mod = m * cls.M
    rho = (3 * d * d) % mod
    start = rho if rho else mod
    targets = list(range(start, n_max + 1, mod))
    if jobs > 1 and len(targets) > 1:
        workers = min(jobs, len(targets))
        size = -(-len(targets) // workers)
        slices = [targets[i : i + size] for i in range(0, len(targets), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, [(m, d, s) for s in slices]))
        counts = [item for part in parts for item in part]
    else:
        counts = _scan_chunk((m, d, targets))
    exceptions = tuple(n for n, c in counts if c == 0)
    return ScanReport(
        cls=cls,
        n_lo=start,
        n_hi=n_max,
        target_residue=rho,
        modulus=mod,
        exceptions=exceptions,
        counts=tuple(counts) if keep_counts else None,
    )


def classify_exception(n: int) -> ExceptionClassification:
    """Recognize n = 3*ell² with ell an odd prime."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n % 3 == 0:
        sq = n // 3
        ell = isqrt(sq)
        if ell * ell == sq and ell % 2 == 1 and is_prime(ell):
            return ExceptionClassification(n, "3ell^2", ell, ell % 12)
    return ExceptionClassification(n, "other")


def asu_lower_witnesses(cls: ResidueClass, count: int, t0_limit: int = 10**6) -> list[int]:
    """Integers provably needing ≥ M*m+2 (even m) or ≥ m+3 (odd m) terms.

    Even m: n = mM*t0 + 2d² exactly divisible by a prime ≡ 3 (mod 4), so
    n is not a sum of two integer squares, and the term-count congruence
    pushes the next admissible count to M*m + 2.  Odd m: n = m*t0 + 3d²
    with n ≡ 7 (mod 8) is not a sum of three squares, pushing it to m + 3.
    Every candidate is certified by the oracle before being returned.
    """
    if count < 1:
        raise ValueError("count must be a positive integer")
    m, d = cls.m, cls.d
    out: list[int] = []
    if m % 2 == 0:
        mod = m * cls.M
        p = 3
        while not (p % 4 == 3 and gcd(p, mod * d) == 1 and is_prime(p)):
            p += 2
        t0 = (-2 * d * d * pow(mod % p, -1, p)) % p
        floor_cap = cls.M * m + 1
        while len(out) < count and t0 <= t0_limit:
            n = mod * t0 + 2 * d * d
            if n % (p * p) and min_squares_oracle(n, cls, floor_cap) is None:
                out.append(n)
            t0 += p
    else:
        t0 = ((7 - 3 * d * d) * pow(m % 8, -1, 8)) % 8
        while len(out) < count and t0 <= t0_limit:
            n = m * t0 + 3 * d * d
            if min_squares_oracle(n, cls, m + 2) is None:
                out.append(n)
            t0 += 8
    if len(out) < count:
        raise SearchExhausted(f"found {len(out)} of {count} witnesses below t0={t0_limit}")
    return out


def su_extremal_witness(cls: ResidueClass) -> int:
    """The integer m²−2m, whose minimal representation is m²−2m ones."""
    if not su_exists(cls):
        raise NoSU(f"d={cls.d} is not ±1 mod m={cls.m}")
    if cls.m < 3:
        raise OutOfRange(f"m={cls.m} has no forced all-ones extremal value")
    n = cls.m * cls.m - 2 * cls.m
    certified = min_squares_oracle(n, cls, su_value(cls))
    if certified != n:
        raise AssertionError(f"oracle disagrees at n={n}: {certified}")
    return n
