"""Representation engine for squares from a residue class.

For a class of integers y ≡ d (mod m) with gcd(m, d) = 1, this module
computes the exact universality thresholds, the congruence constraints
every term count must satisfy, constructive decompositions of n into
sums of squares of class members, and a brute-force minimal-count
oracle used to certify everything else.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .arith import NotRepresentable, decompose_two_squares
from .cauchy import cauchy_feasible, cauchy_solve


class NotCoprime(Exception):
    """m and d share a factor; no square from the class is coprime-free."""


class NoSU(Exception):
    """The class admits no finite square-universality threshold."""


class BelowBound(Exception):
    """n is below the effective bound of the windowed construction."""


class ConstructionFailed(Exception):
    """A construction that should always succeed found no solution."""


class OutOfRange(Exception):
    """Input outside the preconditions of the requested construction."""


class NoAdmissibleS(Exception):
    """No admissible tail weight exists for any tried term count."""


@dataclass(frozen=True)
class ResidueClass:
    """Integers congruent to d modulo m, with the term-count modulus M."""

    m: int
    d: int
    M: int


@dataclass(frozen=True)
class SquareRepresentation:
    """n written as the sum of the squares of terms (class members)."""

    n: int
    terms: tuple[int, ...]


@dataclass(frozen=True)
class ThresholdProfile:
    cls: ResidueClass
    asu: int
    su: int | None
    effective_bound: Fraction


@dataclass(frozen=True)
class ResidueConstraints:
    """Congruences forced on any r-term representation of n.

    n = m*t + r0*d² with 0 ≤ r0 < m; every representation with r terms
    satisfies r ≡ r0 (mod m) and t ≡ (r − r0)/m (mod M).
    """

    r0: int
    t: int
    m: int
    M: int

    def admits(self, r: int) -> bool:
        if (r - self.r0) % self.m != 0:
            return False
        return ((r - self.r0) // self.m - self.t) % self.M == 0

    def minimal_admissible(self, floor: int = 1) -> int:
        r = self.r0 + (self.t % self.M) * self.m
        while r < floor:
            r += self.M * self.m
        return r


def make_class(m: int, d: int) -> ResidueClass:
    """Build the residue class of integers ≡ d (mod m), normalizing d."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if gcd(m, d) != 1:
        raise NotCoprime(f"gcd({m}, {d}) != 1")
    dd = d % m
    if dd == 0:
        dd = m  # only for m = 1
    M = 1 if m % 2 else (4 if m % 4 == 2 else 2)
    return ResidueClass(m, dd, M)


def asu_value(cls: ResidueClass) -> int:
    """Exact almost-universality threshold of the class."""
    m = cls.m
    if m % 2:
        return m + 3
    if m % 4 == 2:
        return 4 * m + 2
    if m % 12 == 0:
        return 2 * m + 3
    return 2 * m + 2


def su_exists(cls: ResidueClass) -> bool:
    """True iff every positive integer is a bounded sum of class squares."""
    return cls.d % cls.m in {1 % cls.m, (cls.m - 1) % cls.m}


def su_value(cls: ResidueClass) -> int:
    """Exact universality threshold; defined only when d ≡ ±1 (mod m)."""
    if not su_exists(cls):
        raise NoSU(f"d={cls.d} is not ±1 mod m={cls.m}")
    m = cls.m
    if m == 1:
        return 4
    if m in (2, 4):
        return 10
    if m == 3:
        return 6
    if m == 5:
        return 16
    if m == 6:
        return 26
    return m * m - 2 * m


def effective_bound(cls: ResidueClass) -> Fraction:
    """Threshold above which the windowed construction always succeeds."""
    m, d, M = cls.m, cls.d, cls.M
    if m % 2:
        return Fraction(25, 4) * m**4 + M * d * d
    if m % 4 == 2:
        return Fraction(m**4, 16) + M * d * d
    return Fraction(m**4, 4) + M * d * d


def threshold_profile(cls: ResidueClass) -> ThresholdProfile:
    su = su_value(cls) if su_exists(cls) else None
    return ThresholdProfile(cls, asu_value(cls), su, effective_bound(cls))


def residue_constraints(n: int, cls: ResidueClass) -> ResidueConstraints:
    """Split n = m*t + r0*d² and expose the forced term-count congruences."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    m, d = cls.m, cls.d
    r0 = (n * pow(d * d, -1, m)) % m if m > 1 else 0
    t = (n - r0 * d * d) // m
    return ResidueConstraints(r0=r0, t=t, m=m, M=cls.M)


def _canonical(n: int, terms) -> SquareRepresentation:
    ordered = tuple(sorted(terms, key=lambda y: (-abs(y), -y)))
    return SquareRepresentation(n, ordered)


def verify_representation(rep: SquareRepresentation, cls: ResidueClass) -> bool:
    """Check membership, the sum of squares, and the canonical ordering."""
    terms = rep.terms
    if len(terms) < 1:
        return False
    if any((y - cls.d) % cls.m for y in terms):
        return False
    if sum(y * y for y in terms) != rep.n:
        return False
    mags = [abs(y) for y in terms]
    return all(mags[i] >= mags[i + 1] for i in range(len(mags) - 1))


def _walk_family(m: int, d: int, tt: int):
    """Walk the solutions of m*a + 2*d*b = tt with 4a − b² ≥ 0, b ascending.

    Yields nothing outside the interval; returns (a, b, viable_k, raw_k)
    for the first solution accepted by cauchy_feasible, where raw_k counts
    all in-interval solutions tried before it and viable_k only those with
    a ≡ b (mod 2).  Returns None when the interval holds no feasible pair.
    """
    if m % 2:
        step = m
        bres = (tt * pow(2 * d % m, -1, m)) % m if m > 1 else 0
    else:
        if tt % 2:
            return None
        step = m // 2
        bres = ((tt // 2) * pow(d, -1, step)) % step if step > 1 else 0
    disc = 64 * d * d + 16 * m * tt
    if disc < 0:
        return None
    root = isqrt(disc)
    hi = (-8 * d + root) // (2 * m)
    b = (-8 * d - root) // (2 * m)
    b += (bres - b) % step
    raw = viable = 0
    while b <= hi:
        a = (tt - 2 * d * b) // m
        if 4 * a - b * b >= 0:
            if (a - b) % 2 == 0:
                if cauchy_feasible(a, b):
                    return a, b, viable, raw
                viable += 1
            raw += 1
        b += step
    return None


def decompose_asu(n: int, cls: ResidueClass) -> SquareRepresentation:
    """Decompose n ≥ effective_bound into at most M*m + 3 class squares."""
    rep, _, _, _ = _decompose_asu_stats(n, cls)
    return rep


def _decompose_asu_stats(n: int, cls: ResidueClass):
    """decompose_asu plus (r, viable_k, raw_k) diagnostics for the walk."""
    m, d = cls.m, cls.d
    if n < effective_bound(cls):
        raise BelowBound(f"n={n} is below the effective bound of {cls}")
    # Work with the least-absolute representative of the class: it leaves
    # the largest share of n to the quadratic part, so the feasible b
    # interval is as long as the bound assumes.
    de = d if 2 * d <= m else d - m
    rc = residue_constraints(n, cls)
    r = rc.minimal_admissible(floor=4)
    tt = (n - r * de * de) // m
    hit = _walk_family(m, de, tt)
    if hit is None:
        raise ConstructionFailed(f"no feasible family member for n={n}, {cls}")
    a, b, viable_k, raw_k = hit
    w = cauchy_solve(a, b)
    terms = [m * x + de for x in w] + [de] * (r - 4)
    return _canonical(n, terms), r, viable_k, raw_k


def _small_terms(n: int, m: int) -> list[int]:
    """Terms for n ≤ 2m(m−1)² in the d=1 frame, at most m²−2m of them.

    Uses squares of 1, −(m−1) and m+1 only: greedily take k = ⌊n/(m−1)²⌋
    copies of (m−1)² (capped at 2m−1) and fill with ones; when too many
    ones would remain, trade one (m−1)² block for (m+1)², which frees 4m.
    """
    base = (m - 1) ** 2
    k = min(n // base, 2 * m - 1)
    rem = n - k * base
    if rem <= m * m - 2 * m - k:
        return [-(m - 1)] * k + [1] * rem
    return [m + 1] + [-(m - 1)] * (k - 1) + [1] * (rem - 4 * m)


def decompose_small(n: int, cls: ResidueClass) -> SquareRepresentation:
    """Decompose 1 ≤ n ≤ 2m(m−1)² into at most m²−2m class squares (m ≥ 8)."""
    m = cls.m
    if m < 8:
        raise OutOfRange(f"m={m} is below 8")
    if not su_exists(cls):
        raise OutOfRange(f"d={cls.d} is not ±1 mod {m}")
    if not 1 <= n <= 2 * m * (m - 1) ** 2:
        raise OutOfRange(f"n={n} outside [1, {2 * m * (m - 1) ** 2}]")
    terms = _small_terms(n, m)
    if cls.d != 1:
        terms = [-y for y in terms]
    return _canonical(n, terms)


def _tail_weight_path(m: int, tt: int, slots: int):
    """Fixed-b path: b = 1 and a tail of equal-signed units.

    Solves m*a + 2 + s = tt with s the tail weight k(m−2) (k minus-ones)
    or k(m+2) (k plus-ones) for odd m, and (m*a + 2 + 2σ = tt with
    σ = k(m/2+1), k plus-ones) for even m; a must be odd and ≥ 1 and the
    k units must fit in the tail slots.  Returns (a, tail) or None.
    """
    if m % 2:
        inv2 = pow(2, -1, m) if m > 1 else 0
        k_plus = ((tt - 2) * inv2) % m
        k_minus = m - k_plus if k_plus else m
        for k, unit, s in (
            (k_plus, m + 1, k_plus * (m + 2)),
            (k_minus, -(m - 1), k_minus * (m - 2)),
        ):
            if (tt - 2 - s) % m:
                continue
            a = (tt - 2 - s) // m
            if a >= 1 and a % 2 == 1 and k <= slots:
                return a, [unit] * k
        return None
    if tt % 2:
        return None
    half = m // 2
    kp = (tt // 2 - 1) % half if half > 1 else 0
    for k in (kp, kp + half):
        s = k * (half + 1)
        num = tt // 2 - 1 - s
        if num < half or num % half:
            continue
        a = num // half
        if a % 2 == 1 and k <= slots:
            return a, [m + 1] * k
    return None


def _free_walk_path(m: int, tt: int, slots: int):
    """Fallback path: walk b freely after fixing a small ±1 tail.

    Tries tail patterns of p plus-ones and q minus-ones (weight
    w = m(p+q) + 2(p−q)) in ascending total size and solves
    m*a + 2*b = tt − w over the whole feasible b interval.
    """
    menu = sorted(
        ((p, q) for p in range(slots + 1) for q in range(slots + 1 - p)),
        key=lambda pq: (pq[0] + pq[1], pq[0]),
    )
    for p, q in menu:
        w = m * (p + q) + 2 * (p - q)
        hit = _walk_family(m, 1, tt - w)
        if hit is None:
            continue
        a, b, _, _ = hit
        tail = [m + 1] * p + [-(m - 1)] * q
        return a, b, tail
    return None


def decompose_effective(n: int, cls: ResidueClass) -> SquareRepresentation:
    """Decompose n ≥ 2m(m−1)² using the minimal admissible term count.

    Works in the d=1 frame (terms are negated for d = m−1).  For the
    smallest admissible r ≥ 4 it first tries the fixed-b path and then
    the free-b walk; if no r-term representation exists at all, r is
    advanced to the next admissible value.
    """
    m, M = cls.m, cls.M
    if m < 6:
        raise OutOfRange(f"m={m} is below 6")
    if not su_exists(cls):
        raise OutOfRange(f"d={cls.d} is not ±1 mod {m}")
    if n < 2 * m * (m - 1) ** 2:
        raise OutOfRange(f"n={n} is below {2 * m * (m - 1) ** 2}")
    r0 = n % m
    t = (n - r0) // m
    rc = ResidueConstraints(r0=r0, t=t, m=m, M=M)
    r = rc.minimal_admissible(floor=4)
    for _ in range(4):
        tt = t - (r - r0) // m
        slots = r - 4
        got = _tail_weight_path(m, tt, slots)
        if got is not None:
            a, tail = got
            witness = cauchy_solve(a, 1)
        else:
            free = _free_walk_path(m, tt, slots)
            if free is not None:
                a, b, tail = free
                witness = cauchy_solve(a, b)
            else:
                r += M * m
                continue
        terms = [m * x + 1 for x in witness] + tail + [1] * (slots - len(tail))
        if cls.d != 1:
            terms = [-y for y in terms]
        return _canonical(n, terms)
    raise NoAdmissibleS(f"no admissible tail for n={n}, {cls}")


_MEMORY_ENV = "RS_MAX_MEMORY_MB"
_DEFAULT_MEMORY_MB = 400


def _check_table_size(n_max: int) -> None:
    budget_mb = int(os.environ.get(_MEMORY_ENV, _DEFAULT_MEMORY_MB))
    entries = budget_mb * (1024 * 1024) // 4
    if n_max + 1 > entries:
        raise ValueError(
            f"oracle table for n={n_max} exceeds {budget_mb} MB; "
            f"raise {_MEMORY_ENV} to allow it"
        )


def member_squares(cls: ResidueClass, limit: int) -> list[int]:
    """Sorted distinct squares y² ≤ limit over class members y."""
    m, d = cls.m, cls.d
    out = set()
    y = d
    while y * y <= limit:
        out.add(y * y)
        y += m
    y = d - m
    while y * y <= limit:
        out.add(y * y)
        y -= m
    out.discard(0)
    return sorted(out)


def min_squares_table(n_max: int, cls: ResidueClass, cap: int) -> array:
    """dp[v] = minimal number of class squares summing to v, for v ≤ n_max.

    Entries above cap are clipped to cap + 1 (meaning "more than cap or
    not representable at all").
    """
    _check_table_size(n_max)
    inf = cap + 1
    dp = array("I", [inf]) * (n_max + 1)
    dp[0] = 0
    for c in member_squares(cls, n_max):
        for v in range(c, n_max + 1):
            w = dp[v - c] + 1
            if w < dp[v]:
                dp[v] = w
    return dp


@lru_cache(maxsize=256)
def _cached_table(cls: ResidueClass, n_bucket: int, cap: int) -> array:
    # buckets are powers of two so nearby n share one table
    return min_squares_table(n_bucket, cls, cap)


def _table_for(n: int, cls: ResidueClass, cap: int) -> array:
    return _cached_table(cls, 1 << max(n.bit_length(), 6), cap)


def min_squares_oracle(n: int, cls: ResidueClass, cap: int):
    """Exact minimal term count ≤ cap for n, or None if none exists."""
    if n < 1 or cap < 1:
        raise ValueError("n and cap must be positive")
    v = _table_for(n, cls, cap)[n]
    return v if v <= cap else None


def _member_for_square(sq: int, cls: ResidueClass) -> int:
    y = isqrt(sq)
    return y if (y - cls.d) % cls.m == 0 else -y


def min_squares_terms(n: int, cls: ResidueClass, cap: int):
    """Terms of a minimal representation with ≤ cap terms, or None."""
    if n < 1 or cap < 1:
        raise ValueError("n and cap must be positive")
    dp = _table_for(n, cls, cap)
    if dp[n] > cap:
        return None
    coins = member_squares(cls, n)
    terms = []
    v = n
    while v:
        for c in reversed(coins):
            if c <= v and dp[v - c] == dp[v] - 1:
                terms.append(_member_for_square(c, cls))
                v -= c
                break
        else:
            raise AssertionError(f"table reconstruction failed at v={v}")
    return terms


def _three_squares_mod6(n: int, cls: ResidueClass) -> SquareRepresentation:
    """n ≡ 3 (mod 24) as three squares of members of a class mod 6.

    Any such n is a sum of three odd squares coprime to 3; each factor
    can then be signed into the class.  Scans x descending over odd
    non-multiples of 3 and completes the remainder with two squares
    (the remainder ≡ 2 (mod 8) splits into two odd squares, and both
    are automatically coprime to 3).
    """
    d = cls.d
    x = isqrt(n)
    if x % 2 == 0:
        x -= 1
    while x >= 1:
        if x % 3:
            try:
                u, v = decompose_two_squares(n - x * x)
            except NotRepresentable:
                u = None
            if u is not None:
                terms = [
                    y if (y - d) % 6 == 0 else -y
                    for y in (x, u, v)
                ]
                return _canonical(n, terms)
        x -= 2
    raise ConstructionFailed(f"no three-square split for n={n}, {cls}")


def _oracle_rep(n: int, cls: ResidueClass, cap: int) -> SquareRepresentation:
    terms = min_squares_terms(n, cls, cap)
    if terms is None:
        raise ConstructionFailed(f"n={n} needs more than {cap} terms for {cls}")
    return _canonical(n, terms)


def _su_escalate(n: int, cls: ResidueClass, cap: int) -> SquareRepresentation:
    """Retry the family construction with larger admissible term counts.

    For odd m the unique count inside the almost-universal window can be
    infeasible for scattered n.  Any count ≡ r0 (mod m) up to the universal
    cap is still admissible, and each longer pad leaves a fresh family.
    """
    m, d = cls.m, cls.d
    de = d if 2 * d <= m else d - m
    rc = residue_constraints(n, cls)
    step = m * cls.M
    r = rc.minimal_admissible(floor=4) + step
    while r <= cap:
        tt = (n - r * de * de) // m
        hit = _walk_family(m, de, tt)
        if hit is not None:
            a, b, _, _ = hit
            w = cauchy_solve(a, b)
            terms = [m * x + de for x in w] + [de] * (r - 4)
            return _canonical(n, terms)
        r += step
    raise ConstructionFailed(f"no family with at most {cap} terms for n={n}, {cls}")


def decompose_su(n: int, cls: ResidueClass) -> SquareRepresentation:
    """Decompose any n ≥ 1 into at most su_value(cls) class squares."""
    if not su_exists(cls):
        raise NoSU(f"d={cls.d} is not ±1 mod m={cls.m}")
    if n < 1:
        raise ValueError("n must be a positive integer")
    m = cls.m
    cap = su_value(cls)
    if m >= 8:
        if n <= 2 * m * (m - 1) ** 2:
            return decompose_small(n, cls)
        return decompose_effective(n, cls)
    if m in (5, 7):
        if n >= effective_bound(cls):
            try:
                return decompose_asu(n, cls)
            except ConstructionFailed:
                return _su_escalate(n, cls, cap)
        return _oracle_rep(n, cls, cap)
    if m == 6:
        if (n - 3 * cls.d * cls.d) % 24 == 0:
            return _three_squares_mod6(n, cls)
        if n >= effective_bound(cls):
            return decompose_asu(n, cls)
        return _oracle_rep(n, cls, cap)
    return _oracle_rep(n, cls, cap)
