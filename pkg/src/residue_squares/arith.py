"""Exact integer primitives: primality, 4-adic normalization, and
constructive two- and three-square decompositions.
"""

from math import isqrt
from typing import NamedTuple


class NotRepresentable(Exception):
    """The requested sum-of-squares decomposition does not exist."""


class Pow4Normalization(NamedTuple):
    alpha: int
    core: int


class ThreeSquareDecomposition(NamedTuple):
    n: int
    x: int
    y: int
    z: int


# Strong-pseudoprime bases making the test exact below 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pow4_normalize(n: int) -> Pow4Normalization:
    """Write n = 4**alpha * core with core not divisible by 4."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    alpha = 0
    while n % 4 == 0:
        n //= 4
        alpha += 1
    return Pow4Normalization(alpha, n)


def is_three_square_representable(n: int) -> bool:
    """True iff n is a sum of three integer squares.

    By Legendre's theorem the non-representable integers are exactly
    those of the form 4**a * (8*b + 7).
    """
    if n < 0:
        return False
    if n == 0:
        return True
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def _prime_sum_two_squares(p: int) -> tuple[int, int]:
    """Split a prime p ≡ 1 (mod 4) as u² + v²."""
    # Find z with z² ≡ −1 (mod p) from the smallest quadratic non-residue,
    # then run the Euclidean descent down to the first remainder ≤ √p.
    q = 2
    while pow(q, (p - 1) // 2, p) != p - 1:
        q += 1
    z = pow(q, (p - 1) // 4, p)
    a, b = p, z
    while b * b > p:
        a, b = b, a % b
    return b, a % b


def decompose_two_squares(n: int) -> tuple[int, int]:
    """Return (u, v) with u ≥ v ≥ 0 and u² + v² = n.

    Raises NotRepresentable when some prime ≡ 3 (mod 4) divides n to an
    odd power.
    """
    if n < 0:
        raise NotRepresentable(f"{n} is negative")
    if n == 0:
        return (0, 0)
    if n % 8 in (3, 6, 7):
        # u² + v² mod 8 only takes values in {0, 1, 2, 4, 5}
        raise NotRepresentable(f"{n} is not a sum of two squares")
    u, v = 1, 0
    scale = 1
    rem = n
    e = 0
    while rem % 2 == 0:
        rem //= 2
        e += 1
    for _ in range(e):
        u, v = u + v, abs(u - v)
    p = 3
    while p * p <= rem:
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            if p % 4 == 3:
                if e % 2:
                    raise NotRepresentable(f"{p} divides {n} to an odd power")
                scale *= p ** (e // 2)
            else:
                a, b = _prime_sum_two_squares(p)
                for _ in range(e):
                    u, v = u * a + v * b, abs(u * b - v * a)
        p += 2
    if rem > 1:
        if rem % 4 == 3:
            raise NotRepresentable(f"{rem} divides {n} to an odd power")
        a, b = _prime_sum_two_squares(rem)
        u, v = u * a + v * b, abs(u * b - v * a)
    u, v = u * scale, v * scale
    return (u, v) if u >= v else (v, u)


def decompose_three_squares(n: int) -> ThreeSquareDecomposition:
    """Return (n, x, y, z) with x² + y² + z² = n and x ≥ y ≥ z ≥ 0.

    Deterministic: x is the largest integer admitting a two-square
    completion of the remainder.  Raises NotRepresentable for integers
    of the form 4**a * (8*b + 7).
    """
    if not is_three_square_representable(n):
        raise NotRepresentable(f"{n} has the form 4^a(8b+7)")
    for x in range(isqrt(n), -1, -1):
        try:
            u, v = decompose_two_squares(n - x * x)
        except NotRepresentable:
            continue
        # maximality of x forces u <= x
        return ThreeSquareDecomposition(n, x, u, v)
    raise AssertionError(f"unreachable: {n} passed the representability test")
