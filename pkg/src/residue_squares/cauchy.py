"""Constructive solver for the constrained four-square system

    x1² + x2² + x3² + x4² = a,    x1 + x2 + x3 + x4 = b.

An integer solution exists iff a ≡ b (mod 2), 4a − b² ≥ 0, and 4a − b²
is not of the form 4^α(8β+7).
"""

import itertools
from math import isqrt
from typing import NamedTuple

from .arith import (
    NotRepresentable,
    decompose_two_squares,
    is_three_square_representable,
)


class Infeasible(Exception):
    """The (a, b) system has no integer solution.

    reason is one of "parity", "negative", "legendre-form".
    """

    def __init__(self, a: int, b: int, reason: str):
        super().__init__(f"no solution for a={a}, b={b}: {reason}")
        self.a = a
        self.b = b
        self.reason = reason


class CauchyInstance(NamedTuple):
    a: int
    b: int


class CauchyWitness(NamedTuple):
    x1: int
    x2: int
    x3: int
    x4: int


_SIGNS = tuple(itertools.product((1, -1), repeat=3))


def cauchy_feasible(a: int, b: int) -> bool:
    """True iff the constrained four-square system for (a, b) is solvable."""
    if (a - b) % 2 != 0:
        return False
    disc = 4 * a - b * b
    return disc >= 0 and is_three_square_representable(disc)


def cauchy_solve(a: int, b: int) -> CauchyWitness:
    """Return a quadruple solving the system; raises Infeasible otherwise.

    For 4a − b² = 0 the solution is the constant quadruple b/4 (the
    solvability conditions force 4 | b there).  Otherwise decompose
    4a − b² = s1² + s2² + s3²; every such triple matches the parity of b,
    and a sign pattern with 4 | b + ±s1 ± s2 ± s3 always exists, from
    which the quadruple is recovered linearly.
    """
    if (a - b) % 2 != 0:
        raise Infeasible(a, b, "parity")
    disc = 4 * a - b * b
    if disc < 0:
        raise Infeasible(a, b, "negative")
    if not is_three_square_representable(disc):
        raise Infeasible(a, b, "legendre-form")
    if disc == 0:
        q = b // 4
        return CauchyWitness(q, q, q, q)
    for s1 in range(isqrt(disc), -1, -1):
        try:
            s2, s3 = decompose_two_squares(disc - s1 * s1)
        except NotRepresentable:
            continue
        if (s1 - b) % 2 or (s2 - b) % 2 or (s3 - b) % 2:
            continue
        for e1, e2, e3 in _SIGNS:
            t1, t2, t3 = e1 * s1, e2 * s2, e3 * s3
            if (b + t1 + t2 + t3) % 4 == 0:
                return CauchyWitness(
                    (b + t1 + t2 + t3) // 4,
                    (b + t1 - t2 - t3) // 4,
                    (b - t1 + t2 - t3) // 4,
                    (b - t1 - t2 + t3) // 4,
                )
    raise AssertionError(f"sign search failed for a={a}, b={b}")
