from math import isqrt

import pytest

from residue_squares.cauchy import CauchyWitness, Infeasible, cauchy_feasible, cauchy_solve


def _reachable_pairs(a_max):
    """All (sum of squares, sum) pairs over integer quadruples, truncated at a_max."""
    r = isqrt(a_max)
    pairs = set()
    for x1 in range(-r, r + 1):
        q1 = x1 * x1
        for x2 in range(-r, r + 1):
            q2 = q1 + x2 * x2
            if q2 > a_max:
                continue
            for x3 in range(-r, r + 1):
                q3 = q2 + x3 * x3
                if q3 > a_max:
                    continue
                s3 = x1 + x2 + x3
                for x4 in range(-r, r + 1):
                    q4 = q3 + x4 * x4
                    if q4 <= a_max:
                        pairs.add((q4, s3 + x4))
    return pairs


def _check_witness(w, a, b):
    assert w.x1**2 + w.x2**2 + w.x3**2 + w.x4**2 == a
    assert w.x1 + w.x2 + w.x3 + w.x4 == b


def test_examples():
    assert cauchy_feasible(7, 1)
    assert not cauchy_feasible(7, 2)
    assert not cauchy_feasible(8, 2)
    assert cauchy_solve(4, 4) == CauchyWitness(1, 1, 1, 1)
    assert cauchy_solve(7, 1) == CauchyWitness(2, 1, -1, -1)


def test_infeasible_reasons():
    with pytest.raises(Infeasible) as e:
        cauchy_solve(7, 2)
    assert e.value.reason == "parity"
    with pytest.raises(Infeasible) as e:
        cauchy_solve(1, 9)
    assert e.value.reason == "negative"
    with pytest.raises(Infeasible) as e:
        cauchy_solve(8, 2)
    assert e.value.reason == "legendre-form"


def test_equivalence_with_exhaustive_search():
    a_max = 120
    reachable = _reachable_pairs(a_max)
    for a in range(a_max + 1):
        for b in range(-25, 26):
            expected = (a, b) in reachable
            assert cauchy_feasible(a, b) == expected
            if expected:
                _check_witness(cauchy_solve(a, b), a, b)
            else:
                with pytest.raises(Infeasible):
                    cauchy_solve(a, b)


def test_recovery_identity():
    # (Σx)² + (x1+x2−x3−x4)² + (x1−x2+x3−x4)² + (x1−x2−x3+x4)² = 4Σx²
    vals = range(-4, 5)
    for x1 in vals:
        for x2 in vals:
            for x3 in vals:
                for x4 in vals:
                    lhs = (
                        (x1 + x2 + x3 + x4) ** 2
                        + (x1 + x2 - x3 - x4) ** 2
                        + (x1 - x2 + x3 - x4) ** 2
                        + (x1 - x2 - x3 + x4) ** 2
                    )
                    assert lhs == 4 * (x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4)


def test_degenerate_branch():
    for q in range(-10, 11):
        w = cauchy_solve(4 * q * q, 4 * q)
        assert w == CauchyWitness(q, q, q, q)


def test_large_instances():
    for a, b in ((10**6 + 3, 1), (999983, 123), (54321, -321)):
        if cauchy_feasible(a, b):
            _check_witness(cauchy_solve(a, b), a, b)
