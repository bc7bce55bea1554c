from fractions import Fraction

import pytest

from residue_squares.engine import (
    BelowBound,
    ConstructionFailed,
    NoSU,
    NotCoprime,
    OutOfRange,
    ResidueClass,
    SquareRepresentation,
    asu_value,
    decompose_asu,
    decompose_effective,
    decompose_small,
    decompose_su,
    effective_bound,
    make_class,
    member_squares,
    min_squares_oracle,
    min_squares_terms,
    residue_constraints,
    su_exists,
    su_value,
    threshold_profile,
    verify_representation,
)


def test_make_class():
    assert make_class(5, -4) == ResidueClass(5, 1, 1)
    assert make_class(8, 3) == ResidueClass(8, 3, 2)
    assert make_class(6, 1).M == 4
    assert make_class(1, 17) == ResidueClass(1, 1, 1)
    with pytest.raises(NotCoprime):
        make_class(6, 3)


def test_threshold_values():
    pins = {2: (10, 10), 3: (6, 6), 4: (10, 10), 5: (8, 16), 6: (26, 26), 7: (10, 35), 12: (27, 120)}
    for m, (asu, su) in pins.items():
        cls = make_class(m, 1)
        assert asu_value(cls) == asu
        assert su_value(cls) == su
    assert asu_value(make_class(1, 1)) == 4
    assert su_value(make_class(1, 1)) == 4
    assert asu_value(make_class(8, 1)) == 18


def test_su_existence():
    assert not su_exists(make_class(5, 2))
    assert su_exists(make_class(7, 6))
    assert su_exists(make_class(1, 1))
    with pytest.raises(NoSU):
        su_value(make_class(5, 2))


def test_effective_bound_exact():
    assert effective_bound(make_class(5, 1)) == Fraction(15629, 4)
    assert effective_bound(make_class(6, 1)) == 85
    assert effective_bound(make_class(8, 1)) == 1026
    assert effective_bound(make_class(8, 3)) == 1042
    assert effective_bound(make_class(12, 5)) == 5234
    profile = threshold_profile(make_class(5, 2))
    assert profile.su is None and profile.asu == 8


def test_residue_constraints():
    rc = residue_constraints(31, make_class(5, 1))
    assert (rc.r0, rc.t) == (1, 6)
    assert rc.admits(16) and not rc.admits(15)
    rc = residue_constraints(3, make_class(2, 1))
    assert (rc.r0, rc.t) == (1, 1)
    assert rc.admits(3) and not rc.admits(1)  # t=1 forces (r-1)/2 odd
    for m, d in ((5, 2), (7, 3), (9, 4)):
        cls = make_class(m, d)
        rc = residue_constraints(d * d, cls)
        assert (rc.r0, rc.t) == (1, 0)


def test_verify_representation():
    assert verify_representation(SquareRepresentation(2, (1, 1)), make_class(1, 1))
    assert not verify_representation(SquareRepresentation(2, (1, 2)), make_class(1, 1))
    assert not verify_representation(SquareRepresentation(49, (7,)), make_class(8, 1))
    assert verify_representation(SquareRepresentation(49, (-7,)), make_class(8, 1))
    assert not verify_representation(SquareRepresentation(2, ()), make_class(1, 1))
    assert not verify_representation(SquareRepresentation(50, (1, -7)), make_class(8, 1))


def test_decompose_asu_examples():
    cls = make_class(5, 1)
    rep = decompose_asu(3908, cls)
    assert verify_representation(rep, cls)
    assert len(rep.terms) <= 8
    cls = make_class(8, 1)
    rep = decompose_asu(1026, cls)
    assert verify_representation(rep, cls)
    assert len(rep.terms) <= 19
    with pytest.raises(BelowBound):
        decompose_asu(1, make_class(5, 1))


def test_decompose_asu_respects_constraints():
    for m, d in ((5, 1), (6, 1), (8, 3), (12, 5), (9, 2), (10, 3)):
        cls = make_class(m, d)
        start = -(-effective_bound(cls).numerator // effective_bound(cls).denominator)
        for n in range(start, start + 40):
            rep = decompose_asu(n, cls)
            assert verify_representation(rep, cls)
            assert len(rep.terms) <= cls.M * m + 3
            assert residue_constraints(n, cls).admits(len(rep.terms))


def test_decompose_small_examples():
    cls = make_class(8, 1)
    assert decompose_small(48, cls).terms == (1,) * 48
    assert decompose_small(49, cls).terms == (-7,)
    rep = decompose_small(784, cls)
    assert verify_representation(rep, cls)
    assert len(rep.terms) <= 48
    with pytest.raises(OutOfRange):
        decompose_small(785, cls)
    with pytest.raises(OutOfRange):
        decompose_small(10, make_class(7, 1))
    with pytest.raises(OutOfRange):
        decompose_small(10, make_class(8, 3))


def test_decompose_small_full_range_m8():
    for d in (1, 7):
        cls = make_class(8, d)
        for n in range(1, 2 * 8 * 49 + 1):
            rep = decompose_small(n, cls)
            assert verify_representation(rep, cls)
            assert len(rep.terms) <= 48


def test_decompose_effective_examples():
    cls = make_class(6, 1)
    rep = decompose_effective(300, cls)
    assert verify_representation(rep, cls)
    assert len(rep.terms) <= 27
    cls = make_class(7, 1)
    rep = decompose_effective(10**6, cls)
    assert verify_representation(rep, cls)
    assert len(rep.terms) <= 10
    with pytest.raises(OutOfRange):
        decompose_effective(299, make_class(6, 1))


def test_decompose_effective_negative_residue():
    for m in (6, 8, 12):
        cls = make_class(m, m - 1)
        lo = 2 * m * (m - 1) ** 2
        for n in range(lo, lo + 60):
            rep = decompose_effective(n, cls)
            assert verify_representation(rep, cls)
            assert len(rep.terms) <= cls.M * m + 3


def test_oracle_examples():
    assert min_squares_oracle(31, make_class(5, 1), 31) == 16
    assert min_squares_oracle(35, make_class(7, 1), 35) == 35
    assert min_squares_oracle(1, make_class(5, 1), 4) == 1
    assert min_squares_oracle(31, make_class(5, 1), 15) is None
    assert min_squares_oracle(2, make_class(3, 1), 30) == 2


def test_oracle_terms_reconstruction():
    cls = make_class(5, 1)
    for n in range(1, 400):
        count = min_squares_oracle(n, cls, 16)
        terms = min_squares_terms(n, cls, 16)
        assert count is not None and len(terms) == count
        assert sum(y * y for y in terms) == n
        assert all((y - 1) % 5 == 0 for y in terms)


def test_oracle_symmetry_under_negation():
    for m, d in ((5, 2), (8, 3), (7, 2)):
        a, b = make_class(m, d), make_class(m, m - d)
        for n in range(1, 200):
            assert min_squares_oracle(n, a, 40) == min_squares_oracle(n, b, 40)


def test_member_squares():
    assert member_squares(make_class(5, 1), 40) == [1, 16, 36]
    assert member_squares(make_class(1, 1), 10) == [1, 4, 9]


def test_decompose_su_pins():
    rep = decompose_su(31, make_class(5, 1))
    assert len(rep.terms) == 16
    assert verify_representation(rep, make_class(5, 1))
    assert decompose_su(49, make_class(8, 1)).terms == (-7,)
    assert len(decompose_su(48, make_class(8, 1)).terms) == 48
    with pytest.raises(NoSU):
        decompose_su(10, make_class(5, 2))


def test_decompose_su_small_moduli_sweep():
    for m, d in ((1, 1), (2, 1), (3, 1), (3, 2), (4, 1), (4, 3)):
        cls = make_class(m, d)
        cap = su_value(cls)
        for n in range(1, 120):
            rep = decompose_su(n, cls)
            assert verify_representation(rep, cls)
            assert len(rep.terms) <= cap


def test_decompose_su_m6_mod24_family():
    cls = make_class(6, 1)
    for n in range(3, 5000, 24):
        rep = decompose_su(n, cls)
        assert verify_representation(rep, cls)
        assert len(rep.terms) == 3
    cls = make_class(6, 5)
    rep = decompose_su(75, cls)
    assert verify_representation(rep, cls)
    assert len(rep.terms) == 3


def test_decompose_su_m5_m7_coverage():
    for m in (5, 7):
        cls = make_class(m, 1)
        cap = su_value(cls)
        for n in list(range(1, 200)) + [3906, 3907, 3908, 15007, 15008]:
            rep = decompose_su(n, cls)
            assert verify_representation(rep, cls)
            assert len(rep.terms) <= cap


def test_decompose_su_m6_general_sweep():
    cls = make_class(6, 1)
    for n in range(1, 400):
        rep = decompose_su(n, cls)
        assert verify_representation(rep, cls)
        assert len(rep.terms) <= 26


def test_decompose_asu_conjugate_classes():
    # d above m/2: the construction must work in the least-absolute frame
    classes = ((6, 5), (10, 9), (14, 11), (16, 13), (5, 4), (7, 6), (9, 7), (13, 12))
    for m, d in classes:
        cls = make_class(m, d)
        lo = -(-effective_bound(cls).numerator // effective_bound(cls).denominator)
        cap = cls.M * m + 3
        for n in range(lo, lo + 60):
            rep = decompose_asu(n, cls)
            assert verify_representation(rep, cls)
            assert len(rep.terms) <= cap
            assert residue_constraints(n, cls).admits(len(rep.terms))


def test_decompose_asu_dead_family():
    # For odd m a scattered set of n above the bound has its one admissible
    # family fully excluded by the three-square form 4^a(8b+7); the smallest
    # with m=5 is 6144, whose true minimal count 9 exceeds m+3 = 8.
    cls = make_class(5, 1)
    with pytest.raises(ConstructionFailed):
        decompose_asu(6144, cls)
    assert min_squares_oracle(6144, cls, 9) == 9
    cls = make_class(11, 8)
    with pytest.raises(ConstructionFailed):
        decompose_asu(91776, cls)
    assert min_squares_oracle(91776, cls, 15) == 15


def test_decompose_su_escalates_past_dead_family():
    # the universal cap leaves room for longer pads when the almost
    # universal window is stuck
    for m, d, n in ((5, 1, 6144), (5, 1, 6147), (5, 4, 6144), (7, 1, 18176)):
        cls = make_class(m, d)
        rep = decompose_su(n, cls)
        assert verify_representation(rep, cls)
        assert len(rep.terms) <= su_value(cls)
    assert len(decompose_su(6144, make_class(5, 1)).terms) == 9
