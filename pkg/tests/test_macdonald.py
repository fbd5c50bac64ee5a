import pytest

from motiveforge.laurent import L, LaurentInt, lpow
from motiveforge.macdonald import (ENUMERATION_GUARD, EnumerationGuardError,
                                   curve_ranks, sym_power_bruteforce,
                                   sym_power_curve, sym_power_ranks)
from motiveforge.motive import MotiveClass, lambda_binomial
from motiveforge.moduli import range_sum
from motiveforge.realize import betti


def test_sym_power_curve_small():
    assert sym_power_curve(2, 0) == MotiveClass.one(2)
    assert sym_power_curve(2, 1) == MotiveClass(2, {0: 1 + L, 1: 1})


def test_sym_power_curve_g2():
    assert sym_power_curve(2, 2) == MotiveClass(2, {
        0: 1 + L + L ** 2, 1: 1 + L, 2: 1})
    assert sym_power_curve(2, 3) == MotiveClass(2, {
        0: 1 + L + L ** 2 + L ** 3, 1: 1 + 2 * L + L ** 2, 2: 1 + L})


def test_sym_power_curve_projective_bundle_over_jacobian():
    # at n = 2g-1 the symmetric product fibers over the jacobian in P^(g-1)
    for g in (1, 2, 3):
        assert (sym_power_curve(g, 2 * g - 1)
                == lambda_binomial(0, 0, g) * range_sum(0, g - 1))


def test_sym_power_curve_validates():
    with pytest.raises(ValueError):
        sym_power_curve(0, 2)
    with pytest.raises(ValueError):
        sym_power_curve(2, -1)


def test_sym_power_ranks_curve_square():
    assert (sym_power_ranks(curve_ranks(2), 2)
            == {0: 1, 1: 4, 2: 7, 3: 4, 4: 1})


def test_sym_power_ranks_point_and_odd_line():
    assert sym_power_ranks({0: 1}, 5) == {0: 1}
    # a single odd generator squares to zero
    assert sym_power_ranks({1: 1}, 2) == {}


def test_sym_power_ranks_rejects_bad_input():
    with pytest.raises(ValueError):
        sym_power_ranks({0: -1}, 2)
    with pytest.raises(ValueError):
        sym_power_ranks({0: 1}, -2)


def test_bruteforce_matches_ranks():
    cases = [
        ({0: 1, 1: 4, 2: 1}, 2),
        ({0: 1, 1: 4, 2: 1}, 3),
        ({0: 2, 1: 3, 2: 2}, 4),
        ({-1: 2, 0: 1, 3: 1}, 3),
        ({1: 5}, 3),
        ({2: 2, 4: 1}, 5),
    ]
    for b, n in cases:
        assert sym_power_bruteforce(b, n) == sym_power_ranks(b, n), (b, n)


def test_bruteforce_pure_exterior():
    from math import comb
    for g in (1, 2, 3):
        for k in range(2 * g + 2):
            expected = {k: comb(2 * g, k)} if comb(2 * g, k) else {}
            assert sym_power_bruteforce({1: 2 * g}, k) == expected


def test_bruteforce_pure_symmetric():
    assert sym_power_bruteforce({2: 1}, 3) == {6: 1}


def test_bruteforce_guard_trips():
    wide = {2 * k: 40 for k in range(1, 40)}
    with pytest.raises(EnumerationGuardError):
        sym_power_bruteforce(wide, 60)
    assert ENUMERATION_GUARD == 10_000_000


def test_triple_agreement():
    for g in (1, 2, 3):
        b = curve_ranks(g)
        for n in range(7):
            via_ranks = sym_power_ranks(b, n)
            assert sym_power_bruteforce(b, n) == via_ranks, (g, n)
            assert betti(sym_power_curve(g, n)) == LaurentInt(via_ranks), (g, n)


def test_top_degree_bound():
    # with an even top generator the top degree is exactly n times it
    b = {0: 1, 1: 2, 2: 1}
    for n in (1, 2, 3, 4):
        assert max(sym_power_ranks(b, n)) == 2 * n
    assert max(sym_power_ranks({1: 3, 4: 2}, 3)) == 12
