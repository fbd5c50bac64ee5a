"""Acceptance suite: one test per criterion, exact integer arithmetic
throughout, one printed pass/fail line each."""

import json
import random
from contextlib import contextmanager
from math import comb

from motiveforge.laurent import L, LaurentInt, lpow
from motiveforge.macdonald import (curve_ranks, sym_power_bruteforce,
                                   sym_power_curve, sym_power_ranks)
from motiveforge.moduli import (kummer, m_omega_s, n0_even, n0_even_stable,
                                n0_odd, n0_odd_chain, n0_odd_closed,
                                pair_moduli, ss_preimage)
from motiveforge.motive import MotiveClass, lambda_binomial
from motiveforge.realize import (betti, hodge, hodge_closed, hn_closed,
                                 level_per_weight)
from motiveforge.jacobians import closed_multiplicities, decompose
from motiveforge.series import big_f

CASES = 1000
SEED = 424242


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d} [{title}]: FAIL")
        raise
    print(f"criterion {number:2d} [{title}]: pass")


def _random_laurent(rng, lo=-4, hi=6, terms=4):
    return LaurentInt({rng.randint(lo, hi): rng.randint(-9, 9)
                       for _ in range(rng.randint(0, terms))})


def _random_class(rng, genus=None):
    g = genus if genus is not None else rng.randint(1, 4)
    return MotiveClass(g, {a: _random_laurent(rng)
                           for a in range(g + 1) if rng.random() < 0.7})


def test_c01_macdonald_triple_agreement():
    with criterion(1, "MacDonald triple agreement"):
        for g in (1, 2, 3):
            b = curve_ranks(g)
            for n in range(7):
                via_ranks = sym_power_ranks(b, n)
                assert sym_power_bruteforce(b, n) == via_ranks, (g, n)
                assert betti(sym_power_curve(g, n)) == LaurentInt(via_ranks), (g, n)
        assert (betti(sym_power_curve(2, 2))
                == LaurentInt({0: 1, 1: 4, 2: 7, 3: 4, 4: 1}))


def test_c02_harder_narasimhan_reproduction():
    with criterion(2, "Harder-Narasimhan Betti reproduction"):
        for g in range(2, 7):
            assert betti(n0_odd(g)) == hn_closed(g), g
        assert hn_closed(2) == LaurentInt({0: 1, 2: 1, 3: 4, 4: 1, 6: 1})


def test_c03_n0_class_and_duality():
    with criterion(3, "odd moduli class at g=2 and Poincare duality"):
        assert n0_odd(2) == MotiveClass(2, {
            0: 1 + L + L ** 2 + L ** 3, 1: lpow(1)})
        for g in (2, 3, 4, 5):
            c = n0_odd(g)
            assert c == c.dual() * lpow(3 * g - 3), g


def test_c04_two_path_and_degree_independence():
    with criterion(4, "flip chain vs closed form, degree independence"):
        for g in (2, 3, 4):
            assert n0_odd_chain(g) == n0_odd_closed(g), g
        for g in (2, 3):
            assert n0_odd_chain(g, 4 * g - 3) == n0_odd_chain(g, 4 * g - 1), g


def test_c05_hodge_reproduction():
    with criterion(5, "Hodge reproduction and specialization"):
        for g in (2, 3, 4):
            assert hodge(n0_odd(g)) == hodge_closed(g), g
        assert hodge_closed(2).coeff(2, 1) == 2
        rng = random.Random(SEED)
        for _ in range(200):
            x = _random_class(rng)
            assert hodge(x).specialize_diagonal() == betti(x)


def test_c06_level_bound():
    with criterion(6, "Hodge level bound"):
        for g in (2, 3, 4, 5):
            c = n0_odd(g)
            assert all(v > 0 for _, v in hodge(c).items()), g
            for m, lv in level_per_weight(c).items():
                assert lv <= m // 3, (g, m, lv)


def test_c07_main_lemma():
    with criterion(7, "binomial symmetry identity"):
        for g in range(1, 6):
            for ea in range(-2, 3):
                for eb in range(-2, 3):
                    assert (lambda_binomial(ea, eb, g)
                            == lambda_binomial(eb + 1, ea, g) * lpow(-g)), (g, ea, eb)


def test_c08_big_f_cross_mode():
    with criterion(8, "kernel extraction: series mode equals closed mode"):
        for g in (1, 2, 3, 4):
            for e1 in range(-2, 3):
                for e2 in range(-2, 3):
                    for e3 in range(-2, 3):
                        if len({e1, e2, e3}) < 3:
                            continue
                        assert (big_f(e1, e2, e3, g, "series")
                                == big_f(e1, e2, e3, g, "closed")), (g, e1, e2, e3)


def test_c09_even_pipeline_intermediates():
    with criterion(9, "even-pipeline intermediates at g=2"):
        assert pair_moduli(2, 6, 2) == MotiveClass(2, {
            0: {0: 1, 1: 2, 2: 4, 3: 4, 4: 4, 5: 2, 6: 1},
            1: {1: 1, 2: 2, 3: 2, 4: 1},
            2: {2: 1}})
        assert ss_preimage(2) == MotiveClass(2, {
            0: {0: 1, 1: 2, 2: 3, 3: 3, 4: 2, 5: 1},
            1: {0: 1, 1: 3, 2: 4, 3: 3, 4: 1},
            2: {0: 1, 1: 2, 2: 2, 3: 1}})
        assert m_omega_s(2) == MotiveClass(2, {
            0: {0: 1, 1: 1, 2: 2, 3: 1, 4: 1},
            1: {2: -1, 3: -2, 4: -2, 5: -1},
            2: {1: -1, 2: -1, 3: -2, 4: -1}})


def test_c10_kummer_classes():
    with criterion(10, "Kummer classes and ranks"):
        assert kummer(2) == MotiveClass(2, {0: 1 + L ** 2, 2: 1})
        assert kummer(2).rank() == 8
        assert kummer(3) == MotiveClass(3, {0: 1 + L ** 3, 2: 1 + L})
        assert kummer(3).rank() == 32
        for g in range(1, 7):
            assert kummer(g).rank() == 2 ** (2 * g - 1), g


def test_c11_diagnostic_contract():
    with criterion(11, "even-pipeline diagnostics"):
        _, flags = n0_even_stable(2, 40)
        assert flags == {0: False, 1: False, 2: False}
        for g in (3, 4):
            rep = n0_even(g)
            blob = json.dumps(rep.to_json_dict())
            assert blob == json.dumps(n0_even(g).to_json_dict()), g
            cut, diffs = rep.stage("truncation_vs_odd").value
            assert cut == 2 * g - 2
            # recorded finding, not asserted equality: report the diff map
            print(f"    finding: g={g} truncation diff weights "
                  f"{sorted(diffs) if diffs else 'none'}")


def test_c12_jacobian_decompositions():
    with criterion(12, "intermediate jacobian decompositions"):
        for g in (2, 3, 4, 5):
            poly = betti(n0_odd(g))
            for i in range(1, g + 1):
                dec = decompose(g, i)
                assert list(dec.factors) == closed_multiplicities(i), (g, i)
                total = sum(m * comb(2 * g, 2 * a - 1) for a, m in dec.factors)
                assert total == poly.coeff(2 * i - 1), (g, i)
        assert decompose(5, 5).factors == ((1, 2), (2, 1))


def test_c13_property_suites():
    with criterion(13, f"property suites ({CASES} randomized cases each)"):
        rng = random.Random(SEED)
        for _ in range(CASES):  # ring laws
            a, b, c = (_random_laurent(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
        for _ in range(CASES):  # canonicalize idempotence
            g = rng.randint(1, 4)
            raw = {a: _random_laurent(rng) for a in range(2 * g + 1)
                   if rng.random() < 0.5}
            x = MotiveClass(g, raw)
            assert MotiveClass(g, x.components()) == x
        for _ in range(CASES):  # dual involution
            x = _random_class(rng)
            assert x.dual().dual() == x
        for _ in range(CASES):  # twist inverse
            x = _random_class(rng)
            n = rng.randint(-5, 5)
            assert x.twist(n).twist(-n) == x
        for _ in range(CASES):  # exact-division round trip
            x = _random_class(rng)
            p = LaurentInt()
            while not p:
                p = _random_laurent(rng, lo=-3, hi=4, terms=3)
            assert (x * p).exact_div(p) == x
        for _ in range(CASES):  # weight homogeneity of products
            x = _random_class(rng)
            k = rng.randint(-3, 3)
            m = rng.randint(-6, 12)
            assert ((x * lpow(k)).weight_part(m)
                    == x.weight_part(m - 2 * k) * lpow(k))
        for _ in range(CASES):  # serialization round trip
            x = _random_class(rng)
            assert MotiveClass.from_json_dict(
                json.loads(json.dumps(x.to_json_dict()))) == x
