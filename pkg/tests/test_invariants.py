import random
from fractions import Fraction

import pytest

from g2nu import catalog
from g2nu.config import Configuration
from g2nu.errors import CompatibilityError, InputError
from g2nu.invariants import BoundViolation, bound_check, eta_signature, nu_bar, nu_mod_48
from g2nu.maslov import Rho, m_h3_formula

from conftest import POSITIVE_PARTS, compatible_configuration

F = Fraction
EXPECTED = {"ex_3_6": -39, "ex_3_7": -36, "ex_3_8": -36, "ex_3_10": -51, "ex_3_11": -48, "rect_b74": 0, "rect_b86": 0}


@pytest.mark.parametrize("entry_id,value", EXPECTED.items())
def test_catalog_nu_bar(entry_id, value):
    r = nu_bar(catalog.get(entry_id).configuration)
    assert r.nu_bar == value
    assert r.term_halves + r.term_gluing + r.term_maslov == r.nu_bar
    assert r.integral and r.divisible_by_3 and r.within_bound and not r.conditional_on_halves
    assert r.nu_mod_48 == (value + 24) % 48


def test_report_terms_ex_3_6():
    r = nu_bar(catalog.get("ex_3_6").configuration)
    assert (r.rho_over_pi, r.m_rho, r.term_gluing, r.term_maslov) == (F(1, 2), -1, -36, -3)


def test_theta_reflection_negates_nu_bar():
    for e in catalog.entries():
        c = e.configuration
        flipped = Configuration(c.name, c.rank_plus, c.rank_minus, c.gram.tolist(), 1 - c.theta, c.k_plus, c.k_minus)
        assert nu_bar(flipped).nu_bar == -e.expected_nu_bar


def test_rectangular_gives_zero():
    rng = random.Random(4)
    for _ in range(20):
        cfg = compatible_configuration(rng, F(1, 2))
        assert nu_bar(cfg).nu_bar == 0


def test_incompatible_raises():
    c = catalog.get("ex_3_6").configuration
    wrong = Configuration(c.name, 1, 1, c.gram.tolist(), F(1, 3), 2, 1)
    with pytest.raises(CompatibilityError):
        nu_bar(wrong)


def test_halves_required_for_large_k():
    cfg = Configuration("big", 1, 1, [[2, 2], [2, 4]], F(1, 4), 3, 1)
    with pytest.raises(InputError):
        nu_bar(cfg)
    supplied = Configuration("big", 1, 1, [[2, 2], [2, 4]], F(1, 4), 3, 1, F(1, 3), F(0))
    r = nu_bar(supplied)
    assert r.conditional_on_halves and r.divisible_by_3 is None
    assert r.nu_bar == F(1, 3) - 39
    assert not r.integral and r.nu_mod_48 is None


@pytest.mark.parametrize("args,expected", [((-48, 0, True), 24), ((0, 0, True), 24), ((-36, 0, True), 36), ((-39,), 33)])
def test_nu_mod_48(args, expected):
    assert nu_mod_48(*args) == expected


def test_nu_mod_48_properties():
    for v in range(-200, 200, 3):
        assert (nu_mod_48(v) - 24 - v) % 48 == 0
    assert nu_mod_48(0, 1, False) == 0
    with pytest.raises(InputError):
        nu_mod_48(0, 1, True)
    with pytest.raises(InputError):
        nu_mod_48(F(1, 2))


@pytest.mark.parametrize("entry", catalog.entries(), ids=lambda e: e.id)
def test_eta_signature_matches_h3_formula(entry):
    cfg = entry.configuration
    r = nu_bar(cfg)
    rho = Rho(r.rho_over_pi)
    assert eta_signature(cfg) == m_h3_formula(rho, r.spectrum.alpha_plus, r.spectrum.alpha_minus)


def test_eta_signature_examples():
    assert eta_signature(catalog.get("ex_3_6").configuration) == -9
    assert eta_signature(catalog.get("ex_3_11").configuration) == F(-32, 3)
    assert eta_signature(catalog.get("rect_b74").configuration) == 0
    assert eta_signature(catalog.get("ex_3_6").configuration, F(1), F(2)) == -6


def test_bound_check():
    assert bound_check(F(1, 2), -1)
    assert bound_check(F(2, 3), 0)
    assert not bound_check(F(5, 6), -6)  # -60 - 18 = -78
    with pytest.raises(BoundViolation):
        bound_check(F(1), 9)


def test_random_small_k_divisible_and_bounded():
    rng = random.Random(99)
    for theta in POSITIVE_PARTS:
        for _ in range(15):
            r = nu_bar(compatible_configuration(rng, theta))
            assert r.integral and r.nu_bar.numerator % 3 == 0
            assert -75 < r.term_gluing + r.term_maslov < 75
