"""Acceptance criteria, one test each.

Every test records a one-line verdict; ``conftest.py`` prints them at the end of
the pytest run, and running this file directly prints them too.
"""

import random
from fractions import Fraction

from g2nu import catalog
from g2nu.algebraic import ExactAngle
from g2nu.classify import CONVERSION, MODULI, STRUCTURES, WILKENS, ManifoldInvariants, VerdictLevel, full_verdict
from g2nu.config import (
    Configuration,
    check_matching_compatibility,
    configuration_angles,
    required_alpha_plus,
    route_check,
)
from g2nu.errors import G2NuError
from g2nu.invariants import nu_bar, nu_mod_48
from g2nu.maslov import Rho, kernel_example_pair, m_h3_formula, m_rho, maslov_angle
from g2nu.surds import Surd
from g2nu.torus import TorusFactor, gluing_angles, quotient_lattice

from conftest import POSITIVE_PARTS, compatible_configuration, random_configuration, random_lagrangian_pair

F = Fraction
RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    assert ok, RESULTS[n]


def test_01_nu_bar_regression():
    want = {"ex_3_6": -39, "ex_3_7": -36, "ex_3_8": -36, "ex_3_10": -51, "ex_3_11": -48}
    got = {k: nu_bar(catalog.get(k).configuration).nu_bar for k in want}
    record(1, got == want, "nu_bar " + ", ".join(f"{k}={v}" for k, v in got.items()))


def test_02_rectangular_case():
    rng = random.Random(2)
    cfgs = [compatible_configuration(rng, F(1, 2)) for _ in range(30)]
    cfgs += [catalog.get("rect_b74").configuration, catalog.get("rect_b86").configuration]
    values = {nu_bar(c).nu_bar for c in cfgs}
    record(2, values == {0}, f"{len(cfgs)} theta = pi/2 configurations, nu_bar values {sorted(str(v) for v in values)}")


def test_03_angle_spectra():
    ids = ["ex_3_6", "ex_3_7", "ex_3_8", "ex_3_10", "ex_3_11"]
    bad = [i for i in ids if configuration_angles(catalog.get(i).configuration) != catalog.get(i).expected_spectrum]
    record(3, not bad, f"{len(ids) - len(bad)}/{len(ids)} spectra match exactly" + (f"; mismatched {bad}" if bad else ""))


def test_04_matching_compatibility():
    entries = catalog.entries()
    ok_all = all(check_matching_compatibility(e.configuration) for e in entries)
    c = catalog.get("ex_3_6").configuration
    control = Configuration("control", 1, 1, c.gram.tolist(), F(1, 6), 2, 1)
    rejected = not check_matching_compatibility(control)
    record(4, ok_all and rejected, f"catalog compatible: {ok_all}; theta-mismatch control rejected: {rejected}")


def test_05_route_equivalence():
    rng = random.Random(5)
    checked = failures = 0
    for e in catalog.entries():
        checked += 1
        failures += not route_check(e.configuration)
    randoms = 0
    while randoms < 100:
        cfg = random_configuration(rng, rng.randint(1, 3), rng.randint(1, 3))
        if cfg is None:
            continue
        try:
            spectrum = configuration_angles(cfg)
        except G2NuError:
            continue
        randoms += 1
        failures += not route_check(cfg, spectrum)
    record(5, failures == 0, f"{checked} catalog + {randoms} random configurations, {failures} disagreements")


def test_06_maslov_suite():
    thetas = [F(1, 6), F(1, 4), F(1, 3), F(1, 2), F(2, 3)]
    kernel_ok = all(maslov_angle(kernel_example_pair(t)).value == 1 - 2 * t for t in thetas)
    rng = random.Random(6)
    same_ok = True
    for n in (1, 2, 3, 4):
        p = random_lagrangian_pair(rng, n)
        same_ok &= maslov_angle(type(p)(p.metric, p.gamma, p.L_plus, p.L_plus)).value == 0
    pairs = anti_fail = 0
    for n in (1, 2, 3, 4):
        for _ in range(25):
            p = random_lagrangian_pair(rng, n)
            pairs += 1
            anti_fail += maslov_angle(p).value != -maslov_angle(p.swapped()).value
    record(
        6,
        kernel_ok and same_ok and anti_fail == 0,
        f"kernel values exact: {kernel_ok}; m(L, L) = 0: {same_ok}; antisymmetry {pairs - anti_fail}/{pairs} in dims 2-8",
    )


def test_07_formula_consistency():
    fails = 0
    for e in catalog.entries():
        s = configuration_angles(e.configuration)
        rho = Rho.from_theta(e.configuration.theta)
        fails += m_h3_formula(rho, s.alpha_plus, s.alpha_minus) != -16 * rho.value + m_rho(rho, s.alpha_minus)
    rng = random.Random(7)
    trials = 300
    for _ in range(trials):
        theta = F(rng.randint(1, 23), 24)
        am: list = []
        while len(am) < 19:
            r = rng.random()
            if r < 0.3 and len(am) <= 17:
                t = F(rng.randint(1, 23), 24)
                am += [ExactAngle.from_pi(t), ExactAngle.from_pi(-t)]
            elif r < 0.35:
                am.append(ExactAngle.pi())
            else:
                am.append(ExactAngle.zero())
        rho = Rho.from_theta(theta)
        fails += m_h3_formula(rho, required_alpha_plus(theta), am) != -16 * rho.value + m_rho(rho, am)
    record(7, fails == 0, f"{len(catalog.entries())} catalog + {trials} random multisets, {fails} disagreements")


def test_08_classification_chains():
    v4 = full_verdict(ManifoldInvariants(97, 4, nu_bar=-36), ManifoldInvariants(97, 4, nu_bar=0))
    v5 = full_verdict(ManifoldInvariants(109, 4, nu_bar=-48), ManifoldInvariants(109, 4, nu_bar=0))
    text5 = " ".join(v5.reasoning)
    cites = all(c in text5 for c in (WILKENS, STRUCTURES, CONVERSION, MODULI)) and WILKENS in " ".join(v4.reasoning)
    ok = (
        v4.level is VerdictLevel.DIFFEOMORPHIC_DISTINCT_STRUCTURES
        and v5.level is VerdictLevel.DISTINCT_MODULI_COMPONENTS
        and cites
    )
    record(8, ok, f"(97,4): {v4.level.value}; (109,4): {v5.level.value}; reasoning cites each step: {cites}")


def test_09_bound_and_divisibility():
    cfgs = [e.configuration for e in catalog.entries()]
    rng = random.Random(9)
    for theta in POSITIVE_PARTS:
        cfgs += [compatible_configuration(rng, theta) for _ in range(15)]
    bad = 0
    for c in cfgs:
        r = nu_bar(c)
        bad += not (r.integral and r.nu_bar.numerator % 3 == 0 and -75 < r.term_gluing + r.term_maslov < 75)
    record(9, bad == 0, f"{len(cfgs)} configurations with k <= 2, {bad} violations")


def test_10_torus_matching():
    one, r2, r3 = Surd(1), Surd.sqrt(2), Surd.sqrt(3)
    recipes = {
        F(1, 4): (TorusFactor(2, one, one), TorusFactor(1, one / r2, one / r2)),
        F(1, 6): (TorusFactor(2, one, r3), TorusFactor(2, r3, one)),
        F(1, 3): (TorusFactor(2, one, r3), TorusFactor(2, one, r3)),
    }
    found = {t: t in [g.over_pi for g in gluing_angles(*pair)] for t, pair in recipes.items()}
    zeta = r3
    sq = quotient_lattice(TorusFactor(2, zeta, zeta))
    side_ok = all(v[0] * v[0] + v[1] * v[1] == (zeta / r2) * (zeta / r2) for v in sq.basis)
    summary = ", ".join(f"pi*{t}: {v}" for t, v in found.items())
    record(10, all(found.values()) and side_ok, f"recipes found {summary}; square side = zeta/sqrt2: {side_ok}")


def test_11_berger_identity():
    v = catalog.berger_identity()
    record(11, v == 1, f"identity evaluates to {v}")


def test_12_nu_conversion():
    a, b = nu_mod_48(-48, 0, True), nu_mod_48(0, 0, True)
    record(12, a == 24 and b == 24, f"nu_mod_48(-48) = {a}, nu_mod_48(0) = {b}")


if __name__ == "__main__":
    import sys

    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS[k] for k in sorted(RESULTS)))
    sys.exit(0 if all("PASS" in v for v in RESULTS.values()) and len(RESULTS) == 12 else 1)
