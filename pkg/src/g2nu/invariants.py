"""The extended nu-invariant of an extra twisted connected sum.

nu_bar = nu_bar(M+) + nu_bar(M-) - 72 rho/pi + 3 m_rho, with rho = pi - 2 theta,
and nu = nu_bar + 24 (1 + b1) mod 48.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .config import AngleSpectrum, Configuration, check_matching_compatibility, configuration_angles
from .errors import CompatibilityError, InputError, MathematicalError
from .maslov import Rho, _counts, m_rho

BOUND = 75


@dataclass(frozen=True)
class NuReport:
    name: str
    rho_over_pi: Fraction
    m_rho: int
    term_halves: Fraction
    term_gluing: Fraction
    term_maslov: int
    nu_bar: Fraction
    nu_mod_48: int | None
    b1: int
    integral: bool
    divisible_by_3: bool | None
    within_bound: bool
    conditional_on_halves: bool
    spectrum: AngleSpectrum | None = None


def _halves(cfg: Configuration) -> tuple[Fraction, bool]:
    supplied = cfg.nu_bar_plus is not None or cfg.nu_bar_minus is not None
    if not supplied:
        if not cfg.small_k:
            raise InputError(
                f"{cfg.name}: k+ = {cfg.k_plus}, k- = {cfg.k_minus}; the halves only vanish for k <= 2, "
                "so nu_bar_plus and nu_bar_minus must be supplied"
            )
        return Fraction(0), False
    return (cfg.nu_bar_plus or Fraction(0)) + (cfg.nu_bar_minus or Fraction(0)), True


def nu_bar(cfg: Configuration, b1: int = 0, exact: bool = True, tolerance: float = 1e-9) -> NuReport:
    spectrum = configuration_angles(cfg, exact=exact, tolerance=tolerance)
    compat = check_matching_compatibility(cfg, spectrum)
    if not compat:
        raise CompatibilityError(f"{cfg.name}: {compat.message}")
    halves, conditional = _halves(cfg)
    rho = Rho.from_theta(cfg.theta)
    m = m_rho(rho, spectrum.alpha_minus)
    gluing = -72 * rho.value
    value = halves + gluing + 3 * m
    integral = value.denominator == 1
    if cfg.small_k and not conditional and not integral:
        raise MathematicalError(f"{cfg.name}: non-integral nu_bar {value} for k <= 2")
    divisible = None
    if cfg.small_k and not conditional:
        divisible = integral and value.numerator % 3 == 0
    return NuReport(
        name=cfg.name,
        rho_over_pi=rho.value,
        m_rho=m,
        term_halves=halves,
        term_gluing=gluing,
        term_maslov=3 * m,
        nu_bar=value,
        nu_mod_48=nu_mod_48(value.numerator, b1) if integral else None,
        b1=b1,
        integral=integral,
        divisible_by_3=divisible,
        within_bound=bound_check(rho.value, m),
        conditional_on_halves=conditional,
        spectrum=spectrum,
    )


def nu_mod_48(nu_bar_value: int, b1: int = 0, holonomy_exactly_g2: bool = True) -> int:
    """Canonical residue of nu_bar + 24 (1 + b1) modulo 48."""
    if isinstance(nu_bar_value, Fraction):
        if nu_bar_value.denominator != 1:
            raise InputError(f"nu_bar must be an integer, got {nu_bar_value}")
        nu_bar_value = nu_bar_value.numerator
    if b1 < 0:
        raise InputError("b1 must be non-negative")
    if holonomy_exactly_g2 and b1:
        raise InputError("full holonomy G2 forces finite fundamental group, so b1 must be 0")
    return (nu_bar_value + 24 * (1 + b1)) % 48


def eta_signature(
    cfg: Configuration,
    eta_aps_plus: Fraction = Fraction(0),
    eta_aps_minus: Fraction = Fraction(0),
    spectrum: AngleSpectrum | None = None,
) -> Fraction:
    """eta of the odd signature operator assembled from the halves and the neck."""
    spectrum = spectrum or configuration_angles(cfg)
    compat = check_matching_compatibility(cfg, spectrum)
    if not compat:
        raise CompatibilityError(f"{cfg.name}: {compat.message}")
    rho = Rho.from_theta(cfg.theta)
    return Fraction(eta_aps_plus) + Fraction(eta_aps_minus) - 16 * rho.value + m_rho(rho, spectrum.alpha_minus)


class BoundViolation(InputError):
    """The inputs of the bound check are outside its domain."""


def bound_check(rho_over_pi: Fraction, m: int, alpha_minus: Sequence | None = None) -> bool:
    """Strict bound |-72 rho/pi + 3 m_rho| < 75.

    Raises :class:`BoundViolation` when |rho/pi| >= 1, or when the angle counts
    behind m_rho (if given) fall outside 0..19.
    """
    rho_over_pi = Fraction(rho_over_pi)
    if not -1 < rho_over_pi < 1:
        raise BoundViolation(f"|rho/pi| < 1 required, got {rho_over_pi}")
    if alpha_minus is not None and rho_over_pi != 0:
        on_edge, inside = _counts(Rho(rho_over_pi), alpha_minus)
        if not 0 <= on_edge + 2 * inside <= 19:
            raise BoundViolation(f"angle count {on_edge} + 2*{inside} outside [0, 19]")
    return -BOUND < -72 * rho_over_pi + 3 * m < BOUND
