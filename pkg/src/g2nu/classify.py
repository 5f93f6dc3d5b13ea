"""Comparing two G2-manifolds: smooth type, G2-structure class, moduli component.

Smooth type comes from the Wilkens classification of 2-connected 7-manifolds
with torsion-free H^4 by (b3, div p1). When div p1 divides 224 there are exactly
24 classes of G2-structures up to homotopy and diffeomorphism, told apart by
nu in Z/48. Finally nu_bar is locally constant on the moduli space of G2
metrics, so different values force different components.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import InputError, NotApplicableError
from .invariants import nu_mod_48

WILKENS = "Wilkens classification by (b3, div p1)"
STRUCTURES = "G2-structure count (24 classes told apart by nu when div p1 | 224)"
CONVERSION = "nu = nu_bar + 24(1 + b1) mod 48"
MODULI = "nu_bar is locally constant on the G2 moduli space"


class VerdictLevel(str, Enum):
    DISTINCT_MANIFOLDS = "distinct_manifolds"
    ALMOST_DIFFEOMORPHIC_ONLY = "almost_diffeomorphic_only"
    DIFFEOMORPHIC = "diffeomorphic"
    DIFFEOMORPHIC_DISTINCT_STRUCTURES = "diffeomorphic_distinct_structures"
    DISTINCT_MODULI_COMPONENTS = "diffeomorphic_same_structure_distinct_moduli_components"
    INDISTINGUISHABLE = "indistinguishable_by_these_invariants"


@dataclass(frozen=True)
class ManifoldInvariants:
    b3: int
    div_p1: int
    h4_torsion_free: bool = True
    two_connected: bool = True
    b1: int = 0
    nu_bar: Optional[int] = None
    holonomy_exactly_g2: bool = True

    def __post_init__(self):
        if self.b3 < 0 or self.b1 < 0:
            raise InputError("Betti numbers must be non-negative")
        if self.div_p1 < 1:
            raise InputError("div p1 must be a positive integer")
        if self.two_connected and self.b1:
            raise InputError("a 2-connected manifold has b1 = 0")

    @property
    def nu(self) -> Optional[int]:
        if self.nu_bar is None:
            return None
        return nu_mod_48(self.nu_bar, self.b1, self.holonomy_exactly_g2)


@dataclass(frozen=True)
class ComparisonVerdict:
    level: VerdictLevel
    reasoning: tuple[str, ...]

    def __post_init__(self):
        if not self.reasoning:
            raise ValueError("a verdict needs a reasoning chain")

    def render(self) -> str:
        lines = [f"verdict: {self.level.value}"]
        lines += [f"  {i}. {step}" for i, step in enumerate(self.reasoning, 1)]
        return "\n".join(lines)


def _require_hypotheses(*records: ManifoldInvariants) -> None:
    for r in records:
        if not (r.two_connected and r.h4_torsion_free):
            raise NotApplicableError(
                "classification theorem not applicable: needs a 2-connected manifold with torsion-free H^4"
            )


def wilkens_compare(a: ManifoldInvariants, b: ManifoldInvariants) -> ComparisonVerdict:
    _require_hypotheses(a, b)
    pa, pb = (a.b3, a.div_p1), (b.b3, b.div_p1)
    if pa != pb:
        return ComparisonVerdict(
            VerdictLevel.DISTINCT_MANIFOLDS, (f"{WILKENS}: {pa} != {pb}, so not even almost-diffeomorphic",)
        )
    d = a.div_p1
    if d % 16 == 0 or d % 7 == 0:
        return ComparisonVerdict(
            VerdictLevel.ALMOST_DIFFEOMORPHIC_ONLY,
            (f"{WILKENS}: equal invariants {pa}; div p1 = {d} is divisible by 16 or 7, so only almost-diffeomorphic",),
        )
    return ComparisonVerdict(
        VerdictLevel.DIFFEOMORPHIC,
        (f"{WILKENS}: equal invariants {pa} and div p1 = {d} avoids 16 and 7, so diffeomorphic",),
    )


def g2_structure_classes(inv: ManifoldInvariants) -> Optional[int]:
    """24 when div p1 divides 224, ``None`` when the count is not available."""
    _require_hypotheses(inv)
    return 24 if 224 % inv.div_p1 == 0 else None


def full_verdict(a: ManifoldInvariants, b: ManifoldInvariants) -> ComparisonVerdict:
    first = wilkens_compare(a, b)
    steps = list(first.reasoning)
    if first.level is not VerdictLevel.DIFFEOMORPHIC:
        return first
    if a.nu_bar is None or b.nu_bar is None:
        steps.append("nu_bar missing for at least one metric; comparison stops at the smooth level")
        return ComparisonVerdict(VerdictLevel.DIFFEOMORPHIC, tuple(steps))
    nu_a, nu_b = a.nu, b.nu
    steps.append(f"{CONVERSION}: nu_bar {a.nu_bar} -> nu = {nu_a}; nu_bar {b.nu_bar} -> nu = {nu_b}")
    if nu_a != nu_b:
        steps.append(f"nu differs ({nu_a} != {nu_b}), so the G2-structures are not homotopic")
        return ComparisonVerdict(VerdictLevel.DIFFEOMORPHIC_DISTINCT_STRUCTURES, tuple(steps))
    if g2_structure_classes(a) is None:
        steps.append(
            f"{STRUCTURES}: not applicable since div p1 = {a.div_p1} does not divide 224; "
            "equal nu does not identify the structures"
        )
        return ComparisonVerdict(VerdictLevel.INDISTINGUISHABLE, tuple(steps))
    steps.append(f"{STRUCTURES}: div p1 = {a.div_p1} divides 224 and nu agrees, so the G2-structures are homotopic")
    if a.nu_bar != b.nu_bar:
        steps.append(f"{MODULI}: {a.nu_bar} != {b.nu_bar}, so the metrics lie in different components")
        return ComparisonVerdict(VerdictLevel.DISTINCT_MODULI_COMPONENTS, tuple(steps))
    steps.append(f"{MODULI}: equal values ({a.nu_bar}) do not separate the metrics")
    return ComparisonVerdict(VerdictLevel.INDISTINGUISHABLE, tuple(steps))
