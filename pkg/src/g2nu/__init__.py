"""Exact extended nu-invariants of extra twisted connected sum G2-manifolds.

Typical use::

    from g2nu import catalog, nu_bar
    report = nu_bar(catalog.get("ex_3_7").configuration)
    report.nu_bar, report.nu_mod_48      # (Fraction(-36, 1), 36)
"""

from . import catalog
from .algebraic import AlgebraicReal, ExactAngle, cos_pi
from .classify import ComparisonVerdict, ManifoldInvariants, VerdictLevel, full_verdict, g2_structure_classes, wilkens_compare
from .config import (
    AngleSpectrum,
    Configuration,
    angles_via_projections,
    check_matching_compatibility,
    composite_isometry,
    configuration_angles,
    route_check,
)
from .errors import (
    BlockNotProjectableError,
    CompatibilityError,
    DecompositionError,
    DegenerateSpanError,
    G2NuError,
    InputError,
    InvalidLatticeError,
    MathematicalError,
    NonOrthogonalCompositeError,
    NotApplicableError,
    UnsupportedSurdError,
)
from .invariants import NuReport, bound_check, eta_signature, nu_bar, nu_mod_48
from .lattice import (
    GramMatrix,
    Inertia,
    ValidationResult,
    char_poly,
    inertia,
    projection_onto_block,
    reflection_in_block,
    unit_circle_angles,
    validate_polarising,
)
from .maslov import LagrangianPair, MaslovResult, Rho, kernel_example_pair, m_h3_formula, m_rho, maslov_angle
from .surds import Surd
from .torus import GluingAngle, PlanarLattice, TorusFactor, gluing_angles, match_lattices, quotient_lattice

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
