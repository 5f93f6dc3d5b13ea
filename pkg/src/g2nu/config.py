"""Configurations of two polarising lattices and their configuration angles.

The composite of the reflections in the two blocks is an isometry of the span
W. Its unit-circle eigenvalues give unsigned angles; the sign of the intersection
form on each eigenspace decides whether an angle belongs to the positive part
(3 angles in total) or the negative part (19 angles). Everything is decided
exactly: cosines are algebraic numbers, and the signature of the form on an
eigenspace of S = (A + A^-1)/2 is read off from inertia counts of G(S - r) at
rational thresholds r separating the eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg as LA
from . import poly as P
from .algebraic import AlgebraicReal, ExactAngle, angle_sort_key, same_multiset, separator
from .errors import (
    DecompositionError,
    DegenerateSpanError,
    InputError,
    InvalidLatticeError,
    NonOrthogonalCompositeError,
)
from .lattice import (
    GramMatrix,
    ValidationResult,
    char_poly,
    inertia,
    reflection_in_block,
    unit_circle_angles,
)

POSITIVE_DIM = 3
NEGATIVE_DIM = 19

# gluing angles (as multiples of pi) admissible when both quotient orders are at most 2
SMALL_K_THETAS = frozenset(Fraction(n, d) for n, d in [(1, 6), (1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (5, 6)])


@dataclass(frozen=True)
class Configuration:
    """Gram data of N+ (first ``rank_plus`` basis vectors) and N- (the rest).

    ``theta`` is the gluing angle divided by pi. ``nu_bar_plus`` and
    ``nu_bar_minus`` are the invariants of the two halves; ``None`` means the
    caller did not supply them.
    """

    name: str
    rank_plus: int
    rank_minus: int
    gram: GramMatrix
    theta: Fraction
    k_plus: int = 1
    k_minus: int = 1
    nu_bar_plus: Optional[Fraction] = None
    nu_bar_minus: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "gram", GramMatrix.coerce(self.gram))
        object.__setattr__(self, "theta", Fraction(self.theta))
        for attr in ("nu_bar_plus", "nu_bar_minus"):
            v = getattr(self, attr)
            if v is not None:
                object.__setattr__(self, attr, Fraction(v))
        for attr in ("rank_plus", "rank_minus", "k_plus", "k_minus"):
            v = getattr(self, attr)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise InputError(f"{attr} must be a positive integer, got {v!r}")
        if self.gram.rank != self.rank_plus + self.rank_minus:
            raise InputError(
                f"gram has size {self.gram.rank}, expected rank_plus + rank_minus = {self.rank_plus + self.rank_minus}"
            )
        if not 0 < self.theta < 1:
            raise InputError(f"gluing angle must lie strictly between 0 and pi, got {self.theta}*pi")
        g = self.gram.entries
        odd = [i for i in range(self.gram.rank) if g[i][i] % 2]
        if odd:
            raise InvalidLatticeError(f"odd diagonal entries at {odd}")
        for label, idx in (("N+", self.plus_indices), ("N-", self.minus_indices)):
            inr = inertia(self.gram.block(idx))
            if inr.null or inr.positive != 1:
                raise InvalidLatticeError(
                    f"{label} block has inertia {tuple(inr)}, expected (1, {len(idx) - 1}, 0)"
                )
        w = inertia(self.gram)
        if w.positive > POSITIVE_DIM or w.negative > NEGATIVE_DIM:
            raise InvalidLatticeError(f"span has inertia {tuple(w)}; cannot sit inside a form of signature (3, 19)")
        if self.small_k and self.theta not in SMALL_K_THETAS:
            raise InvalidLatticeError(f"gluing angle {self.theta}*pi is not available when k+ and k- are at most 2")

    @property
    def plus_indices(self) -> list[int]:
        return list(range(self.rank_plus))

    @property
    def minus_indices(self) -> list[int]:
        return list(range(self.rank_plus, self.rank_plus + self.rank_minus))

    @property
    def small_k(self) -> bool:
        return self.k_plus <= 2 and self.k_minus <= 2

    def swapped(self) -> "Configuration":
        """The same data with the roles of N+ and N- exchanged."""
        order = self.minus_indices + self.plus_indices
        g = self.gram.entries
        gram = GramMatrix(tuple(tuple(g[i][j] for j in order) for i in order))
        return Configuration(
            self.name + "~swapped", self.rank_minus, self.rank_plus, gram, self.theta,
            self.k_minus, self.k_plus, self.nu_bar_minus, self.nu_bar_plus,
        )


def _render_multiset(angles: Sequence[ExactAngle]) -> str:
    parts: list[str] = []
    i = 0
    while i < len(angles):
        j = i
        while j + 1 < len(angles) and angles[j + 1] == angles[i]:
            j += 1
        n = j - i + 1
        text = angles[i].render()
        parts.append(text if n == 1 else f"{text} x{n}")
        i = j + 1
    return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True, eq=False)
class AngleSpectrum:
    alpha_plus: tuple[ExactAngle, ...]
    alpha_minus: tuple[ExactAngle, ...]

    def __post_init__(self):
        ap = tuple(sorted(self.alpha_plus, key=angle_sort_key))
        am = tuple(sorted(self.alpha_minus, key=angle_sort_key))
        if len(ap) != POSITIVE_DIM or len(am) != NEGATIVE_DIM:
            raise ValueError(f"need 3 + 19 angles, got {len(ap)} + {len(am)}")
        for part in (ap, am):
            if not same_multiset(list(part), [-a for a in part]):
                raise ValueError("angles outside {0, pi} must come in (phi, -phi) pairs")
        object.__setattr__(self, "alpha_plus", ap)
        object.__setattr__(self, "alpha_minus", am)

    def __eq__(self, other):
        if not isinstance(other, AngleSpectrum):
            return NotImplemented
        return same_multiset(list(self.alpha_plus), list(other.alpha_plus)) and same_multiset(
            list(self.alpha_minus), list(other.alpha_minus)
        )

    __hash__ = None

    def render(self) -> str:
        return f"alpha+ = {_render_multiset(self.alpha_plus)}; alpha- = {_render_multiset(self.alpha_minus)}"

    def __str__(self) -> str:
        return self.render()


def composite_isometry(cfg: Configuration) -> LA.Matrix:
    """A+ A- on the span W, in the given basis of N+ and N-."""
    if inertia(cfg.gram).null:
        raise DegenerateSpanError(
            f"{cfg.name}: the span of N+ and N- is degenerate (N+ and N- intersect or the span contains null vectors)"
        )
    a_plus = reflection_in_block(cfg.gram, cfg.plus_indices)
    a_minus = reflection_in_block(cfg.gram, cfg.minus_indices)
    return LA.matmul(a_plus, a_minus)


def _signature(sym: LA.Matrix, exact: bool, tolerance: float) -> int:
    if exact:
        p, n, _ = LA.congruence_inertia(sym)
        return p - n
    import numpy as np

    ev = np.linalg.eigvalsh(np.array([[float(x) for x in r] for r in sym]))
    if np.any(np.abs(ev) < tolerance):
        raise DecompositionError(f"numeric signature undecidable: eigenvalue within {tolerance} of zero")
    return int(np.sum(ev > 0) - np.sum(ev < 0))


def configuration_angles(cfg: Configuration, exact: bool = True, tolerance: float = 1e-9) -> AngleSpectrum:
    """The 3 + 19 configuration angles.

    With ``exact=False`` the definiteness tests on rotation eigenspaces use
    floating point eigenvalues and fail loudly near a decision boundary.
    """
    a = composite_isometry(cfg)
    g = cfg.gram.matrix()
    d = len(a)
    chi = LA.charpoly(a)
    if not LA.is_zero(LA.poly_at_matrix(P.squarefree_part(chi), a)):
        raise DecompositionError(f"{cfg.name}: A+A- is not semisimple, so it preserves no definite splitting")
    classes = unit_circle_angles(char_poly(a))

    plus: list[ExactAngle] = []
    minus: list[ExactAngle] = []
    ident = LA.identity(d)
    sig_at: dict[int, int] = {}
    if any(not (c.compare(1) == 0 or c.compare(-1) == 0) for c, _ in classes):
        # S = (A + A^-1)/2 with A^-1 = A- A+, self-adjoint for the form
        a_inv = LA.inverse(a)
        s = LA.mscale(LA.madd(a, a_inv), Fraction(1, 2))
        cosines = sorted((c for c, _ in classes), key=float)
        # all cosines lie in [-1, 1], so -2 and 2 bound them
        thresholds = [Fraction(-2)] + [separator(x, y) for x, y in zip(cosines, cosines[1:])] + [Fraction(2)]
        sigs = [_signature(LA.matmul(g, LA.msub(s, LA.mscale(ident, r))), exact, tolerance) for r in thresholds]
        sig_at = {id(c): (sigs[i] - sigs[i + 1]) // 2 for i, c in enumerate(cosines)}

    for c, mult in classes:
        if c.compare(1) == 0 or c.compare(-1) == 0:
            ev = 1 if c.compare(1) == 0 else -1
            kernel = LA.nullspace(LA.msub(a, LA.mscale(ident, ev)))
            if len(kernel) != mult:
                raise DecompositionError(f"{cfg.name}: eigenvalue {ev} is not semisimple")
            p, n, z = LA.congruence_inertia(LA.restrict_form(g, kernel))
            if z:
                raise DecompositionError(f"{cfg.name}: eigenvalue {ev} eigenspace is degenerate")
            angle = ExactAngle.zero() if ev == 1 else ExactAngle.pi()
            plus += [angle] * p
            minus += [angle] * n
            continue
        sig = sig_at[id(c)]  # signature of the form on the 2*mult dimensional eigenspace
        if (2 * mult + sig) % 4:
            raise DecompositionError(f"{cfg.name}: eigenspace for cosine {c} has no invariant definite splitting")
        pos_pairs = (2 * mult + sig) // 4
        neg_pairs = mult - pos_pairs
        phi = ExactAngle(c, 1)
        plus += [phi, -phi] * pos_pairs
        minus += [phi, -phi] * neg_pairs

    w = inertia(cfg.gram)
    plus += [ExactAngle.zero()] * (POSITIVE_DIM - w.positive)
    minus += [ExactAngle.zero()] * (NEGATIVE_DIM - w.negative)
    if len(plus) != POSITIVE_DIM or len(minus) != NEGATIVE_DIM:
        raise DecompositionError(f"{cfg.name}: eigenspace inertia does not add up to the inertia of the span")
    return AngleSpectrum(tuple(plus), tuple(minus))


@dataclass(frozen=True)
class ProjectionSpectrum:
    """Eigenvalues (with multiplicity) of pi+ pi- on N+ and of pi- pi+ on N-."""

    plus: tuple[tuple[AlgebraicReal, int], ...]
    minus: tuple[tuple[AlgebraicReal, int], ...]

    def count(self, which: str, value) -> int:
        return sum(m for v, m in getattr(self, which) if v.compare(value) == 0)

    def interior(self, which: str) -> list[AlgebraicReal]:
        out = []
        for v, m in getattr(self, which):
            if v.compare(0) > 0 and v.compare(1) < 0:
                out += [v] * m
        return out


def _eigenvalues(m: LA.Matrix) -> tuple[tuple[AlgebraicReal, int], ...]:
    chi = LA.charpoly(m)
    out = []
    for factor, mult in P.squarefree_decomposition(chi):
        roots = AlgebraicReal.roots_of(factor)
        if len(roots) != len(factor) - 1:
            raise NonOrthogonalCompositeError("projection product has non-real eigenvalues")
        out += [(r, mult) for r in roots]
    for r, _ in out:
        if r.compare(0) < 0 or r.compare(1) > 0:
            raise NonOrthogonalCompositeError(f"projection product eigenvalue {r} outside [0, 1]")
    out.sort(key=lambda t: float(t[0]))
    return tuple(out)


def angles_via_projections(cfg: Configuration) -> ProjectionSpectrum:
    g = cfg.gram.matrix()
    gp = LA.submatrix(g, cfg.plus_indices)
    gm = LA.submatrix(g, cfg.minus_indices)
    cross = LA.submatrix(g, cfg.plus_indices, cfg.minus_indices)
    gp_inv, gm_inv = LA.inverse(gp), LA.inverse(gm)
    cross_t = LA.transpose(cross)
    # in block coordinates: pi- restricted to N+ is Gm^-1 C^T, pi+ restricted to N- is Gp^-1 C
    on_plus = LA.matmul(LA.matmul(gp_inv, cross), LA.matmul(gm_inv, cross_t))
    on_minus = LA.matmul(LA.matmul(gm_inv, cross_t), LA.matmul(gp_inv, cross))
    return ProjectionSpectrum(_eigenvalues(on_plus), _eigenvalues(on_minus))


def route_check(cfg: Configuration, spectrum: AngleSpectrum | None = None) -> ValidationResult:
    """Compare the reflection route against the projection eigenvalues.

    Every pair (phi, -phi) with 0 < phi < pi must show up as an eigenvalue
    cos^2(phi/2) = (1 + cos phi)/2 of both projection products, and the number
    of angles equal to pi must match the total count of zero eigenvalues.
    """
    spectrum = spectrum or configuration_angles(cfg)
    proj = angles_via_projections(cfg)
    expected: list[AlgebraicReal] = []
    n_pi = 0
    for part in (spectrum.alpha_plus, spectrum.alpha_minus):
        for a in part:
            if a.is_pi():
                n_pi += 1
            elif a.sign > 0:
                expected.append(a.cosine.affine(Fraction(1, 2), Fraction(1, 2)))
    failures = []
    for which in ("plus", "minus"):
        got = proj.interior(which)
        if not _same_values(got, expected):
            failures.append(
                f"{which}: projection eigenvalues {[str(x) for x in got]} vs cos^2(phi/2) values {[str(x) for x in expected]}"
            )
    zeros = proj.count("plus", 0) + proj.count("minus", 0)
    if zeros != n_pi:
        failures.append(f"{n_pi} angles equal to pi but {zeros} zero projection eigenvalues")
    return ValidationResult(not failures, tuple(failures))


def _same_values(xs: list[AlgebraicReal], ys: list[AlgebraicReal]) -> bool:
    if len(xs) != len(ys):
        return False
    rest = list(ys)
    for x in xs:
        for i, y in enumerate(rest):
            if x.compare(y) == 0:
                del rest[i]
                break
        else:
            return False
    return True


def required_alpha_plus(theta: Fraction) -> list[ExactAngle]:
    """The multiset {0, 2 theta, -2 theta} for a gluing angle theta = pi * t."""
    two = ExactAngle.from_pi(2 * Fraction(theta))
    return [ExactAngle.zero(), two, ExactAngle.from_pi(-2 * Fraction(theta))]


def check_matching_compatibility(cfg: Configuration, spectrum: AngleSpectrum | None = None) -> ValidationResult:
    spectrum = spectrum or configuration_angles(cfg)
    req = required_alpha_plus(cfg.theta)
    if same_multiset(list(spectrum.alpha_plus), req):
        return ValidationResult(True)
    want = AngleSpectrum(tuple(req), tuple([ExactAngle.zero()] * NEGATIVE_DIM))
    return ValidationResult(
        False,
        (
            f"alpha+ = {_render_multiset(spectrum.alpha_plus)} but the gluing angle "
            f"{cfg.theta}*pi requires {_render_multiset(want.alpha_plus)}",
        ),
    )
