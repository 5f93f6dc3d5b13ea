"""Flat torus factors of the two halves and their isometric matchings.

Axis 1 is the interior circle coordinate u, axis 2 the exterior coordinate v.
The group Z/k acts by the simultaneous translation (zeta/k, xi/k). A gluing
angle theta identifies the two tori through the orientation-reversing isometry

    (u+, v+) = (-cos(theta) u- + sin(theta) v-,  sin(theta) u- + cos(theta) v-),

which is an involution, so it matches the lattices in either direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InputError
from .surds import Surd

Vec = tuple[Surd, Surd]


def _s(x) -> Surd:
    if isinstance(x, str):
        return Surd.parse(x)
    return Surd.coerce(x)


def _dot(a: Vec, b: Vec) -> Surd:
    return a[0] * b[0] + a[1] * b[1]


def _det(a: Vec, b: Vec) -> Surd:
    return a[0] * b[1] - a[1] * b[0]


@dataclass(frozen=True)
class TorusFactor:
    k: int
    zeta: Surd
    xi: Surd

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise InputError(f"k must be a positive integer, got {self.k!r}")
        z, x = _s(self.zeta), _s(self.xi)
        if z.sign() <= 0 or x.sign() <= 0:
            raise InputError("circle lengths must be positive")
        object.__setattr__(self, "zeta", z)
        object.__setattr__(self, "xi", x)


@dataclass(frozen=True)
class PlanarLattice:
    basis: tuple[Vec, Vec]

    def __post_init__(self):
        b = tuple(tuple(_s(x) for x in v) for v in self.basis)
        if len(b) != 2 or any(len(v) != 2 for v in b):
            raise InputError("a planar lattice needs two 2-vectors")
        if _det(b[0], b[1]) == 0:
            raise InputError("lattice basis is degenerate")
        object.__setattr__(self, "basis", b)

    @property
    def covolume(self) -> Surd:
        d = _det(*self.basis)
        return d if d.sign() > 0 else -d

    def coordinates(self, v: Vec) -> tuple[Surd, Surd]:
        b1, b2 = self.basis
        d = _det(b1, b2)
        return _det(v, b2) / d, _det(b1, v) / d

    def contains(self, v: Vec) -> bool:
        return all(c.is_integer() for c in self.coordinates(v))

    def reduced(self) -> "PlanarLattice":
        """Lagrange-Gauss reduction: |b1| <= |b2| and |<b1, b2>| <= |b1|^2 / 2."""
        b1, b2 = self.basis
        if _dot(b2, b2) < _dot(b1, b1):
            b1, b2 = b2, b1
        while True:
            mu = (_dot(b1, b2) / _dot(b1, b1)).round()
            b2 = (b2[0] - mu * b1[0], b2[1] - mu * b1[1])
            if _dot(b2, b2) < _dot(b1, b1):
                b1, b2 = b2, b1
            else:
                break
        if _det(b1, b2).sign() < 0:
            b2 = (-b2[0], -b2[1])
        return PlanarLattice((b1, b2))

    def reflect_axis2(self) -> "PlanarLattice":
        return PlanarLattice(tuple((v[0], -v[1]) for v in self.basis))

    def vectors_of_norm(self, norm: Surd) -> list[Vec]:
        """All lattice vectors v with <v, v> == norm."""
        b1, b2 = self.reduced().basis
        cov = float(self.covolume)
        # |n| = |det(b1, v)| / covol and |m| = |det(v, b2)| / covol
        r = math.sqrt(max(float(norm), 0.0))
        nmax = int(r * math.sqrt(float(_dot(b1, b1))) / cov) + 1
        mmax = int(r * math.sqrt(float(_dot(b2, b2))) / cov) + 1
        out = []
        for m in range(-mmax, mmax + 1):
            for n in range(-nmax, nmax + 1):
                v = (m * b1[0] + n * b2[0], m * b1[1] + n * b2[1])
                if _dot(v, v) == norm:
                    out.append(v)
        return out


def quotient_lattice(t: TorusFactor) -> PlanarLattice:
    """Lattice of the torus (S^1_zeta x S^1_xi) / (Z/k)."""
    shift = (t.zeta / t.k, t.xi / t.k)
    return PlanarLattice((shift, (Surd(0), t.xi))).reduced()


@dataclass(frozen=True)
class GluingAngle:
    cos: Surd
    sin: Surd
    over_pi: Optional[Fraction]

    @property
    def approx(self) -> float:
        return math.atan2(float(self.sin), float(self.cos))

    def render(self) -> str:
        if self.over_pi is not None:
            from .algebraic import render_pi_multiple

            return render_pi_multiple(self.over_pi)
        return f"arccos({self.cos}) ~ {self.approx:.12f}"


def _recognise(c: Surd, s: Surd) -> Optional[Fraction]:
    from .maslov import cos_sin_pi

    for j in range(1, 12):
        t = Fraction(j, 12)
        if cos_sin_pi(t) == (c, s):
            return t
    return None


def match_lattices(plus: PlanarLattice, minus: PlanarLattice) -> list[GluingAngle]:
    """All theta in (0, pi) whose gluing isometry carries ``minus`` onto ``plus``."""
    if plus.covolume != minus.covolume:
        return []
    b1, b2 = minus.reduced().basis
    ell = _dot(b1, b1)
    found: list[GluingAngle] = []
    for v in plus.vectors_of_norm(ell):
        c = (-b1[0] * v[0] + b1[1] * v[1]) / ell
        s = (b1[1] * v[0] + b1[0] * v[1]) / ell
        if s.sign() <= 0:
            continue
        image = (-c * b2[0] + s * b2[1], s * b2[0] + c * b2[1])
        if not plus.contains(image):
            continue
        if any(g.cos == c for g in found):
            continue
        found.append(GluingAngle(c, s, _recognise(c, s)))
    found.sort(key=lambda g: g.approx)
    return found


def gluing_angles(t_plus: TorusFactor, t_minus: TorusFactor) -> list[GluingAngle]:
    return match_lattices(quotient_lattice(t_plus), quotient_lattice(t_minus))


def parse_length(text: Union[str, int, Fraction, Surd]) -> Surd:
    """Parse a length like ``"3*sqrt(2)"``; only Q(sqrt2, sqrt3) is supported."""
    return _s(text)
