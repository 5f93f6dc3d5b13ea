"""Maslov-type corrections.

``m_rho`` and ``m_h3_formula`` are counting formulas in the configuration
angles. ``maslov_angle`` computes the Maslov angle of a pair of Lagrangian
subspaces of a Euclidean space with orthogonal complex structure gamma, exactly
over Q(sqrt2, sqrt3).

For the Maslov angle, write A_L for the involution that is +1 on L and -1 on
gamma L, and T = -A+ A-. T commutes with gamma, so on the (-i)-eigenspace of
gamma it acts complex-linearly with eigenvalues exp(i phi_j); identifying that
eigenspace with the real space via x -> x + i gamma x turns multiplication by i
into J = -gamma. An eigenvalue exp(i phi) then means T x = cos(phi) x + sin(phi) J x.
The sign of phi on the cos(phi)-eigenspace of S = (T + T^-1)/2 is the sign of
the symmetric form <(T - T^-1)x/2, J y>, evaluated by the same threshold
inertia counts used for configuration angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import linalg as LA
from . import poly as P
from .algebraic import AlgebraicReal, ExactAngle, angle_sort_key, separator
from .errors import InputError
from .surds import Surd


@dataclass(frozen=True)
class Rho:
    """rho = pi - 2 theta, stored as rho / pi."""

    value: Fraction

    def __post_init__(self):
        v = Fraction(self.value)
        if not -1 < v < 1:
            raise InputError(f"rho/pi must lie in (-1, 1), got {v}")
        object.__setattr__(self, "value", v)

    @classmethod
    def from_theta(cls, theta: Union[int, Fraction]) -> "Rho":
        return cls(1 - 2 * Fraction(theta))

    @property
    def sign(self) -> int:
        return (self.value > 0) - (self.value < 0)

    @property
    def boundary(self) -> ExactAngle:
        """The angle pi - |rho|."""
        return ExactAngle.from_pi(1 - abs(self.value))


def _counts(rho: Rho, angles: Sequence[ExactAngle]) -> tuple[int, int]:
    """(#{a in {pi - |rho|, pi}}, #{a in (pi - |rho|, pi)}) for angles in (-pi, pi]."""
    edge = rho.boundary
    on_edge = inside = 0
    for a in angles:
        if a.is_pi() or a == edge:
            on_edge += 1
        elif a.sign > 0 and a.cosine.compare(edge.cosine) < 0:
            inside += 1
    return on_edge, inside


def m_rho(rho: Rho, alpha_minus: Sequence[ExactAngle]) -> int:
    if rho.sign == 0:
        return 0
    on_edge, inside = _counts(rho, alpha_minus)
    return rho.sign * (on_edge - 1 + 2 * inside)


def m_h3_formula(rho: Rho, alpha_plus: Sequence[ExactAngle], alpha_minus: Sequence[ExactAngle]) -> Fraction:
    """Maslov index on the middle cohomology of the neck, from the angles."""
    s = rho.sign
    ep, ip = _counts(rho, alpha_plus)
    em, im = _counts(rho, alpha_minus)
    return -16 * rho.value - s * ep - 2 * s * ip + s * em + 2 * s * im


# ---------------------------------------------------------------------------
# Lagrangian pairs


def _field(x):
    return x if isinstance(x, Surd) else Surd.coerce(Fraction(x))


def _fmatrix(rows) -> LA.Matrix:
    return [[_field(x) for x in r] for r in rows]


@dataclass(frozen=True, eq=False)
class LagrangianPair:
    """Two Lagrangians in (R^2n, metric, gamma); bases are lists of vectors."""

    metric: tuple
    gamma: tuple
    L_plus: tuple
    L_minus: tuple

    def __post_init__(self):
        g = _fmatrix(self.metric)
        gam = _fmatrix(self.gamma)
        lp = [[_field(x) for x in v] for v in self.L_plus]
        lm = [[_field(x) for x in v] for v in self.L_minus]
        dim = len(g)
        if dim == 0 or dim % 2 or len(gam) != dim or any(len(r) != dim for r in g + gam):
            raise InputError("metric and gamma must be square of the same even size")
        if not LA.is_symmetric(g) or LA.congruence_inertia(g) != (dim, 0, 0):
            raise InputError("metric must be symmetric positive definite")
        if not LA.equal(LA.matmul(gam, gam), LA.mscale(LA.identity(dim), -1)):
            raise InputError("gamma must square to -1")
        if not LA.equal(LA.matmul(LA.matmul(LA.transpose(gam), g), gam), g):
            raise InputError("gamma must preserve the metric")
        n = dim // 2
        omega = LA.matmul(g, gam)  # omega(x, y) = <gamma x, y> has matrix gamma^T g = -g gamma
        for label, basis in (("L_plus", lp), ("L_minus", lm)):
            if len(basis) != n or any(len(v) != dim for v in basis) or LA.rank(LA.columns_to_matrix(basis)) != n:
                raise InputError(f"{label} must be spanned by {n} independent vectors of length {dim}")
            for x in basis:
                for y in basis:
                    if sum((a * b for a, b in zip(x, LA.matvec(omega, y))), Surd(0)) != 0:
                        raise InputError(f"{label} is not Lagrangian")
        object.__setattr__(self, "metric", tuple(map(tuple, g)))
        object.__setattr__(self, "gamma", tuple(map(tuple, gam)))
        object.__setattr__(self, "L_plus", tuple(map(tuple, lp)))
        object.__setattr__(self, "L_minus", tuple(map(tuple, lm)))

    @property
    def dimension(self) -> int:
        return len(self.metric)

    def swapped(self) -> "LagrangianPair":
        return LagrangianPair(self.metric, self.gamma, self.L_minus, self.L_plus)


@dataclass(frozen=True, eq=False)
class MaslovResult:
    value: Union[Fraction, float]
    intersection_dim: int
    angle_list: tuple[ExactAngle, ...]

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)


def _involution(gamma: LA.Matrix, basis: list, one) -> LA.Matrix:
    n = len(basis)
    cols = list(basis) + [LA.matvec(gamma, v) for v in basis]
    b = LA.columns_to_matrix(cols)
    d = [[one * 0] * (2 * n) for _ in range(2 * n)]
    for i in range(2 * n):
        d[i][i] = one if i < n else -one
    return LA.matmul(LA.matmul(b, d), LA.inverse(b))


def _norm_poly(p: P.Poly) -> P.Poly:
    """Product of the conjugates of a polynomial over Q(sqrt2, sqrt3); rational."""
    out: P.Poly = (Surd(1),)
    for s2 in (1, -1):
        for s3 in (1, -1):
            out = P.mul(out, tuple(_field(c).conjugate(s2, s3) for c in p))
    return P.poly(_field(c).to_fraction() for c in out)


def _sig(m: LA.Matrix) -> int:
    p, n, _ = LA.congruence_inertia(m)
    return p - n


def maslov_angle(pair: LagrangianPair) -> MaslovResult:
    entries = [x for block in (pair.metric, pair.gamma, pair.L_plus, pair.L_minus) for r in block for x in r]
    rational = all(x.is_rational() for x in entries)
    # Over Q the arithmetic is several times cheaper and no norm polynomial is needed.
    conv = (lambda x: x.to_fraction()) if rational else (lambda x: x)
    one = Fraction(1) if rational else Surd(1)
    g = [[conv(x) for x in r] for r in pair.metric]
    gamma = [[conv(x) for x in r] for r in pair.gamma]
    lp = [[conv(x) for x in v] for v in pair.L_plus]
    lm = [[conv(x) for x in v] for v in pair.L_minus]
    dim = pair.dimension
    ident = [[one * int(i == j) for j in range(dim)] for i in range(dim)]
    t = LA.mscale(LA.matmul(_involution(gamma, lp, one), _involution(gamma, lm, one)), -1)
    t_inv = LA.inverse(t)
    s = LA.mscale(LA.madd(t, t_inv), Fraction(1, 2))
    k = LA.mscale(LA.msub(t, t_inv), Fraction(1, 2))
    j = LA.mscale(gamma, -1)
    b_form = LA.matmul(LA.matmul(LA.transpose(k), g), j)

    char = LA.charpoly(s)
    cosines = AlgebraicReal.roots_of(P.poly(char) if rational else _norm_poly(char))
    thresholds = [Fraction(-2)] + [separator(x, y) for x, y in zip(cosines, cosines[1:])] + [Fraction(2)]
    dim_sig, b_sig = [], []
    for r in thresholds:
        shifted = LA.msub(s, LA.mscale(ident, r))
        dim_sig.append(_sig(LA.matmul(g, shifted)))
        b_sig.append(_sig(LA.matmul(b_form, shifted)))

    angles: list[ExactAngle] = []
    for i, c in enumerate(cosines):
        real_dim = (dim_sig[i] - dim_sig[i + 1]) // 2
        if real_dim == 0:
            continue
        cdim = real_dim // 2  # complex dimension of the eigenspace
        if c.compare(1) == 0:
            angles += [ExactAngle.zero()] * cdim
        elif c.compare(-1) == 0:
            angles += [ExactAngle.pi()] * cdim
        else:
            diff = (b_sig[i] - b_sig[i + 1]) // 4  # n_plus - n_minus
            n_plus = (cdim + diff) // 2
            angles += [ExactAngle(c, 1)] * n_plus + [ExactAngle(c, -1)] * (cdim - n_plus)
    if len(angles) != dim // 2:
        raise ArithmeticError("eigenspace dimensions do not add up")
    angles.sort(key=angle_sort_key)

    exact = Fraction(0)
    approx = 0.0
    recognised = True
    for a in angles:
        if a.is_pi():
            continue
        approx -= a.approx / math.pi
        f = a.pi_fraction()
        if f is None:
            recognised = False
        else:
            exact -= f
    span = LA.columns_to_matrix(lp + lm)
    inter = dim - LA.rank(span)
    return MaslovResult(exact if recognised else approx, inter, tuple(angles))


# cos(k pi / 12) for k = 0..6 in Q(sqrt2, sqrt3)
_COS_PI_12 = [
    Surd(1),
    Surd(0, Fraction(1, 4), 0, Fraction(1, 4)),
    Surd(0, 0, Fraction(1, 2)),
    Surd(0, Fraction(1, 2)),
    Surd(Fraction(1, 2)),
    Surd(0, Fraction(-1, 4), 0, Fraction(1, 4)),
    Surd(0),
]


def cos_sin_pi(t: Union[int, Fraction]) -> tuple[Surd, Surd]:
    """Exact (cos(pi t), sin(pi t)) for t a multiple of 1/12."""
    t = Fraction(t)
    if (t * 12).denominator != 1:
        raise InputError(f"angle {t}*pi is not a multiple of pi/12; its cosine and sine leave Q(sqrt2, sqrt3)")
    k = int(t * 12) % 24

    def cos12(m: int) -> Surd:
        m %= 24
        if m > 12:
            m = 24 - m
        return _COS_PI_12[m] if m <= 6 else -_COS_PI_12[12 - m]

    return cos12(k), cos12(k - 6)


def kernel_example_pair(theta: Union[int, Fraction]) -> LagrangianPair:
    """The 4-dimensional kernel model with orthonormal basis (s, c_u s, c_v s, gamma s).

    gamma swaps s -> gamma s -> -s and c_u s -> c_v s -> -c_u s. L- is spanned by
    s and c_v s; L+ by s and the image of c_v s under the gluing frame rotation.
    """
    theta = Fraction(theta)
    if not 0 < theta < 1:
        raise InputError(f"gluing angle must lie in (0, pi), got {theta}*pi")
    c, s = cos_sin_pi(theta)
    zero, one = Surd(0), Surd(1)
    metric = [[one if i == j else zero for j in range(4)] for i in range(4)]
    gamma = [[zero] * 4 for _ in range(4)]
    # columns are images: e0 -> e3, e1 -> e2, e2 -> -e1, e3 -> -e0
    gamma[3][0] = one
    gamma[2][1] = one
    gamma[1][2] = -one
    gamma[0][3] = -one
    e0 = [one, zero, zero, zero]
    e2 = [zero, zero, one, zero]
    rotated = [zero, s, c, zero]
    return LagrangianPair(metric, gamma, (e0, rotated), (e0, e2))
