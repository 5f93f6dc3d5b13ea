"""Small integral symmetric bilinear forms.

Inertia by exact congruence reduction, orthogonal projections and reflections
onto blocks of a Gram matrix, characteristic polynomials, and the cosines of
unit-circle eigenvalues of form-orthogonal maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import linalg as LA
from . import poly as P
from .algebraic import AlgebraicReal
from .errors import BlockNotProjectableError, InputError, NonOrthogonalCompositeError


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_as_int(x) for x in r) for r in self.entries)
        n = len(rows)
        if n == 0:
            raise InputError("empty Gram matrix")
        if any(len(r) != n for r in rows):
            raise InputError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise InputError(f"Gram matrix not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def coerce(cls, g: "GramMatrix | Sequence[Sequence[int]]") -> "GramMatrix":
        return g if isinstance(g, GramMatrix) else cls(tuple(tuple(r) for r in g))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def matrix(self) -> LA.Matrix:
        return LA.as_matrix(self.entries)

    def block(self, indices: Sequence[int]) -> "GramMatrix":
        return GramMatrix(tuple(tuple(self.entries[i][j] for j in indices) for i in indices))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _as_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise InputError(f"Gram entries must be integers, got {x!r}")
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise InputError(f"Gram entries must be integers, got {x}")
        return x.numerator
    return x


class Inertia(NamedTuple):
    positive: int
    negative: int
    null: int


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    failures: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok

    @property
    def message(self) -> str:
        return "ok" if self.ok else "; ".join(self.failures)


def inertia(g) -> Inertia:
    """Sylvester inertia of a symmetric matrix, computed exactly."""
    m = g.matrix() if isinstance(g, GramMatrix) else LA.as_matrix(g)
    if not LA.is_symmetric(m):
        raise InputError("inertia requires a symmetric matrix")
    return Inertia(*LA.congruence_inertia(m))


def validate_polarising(g) -> ValidationResult:
    """Even, non-degenerate, signature (1, rank - 1)."""
    g = GramMatrix.coerce(g)
    failures = []
    odd = [i for i in range(g.rank) if g.entries[i][i] % 2]
    if odd:
        failures.append(f"odd diagonal entries at {odd}")
    inr = inertia(g)
    if inr.null:
        failures.append(f"degenerate form (nullity {inr.null})")
    elif (inr.positive, inr.negative) != (1, g.rank - 1):
        failures.append(f"wrong signature ({inr.positive}, {inr.negative}), expected (1, {g.rank - 1})")
    return ValidationResult(not failures, tuple(failures))


def projection_onto_block(g_full, block: Sequence[int]) -> LA.Matrix:
    """Orthogonal projection onto the span of the block basis vectors, in the full basis."""
    m = g_full.matrix() if isinstance(g_full, GramMatrix) else LA.as_matrix(g_full)
    block = list(block)
    n = len(m)
    gb = LA.submatrix(m, block)
    try:
        gb_inv = LA.inverse(gb)
    except ZeroDivisionError:
        raise BlockNotProjectableError(f"block {block} not projectable: degenerate Gram submatrix") from None
    cross = [m[b] for b in block]  # pairings <e_b, e_j>
    coeffs = LA.matmul(gb_inv, cross)  # |block| x n
    out = LA.zeros(n)
    for r, b in enumerate(block):
        out[b] = list(coeffs[r])
    return out


def reflection_in_block(g_full, block: Sequence[int]) -> LA.Matrix:
    """The isometry that is +1 on the block span and -1 on its orthogonal complement."""
    pr = projection_onto_block(g_full, block)
    return LA.msub(LA.mscale(pr, 2), LA.identity(len(pr)))


def char_poly(m) -> tuple[int, ...]:
    """Characteristic polynomial as a primitive integer coefficient tuple, lowest degree first."""
    return P.primitive(LA.charpoly(LA.as_matrix(m)))


def chebyshev_transform(p: P.Poly) -> P.Poly:
    """For palindromic p of degree 2m, the q with p(x) = x^m q((x + 1/x) / 2)."""
    d = len(p) - 1
    if d % 2:
        raise NonOrthogonalCompositeError("palindromic part has odd degree")
    m = d // 2
    q: P.Poly = P.poly([p[m]])
    for k in range(1, m + 1):
        q = P.add(q, P.scale(P.chebyshev_t(k), 2 * p[m + k]))
    return q


def unit_circle_angles(p: Sequence[int]) -> list[tuple[AlgebraicReal, int]]:
    """Cosines of the unit-circle roots of p with multiplicities.

    A conjugate pair exp(+-i phi) with 0 < phi < pi counts once per pair under
    cos(phi); the real roots 1 and -1 count once per root.
    """
    rest = P.poly(Fraction(c) for c in p)
    if not rest:
        raise InputError("zero polynomial")
    out: list[tuple[AlgebraicReal, int]] = []
    for r in (1, -1):
        k = 0
        lin = (Fraction(-r), Fraction(1))
        while len(rest) > 1:
            q, rem = P.divmod_(rest, lin)
            if rem:
                break
            rest, k = q, k + 1
        if k:
            out.append((AlgebraicReal.rational(r), k))
    if len(rest) > 1:
        c0 = rest[0]
        if any(rest[i] * rest[-1] != rest[-1 - i] * c0 for i in range(len(rest))):
            raise NonOrthogonalCompositeError("characteristic polynomial is not palindromic: roots off the unit circle")
        q = chebyshev_transform(rest)
        for factor, mult in P.squarefree_decomposition(q):
            roots = AlgebraicReal.roots_of(factor)
            if len(roots) != len(factor) - 1:
                raise NonOrthogonalCompositeError("non-real Chebyshev roots: eigenvalues off the unit circle")
            for c in roots:
                if c.compare(1) >= 0 or c.compare(-1) <= 0:
                    raise NonOrthogonalCompositeError(f"real eigenvalue off the unit circle (cosine {c})")
                out.append((c, mult))
    out.sort(key=lambda t: -float(t[0]))
    return out
