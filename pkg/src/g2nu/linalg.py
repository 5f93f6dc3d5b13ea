"""Exact dense linear algebra over Q or Q(sqrt2, sqrt3).

Matrices are lists of rows. Entries are ``Fraction`` or :class:`~g2nu.surds.Surd`;
every routine only uses field operations and exact sign tests.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import poly as P

Matrix = list  # list[list[field element]]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    out = []
    for r in rows:
        out.append([Fraction(x) if isinstance(x, int) else x for x in r])
    n = len(out[0]) if out else 0
    if any(len(r) != n for r in out):
        raise ValueError("ragged matrix")
    return out


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int, k: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if k is None else k) for _ in range(n)]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = Fraction(0)
            for x, y in zip(row, col):
                if x != 0 and y != 0:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(a: Matrix, v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def madd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def msub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mscale(a: Matrix, s) -> Matrix:
    return [[x * s for x in r] for r in a]


def trace(a: Matrix):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for r in a for x in r)


def equal(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int] | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return [[a[i][j] for j in cols] for i in rows]


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(r) for r in m]
    nrows, ncols = shape(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix) -> list[list]:
    """Basis of the right kernel, as a list of column vectors."""
    r, pivots = rref(m)
    ncols = shape(m)[1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -r[row][f]
        basis.append(v)
    return basis


def columns_to_matrix(vectors: Sequence[Sequence]) -> Matrix:
    """Matrix whose columns are the given vectors."""
    return transpose([list(v) for v in vectors])


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(r) + e for r, e in zip(m, identity(n))]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in r]


def solve(m: Matrix, b: Sequence) -> list:
    """Solve m x = b for square invertible m."""
    return matvec(inverse(m), b)


def charpoly(m: Matrix) -> P.Poly:
    """Characteristic polynomial det(x I - m) by Faddeev-LeVerrier; monic, lowest degree first."""
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = zeros(n)
    c = Fraction(1)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        mk = matmul(m, mk)
        for i in range(n):
            mk[i][i] = mk[i][i] + c
        am = matmul(m, mk)
        c = -trace(am) / k
        coeffs[n - k] = c
    return P.poly(coeffs)


def poly_at_matrix(p: P.Poly, m: Matrix) -> Matrix:
    n = len(m)
    out = zeros(n)
    for c in reversed(p):
        out = matmul(out, m)
        for i in range(n):
            out[i][i] = out[i][i] + c
    return out


def congruence_inertia(sym: Matrix) -> tuple[int, int, int]:
    """Sylvester inertia (positive, negative, null) by symmetric Gaussian elimination.

    Works over any ordered field; zero diagonals are handled by replacing
    e_i with e_i + e_j for a nonzero off-diagonal pair.
    """
    a = [list(r) for r in sym]
    pos = neg = 0
    n = len(a)
    while n:
        i = next((k for k in range(n) if a[k][k] != 0), None)
        if i is None:
            pair = next(((k, l) for k in range(n) for l in range(k + 1, n) if a[k][l] != 0), None)
            if pair is None:
                return pos, neg, n
            k, l = pair
            # e_k -> e_k + e_l; new diagonal entry is 2 a_kl
            for j in range(n):
                a[k][j] = a[k][j] + a[l][j]
            for j in range(n):
                a[j][k] = a[j][k] + a[j][l]
            i = k
        piv = a[i][i]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        row = a[i]
        rest = [k for k in range(n) if k != i]
        a = [[a[r][c] - a[r][i] * row[c] / piv for c in rest] for r in rest]
        n -= 1
    return pos, neg, 0


def restrict_form(g: Matrix, basis: Sequence[Sequence]) -> Matrix:
    """Gram matrix of the form g on the span of the given column vectors."""
    b = columns_to_matrix(basis)
    return matmul(matmul(transpose(b), g), b)
