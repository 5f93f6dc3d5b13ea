"""Exact arithmetic in the biquadratic field Q(sqrt2, sqrt3).

Elements are ``a + b*sqrt2 + c*sqrt3 + d*sqrt6`` with rational coefficients.
The field contains cos(k*pi/12) and sin(k*pi/12) for every integer k, which
covers the torus side lengths and gluing rotations used in this package.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .errors import UnsupportedSurdError

Rational = Union[int, Fraction]

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT6 = math.sqrt(6.0)

# (s2, s3) sign flips of the four field automorphisms
_AUTOMORPHISMS = ((1, 1), (-1, 1), (1, -1), (-1, -1))


def _sign_q2(a: Fraction, b: Fraction) -> int:
    """Sign of a + b*sqrt2."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    d = a * a - 2 * b * b
    return sa if d > 0 else (-sa if d < 0 else 0)


@total_ordering
class Surd:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: Rational = 0, b: Rational = 0, c: Rational = 0, d: Rational = 0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    # -- construction -------------------------------------------------------
    @classmethod
    def coerce(cls, x: "Surd | Rational") -> "Surd":
        if isinstance(x, Surd):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Surd")

    @classmethod
    def sqrt(cls, n: Rational) -> "Surd":
        """Exact square root of a non-negative rational, if it lies in the field."""
        q = Fraction(n)
        if q < 0:
            raise UnsupportedSurdError(f"sqrt of negative number {q}")
        if q == 0:
            return cls(0)
        # sqrt(p/q) = sqrt(p*q)/q
        num = q.numerator * q.denominator
        square, free = _split_square(num)
        coeff = Fraction(square, q.denominator)
        if free == 1:
            return cls(coeff)
        if free == 2:
            return cls(0, coeff)
        if free == 3:
            return cls(0, 0, coeff)
        if free == 6:
            return cls(0, 0, 0, coeff)
        raise UnsupportedSurdError(f"sqrt({q}) does not lie in Q(sqrt2, sqrt3)")

    @classmethod
    def parse(cls, text: str) -> "Surd":
        """Parse expressions such as ``"3*sqrt(2)/2"`` or ``"1/sqrt(3) + 1"``."""
        try:
            tree = ast.parse(text.strip(), mode="eval")
        except SyntaxError as exc:
            raise UnsupportedSurdError(f"cannot parse length {text!r}: {exc.msg}") from None
        return _eval_node(tree.body, text)

    # -- predicates ---------------------------------------------------------
    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.a

    def is_integer(self) -> bool:
        return self.is_rational() and self.a.denominator == 1

    def conjugate(self, s2: int, s3: int) -> "Surd":
        return Surd(self.a, s2 * self.b, s3 * self.c, s2 * s3 * self.d)

    def conjugates(self) -> list["Surd"]:
        return [self.conjugate(s2, s3) for s2, s3 in _AUTOMORPHISMS]

    def norm(self) -> Fraction:
        n = Surd(1)
        for s in self.conjugates():
            n = n * s
        return n.to_fraction()

    def sign(self) -> int:
        # x = p + q*sqrt3 with p = a + b*sqrt2, q = c + d*sqrt2
        sp = _sign_q2(self.a, self.b)
        sq = _sign_q2(self.c, self.d)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: compare p^2 with 3 q^2 inside Q(sqrt2)
        da = self.a * self.a + 2 * self.b * self.b - 3 * (self.c * self.c + 2 * self.d * self.d)
        db = 2 * self.a * self.b - 6 * self.c * self.d
        s = _sign_q2(da, db)
        return sp if s > 0 else (-sp if s < 0 else 0)

    def floor(self) -> int:
        guess = math.floor(float(self))
        while self < guess:
            guess -= 1
        while self >= guess + 1:
            guess += 1
        return guess

    def round(self) -> int:
        return (self + Fraction(1, 2)).floor()

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return Surd(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, -self.c, -self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return Surd(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Surd(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * c1 * d2 + 3 * d1 * c2,
            a1 * c2 + c1 * a2 + 2 * b1 * d2 + 2 * d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Surd":
        if self.is_rational():
            if self.a == 0:
                raise ZeroDivisionError("Surd division by zero")
            return Surd(1 / self.a)
        others = Surd(1)
        for s in self.conjugates()[1:]:
            others = others * s
        n = (self * others).to_fraction()
        if n == 0:
            raise ZeroDivisionError("Surd division by zero")
        return others * (1 / n)

    def __truediv__(self, other):
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Surd.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = Surd(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.c == o.c and self.d == o.d

    def __lt__(self, other):
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self):
        if self.is_rational():
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __float__(self):
        return float(self.a) + float(self.b) * _SQRT2 + float(self.c) * _SQRT3 + float(self.d) * _SQRT6

    def __repr__(self):
        return f"Surd({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self):
        parts = []
        for coeff, name in ((self.a, ""), (self.b, "sqrt(2)"), (self.c, "sqrt(3)"), (self.d, "sqrt(6)")):
            if coeff == 0:
                continue
            if name == "":
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(name)
            elif coeff == -1:
                parts.append("-" + name)
            elif coeff.denominator == 1:
                parts.append(f"{coeff.numerator}*{name}")
            else:
                parts.append(f"{coeff.numerator}*{name}/{coeff.denominator}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


def _split_square(n: int) -> tuple[int, int]:
    """Write n = s^2 * f with f squarefree; returns (s, f)."""
    s, f = 1, 1
    p = 2
    m = n
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
        p += 1
    return s, f * m


def _eval_node(node: ast.AST, text: str) -> Surd:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        if isinstance(node.value, float):
            return Surd(Fraction(str(node.value)))
        return Surd(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, text)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise UnsupportedSurdError(f"only integer powers are supported in {text!r}")
            return left ** node.right.value
        right = _eval_node(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "sqrt"
        and len(node.args) == 1
        and not node.keywords
    ):
        arg = _eval_node(node.args[0], text)
        if not arg.is_rational():
            raise UnsupportedSurdError(f"nested radicals are not supported in {text!r}")
        return Surd.sqrt(arg.to_fraction())
    raise UnsupportedSurdError(f"unsupported expression in {text!r}")
