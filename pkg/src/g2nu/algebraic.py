"""Real algebraic numbers and exact angles.

An :class:`AlgebraicReal` is a root of a squarefree integer polynomial pinned
down by an isolating interval with rational endpoints. All comparisons are
decided by Sturm sign counting and gcd computations; floats are only produced
for display.

An :class:`ExactAngle` is an angle in (-pi, pi] stored as its exact cosine plus
the sign of its sine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from . import poly as P

Number = Union[int, Fraction, "AlgebraicReal"]


class AlgebraicReal:
    """A real algebraic number.

    Instances are immutable in value; the isolating interval is refined in
    place as a cache, which never changes the number represented.
    """

    __slots__ = ("_poly", "_seq", "_lo", "_hi", "_rational", "_float")

    def __init__(self, p: Iterable, lo: Fraction, hi: Fraction):
        # trusted constructor: p squarefree, exactly one root in (lo, hi]
        self._poly = P.poly(Fraction(c) for c in P.primitive(P.poly(p)))
        self._seq = None
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)
        self._rational = None
        self._float = None
        if len(self._poly) == 2:
            self._rational = -self._poly[0] / self._poly[1]
        else:
            self._detect_rational()

    # -- construction -------------------------------------------------------
    @classmethod
    def rational(cls, q: Union[int, Fraction]) -> "AlgebraicReal":
        q = Fraction(q)
        return cls((-q, Fraction(1)), q - 1, q)

    @classmethod
    def roots_of(cls, p: Iterable) -> list["AlgebraicReal"]:
        """All distinct real roots of a nonzero rational polynomial, ascending."""
        sf = P.squarefree_part(P.poly(p))
        out = []
        for d in P.isolate_real_roots(sf):
            if isinstance(d, Fraction):
                out.append(cls.rational(d))
            else:
                out.append(cls(sf, d[0], d[1]))
        out.sort(key=_CmpKey)
        return out

    # -- accessors ----------------------------------------------------------
    @property
    def defining_poly(self) -> tuple[int, ...]:
        """Primitive integer polynomial (lowest degree first) having this number as a root."""
        return P.primitive(self._poly)

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._lo, self._hi

    def is_rational(self) -> bool:
        return self._rational is not None

    def to_fraction(self) -> Fraction:
        if self._rational is None:
            raise ValueError("irrational algebraic number")
        return self._rational

    def _sturm(self):
        if self._seq is None:
            self._seq = P.sturm_sequence(self._poly)
        return self._seq

    def _refine(self) -> None:
        r = P.refine(self._sturm(), self._lo, self._hi)
        if isinstance(r, Fraction):
            self._rational = r
            self._lo, self._hi = r - Fraction(1, 2**64), r
        else:
            self._lo, self._hi = r

    def _detect_rational(self) -> None:
        ints = P.primitive(self._poly)
        lc = abs(ints[-1])
        # any rational root is k/lc for an integer k; make the interval shorter than 1/lc
        while self._rational is None and (self._hi - self._lo) * lc >= 1:
            self._refine()
        if self._rational is not None:
            return
        k = math.floor(self._hi * lc)
        cand = Fraction(k, lc)
        if self._lo < cand <= self._hi and P.evaluate(self._poly, cand) == 0:
            self._rational = cand

    # -- comparison ---------------------------------------------------------
    def compare(self, other: Number) -> int:
        """Exact three-way comparison: -1, 0 or 1."""
        if isinstance(other, (int, Fraction)):
            return self._compare_rational(Fraction(other))
        if not isinstance(other, AlgebraicReal):
            raise TypeError(f"cannot compare AlgebraicReal with {type(other).__name__}")
        if other._rational is not None:
            return self._compare_rational(other._rational)
        if self._rational is not None:
            return -other._compare_rational(self._rational)
        g = P.pgcd(self._poly, other._poly)
        if len(g) > 1:
            lo = max(self._lo, other._lo)
            hi = min(self._hi, other._hi)
            if lo < hi and P.count_roots(P.sturm_sequence(g), lo, hi) > 0:
                return 0
        while not (self._hi < other._lo or other._hi < self._lo):
            self._refine()
            other._refine()
        return -1 if self._hi < other._lo else 1

    def _compare_rational(self, r: Fraction) -> int:
        if self._rational is not None:
            return (self._rational > r) - (self._rational < r)
        while self._lo < r <= self._hi:
            self._refine()
        return 1 if r <= self._lo else -1

    def sign(self) -> int:
        return self.compare(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, AlgebraicReal)):
            return self.compare(other) == 0
        return NotImplemented

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    __hash__ = None

    def is_root_of(self, q: Iterable) -> bool:
        q = P.poly(q)
        if not q:
            return True
        if self._rational is not None:
            return P.evaluate(q, self._rational) == 0
        g = P.pgcd(self._poly, q)
        if len(g) <= 1:
            return False
        return P.count_roots(P.sturm_sequence(g), self._lo, self._hi) > 0

    # -- arithmetic ---------------------------------------------------------
    def affine(self, a: Union[int, Fraction], b: Union[int, Fraction] = 0) -> "AlgebraicReal":
        """Return a*self + b for rational a != 0."""
        a, b = Fraction(a), Fraction(b)
        if a == 0:
            return AlgebraicReal.rational(b)
        if self._rational is not None:
            return AlgebraicReal.rational(a * self._rational + b)
        q = P.compose_affine(self._poly, 1 / a, -b / a)
        lo, hi = sorted((a * self._lo + b, a * self._hi + b))
        return AlgebraicReal(q, lo, hi)

    def __neg__(self) -> "AlgebraicReal":
        return self.affine(-1)

    def __float__(self) -> float:
        if self._rational is not None:
            return float(self._rational)
        if self._float is None:
            while self._hi - self._lo > Fraction(1, 2**62) and self._rational is None:
                self._refine()
            if self._rational is not None:
                return float(self._rational)
            self._float = float((self._lo + self._hi) / 2)
        return self._float

    def __repr__(self) -> str:
        if self._rational is not None:
            return f"AlgebraicReal({self._rational})"
        return f"AlgebraicReal(root of {P.to_str(self.defining_poly)} in ({self._lo}, {self._hi}])"

    def __str__(self) -> str:
        if self._rational is not None:
            return str(self._rational)
        return f"root of {P.to_str(self.defining_poly)} near {float(self):.12f}"


def separator(a: AlgebraicReal, b: AlgebraicReal) -> Fraction:
    """A rational r with a < r < b; requires a < b."""
    if a.compare(b) >= 0:
        raise ValueError("separator requires a < b")
    while True:
        top = a._rational if a._rational is not None else a._hi
        bottom = b._rational if b._rational is not None else b._lo
        if top < bottom:
            return (top + bottom) / 2
        if a._rational is None:
            a._refine()
        if b._rational is None:
            b._refine()


class _CmpKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return self.v.compare(other.v) < 0


# Niven: the only rational values of cos(pi*t)
_RATIONAL_COS = {
    Fraction(0): Fraction(1),
    Fraction(1, 3): Fraction(1, 2),
    Fraction(1, 2): Fraction(0),
    Fraction(2, 3): Fraction(-1, 2),
    Fraction(1): Fraction(-1),
}


@lru_cache(maxsize=512)
def cos_pi(t: Fraction) -> AlgebraicReal:
    """Exact cos(pi * t) for rational t."""
    t = Fraction(t) % 2
    if t > 1:
        t = 2 - t
    if t in _RATIONAL_COS:
        return AlgebraicReal.rational(_RATIONAL_COS[t])
    p, q = t.numerator, t.denominator
    # cos(k pi / q) for k = p mod 2 are exactly the roots of T_q(x) - (-1)^p
    target = P.sub(P.chebyshev_t(q), (Fraction((-1) ** p),))
    roots = AlgebraicReal.roots_of(target)
    ks = sorted((k for k in range(q + 1) if k % 2 == p % 2), reverse=True)
    if len(ks) != len(roots):
        raise ArithmeticError("Chebyshev root count mismatch")
    return roots[ks.index(p)]


@dataclass(frozen=True, eq=False)
class ExactAngle:
    """An angle in (-pi, pi]: exact cosine plus the sign of the sine."""

    cosine: AlgebraicReal
    sign: int

    def __post_init__(self):
        c = self.cosine
        if not isinstance(c, AlgebraicReal):
            object.__setattr__(self, "cosine", AlgebraicReal.rational(Fraction(c)))
            c = self.cosine
        if c.compare(1) > 0 or c.compare(-1) < 0:
            raise ValueError(f"cosine {c} outside [-1, 1]")
        on_axis = c.compare(1) == 0 or c.compare(-1) == 0
        if self.sign not in (-1, 0, 1) or (self.sign == 0) != on_axis:
            raise ValueError(f"sign {self.sign} inconsistent with cosine {c}")

    @classmethod
    def from_pi(cls, t: Union[int, Fraction]) -> "ExactAngle":
        """The angle pi*t, normalized into (-pi, pi]."""
        t = Fraction(t) % 2
        if t > 1:
            t -= 2
        s = (t > 0) - (t < 0)
        if t == 1:
            s = 0
        return cls(cos_pi(t), s)

    @classmethod
    def zero(cls) -> "ExactAngle":
        return cls(AlgebraicReal.rational(1), 0)

    @classmethod
    def pi(cls) -> "ExactAngle":
        return cls(AlgebraicReal.rational(-1), 0)

    def is_zero(self) -> bool:
        return self.sign == 0 and self.cosine.compare(1) == 0

    def is_pi(self) -> bool:
        return self.sign == 0 and self.cosine.compare(-1) == 0

    @property
    def approx(self) -> float:
        if self.is_pi():
            return math.pi
        c = min(1.0, max(-1.0, float(self.cosine)))
        return self.sign * math.acos(c)

    def __neg__(self) -> "ExactAngle":
        return ExactAngle(self.cosine, -self.sign)

    def __eq__(self, other):
        if not isinstance(other, ExactAngle):
            return NotImplemented
        return self.sign == other.sign and self.cosine.compare(other.cosine) == 0

    __hash__ = None

    def pi_fraction(self, max_den: int = 24) -> Fraction | None:
        """Return t with self == pi*t exactly, searching denominators up to max_den."""
        if self.is_zero():
            return Fraction(0)
        if self.is_pi():
            return Fraction(1)
        x = abs(self.approx) / math.pi
        for q in range(1, max_den + 1):
            p = round(x * q)
            if 0 < p < q and abs(p / q - x) < 1e-9 and math.gcd(p, q) == 1:
                if cos_pi(Fraction(p, q)).compare(self.cosine) == 0:
                    return self.sign * Fraction(p, q)
        return None

    def render(self, max_den: int = 24) -> str:
        t = self.pi_fraction(max_den)
        if t is None:
            c = self.cosine
            sgn = "-" if self.sign < 0 else ""
            if c.is_rational():
                return f"{sgn}arccos({c.to_fraction()}) (~{self.approx:.12f})"
            return f"{sgn}arccos[{P.to_str(c.defining_poly, 'c')} = 0, c ~ {float(c):.12f}] (~{self.approx:.12f})"
        return render_pi_multiple(t)

    def __repr__(self) -> str:
        return f"ExactAngle({self.render()})"


def render_pi_multiple(t: Fraction) -> str:
    if t == 0:
        return "0"
    sign = "-" if t < 0 else ""
    a = abs(t)
    num = "pi" if a.numerator == 1 else f"{a.numerator}pi"
    return sign + (num if a.denominator == 1 else f"{num}/{a.denominator}")


def angle_sort_key(a: ExactAngle):
    """Canonical display order: largest |angle| first, +phi before -phi, zeros last."""
    return (a.is_zero(), -round(abs(a.approx), 12), -a.sign)


def same_multiset(xs: list[ExactAngle], ys: list[ExactAngle]) -> bool:
    """Exact multiset equality of angle lists."""
    if len(xs) != len(ys):
        return False
    remaining = list(ys)
    for x in xs:
        for i, y in enumerate(remaining):
            if x == y:
                del remaining[i]
                break
        else:
            return False
    return True
