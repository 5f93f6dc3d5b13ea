"""Dense univariate polynomials with exact coefficients.

A polynomial is a tuple of coefficients, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``. Arithmetic works over any exact field
whose elements support ``+ - * /`` and comparison with 0 (``Fraction`` or
:class:`~g2nu.surds.Surd`). Root isolation (Sturm sequences) requires
rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Poly = tuple
RootDescriptor = Union[Fraction, tuple[Fraction, Fraction]]


def poly(coeffs: Iterable) -> Poly:
    """Normalize an iterable of coefficients (lowest degree first)."""
    c = [x if not isinstance(x, int) else Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    return len(p) - 1


def lead(p: Poly):
    return p[-1]


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    zero = Fraction(0)
    return poly((p[i] if i < len(p) else zero) + (q[i] if i < len(q) else zero) for i in range(n))


def neg(p: Poly) -> Poly:
    return tuple(-x for x in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, s) -> Poly:
    return poly(x * s for x in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return poly(out)


def divmod_(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lq = q[-1]
    if len(r) - 1 < dq:
        return (), poly(r)
    quot = [Fraction(0)] * (len(r) - dq)
    for k in range(len(r) - dq - 1, -1, -1):
        c = r[k + dq] / lq
        quot[k] = c
        if c != 0:
            for j in range(dq + 1):
                r[k + j] = r[k + j] - c * q[j]
    return poly(quot), poly(r[:dq])


def monic(p: Poly) -> Poly:
    if not p:
        return p
    return scale(p, 1 / p[-1]) if p[-1] != 1 else p


def pgcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor."""
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def derivative(p: Poly) -> Poly:
    return poly(p[i] * i for i in range(1, len(p)))


def evaluate(p: Poly, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose_affine(p: Poly, a, b) -> Poly:
    """Return p(a*x + b)."""
    out: Poly = ()
    lin = poly([b, a])
    for c in reversed(p):
        out = add(mul(out, lin), poly([c]))
    return out


def from_roots(roots: Sequence) -> Poly:
    out: Poly = (Fraction(1),)
    for r in roots:
        out = mul(out, (-r, Fraction(1)))
    return out


def primitive(p: Poly) -> tuple[int, ...]:
    """Scale a rational polynomial to coprime integers with positive leading coefficient."""
    if not p:
        return ()
    fr = [Fraction(x) for x in p]
    den = lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if ints[-1] < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = c * prod f_k^k with f_k squarefree, pairwise coprime, monic.

    Only factors of positive degree are returned.
    """
    if len(p) <= 1:
        return []
    out = []
    dp = derivative(p)
    a = pgcd(p, dp)
    b = divmod_(p, a)[0]
    c = divmod_(dp, a)[0]
    d = sub(c, derivative(b))
    k = 1
    while len(b) > 1:
        a = pgcd(b, d)
        if len(a) > 1:
            out.append((a, k))
        b = divmod_(b, a)[0]
        c = divmod_(d, a)[0]
        d = sub(c, derivative(b))
        k += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    if len(p) <= 1:
        return monic(p)
    return monic(divmod_(p, pgcd(p, derivative(p)))[0])


def chebyshev_t(n: int) -> Poly:
    """Chebyshev polynomial T_n, so that T_n(cos x) = cos(n x)."""
    t0: Poly = (Fraction(1),)
    t1: Poly = (Fraction(0), Fraction(1))
    if n == 0:
        return t0
    for _ in range(n - 1):
        t0, t1 = t1, sub(mul((Fraction(0), Fraction(2)), t1), t0)
    return t1


# ---------------------------------------------------------------------------
# Sturm sequences (rational coefficients)


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, derivative(p)]
    while seq[-1] and len(seq[-1]) > 1:
        r = divmod_(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(neg(r))
    return [s for s in seq if s]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    v = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def variations_at(seq: Sequence[Poly], x) -> int:
    return _variations(_sign(evaluate(s, x)) for s in seq)


def variations_at_infinity(seq: Sequence[Poly], positive: bool) -> int:
    if positive:
        return _variations(_sign(s[-1]) for s in seq)
    return _variations(_sign(s[-1]) * (-1) ** (len(s) - 1) for s in seq)


def count_roots(seq: Sequence[Poly], lo=None, hi=None) -> int:
    """Distinct real roots of seq[0] in (lo, hi]; ``None`` means infinite.

    ``lo`` must not be a root.
    """
    vlo = variations_at_infinity(seq, False) if lo is None else variations_at(seq, lo)
    vhi = variations_at_infinity(seq, True) if hi is None else variations_at(seq, hi)
    return vlo - vhi


def cauchy_bound(p: Poly) -> Fraction:
    lc = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lc for c in p[:-1]), default=Fraction(0))


def isolate_real_roots(p: Poly) -> list[RootDescriptor]:
    """Isolate the real roots of a squarefree rational polynomial.

    Returns sorted descriptors: a ``Fraction`` for a root met exactly during
    bisection, otherwise ``(lo, hi)`` with exactly one root in ``(lo, hi]``.
    """
    p = poly(p)
    if len(p) <= 1:
        return []
    bound = cauchy_bound(p)
    return _isolate(p, -bound, bound)


def _isolate(p: Poly, lo: Fraction, hi: Fraction) -> list[RootDescriptor]:
    seq = sturm_sequence(p)
    out: list[RootDescriptor] = []
    stack = [(lo, hi)]
    found = []
    while stack:
        a, b = stack.pop()
        n = count_roots(seq, a, b)
        if n == 0:
            continue
        if n == 1:
            found.append((a, b))
            continue
        m = (a + b) / 2
        if evaluate(p, m) == 0:
            # deflate the rational root and restart on the quotient
            q = divmod_(p, (-m, Fraction(1)))[0]
            rest = _isolate(q, lo, hi) if len(q) > 1 else []
            qseq = sturm_sequence(q) if len(q) > 1 else []
            out = [m]
            for d in rest:
                # intervals must also exclude m, which is a root of p but not of q
                while not isinstance(d, Fraction) and d[0] < m <= d[1]:
                    d = refine(qseq, d[0], d[1])
                out.append(d)
            return sorted(out, key=_descriptor_key)
        stack.append((a, m))
        stack.append((m, b))
    out.extend(found)
    return sorted(out, key=_descriptor_key)


def _descriptor_key(d: RootDescriptor) -> Fraction:
    return d if isinstance(d, Fraction) else d[1]


def refine(seq: Sequence[Poly], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction] | Fraction:
    """Halve an isolating interval; returns the exact root if the midpoint hits it."""
    m = (lo + hi) / 2
    if evaluate(seq[0], m) == 0:
        return m
    if count_roots(seq, lo, m) == 1:
        return lo, m
    return m, hi


def to_str(p: Sequence, var: str = "x") -> str:
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mon and c == 1:
            s = mon
        elif mon and c == -1:
            s = "-" + mon
        else:
            s = f"{c}{'*' + mon if mon else ''}"
        terms.append(s)
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")
