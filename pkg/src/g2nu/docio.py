"""JSON configuration documents.

Schema (all keys at top level)::

    name         string
    k_plus       positive integer
    k_minus      positive integer
    theta        {"num": int, "den": int}, meaning theta = pi * num / den
    rank_plus    positive integer
    rank_minus   positive integer
    gram         array of arrays of integers, N+ basis first
    nu_bar_plus  optional integer or "p/q" string
    nu_bar_minus optional integer or "p/q" string
    manifold     optional {"b3": int, "div_p1": int, "torsion_free": bool, "two_connected": bool}
    citation     optional string
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .classify import ManifoldInvariants
from .config import Configuration
from .errors import InputError

KEY_ORDER = (
    "name", "k_plus", "k_minus", "theta", "rank_plus", "rank_minus", "gram",
    "nu_bar_plus", "nu_bar_minus", "manifold", "citation",
)
MANIFOLD_KEYS = ("b3", "div_p1", "torsion_free", "two_connected")


@dataclass(frozen=True)
class ConfigDocument:
    configuration: Configuration
    manifold: Optional[ManifoldInvariants] = None
    citation: Optional[str] = None


def fraction_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _int(doc: dict, key: str, where: str = "") -> int:
    v = doc.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{where}{key}: expected an integer, got {json.dumps(v)}")
    return v


def _bool(doc: dict, key: str, where: str) -> bool:
    v = doc.get(key, True)
    if not isinstance(v, bool):
        raise InputError(f"{where}{key}: expected true or false, got {json.dumps(v)}")
    return v


def _rational(v: Any, key: str) -> Fraction:
    if isinstance(v, bool):
        raise InputError(f"{key}: expected an integer or 'p/q' string")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            pass
    raise InputError(f"{key}: expected an integer or 'p/q' string, got {json.dumps(v)}")


def from_dict(doc: Any) -> ConfigDocument:
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object")
    unknown = sorted(set(doc) - set(KEY_ORDER))
    if unknown:
        raise InputError(f"unknown keys: {', '.join(unknown)}")
    for key in ("name", "k_plus", "k_minus", "theta", "rank_plus", "rank_minus", "gram"):
        if key not in doc:
            raise InputError(f"missing required key {key!r}")
    if not isinstance(doc["name"], str):
        raise InputError("name: expected a string")
    theta = doc["theta"]
    if not isinstance(theta, dict) or set(theta) != {"num", "den"}:
        raise InputError('theta: expected {"num": int, "den": int}')
    num, den = _int(theta, "num", "theta."), _int(theta, "den", "theta.")
    if den == 0:
        raise InputError("theta.den must be nonzero")
    gram = doc["gram"]
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise InputError("gram: expected an array of arrays of integers")
    for i, row in enumerate(gram):
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"gram[{i}][{j}]: expected an integer, got {json.dumps(x)}")
    halves = {k: _rational(doc[k], k) if doc.get(k) is not None else None for k in ("nu_bar_plus", "nu_bar_minus")}
    cfg = Configuration(
        doc["name"], _int(doc, "rank_plus"), _int(doc, "rank_minus"), gram, Fraction(num, den),
        _int(doc, "k_plus"), _int(doc, "k_minus"), halves["nu_bar_plus"], halves["nu_bar_minus"],
    )
    manifold = None
    if doc.get("manifold") is not None:
        m = doc["manifold"]
        if not isinstance(m, dict):
            raise InputError("manifold: expected an object")
        extra = sorted(set(m) - set(MANIFOLD_KEYS))
        if extra:
            raise InputError(f"manifold: unknown keys {', '.join(extra)}")
        manifold = ManifoldInvariants(
            _int(m, "b3", "manifold."), _int(m, "div_p1", "manifold."),
            _bool(m, "torsion_free", "manifold."), _bool(m, "two_connected", "manifold."),
        )
    citation = doc.get("citation")
    if citation is not None and not isinstance(citation, str):
        raise InputError("citation: expected a string")
    return ConfigDocument(cfg, manifold, citation)


def loads(text: str) -> ConfigDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(data)


def load(path: str) -> ConfigDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return loads(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def to_dict(doc: ConfigDocument) -> dict:
    cfg = doc.configuration
    out: dict[str, Any] = {
        "name": cfg.name,
        "k_plus": cfg.k_plus,
        "k_minus": cfg.k_minus,
        "theta": {"num": cfg.theta.numerator, "den": cfg.theta.denominator},
        "rank_plus": cfg.rank_plus,
        "rank_minus": cfg.rank_minus,
        "gram": cfg.gram.tolist(),
    }
    for key in ("nu_bar_plus", "nu_bar_minus"):
        v = getattr(cfg, key)
        if v is not None:
            out[key] = v.numerator if v.denominator == 1 else fraction_str(v)
    if doc.manifold is not None:
        m = doc.manifold
        out["manifold"] = {
            "b3": m.b3, "div_p1": m.div_p1, "torsion_free": m.h4_torsion_free, "two_connected": m.two_connected,
        }
    if doc.citation is not None:
        out["citation"] = doc.citation
    return out


def dumps(doc: ConfigDocument) -> str:
    return json.dumps(to_dict(doc), indent=2)
