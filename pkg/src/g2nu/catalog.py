"""Built-in worked examples with their expected angles and invariants.

The ids ``ex_3_6`` ... ``ex_3_11`` name the five extra-twisted examples;
``rect_b74`` and ``rect_b86`` are rectangular (theta = pi/2) partners with the
same (b3, div p1) as ``ex_3_7`` and ``ex_3_11``. Their actual polarising
lattices are not part of the source data, so they carry a stand-in orthogonal
configuration (2) + (2); any theta = pi/2 configuration gives nu_bar = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .algebraic import ExactAngle
from .classify import ManifoldInvariants
from .config import AngleSpectrum, Configuration, configuration_angles
from .docio import ConfigDocument
from .errors import G2NuError, InputError
from .invariants import nu_bar, nu_mod_48
from .surds import Surd
from .torus import TorusFactor, gluing_angles


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    id: str
    configuration: Configuration
    expected_alpha_plus: tuple[ExactAngle, ...]
    expected_alpha_minus: tuple[ExactAngle, ...]
    expected_nu_bar: int
    manifold: ManifoldInvariants
    citation: str
    torus: Optional[tuple[TorusFactor, TorusFactor]] = None

    @property
    def expected_nu_mod_48(self) -> int:
        return nu_mod_48(self.expected_nu_bar, self.manifold.b1)

    @property
    def expected_spectrum(self) -> AngleSpectrum:
        return AngleSpectrum(self.expected_alpha_plus, self.expected_alpha_minus)

    def document(self) -> ConfigDocument:
        """The entry in the JSON document format accepted by the command line."""
        return ConfigDocument(self.configuration, self.manifold, self.citation)

    def manifold_with_nu_bar(self) -> ManifoldInvariants:
        m = self.manifold
        return ManifoldInvariants(m.b3, m.div_p1, m.h4_torsion_free, m.two_connected, m.b1, self.expected_nu_bar)


def _angles(*items) -> tuple[ExactAngle, ...]:
    """Angles from (t, count) pairs with t the angle divided by pi."""
    out: list[ExactAngle] = []
    for t, n in items:
        out += [ExactAngle.from_pi(Fraction(t))] * n
    return tuple(out)


def _pair(t) -> tuple:
    return ((Fraction(t), 1), (-Fraction(t), 1))


_ONE = Surd(1)
_SQUARE = (TorusFactor(2, _ONE, _ONE), TorusFactor(1, _ONE / Surd.sqrt(2), _ONE / Surd.sqrt(2)))
_HEX = (TorusFactor(2, _ONE, Surd.sqrt(3)), TorusFactor(2, Surd.sqrt(3), _ONE))
_RECT = (TorusFactor(1, _ONE, _ONE), TorusFactor(1, _ONE, _ONE))


def _cfg(name, rank_plus, gram, theta, k_plus, k_minus) -> Configuration:
    return Configuration(name, rank_plus, len(gram) - rank_plus, gram, Fraction(theta), k_plus, k_minus)


def _build() -> tuple[CatalogEntry, ...]:
    q = Fraction
    return (
        CatalogEntry(
            "ex_3_6",
            _cfg("ex_3_6", 1, [[2, 2], [2, 4]], q(1, 4), 2, 1),
            _angles(*_pair(q(1, 2)), (0, 1)),
            _angles((0, 19)),
            -39,
            ManifoldInvariants(134, 48),
            "theta = pi/4; N+ = (2) with involution, N- = (4); b3 = 134, div p1 = 48",
            _SQUARE,
        ),
        CatalogEntry(
            "ex_3_7",
            _cfg("ex_3_7", 2, [[2, 0, 2, 1], [0, -2, 0, 1], [2, 0, 4, 2], [1, 1, 2, 0]], q(1, 4), 2, 1),
            _angles(*_pair(q(1, 2)), (0, 1)),
            _angles(*_pair(q(1, 2)), (0, 17)),
            -36,
            ManifoldInvariants(97, 4),
            "theta = pi/4; N+ = (2 0 / 0 -2), N- = (4 2 / 2 0); b3 = 97, div p1 = 4; "
            "smoothly the same as a rectangular sum with nu_bar = 0",
            _SQUARE,
        ),
        CatalogEntry(
            "ex_3_8",
            _cfg("ex_3_8", 1, [[2, 1, 3], [1, 0, 4], [3, 4, 8]], q(1, 4), 2, 1),
            _angles(*_pair(q(1, 2)), (0, 1)),
            _angles((1, 1), (0, 18)),
            -36,
            ManifoldInvariants(91, 8),
            "theta = pi/4; N+ = (2), N- = (0 4 / 4 8); a reflection on the negative part; b3 = 91, div p1 = 8",
            _SQUARE,
        ),
        CatalogEntry(
            "ex_3_10",
            _cfg("ex_3_10", 1, [[2, 3], [3, 6]], q(1, 6), 2, 2),
            _angles(*_pair(q(1, 3)), (0, 1)),
            _angles((0, 19)),
            -51,
            ManifoldInvariants(86, 4),
            "theta = pi/6; N+ = (2), N- = (6), both halves with involution; b3 = 86, div p1 = 4",
            _HEX,
        ),
        CatalogEntry(
            "ex_3_11",
            _cfg("ex_3_11", 2, [[2, 0, 2, 1], [0, -2, 1, 2], [2, 1, 2, 0], [1, 2, 0, -2]], q(1, 6), 2, 2),
            _angles(*_pair(q(1, 3)), (0, 1)),
            _angles(*_pair(q(1, 3)), (0, 17)),
            -48,
            ManifoldInvariants(109, 4),
            "theta = pi/6; N+ = N- = (2 0 / 0 -2); b3 = 109, div p1 = 4; "
            "same smooth type and nu as a rectangular sum, different nu_bar",
            _HEX,
        ),
        CatalogEntry(
            "rect_b74",
            _cfg("rect_b74", 1, [[2, 0], [0, 2]], q(1, 2), 1, 1),
            _angles((1, 2), (0, 1)),
            _angles((0, 19)),
            0,
            ManifoldInvariants(97, 4),
            "rectangular twisted connected sum with b3 = 97, div p1 = 4; stand-in orthogonal configuration",
            _RECT,
        ),
        CatalogEntry(
            "rect_b86",
            _cfg("rect_b86", 1, [[2, 0], [0, 2]], q(1, 2), 1, 1),
            _angles((1, 2), (0, 1)),
            _angles((0, 19)),
            0,
            ManifoldInvariants(109, 4),
            "rectangular twisted connected sum with b3 = 109, div p1 = 4; stand-in orthogonal configuration",
            _RECT,
        ),
    )


_ENTRIES: Optional[tuple[CatalogEntry, ...]] = None


def entries() -> list[CatalogEntry]:
    global _ENTRIES
    if _ENTRIES is None:
        _ENTRIES = _build()
    return list(_ENTRIES)


def get(entry_id: str) -> CatalogEntry:
    for e in entries():
        if e.id == entry_id:
            return e
    raise InputError(f"unknown catalog id {entry_id!r}; known ids: {', '.join(e.id for e in entries())}")


@dataclass(frozen=True)
class EntryResult:
    id: str
    ok: bool
    problems: tuple[str, ...] = field(default=())


def verify_entry(entry: CatalogEntry) -> EntryResult:
    """Recompute angles and invariants of one entry and list every disagreement."""
    problems: list[str] = []
    try:
        got = configuration_angles(entry.configuration)
    except G2NuError as exc:
        return EntryResult(entry.id, False, (f"angles failed: {type(exc).__name__}: {exc}",))
    want = entry.expected_spectrum
    if got != want:
        problems.append(f"angle mismatch: computed {got.render()}, expected {want.render()}")
    try:
        report = nu_bar(entry.configuration, b1=entry.manifold.b1)
    except G2NuError as exc:
        problems.append(f"nu_bar failed: {type(exc).__name__}: {exc}")
    else:
        if report.nu_bar != entry.expected_nu_bar:
            problems.append(f"nu_bar mismatch: computed {report.nu_bar}, expected {entry.expected_nu_bar}")
        if report.nu_mod_48 != entry.expected_nu_mod_48:
            problems.append(f"nu mismatch: computed {report.nu_mod_48}, expected {entry.expected_nu_mod_48}")
    if entry.torus is not None:
        thetas = [g.over_pi for g in gluing_angles(*entry.torus)]
        if entry.configuration.theta not in thetas:
            problems.append(f"torus recipe does not admit theta = {entry.configuration.theta}*pi")
    return EntryResult(entry.id, not problems, tuple(problems))


def verify_all(ids: Optional[Iterable[str]] = None) -> list[EntryResult]:
    chosen = entries() if ids is None else [get(i) for i in ids]
    return [verify_entry(e) for e in chosen]


def berger_identity() -> Fraction:
    """24 * 12923 / (2 * 3^2 * 5^6) - 3 * 4817 / (3^2 * 5^6)."""
    return Fraction(24 * 12923, 2 * 3**2 * 5**6) - Fraction(3 * 4817, 3**2 * 5**6)
