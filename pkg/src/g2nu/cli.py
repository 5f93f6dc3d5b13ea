"""Command line interface.

Exit codes: 0 success, 1 catalog verification failure, 2 input error,
3 mathematical error, 4 gluing angle incompatible with the configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import catalog, docio
from .classify import ManifoldInvariants, full_verdict
from .config import configuration_angles
from .errors import CompatibilityError, InputError, MathematicalError
from .invariants import NuReport, nu_bar
from .torus import TorusFactor, gluing_angles, parse_length

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_MATH = 3
EXIT_INCOMPATIBLE = 4

_GLOBAL_DEFAULTS = {"format": "text", "tolerance": 1e-9, "exact": True}


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _nu_payload(r: NuReport) -> dict[str, Any]:
    f = docio.fraction_str
    return {
        "name": r.name,
        "rho_over_pi": f(r.rho_over_pi),
        "m_rho": r.m_rho,
        "term_halves": f(r.term_halves),
        "term_gluing": f(r.term_gluing),
        "term_maslov": r.term_maslov,
        "nu_bar": f(r.nu_bar),
        "nu_mod_48": r.nu_mod_48,
        "b1": r.b1,
        "integral": r.integral,
        "divisible_by_3": r.divisible_by_3,
        "within_bound": r.within_bound,
        "conditional_on_halves": r.conditional_on_halves,
    }


def _yes(flag) -> str:
    return "n/a" if flag is None else ("yes" if flag else "no")


def _nu_text(r: NuReport) -> str:
    lines = [
        f"name: {r.name}",
        f"rho/pi = {r.rho_over_pi}",
        f"halves = {r.term_halves}" + (" (supplied; result conditional on them)" if r.conditional_on_halves else ""),
        f"-72 rho/pi = {r.term_gluing}",
        f"3 m_rho = {r.term_maslov} (m_rho = {r.m_rho})",
        f"nu_bar = {r.nu_bar}",
        f"nu mod 48 = {r.nu_mod_48 if r.nu_mod_48 is not None else 'undefined (non-integral nu_bar)'} (b1 = {r.b1})",
        f"integral: {_yes(r.integral)}; divisible by 3: {_yes(r.divisible_by_3)}; "
        f"within bound: {_yes(r.within_bound)}",
    ]
    return "\n".join(lines)


def cmd_angles(args) -> int:
    doc = docio.load(args.path)
    spectrum = configuration_angles(doc.configuration, exact=args.exact, tolerance=args.tolerance)
    payload = {
        "name": doc.configuration.name,
        "alpha_plus": [a.render() for a in spectrum.alpha_plus],
        "alpha_minus": [a.render() for a in spectrum.alpha_minus],
    }
    _emit(args, payload, spectrum.render())
    return EXIT_OK


def cmd_nu(args) -> int:
    doc = docio.load(args.path)
    report = nu_bar(doc.configuration, b1=args.b1, exact=args.exact, tolerance=args.tolerance)
    _emit(args, _nu_payload(report), _nu_text(report))
    return EXIT_OK


def _manifold_with_nu(path: str, args) -> ManifoldInvariants:
    doc = docio.load(path)
    if doc.manifold is None:
        raise InputError(f"{path}: a manifold block (b3, div_p1, torsion_free, two_connected) is required")
    report = nu_bar(doc.configuration, exact=args.exact, tolerance=args.tolerance)
    if not report.integral:
        raise MathematicalError(f"{path}: nu_bar = {report.nu_bar} is not an integer")
    m = doc.manifold
    return ManifoldInvariants(m.b3, m.div_p1, m.h4_torsion_free, m.two_connected, 0, report.nu_bar.numerator)


def cmd_classify(args) -> int:
    a = _manifold_with_nu(args.path_a, args)
    b = _manifold_with_nu(args.path_b, args)
    verdict = full_verdict(a, b)
    _emit(args, {"level": verdict.level.value, "reasoning": list(verdict.reasoning)}, verdict.render())
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        items = catalog.entries()
        payload = {"entries": [{"id": e.id, "citation": e.citation} for e in items]}
        _emit(args, payload, "\n".join(f"{e.id}: {e.citation}" for e in items))
        return EXIT_OK
    if args.action == "show":
        if not args.id:
            raise InputError("catalog show needs an entry id")
        print(docio.dumps(catalog.get(args.id).document()))
        return EXIT_OK
    results = catalog.verify_all()
    passed = sum(r.ok for r in results)
    lines = []
    for r in results:
        lines.append(f"{r.id}: {'pass' if r.ok else 'FAIL'}")
        lines += [f"  {p}" for p in r.problems]
    lines.append(f"{passed}/{len(results)} pass")
    payload = {
        "passed": passed,
        "total": len(results),
        "results": [{"id": r.id, "ok": r.ok, "problems": list(r.problems)} for r in results],
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if passed == len(results) else EXIT_VERIFY_FAILED


def cmd_match_torus(args) -> int:
    plus = TorusFactor(args.k_plus, parse_length(args.zeta_plus), parse_length(args.xi_plus))
    minus = TorusFactor(args.k_minus, parse_length(args.zeta_minus), parse_length(args.xi_minus))
    angles = gluing_angles(plus, minus)
    payload = {
        "thetas": [
            {"theta": g.render(), "over_pi": docio.fraction_str(g.over_pi) if g.over_pi is not None else None}
            for g in angles
        ]
    }
    text = "\n".join(f"theta = {g.render()}" for g in angles) if angles else "no matching isometry"
    _emit(args, payload, text)
    return EXIT_OK


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("text", "json"), default=default or "text", help="output format")
    parser.add_argument(
        "--tolerance", type=float, default=default or 1e-9,
        help="tolerance of the numeric fallback (only used with --no-exact)",
    )
    parser.add_argument(
        "--exact", action=argparse.BooleanOptionalAction, default=default if suppress else True,
        help="decide every sign exactly (default); --no-exact uses floating point signatures",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="g2nu", description="Extended nu-invariants of extra twisted connected sums.")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("angles", parents=[common], help="configuration angles of a document")
    p.add_argument("path")
    p.set_defaults(func=cmd_angles)

    p = sub.add_parser("nu", parents=[common], help="nu_bar and nu mod 48 of a document")
    p.add_argument("path")
    p.add_argument("--b1", type=int, default=0, help="first Betti number used in the mod 48 conversion")
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("classify", parents=[common], help="compare two documents with manifold blocks")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", parents=[common], help="built-in examples")
    p.add_argument("action", choices=("list", "show", "verify"))
    p.add_argument("id", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("match-torus", parents=[common], help="gluing angles between two torus factors")
    for side in ("plus", "minus"):
        p.add_argument(f"--k-{side}", type=int, required=True)
        p.add_argument(f"--zeta-{side}", required=True, help="length, e.g. 1 or 'sqrt(3)' or '2/sqrt(2)'")
        p.add_argument(f"--xi-{side}", required=True)
    p.set_defaults(func=cmd_match_torus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, value in _GLOBAL_DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CompatibilityError as exc:
        print(f"incompatible: {exc}", file=sys.stderr)
        return EXIT_INCOMPATIBLE
    except MathematicalError as exc:
        print(f"mathematical error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
