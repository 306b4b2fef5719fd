"""Command-line interface.

Subcommands: euler, fpoly, kronecker, dynkin, example4.  Exit codes are a
stable API: 0 ok, 2 parse/usage error, 3 non-polynomial point counts,
4 enumeration too large, 5 invariant/verification failure, 6 out of scope.
Every flag has a JSON-config equivalent via --config; explicit flags win.
The environment variable QUIVERGRASS_CAP overrides the default enumeration
cap; --cap overrides both.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import dynkin as dk
from . import euler as eu
from . import kronecker as kr
from . import sampler as sp
from .errors import (
    CountMismatch,
    DegenerateForm,
    NonPolynomialCount,
    ParseError,
    QuivergrassError,
    SearchTooLarge,
    ShapeMismatch,
    SmoothnessFailure,
)
from .fpoly import FPolynomial
from .model import load_representation

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NONPOLY = 3
EXIT_TOO_LARGE = 4
EXIT_VERIFY = 5
EXIT_SCOPE = 6


class ScopeError(QuivergrassError):
    """Requested operation is outside the implemented scope."""


def _csv_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_type(label: str) -> tuple[str, int]:
    m = re.fullmatch(r"([ADEade])(\d+)", label.strip())
    if not m:
        raise ParseError(f"bad type label {label!r}; expected e.g. A3 or D4")
    return m.group(1).upper(), int(m.group(2))


def _parse_lambda(text: str):
    if text is None:
        return None
    text = text.strip()
    if text.lower() == "inf":
        return kr.INFINITY
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad lambda {text!r}; expected a rational or 'inf'") from exc


def _apply_config(args: argparse.Namespace) -> None:
    """Fill in unset flags from the --config JSON document (flags win)."""
    if not getattr(args, "config", None):
        return
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read config {args.config}: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("config document must be a JSON object")
    for key, value in data.items():
        dest = key.replace("-", "_")
        if dest == "lambda":
            dest = "lam"
        if not hasattr(args, dest):
            continue
        current = getattr(args, dest)
        if isinstance(value, bool):
            if current is False:  # store_true flags: absent means False
                setattr(args, dest, value)
        elif current is None:
            setattr(args, dest, str(value))


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_euler(args) -> int:
    if args.rep is None or args.e is None:
        raise ParseError("euler needs --rep and --e")
    rep = load_representation(args.rep)
    e = _csv_ints(args.e)
    cap = int(args.cap) if args.cap is not None else None
    try:
        poly = eu.counting_polynomial(rep, e, cap)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    lines = [f"chi = {poly.chi}"]
    if args.verbose:
        qpoly = FPolynomial(1, {(k,): c for k, c in enumerate(poly.coefficients)})
        lines.append(f"counting polynomial: {qpoly.to_text(names=('q',))}")
        lines.append("sample primes: " + ", ".join(str(p) for p, _ in poly.samples))
    payload = {
        "chi": poly.chi,
        "e": list(e),
        "counting_polynomial": list(poly.coefficients),
        "samples": [[p, c] for p, c in poly.samples],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_fpoly(args) -> int:
    if args.rep is None:
        raise ParseError("fpoly needs --rep")
    rep = load_representation(args.rep)
    cap = int(args.cap) if args.cap is not None else None
    poly = eu.f_polynomial(rep, cap)
    _emit(args, poly.to_text(), poly.to_json_dict())
    return EXIT_OK


def cmd_kronecker(args) -> int:
    if args.m is None:
        raise ParseError("kronecker needs --m")
    m = int(args.m)
    lam = _parse_lambda(args.lam) if args.kind == "reg" else None
    try:
        kind = (kr.regular(m, lam if lam is not None else 0) if args.kind == "reg"
                else kr.KroneckerKind(args.kind, m))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    mode = args.mode or "both"
    cap = int(args.cap) if args.cap is not None else None
    rep = kr.build_kronecker(kind)
    d1, d2 = kr.dims_of(kind)
    rows = []
    mismatch = False
    for e1 in range(d1 + 1):
        for e2 in range(d2 + 1):
            row: dict = {"e": [e1, e2]}
            if mode in ("formula", "both"):
                row["formula"] = kr.kronecker_chi(kind, (e1, e2))
            if mode in ("bruteforce", "both"):
                row["bruteforce"] = eu.euler_characteristic(rep, (e1, e2), cap)
            if mode == "both":
                row["match"] = row["formula"] == row["bruteforce"]
                mismatch = mismatch or not row["match"]
            rows.append(row)
    width = max(len(str(r.get("formula", r.get("bruteforce", "")))) for r in rows)
    lines = [f"kind={args.kind} m={m}" + (f" lambda={lam}" if lam is not None else "")]
    for row in rows:
        cells = [f"e=({row['e'][0]},{row['e'][1]})"]
        if "formula" in row:
            cells.append(f"formula={row['formula']:>{width}}")
        if "bruteforce" in row:
            cells.append(f"bruteforce={row['bruteforce']:>{width}}")
        if "match" in row:
            cells.append("ok" if row["match"] else "MISMATCH")
        lines.append("  ".join(cells))
    payload = {"kind": args.kind, "m": m,
               "lambda": str(lam) if lam is not None else None, "rows": rows}
    _emit(args, "\n".join(lines), payload)
    return EXIT_VERIFY if mismatch else EXIT_OK


def cmd_dynkin(args) -> int:
    if args.type is None or args.coxeter is None or args.root is None:
        raise ParseError("dynkin needs --type, --coxeter and --root")
    label, rank = _parse_type(args.type)
    mode = args.mode or "both"
    if label != "A" and mode in ("minor", "both"):
        raise ScopeError("the determinantal route is implemented for type A only")
    if label == "A" and rank > 5 and mode != "minor":
        raise ScopeError("brute-force cross-checks are limited to A_n with n <= 5")
    if label == "D" and rank != 4:
        raise ScopeError("type D brute force is limited to D4")
    if label == "E":
        raise ScopeError("type E is combinatorics-only; no evaluation route")
    rs = dk.root_system(label, rank)
    word = tuple(i - 1 for i in _csv_ints(args.coxeter))
    alpha = _csv_ints(args.root)
    try:
        dk._check_word(rs, word)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if tuple(alpha) not in rs.positive_roots:
        raise ParseError(f"{list(alpha)} is not a positive root of {label}{rank}")
    cap = int(args.cap) if args.cap is not None else None
    seed = int(args.seed) if args.seed is not None else 0
    payload: dict = {"type": f"{label}{rank}",
                     "coxeter": [i + 1 for i in word], "root": list(alpha)}
    lines = []
    minor_poly = brute_poly = None
    if mode in ("minor", "both"):
        minor_poly = dk.f_polynomial_via_minor(rank, word, alpha)
        payload["minor"] = minor_poly.to_json_dict()
        lines.append(f"minor:      {minor_poly.to_text()}")
    if mode in ("bruteforce", "both"):
        quiver = dk.orientation_from_coxeter(rs, word)
        rep = dk.dynkin_indecomposable(quiver, alpha, seed=seed)
        brute_poly = eu.f_polynomial(rep, cap)
        payload["bruteforce"] = brute_poly.to_json_dict()
        lines.append(f"bruteforce: {brute_poly.to_text()}")
    if mode == "both":
        match = minor_poly == brute_poly
        payload["match"] = match
        lines.append("ok" if match else "MISMATCH")
        if not match:
            _emit(args, "\n".join(lines), payload)
            return EXIT_VERIFY
    if mode == "minor":
        lines = [minor_poly.to_text()]
    elif mode == "bruteforce":
        lines = [brute_poly.to_text()]
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_example4(args) -> int:
    seed = int(args.seed) if args.seed is not None else 42
    bound = int(args.bound) if args.bound is not None else 5
    primes = _csv_ints(args.primes) if args.primes is not None else sp.EXAMPLE4_PRIMES
    cap = int(args.cap) if args.cap is not None else None
    rep = sp.sample_general_rep(kr.kronecker_quiver(sp.EXAMPLE4_ARROWS),
                                sp.EXAMPLE4_DIMS, seed, bound)
    try:
        report = sp.example4_verify(rep, primes, cap)
    except DegenerateForm as exc:
        print(f"degenerate: {exc}; try another --seed", file=sys.stderr)
        return EXIT_VERIFY
    lines = [f"quartic: {report['quartic']}"]
    for p in sorted(report["smooth_over_each_p"]):
        pc = report["point_count_match"][p]
        lines.append(f"p={p}: smooth, curve points {pc['curve_points']} "
                     f"= Grassmannian points {pc['grassmannian_points']}")
    if report["chi"] is not None:
        lines.append(f"chi = {report['chi']}")
    else:
        lines.append("chi withheld (no primes requested)")
    _emit(args, "\n".join(lines), report)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivergrass",
        description="Exact Euler characteristics of quiver Grassmannians.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cap", help="enumeration cap (candidates)")
        p.add_argument("--config", help="JSON file with flag defaults")
        p.add_argument("--json", action="store_true", help="emit a JSON payload")

    p = sub.add_parser("euler", help="chi(Gr_e) of a representation file")
    p.add_argument("--rep", help="representation JSON file")
    p.add_argument("--e", help="dimension vector, comma-separated")
    p.add_argument("--verbose", action="store_true")
    common(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("fpoly", help="full generating polynomial of a representation file")
    p.add_argument("--rep", help="representation JSON file")
    common(p)
    p.set_defaults(func=cmd_fpoly)

    p = sub.add_parser("kronecker", help="closed form vs brute force for Kronecker modules")
    p.add_argument("kind", choices=("pr", "inj", "reg"))
    p.add_argument("--m", help="family parameter m >= 1")
    p.add_argument("--lambda", dest="lam", help="regular parameter (rational or 'inf')")
    p.add_argument("--mode", choices=("formula", "bruteforce", "both"))
    common(p)
    p.set_defaults(func=cmd_kronecker)

    p = sub.add_parser("dynkin", help="determinantal vs brute-force F-polynomial")
    p.add_argument("--type", help="type label, e.g. A3")
    p.add_argument("--coxeter", help="Coxeter word, comma-separated 1-based vertices")
    p.add_argument("--root", help="positive root in simple-root coordinates")
    p.add_argument("--mode", choices=("minor", "bruteforce", "both"))
    p.add_argument("--seed", help="seed for the indecomposable search")
    common(p)
    p.set_defaults(func=cmd_dynkin)

    p = sub.add_parser("example4", help="plane-quartic pipeline on the 4-arrow Kronecker quiver")
    p.add_argument("--seed", help="sampling seed (default 42)")
    p.add_argument("--primes", help="witness primes, comma-separated (may be empty)")
    p.add_argument("--bound", help="entry bound for sampling (default 5)")
    common(p)
    p.set_defaults(func=cmd_example4)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        return args.func(args)
    except (ParseError, ShapeMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonPolynomialCount as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("hint: for the plane-quartic family use the `example4` command",
              file=sys.stderr)
        return EXIT_NONPOLY
    except SearchTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except ScopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCOPE
    except (SmoothnessFailure, CountMismatch, DegenerateForm) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except QuivergrassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
