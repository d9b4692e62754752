"""Command-line front end.

Exit codes: 0 success, 1 failed invariant, 2 usage error, 3 domain or parameter error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from . import angular as ang
from . import potentials as pot
from .checks import SUITES, run_checks
from .errors import CatalogOnlyError, InvalidEquation, RomanovskiError
from .hyperclass import HyperParams, classify, pearson_weight
from .polyalg import fraction_str, to_fraction
from .quad import gram_matrix
from .rodrigues import family_from_name, family_poly

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


# --- parsing helpers ------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    try:
        return to_fraction(text.strip())
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise UsageError(f"not a rational literal: {text!r}") from exc


def parse_params(text: str | None) -> dict[str, str]:
    out: dict[str, str] = {}
    if not text:
        return out
    for item in text.split(","):
        if not item.strip():
            continue
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not of the form key=value")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def parse_n_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        n = int(text)
        return range(n, n + 1)
    except ValueError as exc:
        raise UsageError(f"bad degree range {text!r}; use N or LO..HI") from exc


def parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid {text!r} must be lo:hi:count")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}") from exc
    if count < 1:
        raise UsageError("grid count must be positive")
    return lo, hi, count


def _float_params(params: dict[str, str]) -> dict[str, float]:
    return {k: float(parse_rational(v)) for k, v in params.items()}


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _num(v):
    """JSON value: exact rationals as strings, floats as doubles."""
    if isinstance(v, Fraction):
        return fraction_str(v)
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    return v


# --- output ---------------------------------------------------------------------

def make_record(kind: str, rows: list[dict], argv: list[str], params: dict | None = None,
                units: str = "dimensionless, hbar = 2m = 1") -> dict:
    return {
        "meta": {"command": " ".join(argv), "parameters": params or {}, "version": __version__,
                 "units": units},
        "kind": kind,
        "payload": [{k: _num(v) for k, v in r.items()} for r in rows],
    }


def render_json(record: dict) -> str:
    return json.dumps(record, indent=2) + "\n"


def render_csv(record: dict) -> str:
    rows = record["payload"]
    buf = io.StringIO()
    if not rows:
        return ""
    w = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\r\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: _csv_cell(v) for k, v in r.items()})
    return buf.getvalue()


def _csv_cell(v):
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def emit(record: dict, args, latex: str | None = None) -> None:
    fmt = args.format
    if fmt == "latex":
        if latex is None:
            raise UsageError("latex output is available for poly only")
        text = latex
    elif fmt == "json":
        text = render_json(record)
    else:
        text = render_csv(record)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- commands -------------------------------------------------------------------

def cmd_classify(args, argv) -> int:
    vals = [parse_rational(getattr(args, k)) for k in "abcde"]
    hp = HyperParams(*vals)
    try:
        cls = classify(hp)
    except InvalidEquation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ws = pearson_weight(hp)
    row = {"class": cls.name, "type": cls.value, "family": ws.family,
           "weight": ws.expression(),
           "support": "none" if ws.support is None else f"({ws.support[0]}, {ws.support[1]})"}
    for k, v in ws.params().items():
        row[k] = v if isinstance(v, (Fraction, int, float, str)) else str(v)
    emit(make_record("classification", [row], argv, {k: getattr(args, k) for k in "abcde"}), args)
    return EXIT_OK


def cmd_poly(args, argv) -> int:
    params = parse_params(args.params)
    if any("." in v for v in params.values()):
        _warn("decimal literal converted exactly to a rational")
    fs = family_from_name(args.family, {k: parse_rational(v) for k, v in params.items()})
    rows, lines = [], []
    for n in parse_n_range(args.n):
        p = family_poly(fs, n)
        rows.append({"n": n, "degree": -1 if p.degree is None else p.degree,
                     "coefficients": ";".join(fraction_str(c) for c in p.coeffs) or "0",
                     "floats": ";".join(repr(float(c)) for c in p.coeffs) or "0.0",
                     "expression": p.pretty()})
        lines.append(f"{fs.name}_{{{n}}}(x) = {p.latex()}")
    emit(make_record("polyTable", rows, argv, params), args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_gram(args, argv) -> int:
    params = parse_params(args.params)
    fs = family_from_name(args.family, {k: parse_rational(v) for k, v in params.items()})
    g = gram_matrix(fs, args.nmax, tol=args.tol)
    rows = []
    d = g.diagonal()
    for n in range(args.nmax + 1):
        for m in range(n, args.nmax + 1):
            r = g.matrix[n][m]
            den = math.sqrt(abs(d[n] * d[m])) if d[n] and d[m] else math.nan
            rows.append({"n": n, "m": m, "value": r.value, "error": r.error_estimate,
                         "converged": r.converged, "admissible": (n, m) in g.admissible_pairs,
                         "relative": abs(r.value) / den if n != m else 1.0,
                         "decay_exponent": r.decay_exponent})
    emit(make_record("gram", rows, argv, params), args)
    return EXIT_OK


def _potential(args):
    params = _float_params(parse_params(args.params))
    try:
        return pot.make_potential(args.potential, **params), params
    except TypeError as exc:
        raise UsageError(f"bad parameters for {args.potential}: {exc}") from exc


def cmd_spectrum(args, argv) -> int:
    ps, params = _potential(args)
    rows = [{"n": e.n, "energy": e.energy, "reduced": e.reduced} for e in pot.spectrum(ps, args.nmax)]
    emit(make_record("spectrum", rows, argv, params), args)
    return EXIT_OK


def cmd_wavefunction(args, argv) -> int:
    ps, params = _potential(args)
    wf = pot.wavefunction(ps, args.n)
    lo, hi, count = parse_grid(args.grid)
    z = np.linspace(lo, hi, count)
    g0, g1, g2 = wf.evaluate(z)
    res = pot.schrodinger_residual(wf, z)
    rows = [{"z": float(z[i]), "psi": float(g0[i]), "dpsi": float(g1[i]), "d2psi": float(g2[i]),
             "residual": float(res[i])} for i in range(count)]
    emit(make_record("grid", rows, argv, {**params, "n": args.n, "energy": wf.energy}), args)
    return EXIT_OK


def cmd_angular(args, argv) -> int:
    lo, hi, count = parse_grid(args.theta_grid)
    th, _ = ang.clamp_theta_grid(lo, hi, count)
    z = ang.z_function(args.l, args.m, th, args.phi)
    compare = args.compare_spherical and abs(args.m) <= args.l
    if args.compare_spherical and not compare:
        _warn(f"no spherical harmonic with l={args.l}, m={args.m}")
    y = ang.spherical_harmonic(args.l, args.m, th, args.phi) if compare else None
    rows = []
    for i, t in enumerate(th):
        r = {"theta": float(t), "re_z": float(z[i].real), "im_z": float(z[i].imag), "abs_z": float(abs(z[i]))}
        if compare:
            r.update({"re_y": float(y[i].real), "im_y": float(y[i].imag), "abs_y": float(abs(y[i]))})
        rows.append(r)
    emit(make_record("grid", rows, argv, {"l": args.l, "m": args.m, "phi": args.phi}), args)
    return EXIT_OK


def cmd_kg(args, argv) -> int:
    kg = pot.KGParams(args.A, args.B, args.mu)
    levels = pot.klein_gordon_levels(kg, args.n)
    rows = [{"root": i + 1, "E": lv.E, "a": lv.a, "b": lv.b, "eps": lv.eps,
             "residual": pot.kg_matching_residual(kg, args.n, lv.E)} for i, lv in enumerate(levels)]
    emit(make_record("spectrum", rows, argv, {"A": args.A, "B": args.B, "mu": args.mu, "n": args.n}), args)
    return EXIT_OK


def cmd_check(args, argv) -> int:
    results = run_checks(args.suite, args.seed)
    rows = [r.as_dict() for r in results]
    emit(make_record("checkReport", rows, argv, {"suite": args.suite, "seed": args.seed}), args)
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK


# --- parser ---------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "latex"), default=argparse.SUPPRESS)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, metavar="FILE")

    p = _Parser(prog="romanovski", parents=[common],
                description="Romanovski and classical polynomials, exactly solvable potentials.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", parents=[common], help="classify sigma y'' + tau y' - lambda y = 0")
    for k in "abcde":
        s.add_argument(f"--{k}", required=True)

    s = sub.add_parser("poly", parents=[common], help="polynomial table")
    s.add_argument("--family", required=True)
    s.add_argument("--params", default="")
    s.add_argument("--n", "--n-range", dest="n", default="0..4")

    s = sub.add_parser("gram", parents=[common], help="Gram matrix by quadrature")
    s.add_argument("--family", required=True)
    s.add_argument("--params", default="")
    s.add_argument("--nmax", type=int, default=6)

    for name, helptext in (("spectrum", "bound-state levels"), ("wavefunction", "wavefunction on a grid")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--potential", required=True)
        s.add_argument("--params", default="")
        if name == "spectrum":
            s.add_argument("--nmax", type=int, default=3)
        else:
            s.add_argument("--n", type=int, default=0)
            s.add_argument("--grid", default="-3:3:21")

    s = sub.add_parser("angular", parents=[common], help="Z_l^m on a theta grid")
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--theta-grid", default="0.01:3.13:99")
    s.add_argument("--phi", type=float, default=0.0)
    s.add_argument("--compare-spherical", action="store_true")

    s = sub.add_parser("kg", parents=[common], help="Klein-Gordon levels")
    s.add_argument("--A", type=float, required=True)
    s.add_argument("--B", type=float, default=1.0)
    s.add_argument("--mu", type=float, required=True)
    s.add_argument("--n", type=int, default=0)

    s = sub.add_parser("check", parents=[common], help="run the invariant suites")
    s.add_argument("--suite", choices=("all",) + SUITES, default="all")
    return p


COMMANDS = {"classify": cmd_classify, "poly": cmd_poly, "gram": cmd_gram, "spectrum": cmd_spectrum,
            "wavefunction": cmd_wavefunction, "angular": cmd_angular, "kg": cmd_kg, "check": cmd_check}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for k, v in (("format", "csv"), ("tol", 1e-12), ("seed", 0), ("out", None)):
        if not hasattr(args, k):
            setattr(args, k, v)
    try:
        return COMMANDS[args.command](args, argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CatalogOnlyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (RomanovskiError, ValueError, ZeroDivisionError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
