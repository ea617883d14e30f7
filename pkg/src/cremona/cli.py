"""Command-line front end: evaluate map expressions and run verification suites.

Subcommands::

    cremona eval [options] EXPR     evaluate and print a map expression
    cremona verify [options] SUITE  run a named verification suite
    cremona list                    list named maps, functions and suites

`eval` prints the canonical rendering of the reduced map (or its degree,
or a degree sequence).  `verify` exits 0 exactly when every check passes.
The only environment variable honored is CREMONA_WIDTH, which wraps wide
output lines for display.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import textwrap

from .maps import DegreeSequence, degree_sequence
from .parsing import (
    ParseError,
    TypeMismatch,
    make_default_functions,
    make_default_names,
    parse_expression,
)
from .suites import DEFAULT_SEED, SUITES, run_suite

_NAME_DESCRIPTIONS = {
    "sigma": "standard quadratic involution of the plane (word)",
    "h": "the linear partner of sigma in the order-three relation (word)",
    "g0": "shear [x1-x0 : x1 : x2] from the conjugator word (word)",
    "tau1": "coordinate permutation [x2 : x1 : x0] (word)",
    "tau2": "coordinate permutation [x1 : x2 : x0] (word)",
    "fword": "word for [x0*x1 : x1*x2 : x2^2]",
    "sword": "word for (X, XY), the shear-degree conjugator",
    "ad": "adjugate involution of conic space (degree-2, self-inverse)",
    "veronese": "double-line parametrization P^2 -> P^5",
    "secant": "singular-conic parametrization P^2 x P^2 -> P^5",
    "A": "projection of the secant cubic onto P^2 x P^2",
    "Ainv": "inverse of A (plane-pair parametrization)",
    "rho": "torus straightening of P^2 x P^2",
    "rhoinv": "inverse of rho",
    "omega": "invariant volume form in the chart x5 = 1",
}

_FUNCTION_DESCRIPTIONS = {
    "phi": "phi(word): the conic-space image of a word",
    "phi_dual": "phi_dual(word): the contragredient-twisted image",
    "psi1": "psi1(word): induced action on P^2 x P^2 through the projection A",
    "psi2": "psi2(word): same for the dual embedding",
    "chi1": "chi1(word): second-factor quotient of psi1 (torus words only)",
    "chi2": "chi2(word): second-factor quotient of psi2",
    "diag": "diag(c0,...,cn): diagonal linear map",
    "psil": "psil(l, f): Jacobian-twisted suspension of an affine self-map",
    "psib": "psib(f): projectivized-differential suspension of a plane map",
    "crossratio": "crossratio(p0..p3; q0..q3): cross ratio of coordinate-plane traces",
    "mat": "mat[[...],...]: matrix literal (composable, invertible)",
    "mono": "mono[[...],...]: monomial map from an integer exponent matrix",
}

_SUITE_DESCRIPTIONS = {
    "relations": "generator relations in conic space, plus the failing naive candidate",
    "dual": "adjugate conjugation and the printed dual images",
    "equivariance": "Veronese and secant intertwining for generators and samples",
    "secant-invariance": "pullback divisibility of the secant cubic and projections",
    "contraction": "exceptional hyperplanes land in the printed planes",
    "omega": "volume-form invariance in the chart x5 = 1",
    "ab-family": "two-term recursion family and the shear closed forms",
    "aut-a2-degrees": "polynomial automorphisms keep their degree",
    "degree-lower-bound": "plane degree never exceeds conic-space degree",
    "chi-growth": "linear growth against bounded degrees on the two quotients",
    "codim1-relations": "suspension embeddings: chain rules and cube relations",
    "gl3z": "integer matrix identities behind the Grassmannian obstruction",
    "crossratio-action": "anharmonic action of coordinate permutations",
    "all": "every suite above, one aggregated report",
}


def _width() -> int | None:
    w = os.environ.get("CREMONA_WIDTH")
    if not w:
        return None
    try:
        return max(20, int(w))
    except ValueError:
        return None


def _emit(text: str):
    w = _width()
    if w is None:
        print(text)
        return
    for line in text.splitlines():
        print(textwrap.fill(line, width=w, subsequent_indent="    ")
              if len(line) > w else line)


def _cmd_eval(args) -> int:
    try:
        value = parse_expression(args.expr, pipeline=args.pipeline)
    except (ParseError, TypeMismatch, ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        if args.degree_seq:
            from .parsing import _to_mapvalue
            v = _to_mapvalue(value)
            if v.kind != "proj":
                print("error: degree sequences need a projective self-map",
                      file=sys.stderr)
                return 2
            seq = degree_sequence(v.payload, args.degree_seq, args.expr)
            out = {"expr": args.expr, "degrees": list(seq.degrees)}
            _emit(json.dumps(out) if args.json else
                  f"degrees of iterates 1..{args.degree_seq}: "
                  + ", ".join(map(str, seq.degrees)))
            return 0
        if args.chart is not None:
            from .parsing import _to_mapvalue
            v = _to_mapvalue(value)
            if v.kind != "proj":
                print("error: chart conversion needs a projective self-map",
                      file=sys.stderr)
                return 2
            idx = args.chart
            if idx.startswith("x"):
                idx = idx[1:]
            value = type(value)("affine", v.payload.to_affine_chart(int(idx)))
        if args.degree:
            from .parsing import _to_mapvalue
            v = _to_mapvalue(value)
            if v.kind == "proj":
                d = v.payload.degree()
            elif v.kind == "affine":
                d = v.payload.degree()
            elif v.kind == "multi":
                d = v.payload.multidegree()
            else:
                print(f"error: no degree for a {v.kind} value", file=sys.stderr)
                return 2
            _emit(json.dumps({"expr": args.expr, "degree": d}) if args.json else str(d))
            return 0
        if args.json:
            _emit(json.dumps({"expr": args.expr, "kind": value.kind,
                              "space": value.space(), "value": value.render()}))
        else:
            _emit(value.render())
        return 0
    except (ValueError, TypeError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _cmd_verify(args) -> int:
    try:
        rep = run_suite(args.suite, seed=args.seed)
    except KeyError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return 2
    _emit(rep.to_json() if args.json else rep.to_text())
    return 0 if rep.passed else 1


def _cmd_list(args) -> int:
    if args.json:
        doc = {"maps": _NAME_DESCRIPTIONS, "functions": _FUNCTION_DESCRIPTIONS,
               "suites": _SUITE_DESCRIPTIONS}
        _emit(json.dumps(doc, indent=2))
        return 0
    lines = ["named maps and words:"]
    for k in sorted(make_default_names()):
        lines.append(f"  {k:12s} {_NAME_DESCRIPTIONS.get(k, '')}")
    lines.append("functions:")
    for k in sorted(list(make_default_functions()) + ["mat", "mono"]):
        lines.append(f"  {k:12s} {_FUNCTION_DESCRIPTIONS.get(k, '')}")
    lines.append("suites (verify <name>):")
    for k in list(SUITES) + ["all"]:
        lines.append(f"  {k:20s} {_SUITE_DESCRIPTIONS.get(k, '')}")
    _emit("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cremona",
        description="exact calculus for plane Cremona maps in conic space")
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a map expression")
    pe.add_argument("expr", help="expression, e.g. 'ad . phi(sigma) . ad'")
    pe.add_argument("--json", action="store_true", help="machine-readable output")
    pe.add_argument("--degree", action="store_true", help="print only the degree")
    pe.add_argument("--degree-seq", type=int, metavar="N",
                    help="degrees of the first N iterates")
    pe.add_argument("--chart", metavar="VAR",
                    help="convert a projective self-map to this affine chart")
    pe.add_argument("--pipeline", action="store_true",
                    help="read '.' left to right instead of as composition")
    pe.add_argument("--seed", type=int, default=DEFAULT_SEED, help=argparse.SUPPRESS)
    pe.set_defaults(func=_cmd_eval)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", help="suite name or 'all'")
    pv.add_argument("--json", action="store_true", help="machine-readable report")
    pv.add_argument("--seed", type=int, default=DEFAULT_SEED,
                    help="seed for the sampled checks (recorded in the report)")
    pv.set_defaults(func=_cmd_verify)

    pl = sub.add_parser("list", help="list named maps, functions and suites")
    pl.add_argument("--json", action="store_true")
    pl.set_defaults(func=_cmd_list)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
