"""Command-line interface: ``fracbound <command> ...``.

Results go to stdout as JSON.  Precondition violations exit with status 1
and a JSON error object on stderr; usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import families
from .bounds import BOUND_IDS, all_bounds
from .colorers import color
from .errors import DomainError
from .graph import WeightedGraph, clique_components, induced_star_number, is_connected, max_degree, s_set
from .invariants import beta1, beta3, beta4, beta5
from .io import (
    coloring_from_json,
    coloring_to_json,
    dumps,
    parse_graph,
    parse_weights,
    rationals,
    solution_to_json,
)
from .lp import chi_f, chi_f_lower_bounds, coloring_from_lp, verify_coloring
from .numeric import format_rational
from .search import adversarial_search, closed_form, THEOREM_BOUND

log = logging.getLogger("fracbound")


def _load_graph(args):
    if args.family:
        return families.from_spec(args.family)
    if not args.graph:
        raise DomainError("give a graph file or --family NAME:SIZE")
    return parse_graph(Path(args.graph).read_text())


def _load_weighted(args) -> WeightedGraph:
    g = _load_graph(args)
    if getattr(args, "weights", None):
        return WeightedGraph(g, parse_weights(Path(args.weights).read_text(), g.n))
    return WeightedGraph.unit(g)


def _figure(args, gx, coloring, title):
    if getattr(args, "figure", None):
        from .plotting import plot_coloring

        plot_coloring(coloring, args.figure, title=title, weights=gx.weights)
        log.info("wrote %s", args.figure)


def cmd_chif(args) -> dict:
    gx = _load_weighted(args)
    value, sol = chi_f(gx)
    c = coloring_from_lp(gx, sol)
    _figure(args, gx, c, f"optimal fractional colouring, span {format_rational(value)}")
    return {
        "chi_f": format_rational(value),
        "lower_bound": format_rational(chi_f_lower_bounds(gx)),
        "solution": solution_to_json(sol),
        "coloring": coloring_to_json(c),
        "verified": verify_coloring(gx, c).ok,
    }


def cmd_bounds(args) -> dict:
    gx = _load_weighted(args)
    out = {k: (format_rational(v) if v is not None and not isinstance(v, bool) else v)
           for k, v in all_bounds(gx, args.v1).items()}
    out["v1"] = args.v1
    out["chi_f"] = format_rational(chi_f(gx)[0])
    return out


def cmd_color(args) -> dict:
    gx = _load_weighted(args)
    c = color(gx, args.bound, args.v1)
    verdict = verify_coloring(gx, c)
    _figure(args, gx, c, f"{args.bound.upper()} colouring, span {format_rational(c.span)}")
    return {
        "bound": args.bound,
        "span": format_rational(c.span),
        "coloring": coloring_to_json(c),
        "verified": verdict.ok,
        "violations": verdict.violations,
    }


def cmd_invariants(args) -> dict:
    g = _load_graph(args)
    if not is_connected(g) or g.n == 0:
        raise DomainError("invariants need a nonempty connected graph")
    eta = []
    for v in g.vertices:
        cc = clique_components(g, v)
        eta.append(None if cc is None else cc.eta)
    try:
        b3 = format_rational(beta3(g))
        b3_note = None
    except DomainError as exc:
        b3, b3_note = None, str(exc)
    r5 = beta5(g)
    return {
        "n": g.n,
        "delta": max_degree(g),
        "sigma": induced_star_number(g),
        "s_set": sorted(s_set(g)),
        "eta": eta,
        "beta1": format_rational(beta1(g)),
        "beta3": b3,
        "beta3_note": b3_note,
        "beta4": format_rational(beta4(g)),
        "beta5": format_rational(r5.value) if r5.exact else {"lo": format_rational(r5.lo), "hi": format_rational(r5.hi)},
        "beta5_method": r5.method,
    }


def cmd_beta_search(args) -> dict:
    g = _load_graph(args)
    w = adversarial_search(g, args.bound, budget=args.budget, denominator=args.denominator,
                           support=args.support, seed=args.seed, v1=args.v1)
    out = {
        "bound": args.bound,
        "ratio": format_rational(w.ratio),
        "weights": rationals(w.weights),
        "provenance": w.provenance,
        "rechecked": w.rechecked(g, args.v1),
    }
    theorem = {b: t for t, b in THEOREM_BOUND.items()}.get(args.bound)
    if theorem is not None:
        try:
            lo, hi = closed_form(g, theorem)
            out["closed_form"] = {"lo": format_rational(lo), "hi": format_rational(hi)}
        except DomainError:
            pass
    return out


def cmd_verify(args) -> dict:
    gx = _load_weighted(args)
    try:
        c = coloring_from_json(json.loads(Path(args.coloring).read_text()))
    except json.JSONDecodeError as exc:
        raise DomainError(f"coloring file is not JSON: {exc}") from None
    if isinstance(c, dict) and "coloring" in c:
        c = coloring_from_json(c["coloring"])
    verdict = verify_coloring(gx, c)
    return {"verified": verdict.ok, "violations": verdict.violations, "span": format_rational(c.span)}


def _graph_args(p, weights=True):
    p.add_argument("graph", nargs="?", help="graph file ('n <count>' then 'u v' lines)")
    if weights:
        p.add_argument("weights", nargs="?", help="weight file ('v p/q' lines); default all ones")
    p.add_argument("--family", help="named graph instead of a file, e.g. cycle:6, star:3, complete-minus-edge:4")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fracbound", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chif", help="exact fractional chromatic number with certificates")
    _graph_args(p)
    p.add_argument("--figure", help="write the optimal colouring as an image")
    p.set_defaults(func=cmd_chif)

    p = sub.add_parser("bounds", help="evaluate B1..B5")
    _graph_args(p)
    p.add_argument("--v1", type=int, default=0, help="designated vertex for B2")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("color", help="colouring whose span equals a bound")
    _graph_args(p)
    p.add_argument("--bound", choices=BOUND_IDS, required=True)
    p.add_argument("--v1", type=int, default=0)
    p.add_argument("--figure", help="write the colouring as an image")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("invariants", help="sigma, S, eta and the beta closed forms")
    _graph_args(p, weights=False)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("beta-search", help="search for weights maximising B_i / chi_f")
    _graph_args(p, weights=False)
    p.add_argument("--bound", choices=BOUND_IDS, required=True)
    p.add_argument("--denominator", type=int, default=8)
    p.add_argument("--support", type=int, default=5)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--v1", type=int, default=0)
    p.set_defaults(func=cmd_beta_search)

    p = sub.add_parser("verify", help="check a JSON colouring against a weighted graph")
    p.add_argument("graph", nargs="?")
    p.add_argument("weights", nargs="?")
    p.add_argument("coloring")
    p.add_argument("--family")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run the built-in reference checks")
    p.set_defaults(func=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    if args.command == "selftest":
        from .selftest import run

        return 0 if run() else 1
    if args.command == "verify" and args.family and args.weights is None:
        # with --family the positionals shift left by one
        args.weights, args.graph = args.graph, None
    try:
        result = args.func(args)
    except (DomainError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    print(dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
