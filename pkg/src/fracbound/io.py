"""Plain-text graph and weight files, and JSON encodings of the results.

Graph file::

    # comments and blank lines are ignored
    n 4
    0 1
    1 2

Weight file: one ``v p/q`` line per vertex; unlisted vertices weigh 0.
Rationals in JSON are always strings (``"5/2"``), never floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .errors import DomainError, GraphParseError
from .graph import Graph
from .lp import FractionalColoring, LpSolution
from .numeric import IntervalSet, format_rational, parse_rational


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {token!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in _content_lines(text):
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphParseError("first line must be 'n <count>'", lineno)
            n = _int(parts[1], lineno)
            if n < 0:
                raise GraphParseError("vertex count must be nonnegative", lineno)
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge ({u},{v}) out of range for n={n}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge ({u},{v})", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphParseError("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def parse_weights(text: str, n: int) -> tuple[Fraction, ...]:
    x: list[Fraction | None] = [None] * n
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'v p/q', got {line!r}", lineno)
        v = _int(parts[0], lineno)
        if not 0 <= v < n:
            raise GraphParseError(f"vertex {v} out of range for n={n}", lineno)
        if x[v] is not None:
            raise GraphParseError(f"second weight for vertex {v}", lineno)
        try:
            w = parse_rational(parts[1])
        except DomainError as exc:
            raise GraphParseError(str(exc), lineno) from None
        if w < 0:
            raise GraphParseError(f"negative weight for vertex {v}", lineno)
        x[v] = w
    return tuple(Fraction(0) if w is None else w for w in x)


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_weights(x: Sequence[Fraction]) -> str:
    return "".join(f"{v} {format_rational(w)}\n" for v, w in enumerate(x))


def rationals(xs: Sequence[Fraction]) -> list[str]:
    return [format_rational(x) for x in xs]


def coloring_to_json(c: FractionalColoring) -> dict[str, Any]:
    return {"span": format_rational(c.span), "assignment": [s.format() for s in c.assignment]}


def coloring_from_json(obj: dict[str, Any]) -> FractionalColoring:
    try:
        span = parse_rational(str(obj["span"]))
        assignment = obj["assignment"]
    except (KeyError, TypeError):
        raise DomainError("coloring JSON needs 'span' and 'assignment'") from None
    if isinstance(assignment, dict):
        assignment = [assignment[k] for k in sorted(assignment, key=int)]
    return FractionalColoring(span, tuple(IntervalSet.parse(str(s)) for s in assignment))


def solution_to_json(sol: LpSolution) -> dict[str, Any]:
    return {
        "objective": format_rational(sol.objective),
        "columns": [sorted(col) for col in sol.columns],
        "t": rationals(sol.t),
        "dual": rationals(sol.dual),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
