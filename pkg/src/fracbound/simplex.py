"""Two-phase tableau simplex over exact rationals with Bland's rule.

Solves ``min c.z  s.t.  A z >= b, z >= 0`` and returns an optimal primal
point together with the optimal dual ``y`` (``A^T y <= c``, ``y >= 0``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction


class Infeasible(ArithmeticError):
    pass


class Unbounded(ArithmeticError):
    pass


@dataclass(frozen=True)
class SimplexResult:
    z: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    objective: Fraction
    pivots: int


def _pivot(rows: list[list], obj: list, basis: list[int], r: int, c: int):
    prow = rows[r]
    piv = prow[c]
    if piv != 1:
        prow[:] = [v / piv for v in prow]
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
    f = obj[c]
    if f:
        for j in nz:
            obj[j] -= f * prow[j]
    basis[r] = c


def _run(rows: list[list], obj: list, basis: list[int], ncols: int) -> int:
    """Bland-rule iterations on a tableau whose last column is the rhs.

    ``obj`` holds reduced costs (last entry = minus the objective value).
    """
    pivots = 0
    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            return pivots
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                key = (row[-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise Unbounded("objective unbounded below")
        _pivot(rows, obj, basis, best[1], enter)
        pivots += 1


def solve_ge(c: Sequence, A: Sequence[Sequence], b: Sequence) -> SimplexResult:
    m = len(A)
    k = len(c)
    # columns: z (k) | surplus (m) | artificial (as needed) | rhs
    b = [_Q(Fraction(bi).numerator, Fraction(bi).denominator) for bi in b]
    sign = [1 if bi > 0 else -1 for bi in b]
    art_rows = [i for i in range(m) if sign[i] > 0]
    ncols = k + m + len(art_rows)
    rows = []
    basis = []
    for i in range(m):
        s = sign[i]
        row = [_Q(s * a) for a in A[i]] + [_Q(0)] * (m + len(art_rows)) + [s * b[i]]
        row[k + i] = _Q(-s)
        if s > 0:
            row[k + m + art_rows.index(i)] = _Q(1)
            basis.append(k + m + art_rows.index(i))
        else:
            basis.append(k + i)
        rows.append(row)

    pivots = 0
    if art_rows:
        obj = [_Q(0)] * (ncols + 1)
        for i in art_rows:
            for j in range(ncols + 1):
                obj[j] -= rows[i][j]
        for i in art_rows:
            obj[k + m + art_rows.index(i)] = _Q(0)
        pivots += _run(rows, obj, basis, ncols)
        if obj[-1] != 0:
            raise Infeasible("no point satisfies the constraints")
        # drive zero-level artificials out of the basis; drop redundant rows
        for r in reversed(range(m)):
            if basis[r] >= k + m:
                col = next((j for j in range(k + m) if rows[r][j]), None)
                if col is None:
                    del rows[r]
                    del basis[r]
                else:
                    _pivot(rows, [_Q(0)] * (ncols + 1), basis, r, col)
        keep = k + m
        rows = [row[:keep] + [row[-1]] for row in rows]
        ncols = keep

    obj = [_Q(Fraction(cj).numerator, Fraction(cj).denominator) for cj in c] + [_Q(0)] * (m + 1)
    for i, bj in enumerate(basis):
        f = obj[bj]
        if f:
            obj = [o - f * v for o, v in zip(obj, rows[i])]
    pivots += _run(rows, obj, basis, ncols)

    z = [Fraction(0)] * k
    for i, bj in enumerate(basis):
        if bj < k:
            z[bj] = _frac(rows[i][-1])
    # reduced cost of surplus i equals the dual of constraint i
    y = tuple(_frac(obj[k + i]) for i in range(m))
    return SimplexResult(tuple(z), y, -_frac(obj[-1]), pivots)


def _frac(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))
