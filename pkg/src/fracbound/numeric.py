"""Exact rationals and finite unions of half-open intervals.

Every quantity in the package is a :class:`fractions.Fraction`.  An
:class:`IntervalSet` is a canonical, sorted union of intervals ``[lo, hi)``;
touching intervals are merged so two sets sharing only an endpoint are
disjoint.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import DomainError

RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")
_INTERVAL_RE = re.compile(r"\[\s*([^,\[\)]+?)\s*,\s*([^,\[\)]+?)\s*\)")


def format_rational(q: RationalLike) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise DomainError(f"not a rational 'p' or 'p/q': {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise DomainError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


class IntervalSet:
    """Finite disjoint union of half-open rational intervals, kept canonical."""

    __slots__ = ("_ivs",)

    def __init__(self, intervals: Iterable[tuple[RationalLike, RationalLike]] = ()):
        pieces = sorted(
            (Fraction(lo), Fraction(hi)) for lo, hi in intervals if Fraction(lo) < Fraction(hi)
        )
        merged: list[tuple[Fraction, Fraction]] = []
        for lo, hi in pieces:
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        self._ivs = tuple(merged)

    @classmethod
    def interval(cls, lo: RationalLike, hi: RationalLike) -> IntervalSet:
        return cls([(lo, hi)])

    @property
    def intervals(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return self._ivs

    def __iter__(self) -> Iterator[tuple[Fraction, Fraction]]:
        return iter(self._ivs)

    def __len__(self) -> int:
        return len(self._ivs)

    def __bool__(self) -> bool:
        return bool(self._ivs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._ivs == other._ivs

    def __hash__(self) -> int:
        return hash(self._ivs)

    def __repr__(self) -> str:
        return f"IntervalSet({self.format() or '∅'})"

    def measure(self) -> Fraction:
        return sum((hi - lo for lo, hi in self._ivs), Fraction(0))

    @property
    def lo(self) -> Fraction | None:
        return self._ivs[0][0] if self._ivs else None

    @property
    def hi(self) -> Fraction | None:
        return self._ivs[-1][1] if self._ivs else None

    def union(self, other: IntervalSet) -> IntervalSet:
        return IntervalSet(self._ivs + other._ivs)

    def intersect(self, other: IntervalSet) -> IntervalSet:
        out = []
        a, b = self._ivs, other._ivs
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo < hi:
                out.append((lo, hi))
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        return IntervalSet(out)

    def subtract(self, other: IntervalSet) -> IntervalSet:
        out = []
        b = other._ivs
        j = 0
        for lo, hi in self._ivs:
            cur = lo
            while j < len(b) and b[j][1] <= cur:
                j += 1
            k = j
            while k < len(b) and b[k][0] < hi:
                if b[k][0] > cur:
                    out.append((cur, b[k][0]))
                cur = max(cur, b[k][1])
                if cur >= hi:
                    break
                k += 1
            if cur < hi:
                out.append((cur, hi))
        return IntervalSet(out)

    def complement_within(self, span: RationalLike) -> IntervalSet:
        span = Fraction(span)
        if not self.within(span):
            raise DomainError(f"{self!r} is not contained in [0,{format_rational(span)})")
        return IntervalSet.interval(0, span).subtract(self)

    __or__ = union
    __and__ = intersect
    __sub__ = subtract

    def issubset(self, other: IntervalSet) -> bool:
        return not self.subtract(other)

    def isdisjoint(self, other: IntervalSet) -> bool:
        return not self.intersect(other)

    def within(self, span: RationalLike) -> bool:
        return not self._ivs or (self._ivs[0][0] >= 0 and self._ivs[-1][1] <= span)

    def shift(self, offset: RationalLike) -> IntervalSet:
        return IntervalSet((lo + offset, hi + offset) for lo, hi in self._ivs)

    def take_prefix(self, m: RationalLike) -> IntervalSet:
        """Leftmost subset of measure exactly ``m``."""
        m = Fraction(m)
        if m < 0:
            raise DomainError("negative measure requested")
        if m > self.measure():
            raise DomainError(
                f"cannot take measure {format_rational(m)} from a set of measure "
                f"{format_rational(self.measure())}"
            )
        out = []
        need = m
        for lo, hi in self._ivs:
            if need <= 0:
                break
            take = min(hi - lo, need)
            out.append((lo, lo + take))
            need -= take
        return IntervalSet(out)

    def format(self) -> str:
        return ",".join(f"[{format_rational(lo)},{format_rational(hi)})" for lo, hi in self._ivs)

    @classmethod
    def parse(cls, text: str) -> IntervalSet:
        text = text.strip()
        if not text or text == "∅":
            return cls()
        found = _INTERVAL_RE.findall(text)
        residue = _INTERVAL_RE.sub("", text).replace(",", "").strip()
        if residue or not found:
            raise DomainError(f"malformed interval list: {text!r}")
        pairs = [(parse_rational(lo), parse_rational(hi)) for lo, hi in found]
        for lo, hi in pairs:
            if lo >= hi:
                raise DomainError(f"empty or reversed interval in {text!r}")
        return cls(pairs)


EMPTY = IntervalSet()


@dataclass(frozen=True)
class MeasureMap:
    """Piecewise translation of ``[0, span)``.

    Each piece ``(src_lo, src_hi, dst_lo)`` sends ``[src_lo, src_hi)`` onto
    ``[dst_lo, dst_lo + src_hi - src_lo)``.  Sources and destinations both
    partition ``[0, span)``.
    """

    span: Fraction
    pieces: tuple[tuple[Fraction, Fraction, Fraction], ...]

    @classmethod
    def identity(cls, span: RationalLike) -> MeasureMap:
        span = Fraction(span)
        return cls(span, ((Fraction(0), span, Fraction(0)),) if span > 0 else ())

    def is_bijection(self) -> bool:
        src = sorted((a, b) for a, b, _ in self.pieces)
        dst = sorted((d, d + b - a) for a, b, d in self.pieces)
        return _tiles(src, self.span) and _tiles(dst, self.span)

    def apply(self, s: IntervalSet) -> IntervalSet:
        if not s.within(self.span):
            raise DomainError(f"{s!r} exceeds the map domain [0,{format_rational(self.span)})")
        out: list[tuple[Fraction, Fraction]] = []
        for a, b, d in self.pieces:
            for lo, hi in s.intersect(IntervalSet.interval(a, b)):
                out.append((lo - a + d, hi - a + d))
        return IntervalSet(out)


def _tiles(pieces: list[tuple[Fraction, Fraction]], span: Fraction) -> bool:
    cur = Fraction(0)
    for lo, hi in pieces:
        if lo != cur or hi <= lo:
            return False
        cur = hi
    return cur == span


def _pair_left_to_right(src: IntervalSet, dst: IntervalSet) -> list[tuple[Fraction, Fraction, Fraction]]:
    # src and dst have equal measure; walk both and emit equal-length pieces
    pieces = []
    s, d = list(src), list(dst)
    i = j = 0
    s_cur = s[0][0] if s else None
    d_cur = d[0][0] if d else None
    while i < len(s) and j < len(d):
        length = min(s[i][1] - s_cur, d[j][1] - d_cur)
        pieces.append((s_cur, s_cur + length, d_cur))
        s_cur += length
        d_cur += length
        if s_cur == s[i][1]:
            i += 1
            if i < len(s):
                s_cur = s[i][0]
        if d_cur == d[j][1]:
            j += 1
            if j < len(d):
                d_cur = d[j][0]
    return pieces


def build_nesting_map(a: IntervalSet, b: IntervalSet, span: RationalLike) -> MeasureMap:
    """Measure-preserving bijection of ``[0, span)`` carrying ``a`` into ``b``."""
    span = Fraction(span)
    if a.measure() > b.measure():
        raise DomainError("nesting map needs measure(a) <= measure(b)")
    if not (a.within(span) and b.within(span)):
        raise DomainError("nesting map operands must lie in [0, span)")
    image = b.take_prefix(a.measure())
    pieces = _pair_left_to_right(a, image)
    pieces += _pair_left_to_right(a.complement_within(span), image.complement_within(span))
    pieces.sort()
    merged: list[tuple[Fraction, Fraction, Fraction]] = []
    for lo, hi, d in pieces:
        if merged:
            plo, phi, pd = merged[-1]
            if phi == lo and pd - plo == d - lo:
                merged[-1] = (plo, hi, pd)
                continue
        merged.append((lo, hi, d))
    return MeasureMap(span, tuple(merged))


def apply_map(m: MeasureMap, s: IntervalSet) -> IntervalSet:
    return m.apply(s)
