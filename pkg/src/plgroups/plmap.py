"""Piecewise-affine right-continuous bijections of [0, r).

Maps act on the RIGHT, as is customary for Thompson's groups: ``x * y`` (or
``compose(x, y)``) is the map ``t -> (t)y`` applied after ``t -> (t)x``, so that
``(t)(xy) = ((t)x)y``. ``x(t)`` evaluates ``(t)x``.

A map is stored as its domain-ordered list of segments ``(left, slope, intercept)``;
the segment starting at ``left`` covers ``[left, next_left)`` (or ``[left, r)``)
and sends ``t`` to ``slope * t + intercept``. The canonical form never holds two
adjacent segments with the same affine rule, so equality of maps is equality of
segment tuples.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    BreakpointNotInA,
    NotBijective,
    OutOfDomain,
    OutOfRange,
    ParamMismatch,
    PLGroupError,
    SlopeNotInLambda,
)
from .numeric import GroupParams, Q, RationalLike, as_rational, format_rational, in_A, log_lambda


class Segment(NamedTuple):
    left: Q
    slope: Q
    intercept: Q

    def at(self, t: Q) -> Q:
        return self.slope * t + self.intercept


# (lo, hi, slope, intercept): an affine piece on [lo, hi)
Piece = tuple


class Kind(enum.Enum):
    F = "F"
    T_ONLY = "T_only"
    V_ONLY = "V_only"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class IntervalSet:
    """A finite union of open intervals and isolated points, normalized."""

    open_intervals: tuple = ()
    points: tuple = ()

    @classmethod
    def build(cls, intervals: Iterable[tuple], points: Iterable = ()) -> "IntervalSet":
        ivs = sorted((Q(a), Q(b)) for a, b in intervals if a < b)
        pts = set(Q(p) for p in points)
        merged: list = []
        for a, b in ivs:
            if merged:
                pa, pb = merged[-1]
                # overlapping, or touching through a member point
                if a < pb or (a == pb and a in pts):
                    merged[-1] = (pa, max(pb, b))
                    continue
            merged.append((a, b))
        kept = sorted(p for p in pts if not any(a < p < b for a, b in merged))
        return cls(tuple(merged), tuple(kept))

    @classmethod
    def interval(cls, a: RationalLike, b: RationalLike) -> "IntervalSet":
        return cls.build([(as_rational(a), as_rational(b))])

    def __contains__(self, t) -> bool:
        t = Q(t)
        if t in self.points:
            return True
        i = bisect.bisect_right(self.open_intervals, (t, t)) - 1
        for j in (i, i + 1):
            if 0 <= j < len(self.open_intervals):
                a, b = self.open_intervals[j]
                if a < t < b:
                    return True
        return False

    def is_empty(self) -> bool:
        return not self.open_intervals and not self.points

    def _critical(self) -> list:
        cs = set(self.points)
        for a, b in self.open_intervals:
            cs.add(a)
            cs.add(b)
        return sorted(cs)

    def _sweep(self, other: "IntervalSet", keep, lo=None, hi=None) -> "IntervalSet":
        cs = set(self._critical()) | set(other._critical())
        if lo is not None:
            cs.add(lo)
            cs.add(hi)
        cs = sorted(c for c in cs if lo is None or lo <= c <= hi)
        intervals, points = [], []
        for c in cs:
            if (lo is None or c < hi) and keep(c in self, c in other):
                points.append(c)
        for c, d in zip(cs, cs[1:]):
            m = (c + d) / 2
            if keep(m in self, m in other):
                intervals.append((c, d))
        return IntervalSet.build(intervals, points)

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return self._sweep(other, lambda u, v: u or v)

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        return self._sweep(other, lambda u, v: u and v)

    def complement(self, lo: Q, hi: Q) -> "IntervalSet":
        """Complement inside the half-open universe [lo, hi)."""
        return self._sweep(IntervalSet(), lambda u, v: not u, lo, hi)

    def inf(self) -> Q:
        cands = list(self.points) + [a for a, _ in self.open_intervals]
        return min(cands)

    def sup(self) -> Q:
        cands = list(self.points) + [b for _, b in self.open_intervals]
        return max(cands)

    def is_subset(self, other: "IntervalSet") -> bool:
        return self.intersection(other) == self

    def isdisjoint(self, other: "IntervalSet") -> bool:
        return self.intersection(other).is_empty()

    def __str__(self):
        parts = [(a, f"({format_rational(a)}, {format_rational(b)})") for a, b in self.open_intervals]
        parts += [(p, "{" + format_rational(p) + "}") for p in self.points]
        if not parts:
            return "{}"
        return " u ".join(s for _, s in sorted(parts, key=lambda e: e[0]))


def _canonical(pieces: Sequence[Piece]) -> tuple:
    out: list = []
    for lo, _hi, slope, icpt in pieces:
        if out and out[-1].slope == slope and out[-1].intercept == icpt:
            continue
        out.append(Segment(lo, slope, icpt))
    return tuple(out)


def compose_pieces(fp: Sequence[Piece], gp: Sequence[Piece]) -> list:
    """Compose partial affine maps: ``t -> g(f(t))``.

    ``fp`` is domain-sorted; ``gp`` is domain-sorted, disjoint, and must cover
    the image of every piece of ``fp``. Output pieces are domain-sorted.
    """
    glefts = [p[0] for p in gp]
    out = []
    for lo, hi, s, c in fp:
        u, v = s * lo + c, s * hi + c
        j = bisect.bisect_right(glefts, u) - 1
        if j < 0 or gp[j][1] <= u:
            raise OutOfDomain(f"point {u} not covered when composing")
        pos = u
        while pos < v:
            if j >= len(gp) or gp[j][0] > pos:
                raise OutOfDomain(f"point {pos} not covered when composing")
            glo, ghi, gs, gc = gp[j]
            end = min(v, ghi)
            out.append(((pos - c) / s, (end - c) / s, s * gs, gs * c + gc))
            pos = end
            j += 1
    return out


@dataclass(frozen=True, eq=True)
class PLMap:
    """An element of V(r, <n>, Z[1/n]); build it with :func:`make`."""

    params: GroupParams
    segments: tuple

    # -- structure -----------------------------------------------------------
    def pieces(self) -> list:
        segs = self.segments
        rights = [s.left for s in segs[1:]] + [self.params.r]
        return [(s.left, e, s.slope, s.intercept) for s, e in zip(segs, rights)]

    def breakpoints(self) -> list:
        return [s.left for s in self.segments] + [self.params.r]

    def image_breakpoints(self) -> list:
        return [s.at(s.left) for s in self.segments]

    def _index(self, t: Q) -> int:
        if not 0 <= t < self.params.r:
            raise OutOfDomain(f"{t} not in [0, {self.params.r})")
        return bisect.bisect_right([s.left for s in self.segments], t) - 1

    def _index_left(self, t: Q) -> int:
        if not 0 < t <= self.params.r:
            raise OutOfDomain(f"{t} not in (0, {self.params.r}]")
        return bisect.bisect_left([s.left for s in self.segments], t) - 1

    # -- evaluation ----------------------------------------------------------
    def __call__(self, t: RationalLike) -> Q:
        t = as_rational(t)
        return self.segments[self._index(t)].at(t)

    def left_limit(self, t: RationalLike) -> Q:
        t = as_rational(t)
        return self.segments[self._index_left(t)].at(t)

    def slope_right(self, t: RationalLike) -> Q:
        return self.segments[self._index(as_rational(t))].slope

    def slope_left(self, t: RationalLike) -> Q:
        return self.segments[self._index_left(as_rational(t))].slope

    # -- group operations ----------------------------------------------------
    def _check(self, other: "PLMap"):
        if self.params != other.params:
            raise ParamMismatch(f"{self.params} vs {other.params}")

    def __mul__(self, other: "PLMap") -> "PLMap":
        if not isinstance(other, PLMap):
            return NotImplemented
        self._check(other)
        return PLMap(self.params, _canonical(compose_pieces(self.pieces(), other.pieces())))

    def inverse(self) -> "PLMap":
        inv = []
        for lo, hi, s, c in self.pieces():
            inv.append((s * lo + c, s * hi + c, 1 / s, -c / s))
        inv.sort()
        return PLMap(self.params, _canonical(inv))

    def __invert__(self) -> "PLMap":
        return self.inverse()

    def __pow__(self, k: int) -> "PLMap":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = identity(self.params)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "PLMap") -> "PLMap":
        return g.inverse() * self * g

    def __xor__(self, g: "PLMap") -> "PLMap":
        # x ^ g == x^g == g^-1 x g
        return self.conjugate(g)

    def is_identity(self) -> bool:
        return self.segments == (Segment(Q(0), Q(1), Q(0)),)

    # -- sets ----------------------------------------------------------------
    def support(self) -> IntervalSet:
        intervals, points = [], []
        for lo, hi, s, c in self.pieces():
            if s == 1 and c == 0:
                continue
            fixed = c / (1 - s) if s != 1 else None
            if fixed is not None and lo <= fixed < hi:
                if fixed != lo:
                    points.append(lo)
                    intervals.append((lo, fixed))
                intervals.append((fixed, hi))
            else:
                points.append(lo)
                intervals.append((lo, hi))
        return IntervalSet.build(intervals, points)

    def fixed_set(self) -> IntervalSet:
        return self.support().complement(Q(0), self.params.r)

    def image(self, s: IntervalSet) -> IntervalSet:
        """The image of a subset of [0, r) under this map."""
        bps = self.breakpoints()
        intervals, points = [], [self(p) for p in s.points]
        for a, b in s.open_intervals:
            cuts = [a] + [p for p in bps if a < p < b] + [b]
            points.extend(self(p) for p in cuts[1:-1])
            for lo, hi in zip(cuts, cuts[1:]):
                seg = self.segments[self._index(lo)]
                intervals.append((seg.at(lo), seg.at(hi)))
        return IntervalSet.build(intervals, points)

    # -- classification ------------------------------------------------------
    def classify(self) -> Kind:
        r = self.params.r
        segs = self.segments
        jumps = [segs[i - 1].at(segs[i].left) - segs[i].at(segs[i].left) for i in range(1, len(segs))]
        if all(j == 0 for j in jumps):
            return Kind.F
        wrap = segs[-1].at(r) - segs[0].at(Q(0))
        if all(j % r == 0 for j in jumps) and wrap % r == 0:
            return Kind.T_ONLY
        return Kind.V_ONLY

    def is_up(self) -> bool:
        return all(s * lo + c >= lo and s * hi + c >= hi for lo, hi, s, c in self.pieces())

    def is_down(self) -> bool:
        return all(s * lo + c <= lo and s * hi + c <= hi for lo, hi, s, c in self.pieces())

    # -- misc ----------------------------------------------------------------
    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self):
        return len(self.segments)

    def __repr__(self):
        body = "; ".join(
            f"[{format_rational(s.left)}: {format_rational(s.slope)}t{'+' if s.intercept >= 0 else '-'}"
            f"{format_rational(abs(s.intercept))}]"
            for s in self.segments
        )
        return f"PLMap({self.params}; {body})"


def _coerce_segment(raw) -> Segment:
    left, slope, icpt = raw
    return Segment(as_rational(left), as_rational(slope), as_rational(icpt))


def make(params: GroupParams, segments: Iterable) -> PLMap:
    """Validate and canonicalize a raw ``(left, slope, intercept)`` list."""
    segs = [_coerce_segment(s) for s in segments]
    r = params.r
    if not segs:
        raise OutOfRange("empty segment list")
    if segs[0].left != 0:
        raise OutOfRange(f"first segment must start at 0, got {segs[0].left}")
    for s, t in zip(segs, segs[1:]):
        if not s.left < t.left:
            raise OutOfRange(f"segment lefts not strictly increasing at {t.left}")
    if segs[-1].left >= r:
        raise OutOfRange(f"segment left {segs[-1].left} not below r={r}")
    rights = [s.left for s in segs[1:]] + [r]
    images = []
    for s, hi in zip(segs, rights):
        if not in_A(s.left, params):
            raise BreakpointNotInA(f"breakpoint {s.left} not in Z[1/{params.n}]")
        if s.slope <= 0 or log_lambda(s.slope, params) is None:
            raise SlopeNotInLambda(f"slope {s.slope} not a power of {params.n}")
        u, v = s.at(s.left), s.at(hi)
        if not in_A(u, params):
            raise BreakpointNotInA(f"image breakpoint {u} not in Z[1/{params.n}]")
        if u < 0 or v > r:
            raise NotBijective(f"image [{u}, {v}) not inside [0, {r})")
        images.append((u, v))
    images.sort()
    pos = Q(0)
    for u, v in images:
        if u != pos:
            raise NotBijective(f"images {'overlap' if u < pos else 'leave a gap'} at {min(u, pos)}")
        pos = v
    if pos != r:
        raise NotBijective(f"images stop at {pos}, not r={r}")
    pieces = [(s.left, hi, s.slope, s.intercept) for s, hi in zip(segs, rights)]
    return PLMap(params, _canonical(pieces))


def identity(params: GroupParams) -> PLMap:
    return PLMap(params, (Segment(Q(0), Q(1), Q(0)),))


def from_breakpoints(params: GroupParams, domain: Sequence, image: Sequence) -> PLMap:
    """Continuous increasing map sending ``domain[i]`` to ``image[i]``; both must run 0..r."""
    domain = [as_rational(d) for d in domain]
    image = [as_rational(d) for d in image]
    if len(domain) != len(image) or len(domain) < 2:
        raise PLGroupError("breakpoint lists must have equal length >= 2")
    segs = []
    for (d0, d1), (e0, e1) in zip(zip(domain, domain[1:]), zip(image, image[1:])):
        if d1 <= d0 or e1 <= e0:
            raise NotBijective("breakpoints must strictly increase")
        slope = (e1 - e0) / (d1 - d0)
        segs.append((d0, slope, e0 - slope * d0))
    return make(params, segs)


def rotation(params: GroupParams, q: RationalLike) -> PLMap:
    """Circle rotation t -> t + q mod r."""
    q = as_rational(q) % params.r
    if q == 0:
        return identity(params)
    return make(params, [(0, 1, q), (params.r - q, 1, q - params.r)])


# functional spellings


def eval_at(x: PLMap, t: RationalLike) -> Q:
    return x(t)


def compose(*maps: PLMap) -> PLMap:
    """Left-to-right product: compose(x, y) is "x, then y"."""
    if not maps:
        raise PLGroupError("compose needs at least one map")
    out = maps[0]
    for m in maps[1:]:
        out = out * m
    return out


def inverse(x: PLMap) -> PLMap:
    return x.inverse()


def equals(x: PLMap, y: PLMap) -> bool:
    x._check(y)
    return x.segments == y.segments


def support(x: PLMap) -> IntervalSet:
    return x.support()


def fixed_set(x: PLMap) -> IntervalSet:
    return x.fixed_set()


def slope_right(x: PLMap, t: RationalLike) -> Q:
    return x.slope_right(t)


def slope_left(x: PLMap, t: RationalLike) -> Q:
    return x.slope_left(t)


def classify(x: PLMap) -> Kind:
    return x.classify()


def is_up(x: PLMap) -> bool:
    return x.is_up()


def is_down(x: PLMap) -> bool:
    return x.is_down()


def conjugate(x: PLMap, g: PLMap) -> PLMap:
    x._check(g)
    return x.conjugate(g)


def commutator(x: PLMap, y: PLMap) -> PLMap:
    """[x, y] = x^-1 y^-1 x y."""
    x._check(y)
    return x.inverse() * y.inverse() * x * y
