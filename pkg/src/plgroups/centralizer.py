"""Commutation tests, the endpoint-slope homomorphism, membership in a cyclic
subgroup, and the fixed-point partition that splits a centralizer into factors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotFixed, NotInF, TrivialGenerator
from .numeric import Q, RationalLike, as_rational, format_rational, in_A, log_lambda
from .plmap import IntervalSet, Kind, PLMap


def commutes(x: PLMap, y: PLMap) -> bool:
    x._check(y)
    return x * y == y * x


def slope_hom(y: PLMap, alpha: RationalLike) -> Q:
    alpha = as_rational(alpha)
    if y(alpha) != alpha:
        raise NotFixed(f"{alpha} is not fixed")
    return y.slope_right(alpha)


def solve_cyclic(x: PLMap, c: PLMap) -> Optional[int]:
    """k with x == c**k, or None."""
    if c.is_identity():
        raise TrivialGenerator("the generator is the identity")
    x._check(c)
    alpha = c.support().inf()
    if x(alpha) != alpha:
        return None
    base = log_lambda(slope_hom(c, alpha), c.params)
    val = log_lambda(slope_hom(x, alpha), x.params)
    if val == 0:
        k = 0
    elif not base or val % base:
        return None
    else:
        k = val // base
    return k if c**k == x else None


@dataclass(frozen=True)
class Piece:
    lo: Q
    hi: Q
    kind: str  # "identity" or "rigid"
    avoids_A: bool  # no fixed point of x inside (lo, hi) lies in Z[1/n]

    def __str__(self):
        tag = self.kind if self.kind == "identity" else f"rigid(avoids_A={str(self.avoids_A).lower()})"
        return f"({format_rational(self.lo)}, {format_rational(self.hi)}) {tag}"


@dataclass(frozen=True)
class PartitionDescriptor:
    cut_points: tuple
    pieces: tuple

    @property
    def interval_kinds(self) -> tuple:
        return tuple(p.kind for p in self.pieces)


def partition(x: PLMap) -> PartitionDescriptor:
    """Cut [0, r) at fixed points in Z[1/n] where x is not the identity on both sides."""
    if x.classify() is not Kind.F:
        raise NotInF("partition is defined for continuous elements")
    r = x.params.r
    fix = x.fixed_set()
    cands = set(fix.points)
    for a, b in fix.open_intervals:
        cands.update((a, b))
    cuts = sorted(
        t
        for t in cands
        if 0 < t < r and in_A(t, x.params) and x(t) == t and (x.slope_left(t) != 1 or x.slope_right(t) != 1)
    )
    bounds = [Q(0)] + cuts + [r]
    supp = x.support()
    pieces = []
    for lo, hi in zip(bounds, bounds[1:]):
        inside = IntervalSet.interval(lo, hi)
        moved = not supp.intersection(inside).is_empty()
        fixed_inside = fix.intersection(inside)
        avoids = not fixed_inside.open_intervals and not any(in_A(t, x.params) for t in fixed_inside.points)
        pieces.append(Piece(lo, hi, "rigid" if moved else "identity", avoids))
    return PartitionDescriptor(tuple(cuts), tuple(pieces))
