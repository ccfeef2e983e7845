"""Natural numbers coded by elements of F through their endpoint slopes.

An element x of F with slope n**m both just right of 0 and just left of r codes
the positive integer m. Composition adds codes modulo the subgroup F0 of
elements that are the identity near both ends; divisibility is certified by an
explicit witness pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Optional

from .elements import bump
from .errors import IdentityViolated, NotInB, NotInF, PLGroupError
from .numeric import GroupParams, log_lambda
from .plmap import Kind, PLMap, commutator


def split_point(params: GroupParams):
    """Largest r * n**-j (j >= 1) below r, i.e. r / n."""
    return params.r / params.n


def _require_f(x: PLMap):
    if x.classify() is not Kind.F:
        raise NotInF("element is not continuous")


def in_F0(x: PLMap) -> bool:
    _require_f(x)
    return x.slope_right(0) == 1 and x.slope_left(x.params.r) == 1


def _end_slopes(x: PLMap):
    return x.slope_right(0), x.slope_left(x.params.r)


@dataclass(frozen=True)
class ArithCode:
    element: PLMap
    value: int

    @classmethod
    def of(cls, x: PLMap) -> "ArithCode":
        return cls(x, decode(x))


def _halves(params: GroupParams, m: int):
    gamma = split_point(params)
    left = bump(params, 0, gamma, m, 1)
    right = bump(params, gamma, params.r, 1, m).inverse()
    return left, right


def encode(params: GroupParams, m: int) -> ArithCode:
    if m < 1:
        raise PLGroupError(f"only positive integers are coded, got {m}")
    left, right = _halves(params, m)
    return ArithCode(left * right, m)


def decode(x: PLMap) -> int:
    if x.classify() is not Kind.F:
        raise NotInB("element is not in F")
    lo, hi = _end_slopes(x)
    if lo != hi:
        raise NotInB(f"endpoint slopes differ: {lo} vs {hi}")
    if lo <= 1:
        raise NotInB(f"endpoint slope {lo} is not > 1")
    k = log_lambda(lo, x.params)
    if k is None:
        raise NotInB(f"endpoint slope {lo} is not a power of {x.params.n}")
    return k


def equiv_mod_F0(x: PLMap, y: PLMap) -> bool:
    _require_f(x)
    _require_f(y)
    return in_F0(x * y.inverse())


def add(x: PLMap, y: PLMap) -> ArithCode:
    return ArithCode.of(x * y)


def divisibility_witness(x: ArithCode, y: ArithCode) -> Optional[tuple]:
    """Return ``(z, w)`` certifying decode(x) | decode(y), or None.

    z lies in F0 and moves x to the split product x1 x2 of two bumps meeting at
    the split point; w is a power of x z, hence commutes with it, and cancels the
    endpoint slopes of y.
    """
    m, v = x.value, y.value
    if v % m:
        return None
    params = x.element.params
    left, right = _halves(params, m)
    split = left * right
    z = x.element.inverse() * split
    w = split ** -(v // m)
    if not in_F0(z):
        raise IdentityViolated("z is not in F0")
    if not commutator(w, x.element * z).is_identity():
        raise IdentityViolated("w does not commute with xz")
    if not in_F0(y.element * w):
        raise IdentityViolated("yw is not in F0")
    return z, w


def _triangle_ok(k: int, t: int) -> bool:
    return (2 * t - k) % (2 * k + 1) == 0


def robinson_triangle(k: int) -> int:
    """k(k+1), obtained as lcm(k, k+1) and checked by (2k+1) | (2n - k)."""
    t = lcm(k, k + 1)
    if not _triangle_ok(k, t):
        raise IdentityViolated(f"(2k+1) does not divide 2n-k for k={k}")
    return t


def robinson_mul(k: int, l: int) -> int:
    """kl from (k+l)(k+l+1) = k(k+1) + l(l+1) + 2n."""
    twice = robinson_triangle(k + l) - robinson_triangle(k) - robinson_triangle(l)
    if twice % 2:
        raise IdentityViolated(f"odd remainder {twice} for k={k}, l={l}")
    return twice // 2
