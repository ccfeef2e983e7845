"""Z wr Z in coordinates, and its realization as the subgroup <a, b> of F.

A :class:`WreathElem` ``(coeffs, shift)`` stands for the product of
``b_k ** coeffs[k]`` over k, followed by ``a ** shift``, where
``b_k = a^-k b a^k`` is supported on the k-th ladder interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from .elements import Ladder, check_base
from .errors import BadBase, NotInSubgroup
from .numeric import Q, log_lambda
from .plmap import PLMap, identity


@dataclass(frozen=True)
class WreathElem:
    coeffs: tuple = ()  # sorted (position, exponent) pairs, exponents nonzero
    shift: int = 0

    @classmethod
    def of(cls, coeffs: Optional[Mapping[int, int]] = None, shift: int = 0) -> "WreathElem":
        coeffs = coeffs or {}
        return cls(tuple(sorted((int(k), int(v)) for k, v in coeffs.items() if v)), int(shift))

    def coeff_map(self) -> dict:
        return dict(self.coeffs)

    def __mul__(self, other: "WreathElem") -> "WreathElem":
        return w_mul(self, other)

    def inverse(self) -> "WreathElem":
        return w_inv(self)

    def __str__(self):
        body = ",".join(f"{k}:{v}" for k, v in self.coeffs)
        return f"shift={self.shift}; coeffs={{{body}}}"


def w_mul(u: WreathElem, v: WreathElem) -> WreathElem:
    out = u.coeff_map()
    for j, e in v.coeffs:
        # v's coordinate j lands at j - u.shift after commuting past a^u.shift
        k = j - u.shift
        out[k] = out.get(k, 0) + e
    return WreathElem.of(out, u.shift + v.shift)


def w_inv(u: WreathElem) -> WreathElem:
    return WreathElem.of({k + u.shift: -e for k, e in u.coeffs}, -u.shift)


@dataclass
class WreathBase:
    """A pair (a, b) with a up-moving on (0, r) and b supported on (alpha_0, alpha_1)."""

    a: PLMap
    b: PLMap
    alpha0: Q = field(init=False)
    ladder: Ladder = field(init=False)
    _b_conj: dict = field(init=False, default_factory=dict)
    _a_pow: dict = field(init=False, default_factory=dict)

    def __post_init__(self):
        supp = self.b.support()
        if len(supp.open_intervals) != 1 or supp.points:
            raise BadBase(f"support of b must be one interval, got {supp}")
        (lo, hi), = supp.open_intervals
        check_base(self.a, lo)
        if self.a(lo) != hi:
            raise BadBase(f"support of b must be (alpha0, (alpha0)a), got {supp}")
        if not self.b.is_up():
            raise BadBase("b must move every point up")
        self.alpha0 = lo
        self.ladder = Ladder(self.a, lo, {0: lo})

    def a_pow(self, k: int) -> PLMap:
        if k not in self._a_pow:
            self._a_pow[k] = self.a**k
        return self._a_pow[k]

    def b_k(self, k: int) -> PLMap:
        """a^-k b a^k, supported on (alpha_k, alpha_{k+1})."""
        if k not in self._b_conj:
            self._b_conj[k] = self.b.conjugate(self.a_pow(k))
        return self._b_conj[k]

    def to_pl(self, w: WreathElem) -> PLMap:
        g = identity(self.a.params)
        for k, e in w.coeffs:
            g = g * self.b_k(k) ** e
        return g * self.a_pow(w.shift)

    def from_pl(self, g: PLMap) -> WreathElem:
        if g.params != self.a.params:
            raise NotInSubgroup("different group")
        shift = _log_ratio(g.slope_right(0), self.a.slope_right(0), g)
        h = g * self.a_pow(-shift)
        coeffs = {}
        supp = h.support()
        if not supp.is_empty():
            lo, hi = supp.inf(), supp.sup()
            if lo <= 0 or hi >= self.a.params.r:
                raise NotInSubgroup("support reaches an endpoint after removing the shift")
            k = 0
            while self.ladder[k] > lo:
                k -= 1
            while self.ladder[k + 1] <= lo:
                k += 1
            while self.ladder[k] < hi:
                alpha_k = self.ladder[k]
                base = self.b_k(k).slope_right(alpha_k)
                e = _log_ratio(h.slope_right(alpha_k), base, g)
                if e:
                    coeffs[k] = e
                k += 1
        w = WreathElem.of(coeffs, shift)
        if self.to_pl(w) != g:
            raise NotInSubgroup("round trip through the wreath coordinates failed")
        return w


def _log_ratio(value: Q, base: Q, g: PLMap) -> int:
    params = g.params
    v, b = log_lambda(value, params), log_lambda(base, params)
    if v is None or b is None or b == 0 or v % b:
        raise NotInSubgroup(f"slope {value} is not an integer power of {base}")
    return v // b


def pl_from_wreath(w: WreathElem, a: PLMap, b: PLMap) -> PLMap:
    return WreathBase(a, b).to_pl(w)


def wreath_from_pl(g: PLMap, a: PLMap, b: PLMap) -> WreathElem:
    return WreathBase(a, b).from_pl(g)
