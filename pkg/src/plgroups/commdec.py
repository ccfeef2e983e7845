"""Rewriting a product of commutators in F as a product of exactly two.

Pairs ``(x, y)`` stand for the commutator ``[x, y] = x^-1 y^-1 x y``. The
rewrite folds the last three commutators into two, repeatedly:

    c1 c2 c3 = (c1 c2^b c3^(b^-1)) [c2^-1 c3^(b^-1), b]

after all three have been squeezed into one window (alpha, beta) and b pushes
alpha past beta. The first factor is a single commutator because its three
pieces live in pairwise disjoint windows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, floor
from typing import Sequence

from .arith import in_F0
from .elements import bump
from .errors import BadInterval, BadWindows, NotInF, SupportsOverlap, VerificationFailed
from .numeric import GroupParams, Q, as_rational, in_A
from .plmap import IntervalSet, Kind, PLMap, commutator, compose_pieces, identity, make

Pair = tuple  # (x, y)


def product(pairs: Sequence[Pair], params: GroupParams = None) -> PLMap:
    if not pairs:
        return identity(params)
    out = identity(pairs[0][0].params)
    for x, y in pairs:
        out = out * commutator(x, y)
    return out


@dataclass(frozen=True)
class Compressor:
    """Injective map s of [0, r) into [alpha2, beta2): the identity on
    [alpha1, beta1], slope p on either side."""

    params: GroupParams
    alpha1: Q
    beta1: Q
    alpha2: Q
    beta2: Q
    slope: Q

    @property
    def image_lo(self) -> Q:
        return self.alpha1 * (1 - self.slope)

    @property
    def image_hi(self) -> Q:
        return self.beta1 + self.slope * (self.params.r - self.beta1)

    def pieces(self) -> list:
        p, a, b = self.slope, self.alpha1, self.beta1
        return [
            (Q(0), a, p, a - p * a),
            (a, b, Q(1), Q(0)),
            (b, self.params.r, p, b - p * b),
        ]

    def inverse_pieces(self) -> list:
        q, a, b = 1 / self.slope, self.alpha1, self.beta1
        return [
            (self.image_lo, a, q, a - q * a),
            (a, b, Q(1), Q(0)),
            (b, self.image_hi, q, b - q * b),
        ]

    def __call__(self, t) -> Q:
        t = as_rational(t)
        for lo, hi, s, c in self.pieces():
            if lo <= t < hi:
                return s * t + c
        raise BadInterval(f"{t} outside [0, r)")


def build_compressor(params: GroupParams, alpha1, beta1, alpha2, beta2) -> Compressor:
    alpha1, beta1, alpha2, beta2 = map(as_rational, (alpha1, beta1, alpha2, beta2))
    if not 0 < alpha2 < alpha1 < beta1 < beta2 < params.r:
        raise BadWindows(f"need 0 < {alpha2} < {alpha1} < {beta1} < {beta2} < {params.r}")
    if not all(in_A(v, params) for v in (alpha1, beta1, alpha2, beta2)):
        raise BadWindows(f"window endpoints must lie in Z[1/{params.n}]")
    p = Q(1)
    while True:
        p /= params.n
        s = Compressor(params, alpha1, beta1, alpha2, beta2, p)
        if s.image_lo >= alpha2 and s.image_hi <= beta2:
            return s


def compress(x: PLMap, s: Compressor) -> PLMap:
    """s^-1 x s on the image of s, the identity elsewhere."""
    if x.classify() is not Kind.F:
        raise NotInF("only continuous elements can be compressed")
    r = x.params.r
    mid = compose_pieces(compose_pieces(s.inverse_pieces(), x.pieces()), s.pieces())
    pieces = [(Q(0), s.image_lo, 1, 0)] + mid + [(s.image_hi, r, 1, 0)]
    return make(x.params, [(lo, sl, c) for lo, hi, sl, c in pieces if lo < hi])


def translator(params: GroupParams, alpha, beta) -> PLMap:
    """An up-moving b with (alpha)b > beta and support inside (0, r)."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    r = params.r
    if not (0 < alpha < beta < r and in_A(alpha, params) and in_A(beta, params)):
        raise BadInterval(f"need 0 < alpha < beta < r in Z[1/{params.n}], got ({alpha}, {beta})")
    eps = r / params.n
    while not (eps < alpha and r - eps > beta):
        eps /= params.n
    step = bump(params, eps, r - eps, 1, 1)
    b = step
    while b(alpha) <= beta:
        b = b * step
    assert 0 < b.inverse()(beta) < alpha
    return b


def _hull(x: PLMap, y: PLMap):
    s = x.support().union(y.support())
    return None if s.is_empty() else (s.inf(), s.sup())


def merge_disjoint(pairs: Sequence[Pair], verify: bool = True) -> Pair:
    """One pair whose commutator equals the product of commutators of pairs
    living in pairwise disjoint windows."""
    hulls = [h for h in (_hull(x, y) for x, y in pairs) if h is not None]
    hulls.sort()
    for (a, b), (c, d) in zip(hulls, hulls[1:]):
        if c < b:
            raise SupportsOverlap(f"windows ({a}, {b}) and ({c}, {d}) overlap")
    params = pairs[0][0].params
    X, Y = identity(params), identity(params)
    for x, y in pairs:
        X, Y = X * x, Y * y
    if verify and commutator(X, Y) != product(pairs):
        raise VerificationFailed("merged commutator differs from the product")
    return X, Y


def choose_windows(params: GroupParams, s: IntervalSet, start: int = 2) -> tuple:
    """Grid windows alpha2 < alpha1 <= inf s, sup s <= beta1 < beta2 on the grid r n^-j."""
    r = params.r
    for j in range(start, start + 256):
        d = r / params.n**j
        if s.is_empty():
            a1 = d * floor(r / 2 / d)
            b1 = a1 + d
        else:
            a1 = d * floor(s.inf() / d)
            b1 = d * ceil(s.sup() / d)
        if a1 - d > 0 and b1 + d < r and a1 < b1:
            return a1, b1, a1 - d, b1 + d
    raise BadWindows(f"no window fits around {s}")


def to_F0(pair: Pair) -> Pair:
    """An equal commutator whose constituents are the identity near 0 and r."""
    x, y = pair
    if in_F0(x) and in_F0(y):
        return pair
    c = commutator(x, y)
    s = build_compressor(x.params, *choose_windows(x.params, c.support()))
    return compress(x, s), compress(y, s)


def reduce_three(p1: Pair, p2: Pair, p3: Pair) -> list:
    params = p1[0].params
    cs = [commutator(x, y) for x, y in (p1, p2, p3)]
    supp = cs[0].support().union(cs[1].support()).union(cs[2].support())
    a1, b1, a2, b2 = choose_windows(params, supp)
    s = build_compressor(params, a1, b1, a2, b2)
    q1, q2, q3 = [(compress(x, s), compress(y, s)) for x, y in (p1, p2, p3)]
    b = translator(params, a2, b2)
    binv = b.inverse()
    q2 = (q2[0] ^ b, q2[1] ^ b)
    q3 = (q3[0] ^ binv, q3[1] ^ binv)
    # checked once at the end of two_commutators
    first = merge_disjoint([q1, q2, q3], verify=False)
    second = (cs[1].inverse() * (cs[2] ^ binv), b)
    return [first, second]


def two_commutators(pairs: Sequence[Pair]) -> list:
    """Two pairs whose commutator product equals that of ``pairs``; all four
    constituents are the identity near 0 and r."""
    pairs = list(pairs)
    if not pairs:
        raise VerificationFailed("empty commutator list has no parameters")
    params = pairs[0][0].params
    for x, y in pairs:
        if x.classify() is not Kind.F or y.classify() is not Kind.F:
            raise NotInF("all constituents must be continuous")
    target = product(pairs)
    work = [to_F0(p) for p in pairs]
    while len(work) > 2:
        work = work[:-3] + reduce_three(*work[-3:])
    ident = identity(params)
    while len(work) < 2:
        work.append((ident, ident))
    if product(work) != target:
        raise VerificationFailed("two-commutator product differs from the input")
    return work
