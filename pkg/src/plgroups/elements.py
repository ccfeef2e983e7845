"""Named elements: bumps with prescribed endpoint slopes, Thompson's x0 and x1,
the wreath pair (a, b), and the orbit ladder alpha_k = (alpha_0) a^k."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadBase, BadInterval, NoValidS, WrongParams
from .numeric import GroupParams, Q, RationalLike, THOMPSON, as_rational, in_A
from .plmap import IntervalSet, PLMap, from_breakpoints, make


def bump_step(n: int, p: Q, q: Q) -> Q:
    """Largest s = n^-j with (2 + p + q) s <= 1."""
    total = 2 + p + q
    s = Q(1)
    for _ in range(4096):
        if total * s <= 1:
            return s
        s /= n
    raise NoValidS(f"no s for p={p}, q={q}")


def bump_subdivisions(params: GroupParams, alpha, beta, p_exp: int, q_exp: int):
    """The two 5-interval subdivisions of [alpha, beta] used by :func:`bump`.

    Returns ``(domain_points, image_points, s)``; each point list has 6 entries
    from alpha to beta. The raw subdivision may contain points where the canonical
    map has no breakpoint (when p == 1/q, neighbouring slopes coincide).
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    r = params.r
    if not (0 <= alpha < beta <= r):
        raise BadInterval(f"need 0 <= alpha < beta <= r, got ({alpha}, {beta})")
    if not (in_A(alpha, params) and in_A(beta, params)):
        raise BadInterval(f"({alpha}, {beta}) endpoints not in Z[1/{params.n}]")
    if p_exp < 1 or q_exp < 1:
        raise BadInterval("slope exponents must be positive")
    p = Q(params.n) ** p_exp
    q = Q(1, params.n**q_exp)
    s = bump_step(params.n, p, q)
    l = beta - alpha
    mid = (1 - (2 + p + q) * s) * l
    first = [s * l, q * s * l, mid, p * s * l, s * l]
    second = [p * s * l, s * l, mid, s * l, q * s * l]

    def partial(lengths):
        pts = [alpha]
        for d in lengths:
            pts.append(pts[-1] + d)
        return pts

    dom, img = partial(first), partial(second)
    assert dom[-1] == beta and img[-1] == beta
    return dom, img, s


def bump(params: GroupParams, alpha: RationalLike, beta: RationalLike, p_exp: int = 1, q_exp: int = 1) -> PLMap:
    """Up-moving element supported on (alpha, beta), slope n**p_exp just right of
    alpha and n**-q_exp just left of beta."""
    dom, img, _ = bump_subdivisions(params, alpha, beta, p_exp, q_exp)
    r = params.r
    dom = list(dom)
    img = list(img)
    # pad with the identity on [0, alpha] and [beta, r]
    if dom[0] > 0:
        dom.insert(0, Q(0))
        img.insert(0, Q(0))
    if dom[-1] < r:
        dom.append(r)
        img.append(r)
    # a zero-length middle interval would repeat a point
    pairs = [(d, e) for i, (d, e) in enumerate(zip(dom, img)) if i == 0 or d != dom[i - 1]]
    return from_breakpoints(params, [d for d, _ in pairs], [e for _, e in pairs])


def _require_thompson(params: GroupParams):
    if params != THOMPSON:
        raise WrongParams(f"Thompson generators need n=2, r=1; got {params}")


def thompson_x0(params: GroupParams = THOMPSON) -> PLMap:
    _require_thompson(params)
    return make(params, [(0, 2, 0), ("1/4", 1, "1/4"), ("1/2", "1/2", "1/2")])


def thompson_x1(params: GroupParams = THOMPSON) -> PLMap:
    _require_thompson(params)
    return make(params, [(0, 1, 0), ("1/2", 2, "-1/2"), ("5/8", 1, "1/8"), ("3/4", "1/2", "1/2")])


def thompson_ab(params: GroupParams = THOMPSON) -> tuple:
    x0, x1 = thompson_x0(params), thompson_x1(params)
    a = x0 * x0
    b = x1 * x0.inverse() * x1.inverse() * x0
    return a, b


@dataclass
class Ladder:
    a: PLMap
    alpha0: Q
    points: dict = field(default_factory=dict)

    def __getitem__(self, k: int) -> Q:
        if k not in self.points:
            self.extend(k, k)
        return self.points[k]

    def extend(self, k_min: int, k_max: int):
        pts = self.points
        inv = None
        lo = min(pts) if pts else 0
        hi = max(pts) if pts else 0
        pts.setdefault(0, self.alpha0)
        for k in range(hi + 1, k_max + 1):
            pts[k] = self.a(pts[k - 1])
        for k in range(lo - 1, k_min - 1, -1):
            if inv is None:
                inv = self.a.inverse()
            pts[k] = inv(pts[k + 1])

    def interval(self, k: int) -> IntervalSet:
        return IntervalSet.interval(self[k], self[k + 1])


def check_base(a: PLMap, alpha0: Q):
    r = a.params.r
    if not a.is_up():
        raise BadBase("a must move every point up")
    if a.support() != IntervalSet.interval(0, r):
        raise BadBase(f"support of a must be (0, {r}), got {a.support()}")
    if not (0 < alpha0 < r and in_A(alpha0, a.params)):
        raise BadBase(f"alpha0={alpha0} must lie in (0, r) and in Z[1/{a.params.n}]")


def ladder(params: GroupParams, a: PLMap, alpha0: RationalLike, k_min: int, k_max: int) -> Ladder:
    alpha0 = as_rational(alpha0)
    if a.params != params:
        raise BadBase("a lives in a different group")
    check_base(a, alpha0)
    lad = Ladder(a, alpha0, {0: alpha0})
    lad.extend(min(k_min, 0), max(k_max, 0))
    return lad


def general_ab(params: GroupParams, alpha0: RationalLike) -> tuple:
    alpha0 = as_rational(alpha0)
    a = bump(params, 0, params.r, 1, 1)
    check_base(a, alpha0)
    b = bump(params, alpha0, a(alpha0), 1, 1)
    return a, b


def default_alpha0(params: GroupParams) -> Q:
    return params.r / params.n
