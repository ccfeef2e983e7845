"""Self-check suites run by ``plgroups verify``.

Each suite yields ``(label, ok)`` pairs. Suite names are part of the CLI
surface; the checks are smaller, seeded versions of the test-suite properties.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterator, Tuple

from . import arith, centralizer, commdec, elements
from .numeric import GroupParams, Q, THOMPSON
from .plmap import IntervalSet, Kind, commutator
from .sampling import random_bump, random_element, rng_from
from .wreath import WreathBase, WreathElem

Check = Tuple[str, bool]


def ladder_suite(seed: int) -> Iterator[Check]:
    x0 = elements.thompson_x0()
    a, b = elements.thompson_ab()
    yield "supp(x0) = (0,1)", x0.support() == IntervalSet.interval(0, 1)
    yield "x0 moves points up", x0.is_up()
    lad = elements.ladder(THOMPSON, a, Q(1, 2), -3, 4)
    for k in range(-3, 4):
        want = Q(2) ** (-1 + 2 * k) if k < 0 else 1 - Q(2) ** (-1 - 2 * k)
        yield f"alpha_{k} = {want}", lad[k] == want
        bk = b.conjugate(a**k)
        yield f"supp(a^-k b a^k) = (alpha_k, alpha_k+1) for k={k}", bk.support() == lad.interval(k)
        yield f"a^-k b a^k moves points up for k={k}", bk.is_up()


def bump_suite(seed: int) -> Iterator[Check]:
    rng = rng_from(seed)
    dom, img, s = elements.bump_subdivisions(THOMPSON, 0, 1, 1, 1)
    yield "worked bump: s = 1/8", s == Q(1, 8)
    yield "worked bump: domain points", dom == [Q(v) for v in ("0", "1/8", "3/16", "5/8", "7/8", "1")]
    yield "worked bump: image points", img == [Q(v) for v in ("0", "1/4", "3/8", "13/16", "15/16", "1")]
    x = elements.bump(THOMPSON, 0, 1)
    yield "worked bump sends each domain point to its image point", all(x(d) == e for d, e in zip(dom[:-1], img))
    for params in (THOMPSON, GroupParams(3, Q(2))):
        for i in range(5):
            a_, b_ = sorted(rng.sample(range(params.n**3 + 1), 2))
            step = params.r / params.n**3
            alpha, beta = a_ * step, b_ * step
            pe, qe = rng.randint(1, 3), rng.randint(1, 3)
            y = elements.bump(params, alpha, beta, pe, qe)
            ok = (
                y.support() == IntervalSet.interval(alpha, beta)
                and y.slope_right(alpha) == Q(params.n) ** pe
                and y.slope_left(beta) == Q(params.n) ** -qe
                and y.is_up()
                and y.classify() is Kind.F
            )
            yield f"bump {params} ({alpha}, {beta}) p=n^{pe} q=n^-{qe}", ok


def wreath_suite(seed: int) -> Iterator[Check]:
    rng = rng_from(seed)
    a, b = elements.thompson_ab()
    base = WreathBase(a, b)
    yield "b_i, b_j commute for 0<|i-j|<=4", all(
        centralizer.commutes(base.b_k(i), base.b_k(j)) for i in range(-2, 3) for j in range(-2, 3) if 0 < abs(i - j) <= 4
    )

    def rand():
        return WreathElem.of({k: rng.randint(-2, 2) for k in range(-2, 3)}, rng.randint(-2, 2))

    hom = rt = True
    for _ in range(20):
        u, v = rand(), rand()
        hom &= base.to_pl(u * v) == base.to_pl(u) * base.to_pl(v)
        rt &= base.from_pl(base.to_pl(u)) == u
    yield "homomorphism on 20 random pairs", hom
    yield "decomposition round trip on 20 random elements", rt


def arith_suite(seed: int) -> Iterator[Check]:
    p = THOMPSON
    codes = {m: arith.encode(p, m) for m in range(1, 13)}
    yield "decode(encode(m)) = m for m <= 12", all(arith.decode(c.element) == m for m, c in codes.items())
    yield "addition modulo F0 for m, k <= 6", all(
        arith.equiv_mod_F0(codes[m].element * codes[k].element, codes[m + k].element)
        for m in range(1, 7)
        for k in range(1, 7)
    )
    yield "divisibility witnesses on [1,8]^2", all(
        (arith.divisibility_witness(codes[m], codes[k]) is not None) == (k % m == 0)
        for m in range(1, 9)
        for k in range(1, 9)
    )
    yield "multiplication from triangle numbers on [0,30]^2", all(
        arith.robinson_mul(k, l) == k * l for k in range(31) for l in range(31)
    )


def commutator_suite(seed: int) -> Iterator[Check]:
    rng = rng_from(seed)
    for i in range(5):
        length = rng.randint(1, 5)
        pairs = [(random_element(THOMPSON, rng, 2), random_element(THOMPSON, rng, 2)) for _ in range(length)]
        out = commdec.two_commutators(pairs)
        ok = (
            len(out) == 2
            and commdec.product(out) == commdec.product(pairs)
            and all(arith.in_F0(z) for pair in out for z in pair)
        )
        yield f"random list of {length} commutators -> 2", ok


def partition_suite(seed: int) -> Iterator[Check]:
    rng = rng_from(seed)
    x0 = elements.thompson_x0()
    d = centralizer.partition(x0)
    yield "x0: one rigid interval", d.cut_points == () and d.interval_kinds == ("rigid",)
    bmp = elements.bump(THOMPSON, Q(1, 4), Q(1, 2))
    d = centralizer.partition(bmp)
    yield "bump on (1/4,1/2): cuts and kinds", (
        d.cut_points == (Q(1, 4), Q(1, 2)) and d.interval_kinds == ("identity", "rigid", "identity")
    )
    for i in range(5):
        x = random_element(THOMPSON, rng, 2)
        cuts = centralizer.partition(x).cut_points
        k = rng.choice([-3, -2, -1, 2, 3])
        y = x**k
        yield f"powers of a random x fix its cut points ({i})", all(y(t) == t for t in cuts)
    c = random_bump(THOMPSON, rng)
    yield "solve_cyclic recovers exponents", all(centralizer.solve_cyclic(c**k, c) == k for k in range(-4, 5))
    yield "commutators lie in F0", all(
        arith.in_F0(commutator(random_element(THOMPSON, rng), random_element(THOMPSON, rng))) for _ in range(5)
    )


SUITES: Dict[str, Callable[[int], Iterator[Check]]] = {
    "prop33": ladder_suite,
    "lemma43": bump_suite,
    "wreath": wreath_suite,
    "arith": arith_suite,
    "prop81": commutator_suite,
    "partition": partition_suite,
}
