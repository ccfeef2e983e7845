"""Seeded random elements for property checks and the CLI suites."""

from __future__ import annotations

import os
import random

from .elements import bump
from .numeric import GroupParams, Q
from .plmap import PLMap, identity, make, rotation

SEED_ENV = "PLGROUPS_SEED"


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


def rng_from(seed=None) -> random.Random:
    return random.Random(default_seed() if seed is None else seed)


def random_window(params: GroupParams, rng: random.Random, depth: int = 3, inner: bool = False):
    step = params.r / params.n**depth
    count = params.n**depth
    lo_k = 1 if inner else 0
    hi_k = count - 1 if inner else count
    i, j = sorted(rng.sample(range(lo_k, hi_k + 1), 2))
    return step * i, step * j


def random_bump(params: GroupParams, rng: random.Random, inner: bool = False, max_exp: int = 2) -> PLMap:
    alpha, beta = random_window(params, rng, rng.randint(1, 3), inner)
    return bump(params, alpha, beta, rng.randint(1, max_exp), rng.randint(1, max_exp))


def random_element(params: GroupParams, rng: random.Random, factors: int = 3, inner: bool = False) -> PLMap:
    """Product of random bumps and inverse bumps; always in F."""
    g = identity(params)
    for _ in range(factors):
        b = random_bump(params, rng, inner)
        g = g * (b if rng.random() < 0.5 else b.inverse())
    return g


def random_exchange(params: GroupParams, rng: random.Random, pieces: int = 4) -> PLMap:
    """Random permutation of equal grid intervals, slope 1 throughout."""
    step = params.r / pieces
    order = list(range(pieces))
    rng.shuffle(order)
    pos = Q(0)
    targets = {}
    for k in order:
        targets[k] = pos
        pos += step
    return make(params, [(k * step, 1, targets[k] - k * step) for k in range(pieces)])


def random_v_element(params: GroupParams, rng: random.Random, factors: int = 3) -> PLMap:
    g = random_element(params, rng, factors)
    pieces = params.n ** rng.randint(1, 2)
    g = g * random_exchange(params, rng, pieces)
    q = params.r * Q(rng.randint(0, params.n**3 - 1), params.n**3)
    return g * rotation(params, q) * random_element(params, rng, 1)
