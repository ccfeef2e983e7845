"""Exact scalars, the parameter triple, and membership in the slope group and breakpoint module.

Scalars are exact rationals of type :data:`Q`: ``gmpy2.mpq`` when gmpy2 is
importable, :class:`fractions.Fraction` otherwise. Set ``PLGROUPS_BACKEND=fraction``
to force the pure-Python type. Nothing in the package touches floats except
optional decimal columns in CLI output.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

from .errors import NonPositive, ParseError, PLGroupError

BACKEND_ENV = "PLGROUPS_BACKEND"


def _select_backend():
    want = os.environ.get(BACKEND_ENV, "gmpy2").lower()
    if want == "gmpy2":
        try:
            from gmpy2 import mpq

            return "gmpy2", mpq
        except ImportError:
            pass
    elif want != "fraction":
        raise ImportError(f"{BACKEND_ENV} must be 'gmpy2' or 'fraction', got {want!r}")
    return "fraction", Fraction


BACKEND, Q = _select_backend()
Rational = Q
RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike):
    if isinstance(value, Q):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, Fraction)) or type(value).__name__ in ("mpz", "mpq"):
        return Q(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str, line: Optional[int] = None):
    """Parse ``p/q`` or ``p``. Decimal and float notation are refused."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"malformed rational {text!r}", line) from None
    if q == 0:
        raise ParseError(f"zero denominator in {text!r}", line)
    return Q(p, q)


def format_rational(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _strip(m: int, n: int) -> int:
    # remove from m every prime factor it shares with n
    g = gcd(m, n)
    while g > 1:
        while m % g == 0:
            m //= g
        g = gcd(m, n)
    return m


@dataclass(frozen=True)
class GroupParams:
    """The triple (r, <n>, Z[1/n])."""

    n: int
    r: Rational

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise PLGroupError(f"n must be an integer >= 2, got {self.n!r}")
        r = as_rational(self.r)
        object.__setattr__(self, "r", r)
        if r <= 0:
            raise PLGroupError(f"r must be positive, got {r}")
        if _strip(int(r.denominator), self.n) != 1:
            raise PLGroupError(f"r={r} is not in Z[1/{self.n}]")

    def __str__(self):
        return f"r={format_rational(self.r)} n={self.n}"


THOMPSON = GroupParams(2, Q(1))


def in_A(q: RationalLike, params: GroupParams) -> bool:
    q = as_rational(q)
    return _strip(int(q.denominator), params.n) == 1


def _int_log(m: int, n: int) -> Optional[int]:
    k = 0
    while m % n == 0:
        m //= n
        k += 1
    return k if m == 1 else None


def log_lambda(q: RationalLike, params: GroupParams) -> Optional[int]:
    """Return k with q == n**k, or None."""
    q = as_rational(q)
    if q <= 0:
        raise NonPositive(f"log of non-positive value {q}")
    num, den = int(q.numerator), int(q.denominator)
    if den == 1:
        return _int_log(num, params.n)
    if num != 1:
        return None
    k = _int_log(den, params.n)
    return None if k is None else -k


def in_lambda(q, params: GroupParams) -> bool:
    return q > 0 and log_lambda(q, params) is not None
