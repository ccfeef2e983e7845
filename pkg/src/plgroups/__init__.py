"""Exact arithmetic in the groups F(r, <n>, Z[1/n]) < T < V of piecewise-affine
bijections of [0, r).

Maps act on the right: ``x * y`` means "apply x, then y".
"""

from .errors import PLGroupError
from .numeric import THOMPSON, GroupParams, in_A, log_lambda
from .plmap import (
    IntervalSet,
    Kind,
    PLMap,
    Segment,
    classify,
    commutator,
    compose,
    conjugate,
    equals,
    identity,
    inverse,
    make,
    rotation,
)
from .elements import bump, general_ab, ladder, thompson_ab, thompson_x0, thompson_x1
from .wreath import WreathBase, WreathElem, pl_from_wreath, w_inv, w_mul, wreath_from_pl
from .arith import ArithCode, decode, divisibility_witness, encode, equiv_mod_F0, in_F0
from .commdec import two_commutators
from .centralizer import commutes, partition, slope_hom, solve_cyclic
from .serialize import parse_plmap, serialize_plmap

__version__ = "0.1.0"
