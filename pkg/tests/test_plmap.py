import pytest
from conftest import grid

from plgroups import IntervalSet, Kind, commutator, compose, conjugate, equals, identity, inverse, make, rotation
from plgroups.elements import bump
from plgroups.errors import BreakpointNotInA, NotBijective, OutOfDomain, OutOfRange, ParamMismatch, SlopeNotInLambda
from plgroups.numeric import THOMPSON, GroupParams, Q
from plgroups.sampling import random_element, random_v_element


def x0_table(t):
    # independent hand-written x0
    if t < Q(1, 4):
        return 2 * t
    if t < Q(1, 2):
        return t + Q(1, 4)
    return t / 2 + Q(1, 2)


def support_brute(x, depth=7):
    return [t for t in grid(x.params, depth) if x(t) != t]


class TestMake:
    def test_identity(self, F):
        assert make(F, [(0, 1, 0)]) == identity(F)
        assert identity(F).is_identity()

    def test_x0_three_segments(self, x0):
        assert len(x0) == 3
        image = sorted((s.at(s.left), s.at(e)) for s, e in zip(x0.segments, x0.breakpoints()[1:]))
        assert image == [(0, Q(1, 2)), (Q(1, 2), Q(3, 4)), (Q(3, 4), 1)]

    def test_rejects(self, F):
        with pytest.raises(NotBijective):
            make(F, [(0, 2, 0)])
        with pytest.raises(NotBijective):
            make(F, [(0, 1, 0), (Q(1, 2), 1, Q(-1, 4))])
        with pytest.raises(SlopeNotInLambda):
            make(F, [(0, 3, 0)])
        with pytest.raises(BreakpointNotInA):
            make(F, [(0, 1, 0), (Q(1, 3), 1, 0)])
        with pytest.raises(OutOfRange):
            make(F, [])
        with pytest.raises(OutOfRange):
            make(F, [(Q(1, 2), 1, 0)])

    def test_redundant_breakpoint_is_merged(self, F, x0):
        refined = make(F, [(0, 2, 0), (Q(1, 8), 2, 0), (Q(1, 4), 1, Q(1, 4)), (Q(1, 2), Q(1, 2), Q(1, 2))])
        assert equals(refined, x0)

    def test_refinement_roundtrip(self, F, rng):
        for _ in range(50):
            x = random_element(F, rng)
            raw = []
            for lo, hi, s, c in x.pieces():
                mid = (lo + hi) / 2
                while mid.denominator > 2**12:
                    mid = lo
                raw.append((lo, s, c))
                if lo < mid < hi:
                    raw.append((mid, s, c))
            assert make(F, raw) == x


class TestEval:
    def test_examples(self, F, x0, ab):
        a, _ = ab
        assert identity(F)(Q(1, 3)) == Q(1, 3)
        assert x0(Q(1, 4)) == Q(1, 2)
        assert a(Q(1, 8)) == Q(1, 2)

    def test_matches_table(self, F, x0):
        for t in grid(F, 6):
            assert x0(t) == x0_table(t)

    def test_out_of_domain(self, x0):
        with pytest.raises(OutOfDomain):
            x0(1)
        with pytest.raises(OutOfDomain):
            x0(Q(-1, 2))


class TestCompose:
    def test_pointwise_oracle(self, F, rng):
        for _ in range(100):
            x, y = random_v_element(F, rng), random_v_element(F, rng)
            xy = compose(x, y)
            pts = set(grid(F, 5)) | set(x.breakpoints()[:-1]) | set(xy.breakpoints()[:-1])
            assert all(xy(t) == y(x(t)) for t in pts)

    def test_identity_and_square(self, F, x0):
        assert compose(x0, identity(F)) == x0
        assert compose(x0, x0).slope_right(0) == 4

    def test_param_mismatch(self, x0):
        other = identity(GroupParams(3, 1))
        with pytest.raises(ParamMismatch):
            compose(x0, other)

    def test_breakpoints_come_from_x_and_preimages(self, F, rng):
        for _ in range(50):
            x, y = random_element(F, rng), random_element(F, rng)
            allowed = set(x.breakpoints()) | {x.inverse()(b) for b in y.breakpoints()[:-1]}
            assert set((x * y).breakpoints()) <= allowed | {F.r}


class TestInverse:
    def test_examples(self, F, x0):
        assert inverse(identity(F)) == identity(F)
        assert x0.inverse()(Q(1, 2)) == Q(1, 4)

    def test_involution_and_laws(self, F, rng):
        for _ in range(100):
            x = random_v_element(F, rng)
            assert x.inverse().inverse() == x
            assert (x * x.inverse()).is_identity()
            assert all(x.inverse()(x(t)) == t for t in grid(F, 5))


class TestSupport:
    def test_examples(self, F, x0, ab):
        _, b = ab
        assert identity(F).support().is_empty()
        assert x0.support() == IntervalSet.interval(0, 1)
        assert b.support() == IntervalSet.interval(Q(1, 2), Q(7, 8))

    def test_fixed_sets(self, F, x0):
        assert x0.fixed_set() == IntervalSet((), (Q(0),))
        assert identity(F).fixed_set() == IntervalSet(((Q(0), Q(1)),), (Q(0),))
        fix = bump(F, Q(1, 4), Q(1, 2)).fixed_set()
        for t in grid(F, 5):
            if t <= Q(1, 4) or t >= Q(1, 2):
                assert t in fix

    def test_against_sampling(self, F, rng):
        for _ in range(60):
            x = random_v_element(F, rng)
            supp = x.support()
            moved = set(support_brute(x))
            for t in grid(F, 7):
                assert (t in supp) == (t in moved)

    def test_isolated_fixed_point_off_grid(self, F):
        # t -> 2t on [0,1/2) has an isolated fixed point at 0; a map with a fixed
        # point at 1/3 (not dyadic)
        x = bump(F, 0, Q(1, 2)) * bump(F, Q(1, 4), 1).inverse()
        fix = x.fixed_set()
        assert all(x(p) == p for p in fix.points)
        for a, b in fix.open_intervals:
            m = (a + b) / 2
            assert x(m) == m


class TestSlopes:
    def test_examples(self, F, x0, ab):
        a, _ = ab
        assert identity(F).slope_right(0) == 1
        assert x0.slope_right(0) == 2
        assert x0.slope_left(1) == Q(1, 2)
        assert a.slope_right(0) == 4

    def test_domains(self, x0):
        with pytest.raises(OutOfDomain):
            x0.slope_left(0)
        with pytest.raises(OutOfDomain):
            x0.slope_right(1)


class TestClassify:
    def test_examples(self, F, x0, x1, ab):
        for g in (x0, x1, *ab):
            assert g.classify() is Kind.F
        assert rotation(F, Q(1, 4)).classify() is Kind.T_ONLY
        swap = make(F, [(0, 1, Q(1, 4)), (Q(1, 4), 1, Q(-1, 4)), (Q(1, 2), 1, 0)])
        assert swap.classify() is Kind.V_ONLY

    def test_conjugation_stable_in_F(self, F, rng):
        for _ in range(50):
            x, g = random_element(F, rng), random_element(F, rng)
            assert conjugate(x, g).classify() is Kind.F


class TestUpDown:
    def test_examples(self, F, x0):
        assert identity(F).is_up() and identity(F).is_down()
        assert x0.is_up() and not x0.is_down()
        assert x0.inverse().is_down()

    def test_against_sampling(self, F, rng):
        for _ in range(60):
            x = random_element(F, rng, 2)
            assert x.is_up() == all(x(t) >= t for t in grid(F, 8))


class TestConjugateCommutator:
    def test_examples(self, F, x0, ab):
        a, b = ab
        assert conjugate(x0, identity(F)) == x0
        assert conjugate(b, a).support() == IntervalSet.interval(Q(7, 8), Q(31, 32))
        assert commutator(x0, x0).is_identity()

    def test_conjugate_formula(self, F, rng):
        for _ in range(30):
            x, g = random_element(F, rng), random_element(F, rng)
            assert (x ^ g) == g.inverse() * x * g
            assert commutator(x, g) == x.inverse() * g.inverse() * x * g
