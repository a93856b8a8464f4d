"""Fractional Dehn twist coefficients: exact values, intervals, lifts."""

from __future__ import annotations

from fractions import Fraction

import pytest
from conftest import three_braids
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcert import (
    BadGenus,
    BadParameters,
    BraidWord,
    FdtcValue,
    NotThreeBraid,
    dehornoy_floor,
    delta,
    fdtc_exact_b3,
    fdtc_interval,
    fdtc_interval_by_floor,
    fdtc_lift,
    fdtc_lower_bound,
    full_twist,
)

C = full_twist(3)

rationals = st.fractions(
    min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12
)


class TestFdtcValue:
    def test_interval_orientation(self):
        with pytest.raises(BadParameters):
            FdtcValue.interval(Fraction(1), Fraction(0), "test")

    def test_exact_properties(self):
        v = FdtcValue.exact(Fraction(5, 4), "test")
        assert v.is_exact and v.value == Fraction(5, 4) and v.width == 0
        assert v.contains(Fraction(5, 4)) and not v.contains(Fraction(1))

    def test_interval_properties(self):
        v = FdtcValue.interval(Fraction(1, 3), Fraction(1, 2), "test")
        assert not v.is_exact
        assert v.width == Fraction(1, 6)
        with pytest.raises(BadParameters):
            _ = v.value

    def test_abs_lower_bound(self):
        assert FdtcValue.interval(
            Fraction(1, 3), Fraction(1, 2), "t").abs_lower_bound() == Fraction(1, 3)
        assert FdtcValue.interval(
            Fraction(-3), Fraction(-2), "t").abs_lower_bound() == 2
        assert FdtcValue.interval(
            Fraction(-1), Fraction(1), "t").abs_lower_bound() == 0
        assert FdtcValue.exact(Fraction(0), "t").abs_lower_bound() == 0

    def test_certifies_nonnegative(self):
        assert FdtcValue.interval(Fraction(0), Fraction(1), "t").certifies_nonnegative()
        assert not FdtcValue.interval(
            Fraction(-1, 12), Fraction(1), "t").certifies_nonnegative()


class TestExactB3:
    def test_known_values(self):
        assert fdtc_exact_b3(BraidWord(3, (1, 2))) == Fraction(1, 3)
        assert fdtc_exact_b3(delta(3)) == Fraction(1, 2)
        assert fdtc_exact_b3(BraidWord(3, (1, -2))) == 0
        assert fdtc_exact_b3(C) == 1
        assert fdtc_exact_b3(BraidWord(3, ())) == 0

    def test_periodic_families(self):
        for d in range(-3, 4):
            w1 = C ** d * BraidWord(3, (-1, -2))
            w2 = C ** d * BraidWord(3, (-1, -1, -2))
            w3 = C ** d * BraidWord(3, (-1, -1, -1, -2))
            assert fdtc_exact_b3(w1) == d - Fraction(1, 3)
            assert fdtc_exact_b3(w2) == d - Fraction(1, 2)
            assert fdtc_exact_b3(w3) == d - Fraction(2, 3)

    def test_pa_and_reducible_families(self):
        for d in range(-3, 4):
            assert fdtc_exact_b3(C ** d * BraidWord(3, (1, -2))) == d
            assert fdtc_exact_b3(C ** d * BraidWord(3, (2, 2))) == d
            assert fdtc_exact_b3(C ** d * BraidWord(3, (-2,))) == d

    def test_boundary_twist_is_one(self):
        assert fdtc_exact_b3(C) == 1
        assert fdtc_exact_b3(C ** -1) == -1

    @given(three_braids(max_len=20))
    @settings(max_examples=120)
    def test_conjugacy_invariance(self, b):
        w = BraidWord(3, (1, -2, 1, 1))
        assert fdtc_exact_b3(b.conjugated_by(w)) == fdtc_exact_b3(b)

    @given(three_braids(max_len=12), st.integers(-3, 3))
    @settings(max_examples=80)
    def test_homogeneity(self, b, k):
        assert fdtc_exact_b3(b ** k) == k * fdtc_exact_b3(b)

    @given(three_braids(max_len=16), st.integers(-3, 3))
    @settings(max_examples=80)
    def test_central_additivity(self, b, d):
        assert fdtc_exact_b3(C ** d * b) == d + fdtc_exact_b3(b)

    @given(three_braids(max_len=20))
    @settings(max_examples=60, deadline=None)
    def test_floor_brackets_fdtc(self, b):
        c = abs(fdtc_exact_b3(b))
        f = dehornoy_floor(b)
        assert f <= c <= f + 1

    def test_wrong_strands(self):
        with pytest.raises(NotThreeBraid):
            fdtc_exact_b3(BraidWord(4, (1, 2, 3)))


class TestIntervalByFloor:
    def test_bad_tol(self):
        with pytest.raises(BadParameters):
            fdtc_interval_by_floor(BraidWord(3, (1,)), Fraction(0))
        with pytest.raises(BadParameters):
            fdtc_interval_by_floor(BraidWord(3, (1,)), Fraction(-1, 2))

    def test_trivial_is_exact_zero(self):
        v = fdtc_interval_by_floor(BraidWord(4, ()), Fraction(1, 12))
        assert v.is_exact and v.value == 0

    @given(three_braids(max_len=10), st.sampled_from(
        [Fraction(1, 4), Fraction(1, 8), Fraction(1, 12)]))
    @settings(max_examples=40, deadline=None)
    def test_contains_exact_value_and_width(self, b, tol):
        v = fdtc_interval_by_floor(b, tol)
        if v.is_exact:
            assert v.value == fdtc_exact_b3(b)
        else:
            assert v.width <= tol
            assert v.contains(fdtc_exact_b3(b))

    def test_full_twist_b4(self):
        v = fdtc_interval_by_floor(full_twist(4), Fraction(1, 6))
        assert v.contains(Fraction(1))

    def test_negative_braid_interval(self):
        v = fdtc_interval_by_floor(full_twist(4) ** -2, Fraction(1, 6))
        assert v.contains(Fraction(-2))
        assert v.hi <= 0


class TestIntervalDispatch:
    def test_three_strand_exact(self):
        v = fdtc_interval(BraidWord(3, (1, 2)), Fraction(1, 12))
        assert v.is_exact and v.value == Fraction(1, 3)

    def test_wide_strand_interval(self):
        v = fdtc_interval(full_twist(5), Fraction(1, 4))
        assert v.contains(Fraction(1))


class TestLift:
    def test_worked_value(self):
        assert fdtc_lift(Fraction(5, 4), 4, 3) == Fraction(5, 12)

    def test_identity_cover(self):
        assert fdtc_lift(Fraction(7, 3), 5, 1) == Fraction(7, 3)

    @given(rationals, st.integers(2, 12), st.integers(1, 12))
    def test_gcd_homogeneity(self, c, m, n):
        from math import gcd

        assert fdtc_lift(c, m, n) == Fraction(gcd(m, n), n) * c

    def test_bad_parameters(self):
        with pytest.raises(BadParameters):
            fdtc_lift(Fraction(1), 1, 3)
        with pytest.raises(BadParameters):
            fdtc_lift(Fraction(1), 4, 0)


class TestLowerBound:
    def test_values(self):
        assert fdtc_lower_bound(1) == Fraction(1, 2)
        assert fdtc_lower_bound(2) == Fraction(1, 6)
        assert fdtc_lower_bound(3) == Fraction(1, 10)

    def test_bad_genus(self):
        with pytest.raises(BadGenus):
            fdtc_lower_bound(0)
