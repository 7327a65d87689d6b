import math

import numpy as np
import pytest

import spreadmax as sm
from spreadmax.bounds import mirsky_from_stats
from spreadmax.errors import NegativeRadicand

from .oracles import random_symmetric


class TestNormAndTrace:
    def test_golden_hand_count(self, corner_zero):
        # six off-diagonal ones plus diagonal (0, 1, 1): 6 + 2 = 8; trace 2
        assert sm.frobenius_norm_sq(corner_zero) == 8.0
        assert sm.trace(corner_zero) == 2.0

    def test_identity(self):
        eye = sm.make_matrix(np.eye(3))
        assert sm.frobenius_norm_sq(eye) == 3.0
        assert sm.trace(eye) == 3.0

    def test_zero_matrix(self):
        zero = sm.make_matrix(np.zeros((4, 4)))
        assert sm.frobenius_norm_sq(zero) == 0.0
        assert sm.trace(zero) == 0.0


class TestMirskyBound:
    def test_golden_value(self, corner_zero):
        # sqrt(2*8 - 2^2/3) = sqrt(44/3)
        assert sm.mirsky_bound(corner_zero) == pytest.approx(
            math.sqrt(44.0 / 3.0), abs=1e-12
        )

    def test_zero_matrix(self):
        assert sm.mirsky_bound(sm.make_matrix(np.zeros((3, 3)))) == 0.0

    def test_sparse_patterns_capped(self, unit_box):
        # any {0,1} vertex with >= 3 zero entries has squared norm <= 6,
        # hence bound <= sqrt(12 - tr^2/3) <= 2*sqrt(3)
        cap = 2.0 * math.sqrt(3.0)
        for pattern in sm.enumerate_vertices(3):
            mat = pattern.materialize(unit_box)
            if np.count_nonzero(mat.array == 0.0) >= 3:
                tr = sm.trace(mat)
                expected_cap = math.sqrt(12.0 - tr * tr / 3.0)
                assert sm.mirsky_bound(mat) <= expected_cap + 1e-12
                assert expected_cap <= cap + 1e-12

    def test_rounding_clamp(self):
        assert mirsky_from_stats(0.0, 0.0, 3) == 0.0
        # radicand -5e-15: rounding noise, clamped to zero
        assert mirsky_from_stats(0.0, 1e-7, 2) == 0.0

    def test_corrupt_stats_rejected(self):
        with pytest.raises(NegativeRadicand):
            mirsky_from_stats(0.0, 10.0, 2)

    def test_dominates_spread(self):
        rng = np.random.default_rng(41)
        for _ in range(500):
            n = int(rng.integers(2, 11))
            mat = sm.make_matrix(random_symmetric(rng, n))
            assert sm.spread(mat) <= sm.mirsky_bound(mat) + 1e-9


class TestBoundReport:
    def test_carries_gap(self, corner_zero):
        report = sm.bound_report(corner_zero)
        assert report.bound_name == "mirsky"
        assert report.value == pytest.approx(math.sqrt(44.0 / 3.0), abs=1e-12)
        assert report.actual_spread == pytest.approx(2 * math.sqrt(3), abs=1e-9)
        assert report.gap == pytest.approx(report.value - report.actual_spread)
        assert report.value >= report.actual_spread - 1e-9

    def test_without_spread(self, corner_zero):
        report = sm.bound_report(corner_zero, with_spread=False)
        assert report.actual_spread is None
        assert report.gap is None
