import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import spreadmax as sm
from spreadmax.errors import (
    DegenerateInterval,
    DimensionTooLarge,
    SearchSpaceTooLarge,
)
from spreadmax.search import _chunk_ranges, pattern_bit_count, triu_positions

from .conftest import CORNER_ZERO, SQRT_5, TWO_SQRT_3
from .oracles import brute_max_spread_2x2, spread_oracle


def pattern_of(rows, iv=sm.Interval(0.0, 1.0)):
    return sm.VertexPattern.from_matrix(sm.make_matrix(rows), iv)


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 2), (2, 8), (3, 64)])
    def test_counts(self, n, count):
        patterns = list(sm.enumerate_vertices(n))
        assert len(patterns) == count
        assert [p.mask for p in patterns] == list(range(count))

    def test_guard(self):
        with pytest.raises(SearchSpaceTooLarge):
            list(sm.enumerate_vertices(9))

    def test_materialize_round_trip(self):
        iv = sm.Interval(-1.0, 2.0)
        for pattern in sm.enumerate_vertices(2):
            mat = pattern.materialize(iv)
            assert np.isin(mat.array, (iv.a, iv.b)).all()
            assert sm.VertexPattern.from_matrix(mat, iv) == pattern


class TestCanonicalForm:
    def test_permuted_family_shares_key(self, unit_box):
        family = [
            CORNER_ZERO,
            [[1, 1, 1], [1, 0, 1], [1, 1, 1]],
            [[1, 1, 1], [1, 1, 1], [1, 1, 0]],
        ]
        keys = {sm.canonical_form(pattern_of(rows)) for rows in family}
        assert len(keys) == 1

    def test_diagonal_pattern_is_fixed_point(self):
        mask = 0
        for k, (i, j) in enumerate(triu_positions(3)):
            if i == j:
                mask |= 1 << k
        pattern = sm.VertexPattern(n=3, mask=mask)
        assert sm.canonical_form(pattern) == mask

    def test_two_by_two_maximizer_pair(self):
        first = pattern_of([[0, 1], [1, 1]])
        second = pattern_of([[1, 1], [1, 0]])
        assert sm.canonical_form(first) == sm.canonical_form(second)

    def test_dimension_guard(self):
        with pytest.raises(DimensionTooLarge):
            sm.canonical_form(sm.VertexPattern(n=9, mask=0))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 5), st.data())
    def test_permutation_similarity_invariance(self, n, data):
        mask = data.draw(st.integers(0, (1 << pattern_bit_count(n)) - 1))
        perm = data.draw(st.permutations(range(n)))
        pattern = sm.VertexPattern(n=n, mask=mask)
        iv = sm.Interval(-1.0, 2.0)
        arr = pattern.materialize(iv).array
        permuted = arr[np.ix_(perm, perm)]
        permuted_pattern = sm.VertexPattern.from_matrix(sm.make_matrix(permuted), iv)
        assert sm.canonical_form(pattern) == sm.canonical_form(permuted_pattern)
        assert sm.spread(sm.make_matrix(permuted)) == pytest.approx(
            sm.spread(pattern.materialize(iv)), abs=1e-9
        )


class TestVertexMirsky:
    def test_golden_pattern(self, unit_box):
        assert sm.vertex_mirsky(pattern_of(CORNER_ZERO), unit_box) == pytest.approx(
            math.sqrt(44.0 / 3.0), abs=1e-12
        )

    @pytest.mark.parametrize("n", [1, 2, 4])
    @pytest.mark.parametrize("a", [-2.5, -1.0, 0.5])
    def test_all_low_pattern_closed_form(self, n, a):
        iv = sm.Interval(a, a + 3.0)
        bound = sm.vertex_mirsky(sm.VertexPattern(n=n, mask=0), iv)
        assert bound == pytest.approx(abs(a) * math.sqrt(2.0 * n * n - n), abs=1e-12)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 5), st.data())
    def test_matches_materialized(self, n, data):
        mask = data.draw(st.integers(0, (1 << pattern_bit_count(n)) - 1))
        a = data.draw(st.floats(-3, 2, allow_nan=False))
        width = data.draw(st.floats(0.1, 3, allow_nan=False))
        iv = sm.Interval(a, a + width)
        pattern = sm.VertexPattern(n=n, mask=mask)
        direct = sm.vertex_mirsky(pattern, iv)
        assert direct == pytest.approx(
            sm.mirsky_bound(pattern.materialize(iv)), abs=1e-12
        )


class TestChunking:
    def test_ranges_cover_exactly(self):
        for total_bits in (3, 6, 10):
            total = 1 << total_bits
            for workers in (1, 2, 3, 5, 8):
                ranges = _chunk_ranges(total, workers)
                assert ranges[0][0] == 0
                assert ranges[-1][1] == total
                for (s0, e0), (s1, _) in zip(ranges, ranges[1:]):
                    assert e0 == s1


class TestExhaustiveMax:
    def test_two_by_two_against_brute_force(self, unit_box):
        oracle_max, oracle_masks = brute_max_spread_2x2(0.0, 1.0)
        assert oracle_max == pytest.approx(SQRT_5, abs=1e-12)
        result = sm.exhaustive_max(sm.SearchConfig(n=2, interval=unit_box))
        assert result.max_spread == pytest.approx(oracle_max, abs=1e-9)
        found = {p.materialize(unit_box) for p, _ in result.maximizers}
        expected = {
            sm.make_matrix([[0, 1], [1, 1]]),
            sm.make_matrix([[1, 1], [1, 0]]),
        }
        assert found == expected
        assert len(oracle_masks) == 2

    def test_three_by_three_golden(self, unit_box):
        result = sm.exhaustive_max(sm.SearchConfig(n=3, interval=unit_box))
        assert result.max_spread == pytest.approx(TWO_SQRT_3, abs=1e-9)
        found = {p.materialize(unit_box) for p, _ in result.maximizers}
        expected = {
            sm.make_matrix(CORNER_ZERO),
            sm.make_matrix([[1, 1, 1], [1, 0, 1], [1, 1, 1]]),
            sm.make_matrix([[1, 1, 1], [1, 1, 1], [1, 1, 0]]),
        }
        assert found == expected
        assert result.canonical_class_count == 1
        assert result.stats.evaluated + result.stats.pruned == 64

    def test_canonical_dedupe_keeps_smallest_mask(self, unit_box):
        result = sm.exhaustive_max(
            sm.SearchConfig(n=3, interval=unit_box, canonical_dedupe=True)
        )
        assert len(result.maximizers) == 1
        full = sm.exhaustive_max(sm.SearchConfig(n=3, interval=unit_box))
        assert result.maximizers[0][0].mask == min(p.mask for p, _ in full.maximizers)

    def test_one_by_one_all_patterns_tie(self):
        result = sm.exhaustive_max(sm.SearchConfig(n=1, interval=sm.Interval(-3.0, 4.0)))
        assert result.max_spread == 0.0
        assert [p.mask for p, _ in result.maximizers] == [0, 1]

    def test_maximizers_within_tolerance(self, unit_box):
        cfg = sm.SearchConfig(n=4, interval=unit_box)
        result = sm.exhaustive_max(cfg)
        for _, report in result.maximizers:
            assert abs(report.spread - result.max_spread) <= cfg.spread_tolerance

    def test_determinism_across_workers_and_pruning(self, unit_box):
        signatures = set()
        for workers in (1, 2, 8):
            for prune in (True, False):
                cfg = sm.SearchConfig(
                    n=4, interval=unit_box, worker_count=workers, pruning=prune
                )
                result = sm.exhaustive_max(cfg)
                signatures.add(
                    (
                        np.float64(result.max_spread).tobytes(),
                        tuple(p.mask for p, _ in result.maximizers),
                        result.canonical_keys,
                    )
                )
        assert len(signatures) == 1

    def test_pruning_soundness(self):
        # every pattern skipped by the bound stays below the final max
        iv = sm.Interval(-1.0, 1.0)
        for n in (2, 3, 4):
            pruned_res = sm.exhaustive_max(sm.SearchConfig(n=n, interval=iv))
            full_res = sm.exhaustive_max(
                sm.SearchConfig(n=n, interval=iv, pruning=False)
            )
            assert pruned_res.max_spread == full_res.max_spread
            assert [p.mask for p, _ in pruned_res.maximizers] == [
                p.mask for p, _ in full_res.maximizers
            ]
            assert full_res.stats.pruned == 0
            assert full_res.stats.evaluated == 1 << pattern_bit_count(n)

    def test_matches_oracle_on_other_intervals(self):
        for a, b in ((-1.0, 2.0), (-2.0, -0.5), (1.0, 3.0)):
            iv = sm.Interval(a, b)
            result = sm.exhaustive_max(sm.SearchConfig(n=2, interval=iv))
            oracle_max, _ = brute_max_spread_2x2(a, b)
            assert result.max_spread == pytest.approx(oracle_max, abs=1e-9)

    def test_search_guard(self, unit_box):
        with pytest.raises(SearchSpaceTooLarge):
            sm.exhaustive_max(sm.SearchConfig(n=9, interval=unit_box))

    def test_degenerate_interval_rejected(self):
        with pytest.raises(DegenerateInterval):
            sm.SearchConfig(n=2, interval=sm.Interval(1.0, 1.0))

    def test_more_workers_than_patterns(self):
        cfg = sm.SearchConfig(n=1, interval=sm.Interval(0.0, 1.0), worker_count=8)
        result = sm.exhaustive_max(cfg)
        assert result.max_spread == 0.0
        assert len(result.maximizers) == 2


class TestCoordinateAscent:
    def test_from_flat_start_reaches_vertex_max(self, unit_box):
        start = 0.5 * np.ones((2, 2))
        final, value, updates = sm.coordinate_ascent(start, unit_box)
        assert value == pytest.approx(SQRT_5, abs=1e-12)
        assert np.isin(final, (0.0, 1.0)).all()
        assert updates <= 10 * 4

    def test_monotone_and_vertex_bound(self, unit_box):
        rng = np.random.default_rng(37)
        vertex_max = sm.exhaustive_max(sm.SearchConfig(n=3, interval=unit_box)).max_spread
        for _ in range(20):
            raw = rng.uniform(0, 1, size=(3, 3))
            start = (raw + raw.T) / 2
            start_spread = spread_oracle(start)
            final, value, _ = sm.coordinate_ascent(start, unit_box)
            assert value >= start_spread - 1e-12
            assert value <= vertex_max + 1e-9
            assert np.isin(final, (0.0, 1.0)).all()


class TestExtremalityHarness:
    def test_small_run_finds_nothing(self, unit_box):
        cfg = sm.SearchConfig(n=2, interval=unit_box, rng_seed=42)
        report = sm.theorem5_falsify(cfg, samples=300, ascents=30)
        assert report.best_sample_spread < report.max_spread + 1e-9
        assert report.best_ascent_spread <= report.max_spread + 1e-9
        assert report.ascents_all_vertex

    def test_deterministic_given_seed(self, unit_box):
        cfg = sm.SearchConfig(n=2, interval=unit_box, rng_seed=7, worker_count=2)
        first = sm.theorem5_falsify(cfg, samples=100, ascents=10)
        second = sm.theorem5_falsify(cfg, samples=100, ascents=10)
        assert first == second


class TestGrowthCheck:
    def test_unit_box_prefix(self, unit_box):
        report = sm.lemma4_check(4, unit_box)
        assert report.maxima[0] == 0.0
        assert report.maxima[1] == pytest.approx(SQRT_5, abs=1e-9)
        assert report.maxima[2] == pytest.approx(TWO_SQRT_3, abs=1e-9)
        assert report.strictly_increasing

    def test_symmetric_box(self):
        report = sm.lemma4_check(3, sm.Interval(-1.0, 1.0))
        assert report.strictly_increasing


class TestRankSurvey:
    def test_three_by_three_enforced(self, unit_box):
        survey = sm.conjecture_report(sm.SearchConfig(n=3, interval=unit_box))
        assert survey.asserted
        assert survey.all_rank_two
        assert survey.ranks == (2, 2, 2)

    def test_two_by_two_rank_two(self, unit_box):
        # maximizer [[0,1],[1,1]] has determinant -1, hence full rank 2
        survey = sm.conjecture_report(sm.SearchConfig(n=2, interval=unit_box))
        assert not survey.asserted
        assert survey.ranks == (2, 2)

    def test_other_interval_reported_only(self):
        survey = sm.conjecture_report(sm.SearchConfig(n=3, interval=sm.Interval(-1.0, 1.0)))
        assert not survey.asserted
        assert len(survey.ranks) >= 1
