import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motifset import (
    DiscoveryParams,
    MotifSet,
    distance,
    distance_with_abandon,
    sliding_window,
    trivial_match,
)
from motifset.core import as_time_series


class TestSlidingWindow:
    def test_counts_and_order(self):
        series = np.arange(10.0)
        win = sliding_window(series, 4)
        assert win.shape == (7, 4)
        for i in range(7):
            assert np.array_equal(win[i], series[i : i + 4])

    def test_whole_series_single_window(self):
        win = sliding_window(np.arange(5.0), 5)
        assert win.shape == (1, 5)

    def test_view_not_copy(self):
        series = np.zeros(8)
        win = sliding_window(series, 3)
        series[4] = 7.0
        assert win[4, 0] == 7.0

    def test_rejects_bad_width(self):
        with pytest.raises(ValueError):
            sliding_window(np.arange(5.0), 6)
        with pytest.raises(ValueError):
            sliding_window(np.arange(5.0), 0)

    def test_rejects_bad_series(self):
        with pytest.raises(ValueError):
            sliding_window(np.array([1.0, np.nan]), 2)
        with pytest.raises(ValueError):
            sliding_window(np.zeros((3, 3)), 2)
        with pytest.raises(ValueError):
            sliding_window([], 1)


class TestAsTimeSeries:
    def test_accepts_plain_lists(self):
        arr = as_time_series([1, 2, 3])
        assert arr.dtype == np.float64
        assert arr.tolist() == [1.0, 2.0, 3.0]

    def test_rejects_infinities(self):
        with pytest.raises(ValueError):
            as_time_series([1.0, math.inf])


class TestDistance:
    def test_hand_value(self):
        assert distance([0.0, 0.0], [3.0, 4.0]) == 5.0

    def test_identical_is_zero(self):
        v = np.linspace(-2, 2, 17)
        assert distance(v, v) == 0.0

    def test_matches_numpy_oracle(self, rng):
        for _ in range(300):
            k = int(rng.integers(1, 40))
            a = rng.normal(size=k)
            b = rng.normal(size=k)
            assert distance(a, b) == pytest.approx(
                float(np.linalg.norm(a - b)), rel=1e-12
            )

    def test_rejects_mismatch(self):
        with pytest.raises(ValueError):
            distance([1.0], [1.0, 2.0])
        with pytest.raises(ValueError):
            distance([], [])

    @given(
        st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=24),
        st.data(),
    )
    @settings(max_examples=200, deadline=None)
    def test_symmetry_and_triangle(self, a, data):
        k = len(a)
        b = data.draw(st.lists(st.floats(-1e6, 1e6), min_size=k, max_size=k))
        c = data.draw(st.lists(st.floats(-1e6, 1e6), min_size=k, max_size=k))
        assert distance(a, b) == distance(b, a)
        assert distance(a, c) <= distance(a, b) + distance(b, c) + 1e-7


class TestDistanceWithAbandon:
    def test_exact_match_when_within(self, rng):
        for _ in range(500):
            k = int(rng.integers(1, 32))
            a = rng.normal(size=k)
            b = rng.normal(size=k)
            full = distance(a, b)
            survived = distance_with_abandon(a, b, full + 1.0)
            # Same accumulation order, so bitwise equality is guaranteed.
            assert survived == full

    def test_none_when_beyond(self, rng):
        for _ in range(200):
            a = rng.normal(size=12)
            b = rng.normal(size=12)
            full = distance(a, b)
            if full > 0:
                assert distance_with_abandon(a, b, full * 0.99) is None

    def test_boundary_is_returned_not_abandoned(self):
        a = np.zeros(5)
        b = np.zeros(5)
        b[2] = 3.0
        assert distance_with_abandon(a, b, 3.0) == 3.0

    def test_rejects_bad_cutoff(self):
        with pytest.raises(ValueError):
            distance_with_abandon([1.0], [2.0], -1.0)
        with pytest.raises(ValueError):
            distance_with_abandon([1.0], [2.0], math.nan)


class TestTrivialMatch:
    def test_semantics(self):
        n = 29
        assert trivial_match(0, 0, n)
        assert trivial_match(0, n - 1, n)
        assert not trivial_match(0, n, n)
        assert trivial_match(50, 30, n)
        assert not trivial_match(50, 21, n)

    def test_symmetry_exhaustive(self):
        for n in (1, 2, 5, 29):
            for a in range(0, 2 * n + 2):
                for b in range(0, 2 * n + 2):
                    assert trivial_match(a, b, n) == trivial_match(b, a, n)
                    assert trivial_match(a, b, n) == (abs(a - b) < n)

    def test_rejects_bad_width(self):
        with pytest.raises(ValueError):
            trivial_match(0, 1, 0)


class TestDiscoveryParams:
    def test_valid(self):
        p = DiscoveryParams(n=29, r=7.5, q=4)
        assert (p.n, p.r, p.q) == (29, 7.5, 4)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n": 1, "r": 1.0},
            {"n": 29, "r": 0.0},
            {"n": 29, "r": -2.0},
            {"n": 29, "r": math.inf},
            {"n": 29, "r": 1.0, "q": 0},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            DiscoveryParams(**kwargs)


class TestMotifSet:
    def test_cardinality(self):
        ms = MotifSet([3, 40, 81], np.zeros(4), 1.5)
        assert ms.cardinality == 3
        assert ms.pair_distance == 1.5
