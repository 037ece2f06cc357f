import numpy as np
import pytest

from motifset import brute_force_pair, mk_pair, sliding_window

from _oracles import closest_pair


def random_case(rng, count=None, width=None, duplicates=False):
    count = count or int(rng.integers(2, 90))
    width = width or int(rng.integers(1, 24))
    windows = rng.normal(size=(count, width))
    if duplicates and count >= 4:
        windows[count // 2] = windows[0]
        windows[count - 1] = windows[1]
    starts = np.sort(rng.choice(count * 3, size=count, replace=False))
    n = int(rng.integers(1, max(2, width + 2)))
    return windows, starts, n


class TestBruteForceAgainstOracle:
    def test_random_cases(self, rng):
        for trial in range(200):
            windows, starts, n = random_case(rng, duplicates=trial % 3 == 0)
            expect = closest_pair(windows, starts, n)
            got = brute_force_pair(windows, n=n, starts=starts)
            if expect is None:
                assert got is None
            else:
                assert (got.i, got.j) == expect[:2]
                assert got.dist == pytest.approx(expect[2], rel=1e-12, abs=1e-12)

    def test_planted_duplicates(self):
        series = np.zeros(80)
        spike = np.concatenate([np.linspace(0, 5, 10), np.linspace(5, 0, 10)[1:]])
        series[0:19] += spike
        series[50:69] += spike
        pair = brute_force_pair(sliding_window(series, 19))
        assert (pair.i, pair.j, pair.dist) == (0, 50, 0.0)

    def test_all_pairs_trivial(self):
        windows = sliding_window(np.random.default_rng(1).normal(size=25), 20)
        assert brute_force_pair(windows) is None

    def test_rejects_single_window(self):
        with pytest.raises(ValueError):
            brute_force_pair(np.zeros((1, 5)))

    def test_rejects_duplicate_starts(self):
        with pytest.raises(ValueError):
            brute_force_pair(np.zeros((3, 4)), starts=[0, 5, 5])

    def test_unsorted_starts_accepted(self, rng):
        windows = rng.normal(size=(6, 5))
        starts = np.array([50, 0, 30, 20, 10, 40])
        got = brute_force_pair(windows, n=5, starts=starts)
        expect = closest_pair(windows, starts, 5)
        assert (got.i, got.j) == expect[:2]


class TestMkPairExactness:
    def test_bitwise_equal_to_brute_force(self, rng):
        for trial in range(300):
            windows, starts, n = random_case(rng, duplicates=trial % 4 == 0)
            q = int(rng.integers(1, 13))
            brute = brute_force_pair(windows, n=n, starts=starts)
            mk = mk_pair(windows, q, n=n, starts=starts, seed=trial)
            if brute is None:
                assert mk is None
            else:
                assert (mk.i, mk.j) == (brute.i, brute.j)
                assert mk.dist == brute.dist

    def test_large_collections_cross_pruning_floor(self, rng):
        # Sizes straddling the internal exhaustive-scan floor.
        for count in (30, 31, 32, 33, 64, 200):
            windows = rng.normal(size=(count, 16))
            brute = brute_force_pair(windows)
            mk = mk_pair(windows, 8, seed=count)
            assert (mk.i, mk.j, mk.dist) == (brute.i, brute.j, brute.dist)

    def test_seed_never_changes_result(self, rng):
        windows = rng.normal(size=(120, 12))
        results = {
            (p.i, p.j, p.dist)
            for p in (mk_pair(windows, 6, seed=s) for s in (0, 1, 2, 99))
        }
        assert len(results) == 1

    def test_q_larger_than_collection(self, rng):
        windows = rng.normal(size=(40, 8))
        brute = brute_force_pair(windows)
        mk = mk_pair(windows, 500, seed=0)
        assert (mk.i, mk.j, mk.dist) == (brute.i, brute.j, brute.dist)

    def test_rejects_bad_q(self, rng):
        with pytest.raises(ValueError):
            mk_pair(np.zeros((4, 3)), 0)

    def test_zero_distance_tie_break(self):
        # Four identical windows; the smallest start pair must win.
        windows = np.tile(np.arange(5.0), (4, 1))
        starts = np.array([40, 10, 30, 90])
        pair = mk_pair(windows, 2, n=5, starts=starts, seed=0)
        assert (pair.i, pair.j, pair.dist) == (10, 30, 0.0)
