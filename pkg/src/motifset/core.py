"""Shared primitives: window extraction, distance kernels, overlap tests.

Window start positions are 0-based everywhere in the Python API. Serialized
files (see :mod:`motifset.datafiles`) use 1-based starts instead.
"""

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

__all__ = [
    "DiscoveryParams",
    "MotifSet",
    "as_time_series",
    "sliding_window",
    "distance",
    "distance_with_abandon",
    "trivial_match",
]


@dataclass(frozen=True)
class DiscoveryParams:
    """Validated bundle of the discovery knobs shared by all algorithms.

    n is the window width, r the match radius, q the number of random
    reference windows used by the pruned best-pair search.
    """

    n: int
    r: float
    q: int = 8

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"window width n must be an integer >= 2, got {self.n}")
        if not np.isfinite(self.r) or self.r <= 0:
            raise ValueError(f"radius r must be a positive real, got {self.r}")
        if int(self.q) != self.q or self.q < 1:
            raise ValueError(f"reference count q must be an integer >= 1, got {self.q}")


@dataclass
class MotifSet:
    """A discovered motif set.

    members holds the 0-based start positions of the set's windows, sorted
    ascending and pairwise non-overlapping. representative is the motif
    itself: a concrete member window or an averaged one, depending on the
    algorithm. pair_distance carries the distance the set was founded at
    (best pair for the scanning search, last merge for the clustering one);
    the counting search leaves it as None.
    """

    members: list
    representative: np.ndarray
    pair_distance: float | None = None

    @property
    def cardinality(self):
        return len(self.members)


def as_time_series(values):
    """Coerce to a 1-d float64 array, rejecting empty or non-finite input."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"time series must be 1-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("time series must contain at least one value")
    if not np.all(np.isfinite(arr)):
        raise ValueError("time series contains NaN or infinite values")
    return arr


def sliding_window(series, n):
    """All windows of width n as a (m - n + 1, n) view onto the series.

    Row i is the window starting at position i; no data is copied.
    """
    arr = as_time_series(series)
    m = arr.shape[0]
    if int(n) != n or n < 1:
        raise ValueError(f"window width n must be an integer >= 1, got {n}")
    if n > m:
        raise ValueError(f"window width n={n} exceeds series length m={m}")
    return np.lib.stride_tricks.sliding_window_view(arr, int(n))


# The two kernels below must accumulate in the same order so that a survived
# abandon returns bit-identical values to the plain kernel.


@njit(cache=True)
def _sq_dist(a, b):
    acc = 0.0
    for k in range(a.shape[0]):
        d = a[k] - b[k]
        acc += d * d
    return acc


@njit(cache=True)
def _sq_dist_within(a, b, sq_cutoff):
    # Returns -1.0 once the running sum exceeds sq_cutoff (strictly).
    acc = 0.0
    for k in range(a.shape[0]):
        d = a[k] - b[k]
        acc += d * d
        if acc > sq_cutoff:
            return -1.0
    return acc


def _check_pair(a, b):
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    if a.ndim != 1 or b.ndim != 1:
        raise ValueError("distance operands must be 1-dimensional")
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")
    if a.shape[0] == 0:
        raise ValueError("distance operands must be non-empty")
    return a, b


def distance(a, b):
    """Euclidean distance between two equal-length windows (no normalisation)."""
    a, b = _check_pair(a, b)
    return math.sqrt(_sq_dist(a, b))


def distance_with_abandon(a, b, cutoff):
    """Euclidean distance, abandoned early once it must exceed cutoff.

    The running squared sum is compared against cutoff**2; the square root is
    taken once at the end. Returns None when the distance exceeds the cutoff,
    otherwise the same float that :func:`distance` would produce. A distance
    exactly equal to the cutoff is returned, not abandoned.
    """
    a, b = _check_pair(a, b)
    if not np.isfinite(cutoff) or cutoff < 0:
        raise ValueError(f"cutoff must be a non-negative real, got {cutoff}")
    sq = _sq_dist_within(a, b, cutoff * cutoff)
    if sq < 0.0:
        return None
    return math.sqrt(sq)


def trivial_match(start_a, start_b, n):
    """True when windows of width n starting at the two positions overlap.

    Matches the interval test |start_a - start_b| < n, so a window is always
    a trivial match of itself.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"window width n must be an integer >= 1, got {n}")
    return abs(int(start_a) - int(start_b)) < n
