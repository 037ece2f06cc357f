"""Exact closest-pair search over a window collection.

Two routes to the same answer: a plain exhaustive scan, and a pruned search
that orders candidates by their distance to random reference windows and
skips pairs whose triangle-inequality lower bound already exceeds the best
distance seen. Both report the identical pair: distances are accumulated in
the same order, and ties on distance resolve to the lexicographically
smallest (start, start) pair.
"""

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import _sq_dist, _sq_dist_within

__all__ = ["BestPair", "brute_force_pair", "mk_pair"]

# Below this many windows the pruned search just runs the exhaustive scan;
# reference bookkeeping costs more than it saves.
_BRUTE_FORCE_FLOOR = 32


@dataclass(frozen=True)
class BestPair:
    """Closest non-overlapping window pair; i < j are start positions."""

    i: int
    j: int
    dist: float


@njit(cache=True)
def _brute_pair(windows, starts, n):
    count = windows.shape[0]
    best_sq = np.inf
    bi = -1
    bj = -1
    for a in range(count):
        for b in range(a + 1, count):
            if abs(starts[a] - starts[b]) < n:
                continue
            sq = _sq_dist(windows[a], windows[b])
            if sq < best_sq:
                best_sq = sq
                bi = a
                bj = b
    return bi, bj, best_sq


@njit(cache=True)
def _mk_pair(windows, starts, n, ref_rows):
    count = windows.shape[0]
    refs = ref_rows.shape[0]

    prof = np.empty((refs, count))
    best_sq = np.inf
    b1 = np.int64(0)
    b2 = np.int64(0)
    have = False
    for t in range(refs):
        rw = windows[ref_rows[t]]
        rs = starts[ref_rows[t]]
        for i in range(count):
            sq = _sq_dist(rw, windows[i])
            prof[t, i] = math.sqrt(sq)
            if abs(rs - starts[i]) < n:
                continue
            s1 = min(rs, starts[i])
            s2 = max(rs, starts[i])
            if sq < best_sq or (
                sq == best_sq and (s1 < b1 or (s1 == b1 and s2 < b2))
            ):
                best_sq = sq
                b1 = s1
                b2 = s2
                have = True

    # Order candidates by distance to the reference whose profile spreads the
    # most; wider spread gives tighter lower bounds along the scan.
    best_t = 0
    best_spread = -1.0
    for t in range(refs):
        mu = 0.0
        for i in range(count):
            mu += prof[t, i]
        mu /= count
        var = 0.0
        for i in range(count):
            d = prof[t, i] - mu
            var += d * d
        if var > best_spread:
            best_spread = var
            best_t = t

    order = np.argsort(prof[best_t], kind="mergesort")
    best_dist = math.sqrt(best_sq) if have else np.inf

    for off in range(1, count):
        alive = False
        for ii in range(count - off):
            x = order[ii]
            y = order[ii + off]
            gap = prof[best_t, y] - prof[best_t, x]
            if gap > best_dist:
                continue
            alive = True
            lb = gap
            for t in range(refs):
                diff = abs(prof[t, x] - prof[t, y])
                if diff > lb:
                    lb = diff
            if lb > best_dist:
                continue
            if abs(starts[x] - starts[y]) < n:
                continue
            sq = _sq_dist_within(windows[x], windows[y], best_sq)
            if sq < 0.0:
                continue
            s1 = min(starts[x], starts[y])
            s2 = max(starts[x], starts[y])
            if sq < best_sq or (
                sq == best_sq and (s1 < b1 or (s1 == b1 and s2 < b2))
            ):
                best_sq = sq
                b1 = s1
                b2 = s2
                have = True
                best_dist = math.sqrt(best_sq)
        if not alive:
            break

    if not have:
        return np.int64(-1), np.int64(-1), np.inf
    return b1, b2, best_sq


def _prep(windows, n, starts):
    w = np.ascontiguousarray(windows, dtype=np.float64)
    if w.ndim != 2:
        raise ValueError(f"windows must be a 2-d array, got shape {w.shape}")
    count, width = w.shape
    if count < 2:
        raise ValueError(f"need at least two windows, got {count}")
    if starts is None:
        starts = np.arange(count, dtype=np.int64)
    else:
        starts = np.asarray(starts, dtype=np.int64)
        if starts.shape != (count,):
            raise ValueError("starts must hold one position per window")
        if np.unique(starts).shape[0] != count:
            raise ValueError("window start positions must be distinct")
    if n is None:
        n = width
    if int(n) != n or n < 1:
        raise ValueError(f"window width n must be an integer >= 1, got {n}")
    if not np.all(np.diff(starts) > 0):
        idx = np.argsort(starts, kind="mergesort")
        w = np.ascontiguousarray(w[idx])
        starts = starts[idx]
    return w, starts, int(n)


def brute_force_pair(windows, *, n=None, starts=None):
    """Closest non-overlapping pair by exhaustive scan, or None if every
    pair overlaps.

    starts defaults to 0..count-1 (rows of a full sliding-window matrix) and
    n to the window width.
    """
    w, starts, n = _prep(windows, n, starts)
    bi, bj, best_sq = _brute_pair(w, starts, n)
    if bi < 0:
        return None
    s1, s2 = int(starts[bi]), int(starts[bj])
    return BestPair(min(s1, s2), max(s1, s2), math.sqrt(best_sq))


def mk_pair(windows, q=8, *, n=None, starts=None, seed=0):
    """Closest non-overlapping pair via reference-ordered pruned search.

    Exact: returns the same pair as :func:`brute_force_pair` under the same
    tie-break. q random reference windows (chosen with the given seed) drive
    the pruning; the seed never changes the result, only the work done.
    """
    if int(q) != q or q < 1:
        raise ValueError(f"reference count q must be an integer >= 1, got {q}")
    w, starts, n = _prep(windows, n, starts)
    count = w.shape[0]
    if count < _BRUTE_FORCE_FLOOR:
        bi, bj, best_sq = _brute_pair(w, starts, n)
    else:
        rng = np.random.default_rng(seed)
        ref_rows = rng.choice(count, size=min(int(q), count), replace=False)
        b1, b2, best_sq = _mk_pair(w, starts, n, ref_rows.astype(np.int64))
        if b1 < 0:
            return None
        return BestPair(int(b1), int(b2), math.sqrt(best_sq))
    if bi < 0:
        return None
    s1, s2 = int(starts[bi]), int(starts[bj])
    return BestPair(min(s1, s2), max(s1, s2), math.sqrt(best_sq))
