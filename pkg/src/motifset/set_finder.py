"""Motif-set discovery by match counting.

Every window counts its non-overlapping matches within the radius. Windows
are then ranked by count, thinned so that no two survivors lie within twice
the radius of each other, and each survivor is reported together with its
matches as one motif set.
"""

import math

import numpy as np
from numba import njit

from .core import DiscoveryParams, MotifSet, sliding_window, _sq_dist, _sq_dist_within
from .scan_mk import _collapse_runs, _pairwise_distances

__all__ = ["match_counts", "separate", "set_finder"]


@njit(cache=True)
def _count_kernel(windows, n, sq_r, use_abandon):
    count = windows.shape[0]
    counts = np.zeros(count, np.int64)
    for i in range(count):
        for j in range(i + 1, count):
            if j - i < n:
                continue
            if use_abandon:
                hit = _sq_dist_within(windows[i], windows[j], sq_r) >= 0.0
            else:
                hit = _sq_dist(windows[i], windows[j]) <= sq_r
            if hit:
                counts[i] += 1
                counts[j] += 1
    return counts


@njit(cache=True)
def _match_row(windows, n, sq_r, row):
    count = windows.shape[0]
    hits = np.zeros(count, np.bool_)
    for j in range(count):
        if abs(j - row) < n:
            continue
        if _sq_dist_within(windows[row], windows[j], sq_r) >= 0.0:
            hits[j] = True
    return hits


def match_counts(series, n, r, use_early_abandon=True):
    """Per-window count of non-overlapping matches within distance r."""
    params = DiscoveryParams(n=n, r=r)
    windows = np.ascontiguousarray(sliding_window(series, params.n))
    return _count_kernel(
        windows, params.n, float(params.r) ** 2, bool(use_early_abandon)
    )


def separate(windows, ordered, threshold):
    """Thin an ordered candidate list so survivors stay farther apart than
    the threshold.

    Walks the candidates in the given priority order; each one survives only
    if its distance to every earlier survivor exceeds the threshold. Windows
    that fail are removed outright and do not block later candidates.
    """
    survivors = []
    for row in ordered:
        ok = True
        for kept in survivors:
            if math.sqrt(_sq_dist(windows[row], windows[kept])) <= threshold:
                ok = False
                break
        if ok:
            survivors.append(int(row))
    return survivors


def set_finder(series, n, r, use_early_abandon=True):
    """Discover motif sets by counting matches around every window.

    Returns one motif set per surviving window with at least one match: the
    window itself plus its matches, with runs of mutually overlapping matches
    collapsed to a single representative each. Sets arrive ordered by
    descending match count, ties by ascending start position.
    """
    params = DiscoveryParams(n=n, r=r)
    windows = np.ascontiguousarray(sliding_window(series, params.n))
    sq_r = float(params.r) ** 2
    counts = _count_kernel(windows, params.n, sq_r, bool(use_early_abandon))

    order = np.lexsort((np.arange(counts.shape[0]), -counts))
    ranked = [int(i) for i in order if counts[i] > 0]
    survivors = separate(windows, ranked, 2.0 * params.r)

    found = []
    for row in survivors:
        hits = _match_row(windows, params.n, sq_r, row)
        members = sorted([row, *np.flatnonzero(hits).tolist()])
        dist = _pairwise_distances(windows, members)
        totals = dist.sum(axis=1)
        kept = _collapse_runs(members, params.n, totals, keep=row)
        found.append(MotifSet(kept, windows[row].copy(), None))
    return found
