"""Motif-set discovery by agglomerative centroid clustering.

Every window starts as its own cluster. The closest pair of mergeable
clusters is merged while its centroid distance stays within the radius;
clusters whose original windows overlap anywhere across the pair may never
merge. Clusters that absorbed at least one merge are reported as motif sets.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import DiscoveryParams, MotifSet, sliding_window, _sq_dist

__all__ = ["Cluster", "merge", "cluster_mk"]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cluster:
    """A cluster of windows: running centroid, weight, original starts."""

    centroid: np.ndarray
    weight: int
    members: tuple


def merge(a, b):
    """Combine two clusters, averaging centroids weighted by cluster size."""
    if a.centroid.shape != b.centroid.shape:
        raise ValueError("cluster centroids must have equal length")
    weight = a.weight + b.weight
    centroid = (a.weight * a.centroid + b.weight * b.centroid) / weight
    return Cluster(centroid, weight, tuple(sorted(a.members + b.members)))


@njit(cache=True)
def _nn_rescan(i, live_end, alive, elig, dmat, nn_dist, nn_idx):
    best = np.inf
    arg = np.int64(-1)
    for j in range(live_end):
        if j != i and alive[j] and elig[i, j] and dmat[i, j] < best:
            best = dmat[i, j]
            arg = j
    nn_dist[i] = best
    nn_idx[i] = arg


@njit(cache=True)
def _cluster_engine(windows, n, r):
    count, width = windows.shape
    slots = 2 * count - 1
    cent = np.zeros((slots, width))
    cent[:count, :] = windows
    weight = np.zeros(slots, np.int64)
    weight[:count] = 1
    alive = np.zeros(slots, np.bool_)
    alive[:count] = True
    left = np.full(slots, -1, np.int64)
    right = np.full(slots, -1, np.int64)
    final_merge = np.full(slots, np.nan)

    dmat = np.full((slots, slots), np.inf)
    elig = np.zeros((slots, slots), np.bool_)
    for i in range(count):
        for j in range(i + 1, count):
            ok = (j - i) >= n
            elig[i, j] = ok
            elig[j, i] = ok
            d = math.sqrt(_sq_dist(windows[i], windows[j]))
            dmat[i, j] = d
            dmat[j, i] = d

    nn_dist = np.full(slots, np.inf)
    nn_idx = np.full(slots, -1, np.int64)
    for i in range(count):
        _nn_rescan(i, count, alive, elig, dmat, nn_dist, nn_idx)

    merge_log = np.empty(max(count - 1, 1))
    merges = 0
    next_slot = count
    while True:
        gi = np.int64(-1)
        gd = np.inf
        for i in range(next_slot):
            if alive[i] and nn_dist[i] < gd:
                gd = nn_dist[i]
                gi = i
        if gi < 0 or gd > r:
            break
        i = gi
        j = nn_idx[i]
        c = next_slot
        next_slot += 1

        wsum = weight[i] + weight[j]
        for k in range(width):
            cent[c, k] = (weight[i] * cent[i, k] + weight[j] * cent[j, k]) / wsum
        weight[c] = wsum
        left[c] = i
        right[c] = j
        final_merge[c] = gd
        merge_log[merges] = gd
        merges += 1
        alive[i] = False
        alive[j] = False

        for x in range(c):
            if not alive[x]:
                continue
            d = math.sqrt(_sq_dist(cent[c], cent[x]))
            dmat[c, x] = d
            dmat[x, c] = d
            ok = elig[i, x] and elig[j, x]
            elig[c, x] = ok
            elig[x, c] = ok
        alive[c] = True
        _nn_rescan(c, next_slot, alive, elig, dmat, nn_dist, nn_idx)

        for x in range(c):
            if not alive[x]:
                continue
            if nn_idx[x] == i or nn_idx[x] == j:
                # Old nearest neighbour vanished into the merge.
                if elig[x, c] and dmat[x, c] <= nn_dist[x]:
                    nn_dist[x] = dmat[x, c]
                    nn_idx[x] = c
                else:
                    _nn_rescan(x, next_slot, alive, elig, dmat, nn_dist, nn_idx)
            elif elig[x, c] and dmat[x, c] < nn_dist[x]:
                nn_dist[x] = dmat[x, c]
                nn_idx[x] = c

    return cent, weight, alive, left, right, final_merge, merge_log[:merges]


def _leaf_members(slot, left, right, leaf_count):
    out = []
    stack = [slot]
    while stack:
        s = stack.pop()
        if s < leaf_count:
            out.append(int(s))
        else:
            stack.append(int(left[s]))
            stack.append(int(right[s]))
    out.sort()
    return out


def cluster_mk(series, n, r, q=8, seed=0):
    """Discover motif sets by centroid clustering of all windows.

    Returns clusters of two or more windows as motif sets, sorted by
    descending cardinality with ties broken by the ascending distance of the
    cluster's final merge. The search is exhaustive over cluster pairs, so q
    and seed are accepted only for interface parity and do not affect it.
    """
    params = DiscoveryParams(n=n, r=r, q=q)
    windows = np.ascontiguousarray(sliding_window(series, params.n))
    count = windows.shape[0]
    if count < 2:
        return []

    cent, weight, alive, left, right, final_merge, merge_log = _cluster_engine(
        windows, params.n, float(params.r)
    )

    live = np.flatnonzero(alive)
    total = int(weight[live].sum())
    if total != count:
        raise RuntimeError(f"cluster weights drifted: {total} != {count}")
    if merge_log.size:
        assert float(merge_log.max()) <= params.r
        log.debug(
            "cluster_mk: %d merges, max merge distance %.6g (r=%g)",
            merge_log.size,
            float(merge_log.max()),
            params.r,
        )

    found = []
    for slot in live:
        if weight[slot] < 2:
            continue
        members = _leaf_members(int(slot), left, right, count)
        found.append(
            MotifSet(members, cent[slot].copy(), float(final_merge[slot]))
        )
    found.sort(key=lambda m: (-len(m.members), m.pair_distance, m.members[0]))
    return found
