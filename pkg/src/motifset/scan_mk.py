"""Motif-set discovery by repeated best-pair scanning.

Each round finds the closest non-overlapping window pair. If the pair lies
within twice the radius, the two windows seed a new motif set; every
remaining candidate within 2r of both seeds joins it. Trivial matches of
seeds and admitted members are removed from the candidate pool as they are
consumed, and the finished set is condensed before the next round.
"""

import numpy as np

from .core import DiscoveryParams, MotifSet, sliding_window
from .pair_finder import mk_pair

__all__ = ["condense", "scan_mk"]


def _pairwise_distances(windows, members):
    sub = windows[np.asarray(members, dtype=np.intp)]
    diff = sub[:, None, :] - sub[None, :, :]
    return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))


def _overlap_runs(members, n):
    """Group sorted start positions into maximal chains of overlapping windows."""
    runs = [[members[0]]]
    for s in members[1:]:
        if s - runs[-1][-1] < n:
            runs[-1].append(s)
        else:
            runs.append([s])
    return runs


def _collapse_runs(members, n, totals, keep=None):
    # One survivor per overlap run: the member with the smallest total
    # distance to the whole set (ties to the earliest start). A member listed
    # in `keep` always survives its run.
    total_of = dict(zip(members, totals))
    kept = []
    for run in _overlap_runs(members, n):
        if keep is not None and keep in run:
            kept.append(keep)
            continue
        kept.append(min(run, key=lambda s: (total_of[s], s)))
    return kept


def condense(windows, members, r):
    """Reduce a raw motif set to non-overlapping, mutually close members.

    First collapses each maximal run of overlapping members to the single
    member with the smallest total distance to all members. Then repeatedly
    drops the member clashing (distance > 2r) with the most others until no
    clash remains; clash-count ties drop the member with the larger total
    distance. Returns (kept_members, medoid_start).
    """
    members = sorted(int(s) for s in members)
    if len(set(members)) != len(members):
        raise ValueError("motif set members must be distinct")
    n = windows.shape[1]
    dist = _pairwise_distances(windows, members)
    totals = dist.sum(axis=1)

    kept = _collapse_runs(members, n, totals)

    pos = {s: i for i, s in enumerate(members)}
    rows = np.array([pos[s] for s in kept], dtype=np.intp)
    sub = dist[np.ix_(rows, rows)]
    cutoff = 2.0 * r
    while len(kept) > 1:
        clashes = (sub > cutoff).sum(axis=1)
        worst = clashes.max()
        if worst == 0:
            break
        sub_totals = sub.sum(axis=1)
        # Among the most clash-heavy members, drop the one with the largest
        # total distance; break remaining ties toward the later start.
        drop = max(
            (i for i in range(len(kept)) if clashes[i] == worst),
            key=lambda i: (sub_totals[i], kept[i]),
        )
        kept.pop(drop)
        sub = np.delete(np.delete(sub, drop, axis=0), drop, axis=1)

    final_totals = sub.sum(axis=1)
    medoid = kept[min(range(len(kept)), key=lambda i: (final_totals[i], kept[i]))]
    return kept, medoid


def _scan(series, n, r, q, seed):
    """Run the scan, returning sets in discovery order."""
    params = DiscoveryParams(n=n, r=r, q=q)
    windows = np.ascontiguousarray(sliding_window(series, params.n))
    count = windows.shape[0]
    alive = np.ones(count, dtype=bool)
    limit = 2.0 * params.r
    rng = np.random.default_rng(seed)
    found = []

    def consume(start):
        alive[max(0, start - params.n + 1) : start + params.n] = False

    while True:
        candidates = np.flatnonzero(alive)
        if candidates.size < 2:
            break
        pair = mk_pair(
            windows[candidates],
            params.q,
            n=params.n,
            starts=candidates,
            seed=int(rng.integers(2**63)),
        )
        if pair is None or pair.dist > limit:
            break
        members = [pair.i, pair.j]
        consume(pair.i)
        consume(pair.j)

        snapshot = np.flatnonzero(alive)
        if snapshot.size:
            d1 = np.sqrt(((windows[snapshot] - windows[pair.i]) ** 2).sum(axis=1))
            d2 = np.sqrt(((windows[snapshot] - windows[pair.j]) ** 2).sum(axis=1))
            for row in np.flatnonzero((d1 <= limit) & (d2 <= limit)):
                candidate = int(snapshot[row])
                if not alive[candidate]:
                    continue  # already consumed by an earlier admission
                members.append(candidate)
                consume(candidate)

        kept, medoid = condense(windows, members, params.r)
        if len(kept) >= 2:
            found.append(MotifSet(kept, windows[medoid].copy(), pair.dist))
    return found


def scan_mk(series, n, r, q=8, seed=0):
    """Discover motif sets by repeated best-pair scanning.

    Returns motif sets sorted by descending cardinality, ties broken by the
    ascending distance of each set's founding pair. The seed only steers the
    pruned pair search internals, never the result.
    """
    found = _scan(series, n, r, q, seed)
    found.sort(key=lambda m: (-len(m.members), m.pair_distance, m.members[0]))
    return found
