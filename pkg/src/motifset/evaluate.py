"""Scoring of discovery output against planted ground truth.

Two views: index-level precision and sensitivity for single-shape data, and
a set-level matching score for multi-shape data where lower is better and
zero means the planted sets were recovered exactly.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import stats
from scipy.optimize import linear_sum_assignment

__all__ = [
    "ScoreReport",
    "TTestResult",
    "score_single",
    "matching_score",
    "welch_t_test",
]


@dataclass(frozen=True)
class ScoreReport:
    """Index-level confusion counts and the derived rates.

    A rate whose denominator is zero is reported as 0.0 with its defined
    flag cleared.
    """

    tp: int
    fp: int
    fn: int
    precision: float
    sensitivity: float
    precision_defined: bool
    sensitivity_defined: bool


def _truth_starts(truth):
    if hasattr(truth, "all_starts"):
        return list(truth.all_starts())
    return sorted(int(s) for s in truth)


def score_single(found, truth, n=None):
    """Score found start positions against planted ones.

    A found index within floor(n/2) of a planted start is a true positive;
    assignment is one-to-one, closest pairs first, so a second index near an
    already-claimed start counts as a false positive.
    """
    if n is None:
        if not hasattr(truth, "n"):
            raise ValueError("n is required when truth carries no window width")
        n = truth.n
    if int(n) != n or n < 1:
        raise ValueError(f"window width n must be an integer >= 1, got {n}")
    found = sorted(int(f) for f in set(found))
    starts = _truth_starts(truth)
    half = int(n) // 2

    candidates = sorted(
        (abs(f - t), f, t)
        for f in found
        for t in starts
        if abs(f - t) <= half
    )
    used_found = set()
    used_truth = set()
    tp = 0
    for _, f, t in candidates:
        if f in used_found or t in used_truth:
            continue
        used_found.add(f)
        used_truth.add(t)
        tp += 1
    fp = len(found) - tp
    fn = len(starts) - tp

    precision_defined = tp + fp > 0
    sensitivity_defined = tp + fn > 0
    return ScoreReport(
        tp=tp,
        fp=fp,
        fn=fn,
        precision=tp / (tp + fp) if precision_defined else 0.0,
        sensitivity=tp / (tp + fn) if sensitivity_defined else 0.0,
        precision_defined=precision_defined,
        sensitivity_defined=sensitivity_defined,
    )


def _index_match_cost(found, truth, n):
    # Cheapest one-to-one pairing of the two index lists. Pairing two indexes
    # costs min(|i - j|, n) and leaving one out costs n, so a maximum
    # matching is never worse and the assignment solver settles the rest.
    if not found or not truth:
        return n * (len(found) + len(truth))
    cost = np.empty((len(found), len(truth)), dtype=np.int64)
    for a, f in enumerate(found):
        for b, t in enumerate(truth):
            cost[a, b] = min(abs(f - t), n)
    rows, cols = linear_sum_assignment(cost)
    paired = int(cost[rows, cols].sum())
    unpaired = len(found) + len(truth) - 2 * len(rows)
    return paired + n * unpaired


def matching_score(found_sets, truth_sets, n):
    """Total index displacement between found and planted motif sets.

    Each found set is assigned to at most one planted set and vice versa;
    within an assigned pair, indexes pair up one-to-one at cost min(|i-j|, n)
    each, and every index left unpaired anywhere costs n. The reported score
    is the minimum over all such assignments, so 0 means exact recovery and
    each spurious or missed index costs up to n.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"window width n must be an integer >= 1, got {n}")
    n = int(n)
    found_sets = [sorted(int(i) for i in s) for s in found_sets]
    truth_sets = [sorted(int(i) for i in s) for s in truth_sets]
    for side in (found_sets, truth_sets):
        for s in side:
            if len(set(s)) != len(s):
                raise ValueError("indexes within a set must be distinct")

    base = n * (sum(map(len, found_sets)) + sum(map(len, truth_sets)))
    if not found_sets or not truth_sets:
        return float(base)

    # Assigning found set a to truth set b saves the difference between
    # scoring both unassigned and scoring them against each other. Savings
    # are non-negative, so the best set-level assignment is a maximum-weight
    # matching, solved exactly.
    savings = np.empty((len(found_sets), len(truth_sets)), dtype=np.int64)
    for a, fs in enumerate(found_sets):
        for b, ts in enumerate(truth_sets):
            savings[a, b] = n * (len(fs) + len(ts)) - _index_match_cost(fs, ts, n)
    rows, cols = linear_sum_assignment(-savings)
    return float(base - int(savings[rows, cols].sum()))


@dataclass(frozen=True)
class TTestResult:
    """Welch two-sample t-test outcome at the chosen significance level."""

    t: float
    p: float
    significant: bool


def welch_t_test(a, b, alpha=0.05):
    """Two-sided Welch t-test on two independent samples.

    Degenerate samples (both variances zero) give p=1 for equal means and
    p=0 otherwise rather than a NaN.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 1 or b.ndim != 1 or a.size < 2 or b.size < 2:
        raise ValueError("each sample must be 1-d with at least two values")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")

    if a.var(ddof=1) == 0.0 and b.var(ddof=1) == 0.0:
        if a.mean() == b.mean():
            return TTestResult(0.0, 1.0, False)
        t = math.inf if a.mean() > b.mean() else -math.inf
        return TTestResult(t, 0.0, True)

    with warnings.catch_warnings():
        # One constant sample makes scipy warn about precision loss while
        # still returning the infinite t we want.
        warnings.filterwarnings("ignore", message="Precision loss occurred")
        t, p = stats.ttest_ind(a, b, equal_var=False)
    return TTestResult(float(t), float(p), bool(p < alpha))
