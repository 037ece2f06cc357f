"""Benchmark harness: run algorithms over dataset collections and tabulate.

Ties the pieces together for the sweep workflows: dispatch by algorithm
name, aggregate index-level or set-level scores over many datasets, per-cell
means with standard errors, and pairwise significance tests between
algorithms.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .cluster_mk import cluster_mk
from .evaluate import matching_score, score_single, welch_t_test
from .scan_mk import scan_mk
from .set_finder import set_finder

__all__ = [
    "ALGORITHM_NAMES",
    "discover",
    "found_indexes",
    "SweepResult",
    "run_sweep",
    "t_test_rows",
]

_DISPATCH = {
    "scan-mk": lambda series, n, r, q, seed: scan_mk(series, n, r, q=q, seed=seed),
    "cluster-mk": lambda series, n, r, q, seed: cluster_mk(series, n, r, q=q, seed=seed),
    "set-finder": lambda series, n, r, q, seed: set_finder(series, n, r),
}

ALGORITHM_NAMES = tuple(_DISPATCH)


def discover(series, algorithm, n, r, q=8, seed=0):
    """Run one discovery algorithm by name; returns its motif sets."""
    try:
        runner = _DISPATCH[algorithm]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {algorithm!r}, expected one of {ALGORITHM_NAMES}"
        ) from None
    return runner(series, n, r, q, seed)


def found_indexes(motif_sets):
    """All member start positions across the given sets, sorted, deduplicated."""
    return sorted({int(i) for m in motif_sets for i in m.members})


def _dataset_metrics(motif_sets, truth, mode):
    if mode == "single":
        report = score_single(found_indexes(motif_sets), truth)
        return {"sensitivity": report.sensitivity, "precision": report.precision}
    truth_sets = [list(shape.starts) for shape in truth.shapes]
    found_sets = [list(m.members) for m in motif_sets]
    return {"matching_score": matching_score(found_sets, truth_sets, truth.n)}


@dataclass
class SweepResult:
    """Aggregated sweep table plus the raw per-dataset samples behind it.

    rows hold (algorithm, r, metric, mean, stderr, n_datasets); samples maps
    (algorithm, r, metric) to the per-dataset values that entered the row.
    """

    mode: str
    rows: list = field(default_factory=list)
    samples: dict = field(default_factory=dict)


def run_sweep(datasets, algorithms, r_values, q=8, seed=0):
    """Score every algorithm at every radius across the datasets.

    datasets is a sequence of (series, ground_truth) pairs; single-shape
    collections report sensitivity and precision, multi-shape ones the
    matching score. A dataset run that raises drops only that sample; a cell
    with no surviving samples is reported with NaNs and n_datasets=0.
    """
    datasets = list(datasets)
    algorithms = list(algorithms)
    r_values = [float(r) for r in r_values]
    if not datasets or not algorithms or not r_values:
        raise ValueError("sweep needs at least one dataset, algorithm, and radius")
    for name in algorithms:
        if name not in _DISPATCH:
            raise ValueError(f"unknown algorithm {name!r}, expected one of {ALGORITHM_NAMES}")

    class_counts = {len(truth.shapes) for _, truth in datasets}
    if len(class_counts) != 1:
        raise ValueError("all datasets in a sweep must plant the same number of shapes")
    mode = "single" if class_counts.pop() == 1 else "two"
    metrics = ["sensitivity", "precision"] if mode == "single" else ["matching_score"]

    result = SweepResult(mode=mode)
    for algorithm in algorithms:
        for r in r_values:
            values = {metric: [] for metric in metrics}
            for series, truth in datasets:
                try:
                    sets = discover(series, algorithm, truth.n, r, q=q, seed=seed)
                    scored = _dataset_metrics(sets, truth, mode)
                except Exception:
                    continue
                for metric in metrics:
                    values[metric].append(scored[metric])
            for metric in metrics:
                sample = np.asarray(values[metric], dtype=np.float64)
                result.samples[(algorithm, r, metric)] = sample
                if sample.size == 0:
                    row = (algorithm, r, metric, math.nan, math.nan, 0)
                elif sample.size == 1:
                    row = (algorithm, r, metric, float(sample[0]), math.nan, 1)
                else:
                    stderr = float(sample.std(ddof=1) / math.sqrt(sample.size))
                    row = (algorithm, r, metric, float(sample.mean()), stderr, int(sample.size))
                result.rows.append(row)
    return result


def t_test_rows(result, alpha=0.05):
    """Pairwise Welch tests between algorithms for every (r, metric) cell.

    Emits (r, metric, algorithm_a, algorithm_b, t, p, significant) per
    comparable pair; cells with fewer than two samples are skipped, so a
    one-dataset sweep yields an empty table.
    """
    algorithms = []
    r_values = []
    metrics = []
    for algorithm, r, metric in result.samples:
        if algorithm not in algorithms:
            algorithms.append(algorithm)
        if r not in r_values:
            r_values.append(r)
        if metric not in metrics:
            metrics.append(metric)

    rows = []
    for r in r_values:
        for metric in metrics:
            for i, alg_a in enumerate(algorithms):
                for alg_b in algorithms[i + 1 :]:
                    a = result.samples.get((alg_a, r, metric))
                    b = result.samples.get((alg_b, r, metric))
                    if a is None or b is None or a.size < 2 or b.size < 2:
                        continue
                    test = welch_t_test(a, b, alpha=alpha)
                    rows.append((r, metric, alg_a, alg_b, test.t, test.p, test.significant))
    return rows
