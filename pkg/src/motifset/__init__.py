"""Exact discovery of motif sets in univariate time series.

A motif set is a group of at least two non-overlapping windows of
identical width whose pairwise raw Euclidean distances stay within a
radius bound.  The package provides three discovery algorithms over raw
(not z-normalized) distances, a planted-shape synthetic generator, and
an evaluation protocol for comparing algorithm output against known
ground truth.
"""

from .cluster_mk import Cluster, cluster_mk, merge
from .core import (
    DiscoveryParams,
    MotifSet,
    distance,
    distance_with_abandon,
    sliding_window,
    trivial_match,
)
from .evaluate import (
    ScoreReport,
    TTestResult,
    matching_score,
    score_single,
    welch_t_test,
)
from .experiments import (
    ALGORITHM_NAMES,
    SweepResult,
    discover,
    found_indexes,
    run_sweep,
    t_test_rows,
)
from .pair_finder import BestPair, brute_force_pair, mk_pair
from .scan_mk import condense, scan_mk
from .set_finder import match_counts, separate, set_finder
from .synth import (
    DEFAULT_AMPLITUDE,
    DEFAULT_AMPLITUDE_JITTER,
    SHAPE_KINDS,
    SINGLE_SHAPE_PROTOCOL,
    TWO_SHAPE_PROTOCOL,
    GroundTruth,
    ShapePlacement,
    ShapeSpec,
    SynthConfig,
    electricity_profile,
    generate,
    shape_values,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_NAMES",
    "BestPair",
    "Cluster",
    "DEFAULT_AMPLITUDE",
    "DEFAULT_AMPLITUDE_JITTER",
    "DiscoveryParams",
    "GroundTruth",
    "MotifSet",
    "SHAPE_KINDS",
    "SINGLE_SHAPE_PROTOCOL",
    "ScoreReport",
    "ShapePlacement",
    "ShapeSpec",
    "SweepResult",
    "SynthConfig",
    "TTestResult",
    "TWO_SHAPE_PROTOCOL",
    "brute_force_pair",
    "cluster_mk",
    "condense",
    "discover",
    "distance",
    "distance_with_abandon",
    "electricity_profile",
    "found_indexes",
    "generate",
    "match_counts",
    "matching_score",
    "merge",
    "mk_pair",
    "run_sweep",
    "scan_mk",
    "score_single",
    "separate",
    "set_finder",
    "shape_values",
    "sliding_window",
    "t_test_rows",
    "trivial_match",
    "welch_t_test",
]
