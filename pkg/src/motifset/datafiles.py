"""File formats: series text files, ground-truth sidecars, discovery reports.

Series files hold one value per line (a single comma-separated row is also
accepted on read). Ground truth and reports are JSON. Start positions are
1-based in every serialized file and converted back to the 0-based in-memory
convention on load.
"""

import json
from pathlib import Path

import numpy as np

from .core import as_time_series
from .synth import GroundTruth, ShapePlacement

__all__ = [
    "read_series",
    "write_series",
    "read_ground_truth",
    "write_ground_truth",
    "truth_path_for",
    "report_payload",
    "write_report",
]


def write_series(path, values):
    """Write a series as plain text, one value per line."""
    arr = as_time_series(values)
    Path(path).write_text("\n".join(repr(float(v)) for v in arr) + "\n")


def read_series(path):
    """Read a series file: one value per line, or one comma-separated row."""
    text = Path(path).read_text()
    if "," in text:
        parts = [p for p in text.replace("\n", ",").split(",") if p.strip()]
    else:
        parts = [line for line in text.splitlines() if line.strip()]
    try:
        values = [float(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"{path}: not a numeric series file ({exc})") from None
    return as_time_series(values)


def truth_path_for(series_path):
    """Sidecar path of a series file: same stem with a .truth.json suffix."""
    p = Path(series_path)
    return p.with_name(p.stem + ".truth.json")


def write_ground_truth(path, truth):
    """Write planted positions as JSON with 1-based starts."""
    payload = {
        "n": int(truth.n),
        "shapes": [
            {"kind": shape.kind, "starts": [int(s) + 1 for s in shape.starts]}
            for shape in truth.shapes
        ],
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def read_ground_truth(path):
    """Load a ground-truth sidecar back into 0-based form."""
    payload = json.loads(Path(path).read_text())
    try:
        n = int(payload["n"])
        shapes = tuple(
            ShapePlacement(str(s["kind"]), tuple(int(v) - 1 for v in s["starts"]))
            for s in payload["shapes"]
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"{path}: malformed ground-truth file ({exc})") from None
    if any(start < 0 for shape in shapes for start in shape.starts):
        raise ValueError(f"{path}: serialized starts must be 1-based and positive")
    return GroundTruth(n, shapes)


def report_payload(algorithm, params, motif_sets, elapsed_ms):
    """Discovery report as a JSON-ready dict; member starts become 1-based."""
    return {
        "algorithm": str(algorithm),
        "params": dict(params),
        "sets": [
            {
                "members": [int(v) + 1 for v in m.members],
                "representative": [float(v) for v in np.asarray(m.representative)],
                "cardinality": len(m.members),
            }
            for m in motif_sets
        ],
        "elapsed_ms": float(elapsed_ms),
    }


def write_report(path, payload):
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")
