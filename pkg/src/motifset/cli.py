"""Command-line front end: generate datasets, discover motif sets, run sweeps.

Exit codes: 0 on success, 1 on I/O or runtime failure, 2 on usage errors.
"""

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from .datafiles import (
    read_ground_truth,
    read_series,
    report_payload,
    truth_path_for,
    write_ground_truth,
    write_report,
    write_series,
)
from .experiments import ALGORITHM_NAMES, discover, run_sweep, t_test_rows
from .synth import DEFAULT_AMPLITUDE, DEFAULT_AMPLITUDE_JITTER, SynthConfig, generate

SWEEP_HEADER = ("algorithm", "r", "metric", "mean", "stderr", "n_datasets")
TTEST_HEADER = ("r", "metric", "algorithm_a", "algorithm_b", "t", "p", "significant")


def _int_range(text):
    """Parse '3..5' (or a bare '4') into an inclusive integer pair."""
    parts = text.split("..") if ".." in text else [text, text]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from None
    return lo, hi


def _r_grid(text):
    """Parse a radius grid: '5..18' (unit steps) or '5,7.5,10'."""
    if ".." in text:
        lo, hi = _int_range(text)
        return [float(v) for v in range(lo, hi + 1)]
    try:
        values = [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad radius grid {text!r}") from None
    return values


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="motifset",
        description="Exact motif-set discovery in univariate time series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a synthetic dataset and its ground truth")
    gen.add_argument("--out", default=None,
                     help="output path prefix (default: dataset id in the working directory)")
    gen.add_argument("--shapes", type=int, default=1, choices=(1, 2),
                     help="number of distinct planted shapes")
    gen.add_argument("--instances", type=_int_range, default=(3, 5), metavar="LO..HI",
                     help="instances planted per shape (default 3..5)")
    gen.add_argument("--n", type=int, default=29, help="planted shape length (default 29)")
    gen.add_argument("--amplitude", type=float, default=DEFAULT_AMPLITUDE)
    gen.add_argument("--jitter", type=float, default=DEFAULT_AMPLITUDE_JITTER,
                     help="relative amplitude spread between instances")
    gen.add_argument("--jitter-mode", choices=("uniform", "levels"), default="uniform",
                     help="instance scaling: independent draws or distinct evenly spaced levels")
    gen.add_argument("--length-range", type=_int_range, default=(500, 1000), metavar="LO..HI")
    gen.add_argument("--seed", type=int, default=0)

    dis = sub.add_parser("discover", help="run one algorithm over a series file")
    dis.add_argument("dataset", help="series file: one value per line or one csv row")
    dis.add_argument("--algorithm", required=True, choices=ALGORITHM_NAMES)
    dis.add_argument("--n", type=int, required=True, help="window width")
    dis.add_argument("--r", type=float, required=True, help="match radius")
    dis.add_argument("--q", type=int, default=8, help="reference windows for pair search")
    dis.add_argument("--seed", type=int, default=0)
    dis.add_argument("--out", help="write the JSON report here instead of stdout")

    sw = sub.add_parser("sweep", help="score algorithms over a dataset collection")
    sw.add_argument("--datasets", required=True,
                    help="directory of series files with .truth.json sidecars")
    sw.add_argument("--algorithms", default=",".join(ALGORITHM_NAMES),
                    help="comma-separated algorithm names (default: all)")
    sw.add_argument("--r-grid", type=_r_grid, required=True, metavar="LO..HI|A,B,C")
    sw.add_argument("--q", type=int, default=8)
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--max-datasets", type=int, default=None)
    sw.add_argument("--out", required=True, help="metrics CSV path")
    sw.add_argument("--ttest-out", help="pairwise t-test CSV path")
    sw.add_argument("--alpha", type=float, default=0.05)
    return parser


def _cmd_generate(args, parser):
    if args.n < 2:
        parser.error(f"--n must be >= 2, got {args.n}")
    if args.amplitude <= 0:
        parser.error(f"--amplitude must be positive, got {args.amplitude}")
    if not 0.0 <= args.jitter < 1.0:
        parser.error(f"--jitter must lie in [0, 1), got {args.jitter}")
    lo, hi = args.instances
    if lo < 1 or hi < lo:
        parser.error(f"bad --instances range {lo}..{hi}")
    mlo, mhi = args.length_range
    if mlo < args.n or mhi < mlo:
        parser.error(f"bad --length-range {mlo}..{mhi}")

    try:
        config = SynthConfig(
            shape_count=args.shapes,
            shape_length=args.n,
            amplitude=args.amplitude,
            amplitude_jitter=args.jitter,
            jitter_mode=args.jitter_mode,
            instance_range=(lo, hi),
            length_range=(mlo, mhi),
            seed=args.seed,
        )
        values, truth = generate(config)
    except ValueError as exc:
        parser.error(str(exc))

    out = Path(args.out) if args.out else Path(f"synthetic-{args.shapes}x-{args.seed:04d}")
    series_path = out if out.suffix == ".txt" else out.with_suffix(".txt")
    series_path.parent.mkdir(parents=True, exist_ok=True)
    write_series(series_path, values)
    write_ground_truth(truth_path_for(series_path), truth)
    print(series_path.stem)
    print(f"series: {series_path}")
    print(f"truth:  {truth_path_for(series_path)}")
    return 0


def _cmd_discover(args, parser):
    if args.n < 2:
        parser.error(f"--n must be >= 2, got {args.n}")
    if args.r <= 0:
        parser.error(f"--r must be positive, got {args.r}")
    if args.q < 1:
        parser.error(f"--q must be >= 1, got {args.q}")

    series = read_series(args.dataset)
    if args.n > series.shape[0]:
        parser.error(f"--n {args.n} exceeds series length {series.shape[0]}")

    begin = time.perf_counter()
    sets = discover(series, args.algorithm, args.n, args.r, q=args.q, seed=args.seed)
    elapsed_ms = (time.perf_counter() - begin) * 1000.0

    payload = report_payload(
        args.algorithm,
        {"n": args.n, "r": args.r, "q": args.q, "seed": args.seed},
        sets,
        elapsed_ms,
    )
    if args.out:
        write_report(args.out, payload)
        print(args.out)
    else:
        json.dump(payload, sys.stdout, indent=2)
        print()
    return 0


def _load_collection(root, parser, limit):
    root = Path(root)
    if not root.is_dir():
        parser.error(f"--datasets must name a directory, got {root}")
    datasets = []
    for series_path in sorted(root.glob("*.txt")):
        sidecar = truth_path_for(series_path)
        if not sidecar.exists():
            continue
        datasets.append((read_series(series_path), read_ground_truth(sidecar)))
        if limit is not None and len(datasets) >= limit:
            break
    if not datasets:
        parser.error(f"no series files with ground truth found under {root}")
    return datasets


def _cmd_sweep(args, parser):
    algorithms = [a for a in args.algorithms.split(",") if a]
    for name in algorithms:
        if name not in ALGORITHM_NAMES:
            parser.error(f"unknown algorithm {name!r}, expected one of {ALGORITHM_NAMES}")
    if not algorithms:
        parser.error("--algorithms lists no algorithm")
    if not args.r_grid:
        parser.error("--r-grid is empty")
    if any(r <= 0 for r in args.r_grid):
        parser.error("radii must be positive")

    datasets = _load_collection(args.datasets, parser, args.max_datasets)
    result = run_sweep(datasets, algorithms, args.r_grid, q=args.q, seed=args.seed)

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_HEADER)
        for algorithm, r, metric, mean, stderr, count in result.rows:
            writer.writerow([algorithm, repr(r), metric, repr(mean), repr(stderr), count])
    print(out)

    if args.ttest_out:
        tpath = Path(args.ttest_out)
        tpath.parent.mkdir(parents=True, exist_ok=True)
        with tpath.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(TTEST_HEADER)
            for r, metric, alg_a, alg_b, t, p, significant in t_test_rows(result, args.alpha):
                writer.writerow([repr(r), metric, alg_a, alg_b, repr(t), repr(p), significant])
        print(tpath)
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "generate": _cmd_generate,
        "discover": _cmd_discover,
        "sweep": _cmd_sweep,
    }
    try:
        return handlers[args.command](args, parser)
    except OSError as exc:
        print(f"motifset: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"motifset: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
