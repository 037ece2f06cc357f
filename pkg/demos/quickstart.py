"""Plant a shape in noise, then watch all three searches find it.

Run: python3 demos/quickstart.py [seed]
"""

import sys

from motifset import SynthConfig, discover, generate, score_single

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 42

config = SynthConfig(
    shape_count=1,
    amplitude=30.0,
    amplitude_jitter=0.1,
    instance_range=(4, 4),
    length_range=(120, 140),
    seed=seed,
)
values, truth = generate(config)
planted = truth.all_starts()
print(f"series of {len(values)} points, planted {truth.shapes[0].kind} at {planted}")
print()

for algorithm in ("scan-mk", "cluster-mk", "set-finder"):
    sets = discover(values, algorithm, n=truth.n, r=15.0, seed=seed)
    print(f"{algorithm}: {len(sets)} motif set(s)")
    for k, s in enumerate(sets[:3]):
        print(f"  set {k}: members {s.members} (cardinality {s.cardinality})")
    if len(sets) > 3:
        print(f"  ... and {len(sets) - 3} more")
    found = [m for s in sets for m in s.members]
    report = score_single(found, truth, truth.n)
    print(
        f"  vs truth: {report.tp} hits, {report.fp} spurious, {report.fn} missed "
        f"(sensitivity {report.sensitivity:.2f})"
    )
    print()
