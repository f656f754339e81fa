"""Regenerates tests/data/summary_fixture*.csv.

The expected summary is computed here with the statistics module, independently
of the C++ summarizer.
"""
import csv
import random
import statistics
import sys
from pathlib import Path

out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
rng = random.Random(20240611)
stats = ["alignment_ratio", "mle_alignment", "opt_in_envelope", "rbw_alignment", "rbw_lower_bound"]
rows = []
for n in (6, 8):
    for gamma in ("0.10000000000000001", "0.25"):
        for trial in range(5):
            for s in stats:
                if s == "opt_in_envelope":
                    v = float(rng.random() < 0.7)
                elif s == "rbw_lower_bound":
                    v = float(rng.randint(-10, 20))
                else:
                    v = rng.uniform(-1.0, 30.0)
                rows.append(("mle-compare", n, gamma, trial, s, repr(v)))

with open(out_dir / "summary_fixture.csv", "w", newline="") as f:
    f.write("experiment,n,gamma,trial,statistic,value\n")
    for r in rows:
        f.write(",".join(str(x) for x in r) + "\n")

groups = {}
for e, n, g, _, s, v in rows:
    groups.setdefault((e, n, float(g), g, s), []).append(float(v))
with open(out_dir / "summary_fixture_expected.csv", "w", newline="") as f:
    f.write("experiment,n,gamma,statistic,count,mean,sd,success_rate\n")
    for key in sorted(groups):
        vals = groups[key]
        sd = statistics.stdev(vals) if len(vals) > 1 else 0.0
        rate = sum(v > 0 for v in vals) / len(vals)
        f.write(f"{key[0]},{key[1]},{key[3]},{key[4]},{len(vals)},{statistics.fmean(vals)!r},{sd!r},{rate!r}\n")
