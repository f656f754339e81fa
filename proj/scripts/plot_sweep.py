#!/usr/bin/env python3
"""Plot a tourney-lab summary CSV.

Usage:
    tourney-lab summarize --in recover.csv --out recover_summary.csv
    python3 scripts/plot_sweep.py recover_summary.csv kendall_error --normalize pairs -o recover.png

One line per n, with gamma on the x axis and the group mean (or success rate)
on the y axis. Requires matplotlib.
"""
import argparse
import csv
from collections import defaultdict


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("summary", help="summary CSV written by 'tourney-lab summarize'")
    parser.add_argument("statistic", help="statistic column to plot, e.g. kendall_error or wedge_verdict")
    parser.add_argument("--field", choices=["mean", "success_rate"], default="mean")
    parser.add_argument("--normalize", choices=["none", "pairs", "sqrt_n"], default="none",
                        help="divide by C(n,2) or sqrt(n)")
    parser.add_argument("--logx", action="store_true")
    parser.add_argument("-o", "--output", default=None, help="image file; shows a window if omitted")
    args = parser.parse_args()

    import matplotlib
    if args.output:
        matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    series = defaultdict(list)
    with open(args.summary, newline="") as f:
        for row in csv.DictReader(f):
            if row["statistic"] != args.statistic:
                continue
            n = int(row["n"])
            y = float(row[args.field])
            if args.normalize == "pairs":
                y /= n * (n - 1) / 2
            elif args.normalize == "sqrt_n":
                y /= n ** 0.5
            series[n].append((float(row["gamma"]), y))
    if not series:
        parser.error(f"no rows for statistic {args.statistic!r}")

    fig, ax = plt.subplots()
    for n in sorted(series):
        pts = sorted(series[n])
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=f"n = {n}")
    ax.set_xlabel("gamma")
    ax.set_ylabel(f"{args.statistic} ({args.field})")
    if args.logx:
        ax.set_xscale("log")
    ax.legend()
    fig.tight_layout()
    if args.output:
        fig.savefig(args.output, dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main()
