"""Tightness statistics for every bound over the exhaustive corpus.

For each bound id: how often it applies, how often it is tight (gap 0), how
often it is the best applicable bound, and gap quantiles in log2 units.

Usage:
    python scripts/tightness_table.py [--nmax 7] [--corollary-mode both]
"""

import argparse
import statistics
from collections import defaultdict

from autbounds.bounds import ReportOptions, compose_report
from autbounds.corpus import connected_graphs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=7)
    ap.add_argument("--corollary-mode", choices=("corrected", "verbatim", "both"),
                    default="both")
    args = ap.parse_args()

    opts = ReportOptions(corollary_mode=args.corollary_mode)
    applicable = defaultdict(int)
    tight = defaultdict(int)
    best = defaultdict(int)
    gaps = defaultdict(list)
    total = 0

    for n in range(1, args.nmax + 1):
        for g in connected_graphs(n):
            rep = compose_report(g, opts)
            total += 1
            live = {bid: gap for bid, gap in rep.gaps.items()}
            if live:
                best_gap = min(live.values())
                for bid, gap in live.items():
                    applicable[bid] += 1
                    gaps[bid].append(gap)
                    if abs(gap) < 1e-9:
                        tight[bid] += 1
                    if abs(gap - best_gap) < 1e-9:
                        best[bid] += 1
        print(f"n={n} done ({total} graphs so far)")

    ids = sorted(gaps, key=lambda b: statistics.median(gaps[b]))
    print(f"\n{'bound':<22} {'applies':>8} {'tight':>7} {'best':>7} "
          f"{'median gap':>11} {'max gap':>9}")
    print("-" * 70)
    for bid in ids:
        med = statistics.median(gaps[bid])
        print(f"{bid:<22} {applicable[bid]:>8} {tight[bid]:>7} {best[bid]:>7} "
              f"{med:>11.3f} {max(gaps[bid]):>9.3f}")
    print(f"\n{total} connected graphs analysed (gaps in log2 units).")


if __name__ == "__main__":
    main()
