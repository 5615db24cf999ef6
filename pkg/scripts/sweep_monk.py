#!/usr/bin/env python3
"""Tabulate run lengths of the Monk bijection over S_n.

For each n prints the number of (pi, alpha) cases, domain diagrams, the
largest number of primitive steps seen against the n^2 bound, and a
histogram of step counts.  Optionally writes per-run rows to CSV.
"""

import argparse
import collections
import csv
import time
from dataclasses import dataclass

from bpdmonk.grid import enumerate_bpds
from bpdmonk.monk import phi_forward
from bpdmonk.perm import all_perms


@dataclass
class SweepConfig:
    n_max: int = 5
    csv_path: str | None = None


def sweep(n):
    for pi in all_perms(n):
        for alpha in range(1, n):
            t = pi.monk_targets(alpha)
            if not t.precondition:
                continue
            domain = [(None, d) for d in enumerate_bpds(pi)]
            domain += [(k, d) for k in t.ks for d in enumerate_bpds(pi.apply_t(k, alpha))]
            for k, d in domain:
                trace = []
                e = phi_forward(pi, alpha, d, trace)
                ops = collections.Counter(s.op for s in trace if s.primitive)
                yield pi, alpha, k, e, ops


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    ap.add_argument("--csv", dest="csv_path")
    cfg = SweepConfig(**vars(ap.parse_args()))

    writer = None
    if cfg.csv_path:
        fh = open(cfg.csv_path, "w", newline="")
        writer = csv.writer(fh)
        writer.writerow(["n", "pi", "alpha", "k", "image", "droops", "swaps"])
    for n in range(2, cfg.n_max + 1):
        start = time.perf_counter()
        hist = collections.Counter()
        cases = set()
        for pi, alpha, k, e, ops in sweep(n):
            cases.add((pi, alpha))
            steps = ops["droop"] + ops["swap"]
            hist[steps] += 1
            if writer:
                writer.writerow([n, str(pi), alpha, k or "", str(e.perm), ops["droop"], ops["swap"]])
        runs = sum(hist.values())
        print(f"n={n} cases={len(cases)} runs={runs} max_steps={max(hist)} bound={n * n} "
              f"({time.perf_counter() - start:.1f}s)")
        print("  steps:", " ".join(f"{s}:{c}" for s, c in sorted(hist.items())))
    if writer:
        fh.close()


if __name__ == "__main__":
    main()
