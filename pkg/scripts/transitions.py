#!/usr/bin/env python3
"""Which transition cases does the forward map handle with a single droop?

Splits the cases with a unique l into those where alpha is the last descent
of pi t_{alpha,l} and the rest, and counts forward runs on BPD(pi) that are
exactly one droop followed by a cross.
"""

import argparse

from bpdmonk.grid import enumerate_bpds
from bpdmonk.monk import phi_forward
from bpdmonk.perm import all_perms


def last_descent(w):
    return max(i for i in range(1, w.n) if w(i) > w(i + 1))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--show", type=int, default=3, help="exceptions to print per n")
    args = ap.parse_args()

    for n in range(2, args.n_max + 1):
        tally = {True: [0, 0], False: [0, 0]}
        shown = 0
        for pi in all_perms(n):
            for alpha in range(1, n):
                t = pi.monk_targets(alpha)
                if not t.precondition or len(t.ls) != 1:
                    continue
                lascoux = last_descent(pi.apply_t(alpha, t.ls[0])) == alpha
                for d in enumerate_bpds(pi):
                    trace = []
                    phi_forward(pi, alpha, d, trace)
                    single = [s.op for s in trace] == ["droop", "cross"]
                    tally[lascoux][0 if single else 1] += 1
                    if not single and shown < args.show:
                        shown += 1
                        print(f"  n={n} pi={pi} alpha={alpha} lascoux={lascoux}")
                        print("    " + d.render().replace("\n", "/"))
                        print("    " + "; ".join(map(str, trace)))
        (a, b), (c, e) = tally[True], tally[False]
        print(f"n={n} last-descent cases: single={a} longer={b}; other unique-l cases: single={c} longer={e}")


if __name__ == "__main__":
    main()
