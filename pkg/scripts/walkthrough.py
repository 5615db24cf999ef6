#!/usr/bin/env python3
"""Insert into the Rothe BPD of 3,2,6,5,10,4,8,7,9,1 at alpha=4 and print every step."""

import argparse

from bpdmonk.grid import rothe
from bpdmonk.monk import phi_backward, phi_forward
from bpdmonk.perm import parse_perm


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pi", default="3,2,6,5,10,4,8,7,9,1")
    ap.add_argument("--alpha", type=int, default=4)
    args = ap.parse_args()

    pi = parse_perm(args.pi)
    d = rothe(pi)
    print(f"pi = {pi}, alpha = {args.alpha}, pipe p = {pi(args.alpha)}")
    print(d.render())

    trace = []
    e = phi_forward(pi, args.alpha, d, trace)
    for step in trace:
        print(step)
    print()
    print(f"readout {e.perm}")
    print(e.render())

    back = []
    outcome = phi_backward(pi, args.alpha, e, back)
    print(f"inverse: {outcome}, recovers input: {outcome.diagram == d}")
    for step in back:
        print(step)


if __name__ == "__main__":
    main()
