"""Command-line entry point: ``bpdmonk`` or ``python -m bpdmonk``.

Exit status is 0 on success, 1 when a verification or identity check fails,
and 2 on usage or input errors (including diagrams outside the domain of the
bijection).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .decorated import DecoratedBpd, Label, phi_tilde_backward, phi_tilde_forward
from .grid import Bpd, InvalidDiagram, ParseError, enumerate_bpds, parse
from .monk import DomainError, MonkError, phi_backward, phi_forward
from .perm import parse_perm
from .poly import schubert_bpd, schubert_dd, to_canonical_string
from .verify import VerifyConfig, run_verify


class UsageError(Exception):
    pass


def _perm(tokens):
    try:
        return parse_perm(tokens)
    except ValueError as exc:
        raise UsageError(f"bad permutation: {exc}") from None


def _read_diagram(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    try:
        return parse(text)
    except (ParseError, InvalidDiagram, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_enumerate(args) -> int:
    pi = _perm(args.perm)
    bpds = enumerate_bpds(pi)
    if args.count:
        print(len(bpds))
        return 0
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        stem = "".join(map(str, pi.values)) if pi.n < 10 else "_".join(map(str, pi.values))
        for idx, d in enumerate(bpds, start=1):
            path = out / f"{stem}_{idx:04d}.bpd"
            path.write_text(d.render())
            print(path)
        return 0
    sys.stdout.write("".join(d.render() for d in bpds))
    return 0


def cmd_schubert(args) -> int:
    pi = _perm(args.perm)
    if args.method == "bpd":
        print(to_canonical_string(schubert_bpd(pi, args.double)))
        return 0
    if args.method == "dd":
        print(to_canonical_string(schubert_dd(pi, args.double)))
        return 0
    a = schubert_bpd(pi, args.double)
    b = schubert_dd(pi, args.double)
    print(to_canonical_string(a))
    print(to_canonical_string(b))
    return 0 if a == b else 1


def _as_decorated(diagram):
    if isinstance(diagram, DecoratedBpd):
        return diagram
    return DecoratedBpd(diagram, ())  # only valid when there are no blanks


def cmd_monk_apply(args) -> int:
    pi = _perm(args.pi)
    diagram = _read_diagram(args.file)
    trace: list = [] if args.trace else None
    label = Label(args.label) if args.label else None
    if label is not None or isinstance(diagram, DecoratedBpd):
        try:
            dd = _as_decorated(diagram)
        except ValueError:
            raise UsageError("--label needs a decorated diagram (use x/y for blanks)") from None
        out = phi_tilde_forward(pi, args.alpha, dd, label, trace)
    else:
        if not isinstance(diagram, Bpd):
            raise UsageError("input must be a bumpless pipe dream")
        out = phi_forward(pi, args.alpha, diagram, trace)
    sys.stdout.write(out.render())
    for step in trace or ():
        print(step)
    return 0


def cmd_monk_invert(args) -> int:
    pi = _perm(args.pi)
    diagram = _read_diagram(args.file)
    trace: list = [] if args.trace else None
    if isinstance(diagram, DecoratedBpd) or args.decorated:
        outcome = phi_tilde_backward(pi, args.alpha, _as_decorated(diagram), trace)
    else:
        if not isinstance(diagram, Bpd):
            raise UsageError("input must be a bumpless pipe dream")
        outcome = phi_backward(pi, args.alpha, diagram, trace)
    print(outcome)
    sys.stdout.write(outcome.diagram.render())
    for step in trace or ():
        print(step)
    return 0


def cmd_monk_verify(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    config = VerifyConfig(
        n=args.n, double=args.double, jobs=args.jobs, sample=args.sample, seed=args.seed)
    report = run_verify(config)
    sys.stdout.write(report.render())
    print(f"wall_time={report.wall_time:.2f}s", file=sys.stderr)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bpdmonk", description="Bumpless pipe dreams and bijective Monk's rule.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the BPDs of a permutation")
    p.add_argument("perm", nargs="+", help='one-line notation, e.g. "1 3 2" or 1,3,2')
    p.add_argument("--count", action="store_true", help="print only the number of diagrams")
    p.add_argument("--out", metavar="DIR", help="write one .bpd file per diagram")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("schubert", help="print a (double) Schubert polynomial")
    p.add_argument("perm", nargs="+")
    p.add_argument("--double", action="store_true")
    p.add_argument("--method", choices=("bpd", "dd", "both"), default="bpd")
    p.set_defaults(func=cmd_schubert)

    monk = sub.add_parser("monk", help="apply, invert or verify the Monk bijection")
    msub = monk.add_subparsers(dest="monk_command", required=True)
    for name, func in (("apply", cmd_monk_apply), ("invert", cmd_monk_invert)):
        p = msub.add_parser(name)
        p.add_argument("--pi", nargs="+", required=True)
        p.add_argument("--alpha", type=int, required=True)
        p.add_argument("--trace", action="store_true", help="print one line per step")
        if name == "apply":
            p.add_argument("--label", choices=("x", "y"), help="label for the inserted blank")
        else:
            p.add_argument("--decorated", action="store_true",
                           help="treat a blank-free input as decorated")
        p.add_argument("file", help="diagram file, or - for stdin")
        p.set_defaults(func=func)

    p = msub.add_parser("verify", help="check the identities and bijections on S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--double", action="store_true", help="also check the double version")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--sample", type=int, help="check N random permutations instead of all")
    p.add_argument("--seed", type=int, default=VerifyConfig.seed)
    p.set_defaults(func=cmd_monk_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MonkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
