"""
Decorated bumpless pipe dreams: every blank carries a label x or -y.

A decorated BPD contributes the signed monomial

    prod_{f(i,j)=x} x_i * prod_{f(i,j)=-y} (-y_j),

and summing these over all decorations of all BPDs of pi gives the double
Schubert polynomial.  The insertion algorithms carry labels along: the label
of a consumed blank is handed to the next blank created, which sits on the
same row for an x label and in the same column for a -y label.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Literal, Mapping

from .grid import Bpd, Diagram, Pos, render
from .monk import (
    DomainError, InvariantViolation, MonkError, Step, _record,
    _step_limit, area_under, classify_input, classify_output, cross_bump_swap,
    find_cross, min_droop, min_undroop, uncross,
)
from .perm import Permutation
from .poly import Monomial, Poly

__all__ = [
    "Label", "DecoratedBpd", "DecoratedOutcome", "decorations", "mon", "mon_poly",
    "resolve_at_r_dec", "resolve_at_j_dec", "phi_tilde_forward", "phi_tilde_backward",
]


class Label(str, enum.Enum):
    X = "x"
    NEG_Y = "y"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DecoratedBpd:
    base: Diagram
    labels: tuple[Label, ...]  # one per blank, in row-major order

    def __post_init__(self):
        if len(self.labels) != len(self.base.blanks()):
            raise ValueError(
                f"{len(self.labels)} labels for {len(self.base.blanks())} blank tiles")
        object.__setattr__(self, "labels", tuple(Label(v) for v in self.labels))

    @classmethod
    def from_mapping(cls, base: Diagram, labels: Mapping[Pos, Label]) -> DecoratedBpd:
        spots = base.blanks()
        if set(labels) != set(spots):
            extra = sorted(set(labels) - set(spots))
            missing = sorted(set(spots) - set(labels))
            raise ValueError(f"labels must cover the blanks exactly; extra {extra}, missing {missing}")
        return cls(base, tuple(labels[pos] for pos in spots))

    @property
    def perm(self) -> Permutation:
        return self.base.perm

    @property
    def n(self) -> int:
        return self.base.n

    def label_map(self) -> dict[Pos, Label]:
        return dict(zip(self.base.blanks(), self.labels))

    def render(self) -> str:
        f = self.label_map()
        rows = [
            "".join(f[i, j].value if ch == "." else ch for j, ch in enumerate(row, start=1))
            for i, row in enumerate(self.base.rows, start=1)
        ]
        return f"{self.n}\n" + "".join(r + "\n" for r in rows)

    def __str__(self) -> str:
        return self.render()

    def erase(self) -> Diagram:
        return self.base


def decorations(d: Diagram) -> Iterator[DecoratedBpd]:
    """All 2^|blank(d)| decorations of ``d``."""
    for labels in itertools.product((Label.X, Label.NEG_Y), repeat=len(d.blanks())):
        yield DecoratedBpd(d, labels)


def mon(dd: DecoratedBpd) -> tuple[int, Monomial]:
    """(sign, monomial) of a decorated BPD."""
    n = dd.n
    ex, ey = [0] * n, [0] * n
    sign = 1
    for (i, j), lab in dd.label_map().items():
        if lab is Label.X:
            ex[i - 1] += 1
        else:
            ey[j - 1] += 1
            sign = -sign
    return sign, Monomial(tuple(ex), tuple(ey))


def mon_poly(dd: DecoratedBpd) -> Poly:
    sign, m = mon(dd)
    return Poly.monomial(m, sign)


def _check_handoff(origin: Pos | None, target: Pos, label: Label) -> None:
    if origin is None:
        return
    if label is Label.X and origin[0] != target[0]:
        raise InvariantViolation(f"x label moved from row {origin[0]} to row {target[0]}")
    if label is Label.NEG_Y and origin[1] != target[1]:
        raise InvariantViolation(f"-y label moved from column {origin[1]} to column {target[1]}")


def resolve_at_r_dec(dd: DecoratedBpd, i: int, j: int, u: Label | None = None,
                     trace: list[Step] | None = None) -> DecoratedBpd:
    d, f = dd.base, dd.label_map()
    if d[i, j] == "r":
        if u is None:
            raise MonkError(f"an r-tile at ({i},{j}) needs a label for the new blank")
    elif d[i, j] == "b" and d.bump_pos == (i, j):
        if u is not None:
            raise MonkError("no label is taken when resolving a bump")
    else:
        raise MonkError(f"({i},{j}) is neither an r-tile nor the bump")
    pi = d.perm
    p = d.r_owner(i, j)
    x = pi.index(p)
    area = area_under(d, p)
    steps = 0
    origin: Pos | None = None  # where the label u was picked up
    while True:
        vacating = d[i, j] == "r"
        d, (li, lj) = min_droop(d, i, j)
        steps += 1
        _step_limit(d.n, steps)
        new_area = area_under(d, p)
        if new_area >= area:
            raise InvariantViolation(f"area under pipe {p} did not shrink")
        area = new_area
        _record(trace, Step("droop", (i, j), (li, lj), area))
        v = f.pop((li, lj)) if d[li, lj] == "j" else None
        if vacating:
            _check_handoff(origin, (i, j), u)
            f[i, j] = u
        if v is not None:
            if v is Label.X:
                (i, j), = [t for t in d.r_turns(p) if t[0] == li]
            else:
                (i, j), = [t for t in d.r_turns(p) if t[1] == lj]
            u, origin = v, (li, lj)
            continue
        q = d.r_owner(li, lj)
        y = pi.index(q)
        if x < y and pi.is_cover_t(x, y):
            d = d.with_tiles({(li, lj): "+"})
            _record(trace, Step("cross", (li, lj)))
            return DecoratedBpd.from_mapping(d, f)
        c = find_cross(d, p, q)
        if c is None:
            raise InvariantViolation(f"pipes {p} and {q} neither cover nor cross")
        d = cross_bump_swap(d, c)
        steps += 1
        _step_limit(d.n, steps)
        new_area = area_under(d, p)
        if new_area >= area:
            raise InvariantViolation(f"area under pipe {p} did not shrink in swap")
        area = new_area
        _record(trace, Step("swap", (li, lj), c, area))
        (i, j), u, origin = c, None, None


@dataclass(frozen=True)
class DecoratedOutcome:
    kind: Literal["cover-up", "cover-down", "shrunk"]
    diagram: DecoratedBpd
    index: int | None = None
    label: Label | None = None  # label of the blank given up, for "shrunk"

    @property
    def preimage(self):
        """(label, diagram) for a shrunk outcome, else the bare diagram."""
        if self.kind == "shrunk":
            return self.label, self.diagram
        return self.diagram

    def __str__(self) -> str:
        if self.kind == "shrunk":
            return f"shrunk {self.label}"
        return f"{self.kind} {self.index}"


def resolve_at_j_dec(dd: DecoratedBpd, i: int, j: int, u: Label | None = None,
                     trace: list[Step] | None = None) -> DecoratedOutcome:
    d, f = dd.base, dd.label_map()
    if d[i, j] == "j":
        if u is None:
            raise MonkError(f"a j-tile at ({i},{j}) needs a label for the new blank")
    elif d[i, j] == "b" and d.bump_pos == (i, j):
        if u is not None:
            raise MonkError("no label is taken when resolving a bump")
    else:
        raise MonkError(f"({i},{j}) is neither a j-tile nor the bump")
    pi = d.perm
    p = d.j_owner(i, j)
    x = pi.index(p)
    area = area_under(d, p)
    steps = 0
    origin: Pos | None = None
    while True:
        vacating = d[i, j] == "j"
        d, (li, lj) = min_undroop(d, i, j)
        steps += 1
        _step_limit(d.n, steps)
        new_area = area_under(d, p)
        if new_area <= area:
            raise InvariantViolation(f"area under pipe {p} did not grow")
        area = new_area
        _record(trace, Step("undroop", (i, j), (li, lj), area))
        v = f.pop((li, lj)) if d[li, lj] == "r" else None
        if vacating:
            _check_handoff(origin, (i, j), u)
            f[i, j] = u
        if v is not None:
            if v is Label.X:
                later = [t for t in d.j_turns(p) if t[0] == li and t[1] > lj]
                if not later:
                    if li != x:
                        raise InvariantViolation(f"x label released on row {li}, expected {x}")
                    _record(trace, Step("shrink-row", (li, lj)))
                    return DecoratedOutcome("shrunk", DecoratedBpd.from_mapping(d, f), label=v)
            else:
                later = [t for t in d.j_turns(p) if t[1] == lj and t[0] > li]
                if not later:
                    if lj != p:
                        raise InvariantViolation(f"-y label released in column {lj}, expected {p}")
                    _record(trace, Step("shrink-column", (li, lj)))
                    return DecoratedOutcome("shrunk", DecoratedBpd.from_mapping(d, f), label=v)
            (i, j), u, origin = later[0], v, (li, lj)
            continue
        q = d.j_owner(li, lj)
        y = pi.index(q)
        if y < x and pi.is_cover_t(y, x):
            d = d.with_tiles({(li, lj): "+"})
            _record(trace, Step("cross", (li, lj)))
            return DecoratedOutcome("cover-down", DecoratedBpd.from_mapping(d, f), index=y)
        c = find_cross(d, p, q)
        if c is None:
            raise InvariantViolation(f"pipes {p} and {q} neither cover nor cross")
        d = cross_bump_swap(d, c)
        steps += 1
        _step_limit(d.n, steps)
        new_area = area_under(d, p)
        if new_area <= area:
            raise InvariantViolation(f"area under pipe {p} did not grow in swap")
        area = new_area
        _record(trace, Step("swap", (li, lj), c, area))
        (i, j), u, origin = c, None, None


def phi_tilde_forward(pi: Permutation, alpha: int, dd: DecoratedBpd,
                      u: Label | None = None, trace: list[Step] | None = None) -> DecoratedBpd:
    """Decorated Monk bijection.

    With a label u the input must be a decorated BPD of pi: u = x starts at
    the r-turn of pi(alpha) on row alpha, u = -y at its r-turn in column
    pi(alpha).  Without a label the input is a decorated BPD of
    pi t_{k,alpha} and is uncrossed first.
    """
    k = classify_input(pi, alpha, dd.base)
    if k is None:
        if u is None:
            raise DomainError("a decorated BPD of pi needs a label x or y")
        u = Label(u)
        p = pi(alpha)
        if u is Label.X:
            (i, j), = [t for t in dd.base.r_turns(p) if t[0] == alpha]
        else:
            (i, j), = [t for t in dd.base.r_turns(p) if t[1] == p]
        out = resolve_at_r_dec(dd, i, j, u, trace)
    else:
        if u is not None:
            raise DomainError(f"readout is pi t_({k},{alpha}); no label is taken")
        sigma = dd.perm
        almost = uncross(dd.base, sigma(k), sigma(alpha))
        start = DecoratedBpd(almost, dd.labels)
        out = resolve_at_r_dec(start, *almost.bump_pos, None, trace)
    classify_output(pi, alpha, out.base)
    return out


def phi_tilde_backward(pi: Permutation, alpha: int, ee: DecoratedBpd,
                       trace: list[Step] | None = None) -> DecoratedOutcome:
    l = classify_output(pi, alpha, ee.base)
    sigma = ee.perm
    almost = uncross(ee.base, sigma(l), sigma(alpha))
    start = DecoratedBpd(almost, ee.labels)
    outcome = resolve_at_j_dec(start, *almost.bump_pos, None, trace)
    if outcome.kind == "shrunk" and outcome.diagram.perm != pi:
        raise InvariantViolation("shrunk result is not a decorated BPD of pi")
    return outcome


def enumerate_decorated(pi: Permutation) -> list[DecoratedBpd]:
    from .grid import enumerate_bpds
    return [dd for d in enumerate_bpds(pi) for dd in decorations(d)]


def decorate(d: Bpd, text_labels: str) -> DecoratedBpd:
    """Decorate the blanks of ``d`` in row-major order from a string of x/y."""
    return DecoratedBpd(d, tuple(Label(c) for c in text_labels))


__all__ += ["enumerate_decorated", "decorate", "render"]
