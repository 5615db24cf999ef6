"""
Droop moves, blank insertion at r- and j-turns, and the Monk bijection.

``resolve_at_r`` inserts a blank at an r-turn (or resolves a bump whose
r-corner belongs to the moving pipe) by repeated minimal droops and
cross-bump swaps; ``resolve_at_j`` is its mirror image.  ``phi_forward``
and ``phi_backward`` wrap them into the bijection

    BPD(pi)  +  sum_k BPD(pi t_{k,alpha})  <->  sum_l BPD(pi t_{alpha,l}).

Every intermediate diagram is re-validated, and each primitive step is
recorded in an optional trace together with the area under the moving
pipe, which must move strictly in one direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .grid import AlmostBpd, Bpd, Diagram, Pos, find_cross
from .perm import Permutation

__all__ = [
    "MonkError", "DomainError", "InvariantViolation", "Step", "MonkOutcome",
    "area_under", "min_droop", "min_undroop", "cross_bump_swap",
    "resolve_at_r", "resolve_at_j", "phi_forward", "phi_backward",
    "uncross",
]


class MonkError(ValueError):
    """A move was requested where its precondition fails."""


class DomainError(MonkError):
    """A diagram is outside the domain of the bijection."""


class InvariantViolation(RuntimeError):
    """A property guaranteed by the construction did not hold."""


@dataclass(frozen=True)
class Step:
    op: Literal["droop", "undroop", "swap", "cross", "shrink-row", "shrink-column"]
    src: Pos
    dst: Pos | None = None
    area: int | None = None  # area under the moving pipe after the step

    @property
    def primitive(self) -> bool:
        return self.op in ("droop", "undroop", "swap")

    def __str__(self) -> str:
        (i, j), dst = self.src, self.dst
        if self.op in ("droop", "undroop"):
            return f"{self.op} ({i},{j})->({dst[0]},{dst[1]})"
        if self.op == "swap":
            return f"swap bump({i},{j})<->cross({dst[0]},{dst[1]})"
        if self.op == "cross":
            return f"finalize cross({i},{j})"
        if self.op == "shrink-row":
            return f"finalize shrink row {i}"
        return f"finalize shrink column {j}"


@dataclass(frozen=True)
class MonkOutcome:
    kind: Literal["cover-up", "cover-down", "shrunk"]
    diagram: Bpd
    index: int | None = None  # l for cover-up, k for cover-down

    def __str__(self) -> str:
        return self.kind if self.index is None else f"{self.kind} {self.index}"


def area_under(d: Diagram, label: int) -> int:
    """Cells strictly east of pipe ``label`` on the rows it visits.

    Droops push the pipe south-east and shrink this count; undroops grow it.
    """
    rightmost: dict[int, int] = {}
    for i, j, _ in d.pipe_cells(label):
        rightmost[i] = max(rightmost.get(i, 0), j)
    return sum(d.n - j for j in rightmost.values())


def _has_cover_above(pi: Permutation, x: int) -> bool:
    return any(pi.is_cover_t(x, y) for y in range(x + 1, pi.n + 1))


def _expect(d: Diagram, pos: Pos, allowed: str, what: str) -> None:
    if d[pos] not in allowed:
        raise InvariantViolation(
            f"{what}: tile at {pos} is {d[pos]!r}, expected one of {allowed!r}")


def min_droop(d: Diagram, i: int, j: int) -> tuple[Diagram, Pos]:
    """Droop the r-turn at (i, j) into the nearest admissible tile."""
    p = d.r_owner(i, j)
    pi = d.perm
    if not _has_cover_above(pi, pi.index(p)):
        raise MonkError(f"pipe {p} has no y > {pi.index(p)} with pi t_(x,y) covering pi")
    n = d.n
    a = 1
    while i + a <= n and d[i + a, j] == "+":
        a += 1
    b = 1
    while j + b <= n and d[i, j + b] == "+":
        b += 1
    if i + a > n or j + b > n:
        raise MonkError(f"no droop target from ({i},{j}): only crosses to the south or east")

    what = f"droop frame ({i},{j})->({i + a},{j + b})"
    _expect(d, (i, j + b), "-j", what)
    _expect(d, (i + a, j), "|j", what)
    _expect(d, (i + a, j + b), ".r", what)
    for k in range(1, a):
        _expect(d, (i + k, j + b), "-", what)
        for m in range(1, b):
            _expect(d, (i + k, j + m), "+", what)
    for m in range(1, b):
        _expect(d, (i + a, j + m), "|", what)

    ch = {}
    ch[i, j] = "." if d[i, j] == "r" else "j"
    for k in range(1, a):
        ch[i + k, j] = "-"
        ch[i + k, j + b] = "+"
    for m in range(1, b):
        ch[i, j + m] = "|"
        ch[i + a, j + m] = "+"
    ch[i + a, j] = "r" if d[i + a, j] == "|" else "-"
    ch[i, j + b] = "r" if d[i, j + b] == "-" else "|"
    ch[i + a, j + b] = "j" if d[i + a, j + b] == "." else "b"
    out = d.with_tiles(ch)
    if out.perm != pi:
        raise InvariantViolation(f"{what} changed the permutation")
    return out, (i + a, j + b)


def min_undroop(d: Diagram, i: int, j: int) -> tuple[Diagram, Pos]:
    """Undroop the j-turn at (i, j) into the nearest admissible tile."""
    d.j_owner(i, j)
    a = 1
    while i - a >= 1 and d[i - a, j] == "+":
        a += 1
    b = 1
    while j - b >= 1 and d[i, j - b] == "+":
        b += 1
    if i - a < 1 or j - b < 1:
        raise InvariantViolation(f"undroop from ({i},{j}) ran into the north or west border")

    what = f"undroop frame ({i},{j})->({i - a},{j - b})"
    _expect(d, (i - a, j), "r|", what)
    _expect(d, (i, j - b), "r-", what)
    _expect(d, (i - a, j - b), ".j", what)
    for k in range(1, a):
        _expect(d, (i - k, j - b), "-", what)
        for m in range(1, b):
            _expect(d, (i - k, j - m), "+", what)
    for m in range(1, b):
        _expect(d, (i - a, j - m), "|", what)

    ch = {}
    ch[i, j] = "." if d[i, j] == "j" else "r"
    for k in range(1, a):
        ch[i - k, j] = "-"
        ch[i - k, j - b] = "+"
    for m in range(1, b):
        ch[i, j - m] = "|"
        ch[i - a, j - m] = "+"
    ch[i - a, j] = "-" if d[i - a, j] == "r" else "j"
    ch[i, j - b] = "|" if d[i, j - b] == "r" else "j"
    ch[i - a, j - b] = "r" if d[i - a, j - b] == "." else "b"
    out = d.with_tiles(ch)
    if out.perm != d.perm:
        raise InvariantViolation(f"{what} changed the permutation")
    return out, (i - a, j - b)


def cross_bump_swap(d: AlmostBpd, cross_pos: Pos) -> AlmostBpd:
    """Exchange the bump with the crossing of the same two pipes."""
    if not isinstance(d, AlmostBpd):
        raise MonkError("cross-bump swap needs an almost BPD")
    bump = d.bump_pos
    r_pipe, j_pipe = d.r_owner(*bump), d.j_owner(*bump)
    if find_cross(d, r_pipe, j_pipe) != tuple(cross_pos):
        raise MonkError(
            f"pipes {r_pipe} and {j_pipe} meeting at the bump {bump} do not cross at {cross_pos}")
    out = d.with_tiles({bump: "+", tuple(cross_pos): "b"})
    if out.perm != d.perm:
        raise InvariantViolation("cross-bump swap changed the permutation")
    # the corner shapes trade places between the two pipes
    if out.r_owner(*cross_pos) != j_pipe or out.j_owner(*cross_pos) != r_pipe:
        raise InvariantViolation(f"corner ownership after swapping {bump} and {cross_pos}")
    return out


def uncross(d: Bpd, p: int, q: int) -> AlmostBpd:
    """Turn the crossing of pipes p and q into a bump."""
    c = find_cross(d, p, q)
    if c is None:
        raise DomainError(f"pipes {p} and {q} do not cross")
    out = d.with_tiles({c: "b"})
    assert isinstance(out, AlmostBpd)
    return out


def _step_limit(n: int, steps: int) -> None:
    if steps > n * n:
        raise InvariantViolation(f"more than {n * n} primitive steps")


def _record(trace, step: Step) -> None:
    if trace is not None:
        trace.append(step)


def resolve_at_r(d: Diagram, i: int, j: int, trace: list[Step] | None = None) -> Bpd:
    """Insert a blank at the r-tile (i, j), or resolve the bump there.

    Returns a BPD of pi t_{x,y} for some y > x with pi t_{x,y} covering pi,
    where pi is the readout of ``d`` and pi(x) owns the r-turn at (i, j).
    """
    if d[i, j] not in "rb" or (d[i, j] == "b" and d.bump_pos != (i, j)):
        raise MonkError(f"({i},{j}) is neither an r-tile nor the bump")
    pi = d.perm
    p = d.r_owner(i, j)
    x = pi.index(p)
    if not _has_cover_above(pi, x):
        raise MonkError(f"pipe {p} = pi({x}) admits no cover pi t_({x},y)")
    area = area_under(d, p)
    steps = 0
    while True:
        d, (li, lj) = min_droop(d, i, j)
        steps += 1
        _step_limit(d.n, steps)
        new_area = area_under(d, p)
        if new_area >= area:
            raise InvariantViolation(f"area under pipe {p} did not shrink ({area} -> {new_area})")
        area = new_area
        _record(trace, Step("droop", (i, j), (li, lj), area))
        if d[li, lj] == "j":
            (i, j), = [t for t in d.r_turns(p) if t[0] == li]
            continue
        q = d.r_owner(li, lj)
        if d.j_owner(li, lj) != p:
            raise InvariantViolation(f"pipe {p} does not hold the j-corner of the bump")
        y = pi.index(q)
        if x < y and pi.is_cover_t(x, y):
            d = d.with_tiles({(li, lj): "+"})
            _record(trace, Step("cross", (li, lj)))
            if d.perm != pi.apply_t(x, y):
                raise InvariantViolation("final crossing did not yield pi t_(x,y)")
            return d
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
        i, j = c


def resolve_at_j(d: Diagram, i: int, j: int, trace: list[Step] | None = None) -> MonkOutcome:
    """Mirror of ``resolve_at_r`` starting from a j-tile or the bump at (i, j)."""
    if d[i, j] not in "jb" or (d[i, j] == "b" and d.bump_pos != (i, j)):
        raise MonkError(f"({i},{j}) is neither a j-tile nor the bump")
    pi = d.perm
    p = d.j_owner(i, j)
    x = pi.index(p)
    area = area_under(d, p)
    steps = 0
    while True:
        d, (li, lj) = min_undroop(d, i, j)
        steps += 1
        _step_limit(d.n, steps)
        new_area = area_under(d, p)
        if new_area <= area:
            raise InvariantViolation(f"area under pipe {p} did not grow ({area} -> {new_area})")
        area = new_area
        _record(trace, Step("undroop", (i, j), (li, lj), area))
        if d[li, lj] == "r":
            later = [t for t in d.j_turns(p) if t[0] == li and t[1] > lj]
            if not later:
                if li != x:
                    raise InvariantViolation(f"pipe {p} stopped on row {li}, expected {x}")
                _record(trace, Step("shrink-row", (li, lj)))
                assert isinstance(d, Bpd)
                return MonkOutcome("shrunk", d)
            i, j = later[0]
            continue
        q = d.j_owner(li, lj)
        if d.r_owner(li, lj) != p:
            raise InvariantViolation(f"pipe {p} does not hold the r-corner of the bump")
        y = pi.index(q)
        if y < x and pi.is_cover_t(y, x):
            d = d.with_tiles({(li, lj): "+"})
            _record(trace, Step("cross", (li, lj)))
            if d.perm != pi.apply_t(y, x):
                raise InvariantViolation("final crossing did not yield pi t_(y,x)")
            return MonkOutcome("cover-down", d, y)
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
        i, j = c


def _monk_check(pi: Permutation, alpha: int):
    targets = pi.monk_targets(alpha)
    if not targets.precondition:
        raise DomainError(f"no l > {alpha} with pi t_({alpha},l) covering pi = {pi}")
    return targets


def classify_input(pi: Permutation, alpha: int, d: Diagram) -> int | None:
    """None if ``d`` is a BPD of pi, else the k with readout pi t_{k,alpha}."""
    targets = _monk_check(pi, alpha)
    if not isinstance(d, Bpd):
        raise DomainError("input must be a bumpless pipe dream")
    if d.perm == pi:
        return None
    t = pi.transposition_between(d.perm)
    if t is None or t[1] != alpha or t[0] not in targets.ks:
        raise DomainError(
            f"readout {d.perm} is neither {pi} nor pi t_(k,{alpha}) for a cover k < {alpha}")
    return t[0]


def classify_output(pi: Permutation, alpha: int, e: Diagram) -> int:
    """The l with readout(e) = pi t_{alpha,l}."""
    targets = _monk_check(pi, alpha)
    if not isinstance(e, Bpd):
        raise DomainError("input must be a bumpless pipe dream")
    t = pi.transposition_between(e.perm)
    if t is None or t[0] != alpha or t[1] not in targets.ls:
        raise DomainError(
            f"readout {e.perm} is not pi t_({alpha},l) for a cover l > {alpha}")
    return t[1]


def phi_forward(pi: Permutation, alpha: int, d: Bpd, trace: list[Step] | None = None) -> Bpd:
    k = classify_input(pi, alpha, d)
    if k is None:
        p = pi(alpha)
        (i, j), = [t for t in d.r_turns(p) if t[0] == alpha]
        out = resolve_at_r(d, i, j, trace)
    else:
        sigma = d.perm
        p, q = sigma(k), sigma(alpha)
        almost = uncross(d, p, q)
        i, j = almost.bump_pos
        if almost.r_owner(i, j) != p:
            raise InvariantViolation(f"pipe {p} should own the r-corner after uncrossing")
        out = resolve_at_r(almost, i, j, trace)
    classify_output(pi, alpha, out)
    return out


def phi_backward(pi: Permutation, alpha: int, e: Bpd, trace: list[Step] | None = None) -> MonkOutcome:
    l = classify_output(pi, alpha, e)
    sigma = e.perm
    q, p = sigma(alpha), sigma(l)
    almost = uncross(e, p, q)
    i, j = almost.bump_pos
    if almost.j_owner(i, j) != p:
        raise InvariantViolation(f"pipe {p} should own the j-corner after uncrossing")
    outcome = resolve_at_j(almost, i, j, trace)
    if outcome.kind == "shrunk" and outcome.diagram.perm != pi:
        raise InvariantViolation("shrunk result is not a BPD of pi")
    return outcome


def phi_forward_outcome(pi: Permutation, alpha: int, d: Bpd,
                        trace: list[Step] | None = None) -> MonkOutcome:
    out = phi_forward(pi, alpha, d, trace)
    return MonkOutcome("cover-up", out, classify_output(pi, alpha, out))
