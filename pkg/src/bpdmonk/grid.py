"""
Tile grids for bumpless pipe dreams.

Tiles are stored as single characters, the same ones used by the text
format::

    .  blank         -  horizontal     |  vertical     +  cross
    r  south-east    j  west-north     b  bump (south-east and west-north)

Coordinates are matrix coordinates ``(row, column)``, 1-based, row 1 at the
top.  Pipes enter on the south edge and are labelled by their entry column;
each pipe travels north and east only and leaves through the east edge.
The readout permutation has ``pi(i)`` equal to the label leaving row ``i``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .perm import Permutation, all_perms

__all__ = [
    "Tile", "InvalidDiagram", "ParseError", "Diagram", "Bpd", "AlmostBpd",
    "validate", "read_permutation", "rothe", "enumerate_bpds", "all_bpds",
    "blanks", "pipe_segments", "find_cross", "parse", "render",
]


class Tile(str, enum.Enum):
    BLANK = "."
    HORIZONTAL = "-"
    VERTICAL = "|"
    CROSS = "+"
    R = "r"
    J = "j"
    BUMP = "b"

    def __str__(self) -> str:
        return self.value


# Segments of each tile, named by the two edges they join.
SEGMENTS: dict[str, tuple[str, ...]] = {
    ".": (),
    "-": ("WE",),
    "|": ("NS",),
    "+": ("WE", "NS"),
    "r": ("SE",),
    "j": ("WN",),
    "b": ("SE", "WN"),
}
EDGES = {ch: frozenset("".join(segs)) for ch, segs in SEGMENTS.items()}
TILE_CHARS = frozenset(SEGMENTS)

Pos = tuple[int, int]


class InvalidDiagram(ValueError):
    pass


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class Diagram:
    """A validated tiling; construct through ``validate`` or ``parse``."""

    rows: tuple[str, ...]
    perm: Permutation = field(compare=False, repr=False)
    # (row, col, segment) -> label of the owning pipe
    owner: Mapping[tuple[int, int, str], int] = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, pos: Pos) -> str:
        i, j = pos
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"position {pos} outside the {self.n}x{self.n} grid")
        return self.rows[i - 1][j - 1]

    def tile(self, i: int, j: int) -> Tile:
        return Tile(self[i, j])

    def positions(self, kind: str) -> list[Pos]:
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.rows)
            for j, ch in enumerate(row) if ch == kind
        ]

    def blanks(self) -> list[Pos]:
        return self.positions(Tile.BLANK)

    def crosses(self) -> list[Pos]:
        return self.positions(Tile.CROSS)

    def row_blank_counts(self) -> tuple[int, ...]:
        return tuple(row.count(Tile.BLANK) for row in self.rows)

    def render(self) -> str:
        return render(self)

    def __str__(self) -> str:
        return self.render()

    def with_tiles(self, changes: Mapping[Pos, str]) -> Diagram:
        """A re-validated copy with some tiles replaced."""
        grid = [list(row) for row in self.rows]
        for (i, j), ch in changes.items():
            grid[i - 1][j - 1] = ch
        return validate(grid)

    def pipe_cells(self, label: int) -> list[tuple[int, int, str]]:
        """Segments of pipe ``label`` in travel order, south edge to east edge."""
        cells = [key for key, lab in self.owner.items() if lab == label]
        # travel order: rows decrease, columns increase
        return sorted(cells, key=lambda k: (-k[0], k[1]))

    def r_turns(self, label: int) -> list[Pos]:
        return [(i, j) for i, j, seg in self.pipe_cells(label) if seg == "SE"]

    def j_turns(self, label: int) -> list[Pos]:
        return [(i, j) for i, j, seg in self.pipe_cells(label) if seg == "WN"]

    def r_owner(self, i: int, j: int) -> int:
        """Label of the pipe holding the r-shaped turn at (i, j)."""
        try:
            return self.owner[i, j, "SE"]
        except KeyError:
            raise ValueError(f"no r-shaped turn at ({i},{j})") from None

    def j_owner(self, i: int, j: int) -> int:
        try:
            return self.owner[i, j, "WN"]
        except KeyError:
            raise ValueError(f"no j-shaped turn at ({i},{j})") from None


@dataclass(frozen=True)
class Bpd(Diagram):
    pass


@dataclass(frozen=True)
class AlmostBpd(Diagram):
    bump_pos: Pos = field(default=(0, 0), compare=False)


def _check_shape(tiles: Sequence[Sequence[str]]) -> tuple[str, ...]:
    rows = tuple("".join(str(t) for t in row) for row in tiles)
    n = len(rows)
    if n == 0:
        raise InvalidDiagram("empty grid")
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise InvalidDiagram(f"row {i} has {len(row)} tiles, expected {n}")
        for j, ch in enumerate(row, start=1):
            if ch not in TILE_CHARS:
                raise InvalidDiagram(f"unknown tile {ch!r} at ({i},{j})")
    return rows


def _check_edges(rows: tuple[str, ...]) -> None:
    n = len(rows)
    for i in range(n):
        for j in range(n):
            e = EDGES[rows[i][j]]
            pos = f"({i + 1},{j + 1})"
            if i == 0 and "N" in e:
                raise InvalidDiagram(f"boundary violation: pipe leaves north edge at {pos}")
            if j == 0 and "W" in e:
                raise InvalidDiagram(f"boundary violation: pipe enters west edge at {pos}")
            if i == n - 1 and "S" not in e:
                raise InvalidDiagram(f"boundary violation: no pipe enters south edge at {pos}")
            if j == n - 1 and "E" not in e:
                raise InvalidDiagram(f"boundary violation: no pipe leaves east edge at {pos}")
            if j + 1 < n and ("E" in e) != ("W" in EDGES[rows[i][j + 1]]):
                raise InvalidDiagram(
                    f"edge mismatch between {pos} and ({i + 1},{j + 2})")
            if i + 1 < n and ("S" in e) != ("N" in EDGES[rows[i + 1][j]]):
                raise InvalidDiagram(
                    f"edge mismatch between {pos} and ({i + 2},{j + 1})")


def _trace(rows: tuple[str, ...]):
    n = len(rows)
    owner: dict[tuple[int, int, str], int] = {}
    exits = [0] * n
    for c in range(n):
        i, j, came_from = n - 1, c, "S"
        while True:
            seg = next(s for s in SEGMENTS[rows[i][j]] if came_from in s)
            key = (i + 1, j + 1, seg)
            if key in owner:
                raise InvalidDiagram(f"segment {seg} at ({i + 1},{j + 1}) used twice")
            owner[key] = c + 1
            if seg.replace(came_from, "") == "N":
                i, came_from = i - 1, "S"
            else:
                j, came_from = j + 1, "W"
                if j == n:
                    exits[i] = c + 1
                    break
    total = sum(len(SEGMENTS[ch]) for row in rows for ch in row)
    if total != len(owner) or 0 in exits:
        raise InvalidDiagram(
            f"pipe count mismatch: {total} segments but {len(owner)} lie on the {n} pipes")
    return Permutation(tuple(exits)), owner


def _check_reduced(rows: tuple[str, ...], owner) -> None:
    seen: dict[frozenset, Pos] = {}
    for i, row in enumerate(rows, start=1):
        for j, ch in enumerate(row, start=1):
            if ch != Tile.CROSS:
                continue
            pair = frozenset((owner[i, j, "NS"], owner[i, j, "WE"]))
            if pair in seen:
                p, q = sorted(pair)
                a, b = seen[pair]
                raise InvalidDiagram(
                    f"double crossing: pipes {p} and {q} cross at ({a},{b}) and ({i},{j})")
            seen[pair] = (i, j)


def validate(tiles: Sequence[Sequence[str]], n: int | None = None) -> Bpd | AlmostBpd:
    """Check a tile array and return it as a ``Bpd`` or ``AlmostBpd``."""
    rows = _check_shape(tiles)
    if n is not None and n != len(rows):
        raise InvalidDiagram(f"expected a {n}x{n} grid, got {len(rows)} rows")
    bumps = [(i + 1, j + 1) for i, row in enumerate(rows)
             for j, ch in enumerate(row) if ch == Tile.BUMP]
    if len(bumps) > 1:
        raise InvalidDiagram(f"more than one bump tile: {bumps}")
    _check_edges(rows)
    perm, owner = _trace(rows)
    _check_reduced(rows, owner)
    if bumps:
        return AlmostBpd(rows, perm, owner, bumps[0])
    return Bpd(rows, perm, owner)


def read_permutation(d: Diagram) -> Permutation:
    return d.perm


def blanks(d: Diagram) -> list[Pos]:
    return d.blanks()


def pipe_segments(d: Diagram) -> dict[tuple[Pos, str], int]:
    """Map ``((row, col), segment)`` to the label of the pipe owning it."""
    return {((i, j), seg): lab for (i, j, seg), lab in d.owner.items()}


def find_cross(d: Diagram, p: int, q: int) -> Pos | None:
    if p == q:
        raise ValueError("a pipe does not cross itself")
    for i, j in d.crosses():
        if {d.owner[i, j, "NS"], d.owner[i, j, "WE"]} == {p, q}:
            return (i, j)
    return None


def rothe(pi: Permutation) -> Bpd:
    """The j-free BPD of ``pi`` whose blanks form the Rothe diagram."""
    n = pi.n
    inv = pi.inverse()
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            right, below = j > pi(i), i > inv(j)
            if j == pi(i):
                row.append("r")
            elif right:
                row.append("+" if below else "-")
            else:
                row.append("|" if below else ".")
        rows.append("".join(row))
    d = validate(rows)
    assert isinstance(d, Bpd) and d.perm == pi
    return d


def _backtrack(n: int, target: Permutation | None) -> Iterator[tuple[str, ...]]:
    """Bottom-up, left-to-right cell search for reduced tilings.

    Each cell knows the pipe (if any) arriving from the south and from the
    west, which fixes the admissible tiles:
      none/none -> blank; south only -> | or r; west only -> - or j;
      both -> +, allowed only if the two pipes have not crossed yet.
    A pipe leaving the east edge at row i must be target(i).
    """
    grid = [[""] * n for _ in range(n)]
    # from_south[j]: label entering cell (row, j) from below, 0 for none
    from_south = list(range(1, n + 1))
    crossed: set[tuple[int, int]] = set()

    def cell(i: int, j: int, west: int, north_out: list[int]):
        if j == n:
            if west == 0:
                return
            if target is not None and target(i + 1) != west:
                return
            if i == 0:
                if any(north_out):
                    return
                yield tuple("".join(r) for r in grid)
                return
            saved = from_south[:]
            from_south[:] = north_out
            yield from cell(i - 1, 0, 0, [0] * n)
            from_south[:] = saved
            return
        south = from_south[j]
        if south and west:
            pair = (min(south, west), max(south, west))
            if pair in crossed:
                return
            crossed.add(pair)
            grid[i][j] = "+"
            north_out[j] = south
            yield from cell(i, j + 1, west, north_out)
            crossed.discard(pair)
            return
        if south:
            grid[i][j] = "|"
            north_out[j] = south
            yield from cell(i, j + 1, 0, north_out)
            grid[i][j] = "r"
            north_out[j] = 0
            yield from cell(i, j + 1, south, north_out)
            return
        if west:
            grid[i][j] = "-"
            north_out[j] = 0
            yield from cell(i, j + 1, west, north_out)
            grid[i][j] = "j"
            north_out[j] = west
            yield from cell(i, j + 1, 0, north_out)
            north_out[j] = 0
            return
        grid[i][j] = "."
        north_out[j] = 0
        yield from cell(i, j + 1, 0, north_out)

    yield from cell(n - 1, 0, 0, [0] * n)


@lru_cache(maxsize=None)
def _enumerate_cached(pi: Permutation) -> tuple[Bpd, ...]:
    found = sorted(_backtrack(pi.n, pi))
    out = []
    for rows in found:
        d = validate(rows)
        assert isinstance(d, Bpd) and d.perm == pi
        out.append(d)
    return tuple(out)


def enumerate_bpds(pi: Permutation) -> list[Bpd]:
    """Every BPD of ``pi``, sorted by rendered text."""
    return list(_enumerate_cached(pi))


def all_bpds(n: int) -> dict[Permutation, list[Bpd]]:
    return {pi: enumerate_bpds(pi) for pi in all_perms(n)}


def render(d: Diagram) -> str:
    return f"{d.n}\n" + "".join(row + "\n" for row in d.rows)


def _split_lines(text: str) -> list[str]:
    if not text.endswith("\n"):
        raise ParseError("missing trailing newline")
    lines = text[:-1].split("\n")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"header must be a decimal integer, got {lines[0]!r}") from None
    if str(n) != lines[0] or n < 1:
        raise ParseError(f"bad header {lines[0]!r}")
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"header says n={n} but found {len(body)} rows")
    for i, row in enumerate(body, start=1):
        if len(row) != n:
            raise ParseError(f"ragged row {i}: {len(row)} characters, expected {n}")
    return body


def parse(text: str):
    """Parse the text format into a Bpd, AlmostBpd or DecoratedBpd."""
    body = _split_lines(text)
    decorated = any(ch in "xy" for row in body for ch in row)
    for i, row in enumerate(body, start=1):
        for j, ch in enumerate(row, start=1):
            if ch in "xy" or ch in TILE_CHARS:
                continue
            raise ParseError(f"bad character {ch!r} at ({i},{j})")
    if decorated:
        from .decorated import DecoratedBpd, Label
        plain, labels = [], {}
        for i, row in enumerate(body, start=1):
            if "." in row:
                raise ParseError(f"'.' in a decorated diagram (row {i})")
            for j, ch in enumerate(row, start=1):
                if ch in "xy":
                    labels[i, j] = Label(ch)
            plain.append(row.replace("x", ".").replace("y", "."))
        return DecoratedBpd.from_mapping(validate(plain), labels)
    return validate(body)


def count_tiles(d: Diagram) -> Counter:
    return Counter(ch for row in d.rows for ch in row)
