"""Independent enumeration oracles for the tiling search.

Both rebuild the set of all valid n x n BPDs without using the
bottom-up search in ``bpdmonk.grid``; only ``validate`` is shared.
"""

import itertools

from bpdmonk.grid import EDGES, InvalidDiagram, validate


def all_valid_tilings_bruteforce(n: int) -> set[tuple[str, ...]]:
    """Every valid n x n BPD found by filtering all 6^(n^2) arrays.

    Edge conditions are checked in bulk with numpy; survivors go through
    ``validate``.  Practical for n <= 3.
    """
    import numpy as np

    kinds = ".-|+rj"
    bits = np.array([[d in EDGES[k] for d in "NSWE"] for k in kinds], dtype=bool)
    cells = n * n
    total = 6 ** cells
    found: set[tuple[str, ...]] = set()
    chunk = 1 << 20
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = np.empty((idx.size, cells), dtype=np.int8)
        rest = idx.copy()
        for c in range(cells):
            digits[:, c] = rest % 6
            rest //= 6
        e = bits[digits]  # (m, cells, 4) in N, S, W, E order
        ok = np.ones(idx.size, dtype=bool)
        for i in range(n):
            for j in range(n):
                c = i * n + j
                if i == 0:
                    ok &= ~e[:, c, 0]
                if j == 0:
                    ok &= ~e[:, c, 2]
                if i == n - 1:
                    ok &= e[:, c, 1]
                if j == n - 1:
                    ok &= e[:, c, 3]
                if j + 1 < n:
                    ok &= e[:, c, 3] == e[:, c + 1, 2]
                if i + 1 < n:
                    ok &= e[:, c, 1] == e[:, c + n, 0]
        for row in digits[ok]:
            rows = tuple(
                "".join(kinds[row[i * n + j]] for j in range(n)) for i in range(n))
            try:
                validate(rows)
            except InvalidDiagram:
                continue
            found.add(rows)
    return found


def all_valid_tilings_by_cuts(n: int) -> set[tuple[str, ...]]:
    """Every valid n x n BPD, rebuilt row by row from vertical cut sets.

    Row i is determined by which columns carry a vertical segment across
    its top and bottom edges; the west-to-east sweep then forces each tile.
    Independent of ``_backtrack``; used to recount enumerations.
    """
    forced = {  # (north, south, west) -> tile; cross also admits a bump
        (0, 0, 0): ".", (0, 0, 1): "-", (1, 1, 0): "|", (1, 1, 1): "+",
        (0, 1, 0): "r", (1, 0, 1): "j",
    }

    def row_for(top: tuple[int, ...], bottom: tuple[int, ...]) -> str | None:
        west, out = 0, []
        for j in range(n):
            ch = forced.get((top[j], bottom[j], west))
            if ch is None:
                return None
            out.append(ch)
            west = int("E" in EDGES[ch])
        return "".join(out) if west else None

    cuts = list(itertools.product((0, 1), repeat=n))
    found: set[tuple[str, ...]] = set()

    def extend(top: tuple[int, ...], rows: list[str]):
        if len(rows) == n:
            if all(top):
                try:
                    validate(rows)
                except InvalidDiagram:
                    return
                found.add(tuple(rows))
            return
        for bottom in cuts:
            row = row_for(top, bottom)
            if row is not None:
                rows.append(row)
                extend(bottom, rows)
                rows.pop()

    extend((0,) * n, [])
    return found
