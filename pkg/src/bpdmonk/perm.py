"""
Permutations of {1, ..., n} in one-line notation.

Positions and values are 1-based throughout.

>>> p = Permutation.from_one_line([2, 3, 5, 1, 4])
>>> p.length()
4
>>> p.apply_t(1, 4)
Permutation(values=(1, 3, 5, 2, 4))
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Permutation", "MonkTargets", "from_one_line", "parse_perm", "all_perms",
    "length", "apply_t", "is_cover_t", "monk_targets",
]


@dataclass(frozen=True, order=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("empty permutation")
        n = len(vals)
        seen = set()
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"non-integer entry {v!r}")
            if not 1 <= v <= n:
                raise ValueError(f"value {v} out of range 1..{n}")
            if v in seen:
                raise ValueError(f"duplicate value {v}")
            seen.add(v)

    @classmethod
    def from_one_line(cls, seq: Iterable[int]) -> Permutation:
        return cls(tuple(seq))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """pi(i) for a 1-based position i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range 1..{self.n}")
        return self.values[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        sep = "" if self.n < 10 else " "
        return sep.join(map(str, self.values))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.values, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def index(self, value: int) -> int:
        """The position x with pi(x) == value."""
        return self.values.index(value) + 1

    def length(self) -> int:
        vals = self.values
        return sum(
            1 for a, b in itertools.combinations(range(self.n), 2)
            if vals[a] > vals[b]
        )

    def inversions(self) -> list[tuple[int, int]]:
        """Position pairs (i, j), i < j, with pi(i) > pi(j)."""
        vals = self.values
        return [
            (a + 1, b + 1) for a, b in itertools.combinations(range(self.n), 2)
            if vals[a] > vals[b]
        ]

    def _check_positions(self, a: int, b: int) -> None:
        if not 1 <= a < b <= self.n:
            raise ValueError(
                f"positions must satisfy 1 <= a < b <= {self.n}, got ({a}, {b})")

    def apply_t(self, a: int, b: int) -> Permutation:
        """pi * t_{a,b}: swap the entries at positions a and b."""
        self._check_positions(a, b)
        vals = list(self.values)
        vals[a - 1], vals[b - 1] = vals[b - 1], vals[a - 1]
        return Permutation(tuple(vals))

    def is_cover_t(self, a: int, b: int) -> bool:
        """True iff pi * t_{a,b} covers pi in Bruhat order."""
        self._check_positions(a, b)
        lo, hi = self.values[a - 1], self.values[b - 1]
        if lo > hi:
            return False
        return not any(lo < self.values[c] < hi for c in range(a, b - 1))

    def monk_targets(self, alpha: int) -> MonkTargets:
        if not 1 <= alpha < self.n:
            raise ValueError(f"alpha must satisfy 1 <= alpha < {self.n}, got {alpha}")
        ks = tuple(k for k in range(1, alpha) if self.is_cover_t(k, alpha))
        ls = tuple(l for l in range(alpha + 1, self.n + 1) if self.is_cover_t(alpha, l))
        return MonkTargets(ks, ls)

    def transposition_between(self, other: Permutation) -> tuple[int, int] | None:
        """(a, b) with other == self * t_{a,b}, or None."""
        if other.n != self.n:
            return None
        diff = [i for i in range(1, self.n + 1) if self(i) != other(i)]
        if len(diff) != 2:
            return None
        a, b = diff
        if self(a) != other(b) or self(b) != other(a):
            return None
        return a, b


class MonkTargets(NamedTuple):
    """Cover indices k < alpha and l > alpha for Monk's rule at alpha."""
    ks: tuple[int, ...]
    ls: tuple[int, ...]

    @property
    def precondition(self) -> bool:
        return bool(self.ls)

    @property
    def is_transition(self) -> bool:
        return len(self.ls) == 1

    @property
    def is_cotransition(self) -> bool:
        return self.precondition and not self.ks


def from_one_line(seq: Iterable[int]) -> Permutation:
    return Permutation.from_one_line(seq)


def parse_perm(text: str | Iterable[str]) -> Permutation:
    """Parse "2 3 5 1 4", "2,3,5,1,4" or a list of such tokens."""
    if isinstance(text, str):
        text = [text]
    tokens = [t for chunk in text for t in re.split(r"[,\s]+", chunk.strip()) if t]
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"not a permutation: {' '.join(tokens)!r}") from None
    return Permutation(tuple(vals))


def all_perms(n: int) -> list[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def length(pi: Permutation) -> int:
    return pi.length()


def apply_t(pi: Permutation, a: int, b: int) -> Permutation:
    return pi.apply_t(a, b)


def is_cover_t(pi: Permutation, a: int, b: int) -> bool:
    return pi.is_cover_t(a, b)


def monk_targets(pi: Permutation, alpha: int) -> MonkTargets:
    return pi.monk_targets(alpha)
