"""
Sparse integer polynomials in x_1..x_n, y_1..y_n, and Schubert polynomials.

A monomial is a pair of exponent tuples ``(x, y)``; a polynomial maps
monomials to non-zero Python ints.  Schubert polynomials come either from
summing over bumpless pipe dreams or, independently, from divided
differences applied to the longest element.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from .grid import enumerate_bpds
from .perm import Permutation

__all__ = [
    "Monomial", "Poly", "NotExactDivision",
    "schubert_bpd", "schubert_dd", "divided_difference",
    "add", "mul", "equal", "scale_linear", "to_canonical_string",
]


class NotExactDivision(ArithmeticError):
    pass


class Monomial(NamedTuple):
    x: tuple[int, ...]
    y: tuple[int, ...]

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n, (0,) * n)

    @property
    def degree(self) -> int:
        return sum(self.x) + sum(self.y)

    def __mul__(self, other):  # type: ignore[override]
        return Monomial(
            tuple(a + b for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.y, other.y)),
        )

    def to_string(self) -> str:
        factors = []
        for name, exps in (("x", self.x), ("y", self.y)):
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    factors.append(f"{name}{i}")
                elif e > 1:
                    factors.append(f"{name}{i}^{e}")
        return "*".join(factors)


class Poly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | None = None):
        self.n = n
        clean = {}
        for m, c in (terms or {}).items():
            if len(m.x) != n or len(m.y) != n:
                raise ValueError(f"monomial {m} does not have {n} variables of each kind")
            if c:
                clean[m] = int(c)
        self.terms: dict[Monomial, int] = clean
        self._hash = None

    # constructors

    @classmethod
    def const(cls, n: int, c: int) -> Poly:
        return cls(n, {Monomial.one(n): c})

    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls(n)

    @classmethod
    def x(cls, n: int, i: int) -> Poly:
        if not 1 <= i <= n:
            raise ValueError(f"x{i} out of range for n={n}")
        ex = [0] * n
        ex[i - 1] = 1
        return cls(n, {Monomial(tuple(ex), (0,) * n): 1})

    @classmethod
    def y(cls, n: int, j: int) -> Poly:
        if not 1 <= j <= n:
            raise ValueError(f"y{j} out of range for n={n}")
        ey = [0] * n
        ey[j - 1] = 1
        return cls(n, {Monomial((0,) * n, tuple(ey)): 1})

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1) -> Poly:
        return cls(len(m.x), {m: coeff})

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=-1)

    def coefficients(self) -> list[int]:
        return list(self.terms.values())

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.n, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self.n}, {to_canonical_string(self)!r})"

    def __str__(self):
        return to_canonical_string(self)

    # arithmetic

    def _coerce(self, other) -> Poly:
        if isinstance(other, int):
            return Poly.const(self.n, other)
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"incompatible sizes {self.n} and {other.n}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly.const(self.n, 1)
        for _ in range(e):
            out = out * self
        return out

    def swap_x(self, i: int) -> Poly:
        """Exchange x_i and x_{i+1}."""
        out = {}
        for m, c in self.terms.items():
            ex = list(m.x)
            ex[i - 1], ex[i] = ex[i], ex[i - 1]
            out[Monomial(tuple(ex), m.y)] = c
        return Poly(self.n, out)

    def set_y_zero(self) -> Poly:
        zero = (0,) * self.n
        return Poly(self.n, {m: c for m, c in self.terms.items() if m.y == zero})

    def evaluate(self, xs: Iterable[int], ys: Iterable[int] | None = None) -> int:
        xs = list(xs)
        ys = list(ys) if ys is not None else [0] * self.n
        total = 0
        for m, c in self.terms.items():
            v = c
            for a, e in zip(xs, m.x):
                v *= a ** e
            for b, e in zip(ys, m.y):
                v *= b ** e
            total += v
        return total


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def mul(f: Poly | int, g: Poly | int) -> Poly:
    return f * g  # type: ignore[operator]


def equal(f: Poly, g: Poly) -> bool:
    return f == g


def scale_linear(f: Poly, c: str | int) -> Poly:
    """Multiply by an integer or by a linear factor written "x3" or "-y2"."""
    if isinstance(c, int):
        return f * c
    if c.startswith("x"):
        return f * Poly.x(f.n, int(c[1:]))
    if c.startswith("-y"):
        return f * -Poly.y(f.n, int(c[2:]))
    raise ValueError(f"expected an integer, 'x<i>' or '-y<j>', got {c!r}")


def _divide_by_x_difference(g: Poly, i: int) -> Poly:
    """Exact quotient g / (x_i - x_{i+1}) by synthetic division in x_i."""
    n = g.n
    # group g as sum_k c_k * x_i^k with c_k free of x_i
    by_power: dict[int, dict[Monomial, int]] = {}
    for m, c in g.terms.items():
        k = m.x[i - 1]
        ex = list(m.x)
        ex[i - 1] = 0
        by_power.setdefault(k, {})[Monomial(tuple(ex), m.y)] = c
    if not by_power:
        return Poly.zero(n)
    top = max(by_power)
    x_next = Poly.x(n, i + 1)
    x_i = Poly.x(n, i)
    quotient = Poly.zero(n)
    carry = Poly.zero(n)  # running coefficient q_{k-1} = c_k + x_{i+1} q_k
    for k in range(top, 0, -1):
        carry = Poly(n, by_power.get(k, {})) + x_next * carry
        quotient = quotient + carry * x_i ** (k - 1)
    remainder = Poly(n, by_power.get(0, {})) + x_next * carry
    if not remainder.is_zero():
        raise NotExactDivision(
            f"(x{i} - x{i + 1}) does not divide the input; remainder {remainder}")
    return quotient


def divided_difference(f: Poly, i: int) -> Poly:
    """(f - s_i f) / (x_i - x_{i+1}); y variables are untouched."""
    if not 1 <= i < f.n:
        raise ValueError(f"index {i} out of range 1..{f.n - 1}")
    return _divide_by_x_difference(f - f.swap_x(i), i)


def _longest(n: int, double: bool) -> Poly:
    out = Poly.const(n, 1)
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            out = out * (Poly.x(n, i) - Poly.y(n, j) if double else Poly.x(n, i))
    return out


@lru_cache(maxsize=None)
def _schubert_dd(values: tuple[int, ...], double: bool, largest_first: bool) -> Poly:
    n = len(values)
    ascents = [i for i in range(1, n) if values[i - 1] < values[i]]
    if not ascents:
        return _longest(n, double)
    i = ascents[-1] if largest_first else ascents[0]
    up = list(values)
    up[i - 1], up[i] = up[i], up[i - 1]
    return divided_difference(_schubert_dd(tuple(up), double, largest_first), i)


def schubert_dd(pi: Permutation, double: bool = False, *, largest_first: bool = False) -> Poly:
    """Schubert polynomial by divided differences from the longest element.

    Each step picks the smallest ascent i of the current permutation w and
    uses S_w = d_i S_{w s_i}; ``largest_first`` picks the largest instead,
    giving a second reduced path.
    """
    return _schubert_dd(pi.values, double, largest_first)


def schubert_bpd(pi: Permutation, double: bool = False) -> Poly:
    """Sum over BPD(pi) of prod over blanks (i, j) of (x_i - y_j), or x_i."""
    n = pi.n
    total = Poly.zero(n)
    for d in enumerate_bpds(pi):
        term = Poly.const(n, 1)
        for i, j in d.blanks():
            term = term * (Poly.x(n, i) - Poly.y(n, j) if double else Poly.x(n, i))
        total = total + term
    return total


def _term_order(m: Monomial):
    # total degree descending, then exponent vector descending
    return (-m.degree, tuple(-e for e in m.x + m.y))


def to_canonical_string(f: Poly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for m in sorted(f.terms, key=_term_order):
        c = f.terms[m]
        body = m.to_string()
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not parts:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(parts)
