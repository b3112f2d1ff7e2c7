"""Rational surgery on forests of unknots.

A :class:`Presentation` is a framed link whose components are unknots; an
edge joins two components that form a Hopf clasp with linking number +1.
Rational coefficients are turned into integer framings by hanging a chain of
unknots off the component, one per entry of the negative continued fraction
p/q = x_0 - 1/(x_1 - 1/(... - 1/x_n)).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "DegenerateContinuedFraction",
    "NoApplicableMove",
    "Presentation",
    "alternate_continued_fraction",
    "attach_chain",
    "bz_chain",
    "bz_comparison",
    "bz_entries",
    "bz_family",
    "continued_fraction",
    "delete_zero_meridian",
    "expand_rational",
    "fold",
    "lens_space",
    "linking_matrix",
    "signature",
    "validate_expansion",
]


class DegenerateContinuedFraction(ValueError):
    """Folding an entry list divides by zero part way through."""


class NoApplicableMove(ValueError):
    pass


# ---------------------------------------------------------------------------
# Continued fractions
# ---------------------------------------------------------------------------


def fold(entries: Sequence[int]) -> Fraction:
    """x_0 - 1/(x_1 - 1/(... - 1/x_n))."""
    if not entries:
        raise ValueError("empty continued fraction")
    value = Fraction(entries[-1])
    for i in range(len(entries) - 2, -1, -1):
        if value == 0:
            raise DegenerateContinuedFraction(
                f"entries {list(entries)} fold through 0 at position {i + 1}"
            )
        value = entries[i] - 1 / value
    return value


def continued_fraction(p: int, q: int = 1) -> list[int]:
    """Canonical negative continued fraction of p/q (entries >= 2 after the first).

    >>> continued_fraction(7, 2)
    [4, 2]
    """
    if q == 0:
        raise ZeroDivisionError("zero denominator")
    x = Fraction(p, q)
    entries = []
    while True:
        head = math.ceil(x)
        entries.append(head)
        if head == x:
            return entries
        x = 1 / (head - x)


def alternate_continued_fraction(p: int, q: int, rng: random.Random) -> list[int]:
    """A valid but generally non-canonical expansion: each entry is rounded up or down at random."""
    if q == 0:
        raise ZeroDivisionError("zero denominator")
    x = Fraction(p, q)
    entries = []
    while True:
        if x.denominator == 1:
            entries.append(int(x))
            return entries
        head = math.ceil(x) if rng.random() < 0.5 else math.floor(x)
        entries.append(head)
        x = 1 / (head - x)


def validate_expansion(value: Fraction, entries: Sequence[int]) -> None:
    """Raise ValueError unless ``entries`` fold to ``value``."""
    got = fold(entries)
    if got != value:
        raise ValueError(f"entries {list(entries)} fold to {got}, not {value}")


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, tuple):
        return Fraction(*x)
    return Fraction(x)


@dataclass(frozen=True)
class Presentation:
    """Surgery coefficients on unknotted components plus a forest of Hopf clasps."""

    coefficients: tuple[Fraction, ...]
    edges: tuple[tuple[int, int], ...] = ()
    _adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        coeffs = tuple(_as_fraction(c) for c in self.coefficients)
        n = len(coeffs)
        edges = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for {n} components")
            edges.append((min(u, v), max(u, v)))
        if len(set(edges)) != len(edges):
            raise ValueError("multiple clasps between the same pair of components")
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        adjacency = [[] for _ in range(n)]
        for u, v in edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError("clasp graph must be a forest")
            parent[ru] = rv
            adjacency[u].append(v)
            adjacency[v].append(u)
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(self, "_adjacency", tuple(tuple(sorted(a)) for a in adjacency))

    @classmethod
    def from_framings(cls, framings: Iterable[int], edges: Iterable[tuple[int, int]] = ()) -> Presentation:
        return cls(tuple(Fraction(f) for f in framings), tuple(edges))

    @classmethod
    def empty(cls) -> Presentation:
        return cls(())

    def __len__(self) -> int:
        return len(self.coefficients)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    @property
    def framings(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError("presentation has rational coefficients; expand it first")
        return tuple(c.numerator for c in self.coefficients)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def disjoint_union(self, other: Presentation) -> Presentation:
        shift = len(self)
        return Presentation(
            self.coefficients + other.coefficients,
            self.edges + tuple((u + shift, v + shift) for u, v in other.edges),
        )

    def mirror(self) -> Presentation:
        """Orientation reversal: all coefficients negated."""
        return Presentation(tuple(-c for c in self.coefficients), self.edges)

    def with_coefficient(self, v: int, value) -> Presentation:
        coeffs = list(self.coefficients)
        coeffs[v] = _as_fraction(value)
        return Presentation(tuple(coeffs), self.edges)

    # -- JSON -----------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vertices": [{"p": c.numerator, "q": c.denominator} for c in self.coefficients],
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, raw: Mapping) -> Presentation:
        coeffs = []
        for vertex in raw["vertices"]:
            q = int(vertex.get("q", 1))
            if q == 0:
                raise ValueError("surgery coefficient with zero denominator")
            coeffs.append(Fraction(int(vertex["p"]), q))
        return cls(tuple(coeffs), tuple(tuple(e) for e in raw.get("edges", ())))

    @classmethod
    def from_json(cls, text: str) -> Presentation:
        return cls.from_dict(json.loads(text))


def attach_chain(pres: Presentation, v: int, chain: Sequence[int]) -> Presentation:
    """Frame vertex ``v`` with ``chain[0]`` and hang unknots framed ``chain[1:]`` off it.

    No continued-fraction check is made; see :func:`expand_rational`.
    """
    if not chain:
        raise ValueError("empty chain")
    coeffs = list(pres.coefficients)
    edges = list(pres.edges)
    coeffs[v] = Fraction(chain[0])
    prev = v
    for x in chain[1:]:
        coeffs.append(Fraction(x))
        edges.append((prev, len(coeffs) - 1))
        prev = len(coeffs) - 1
    return Presentation(tuple(coeffs), tuple(edges))


def expand_rational(pres: Presentation, entries: Mapping[int, Sequence[int]] | None = None) -> Presentation:
    """Replace each rational coefficient by an integer-framed pendant chain.

    ``entries`` optionally supplies the continued-fraction entries for some
    vertices (validated against the coefficient); other non-integral vertices
    use the canonical expansion.  Original vertices keep their indices and new
    chain vertices are appended in order.
    """
    entries = dict(entries or {})
    out = pres
    for v, c in enumerate(pres.coefficients):
        if v in entries:
            chain = list(entries[v])
            validate_expansion(c, chain)
        elif c.denominator != 1:
            chain = continued_fraction(c.numerator, c.denominator)
        else:
            continue
        out = attach_chain(out, v, chain)
    return out


def linking_matrix(pres: Presentation) -> np.ndarray:
    """Framings on the diagonal, 1 for each clasp."""
    framings = pres.framings
    n = len(framings)
    m = np.zeros((n, n), dtype=object)
    for i, f in enumerate(framings):
        m[i, i] = f
    for u, v in pres.edges:
        m[u, v] = m[v, u] = 1
    return m


def signature(matrix) -> int:
    """Exact signature of a symmetric integer (or rational) matrix.

    Congruent diagonalization over the rationals; when every remaining
    diagonal entry is zero an off-diagonal pivot is folded onto the diagonal.
    """
    a = [[Fraction(x) for x in row] for row in np.asarray(matrix, dtype=object).tolist()]
    n = len(a)
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    active = list(range(n))
    while active:
        pivot = next((i for i in active if a[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break  # remaining block is zero
            i, j = pair
            # row/col i += row/col j: new a[i][i] = 2 a[i][j]
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            pivot = i
        p = a[pivot][pivot]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        row = a[pivot]
        for i in active:
            factor = a[i][pivot] / p
            if factor:
                ai = a[i]
                for k in active:
                    ai[k] -= factor * row[k]
        for i in active:
            a[i][pivot] = a[pivot][i] = Fraction(0)
    return pos - neg


def lens_space(p: int, q: int) -> Presentation:
    """L(p, q) as -p/q surgery on the unknot."""
    return Presentation((Fraction(-p, q),))


def delete_zero_meridian(pres: Presentation, repeat: bool = False) -> Presentation:
    """Remove a 0-framed degree-one component together with the component it clasps."""
    current = pres
    applied = False
    while True:
        leaf = next(
            (v for v, c in enumerate(current.coefficients) if c == 0 and current.degree(v) == 1),
            None,
        )
        if leaf is None:
            if not applied:
                raise NoApplicableMove("no 0-framed component clasping exactly one other")
            return current
        other = current.neighbors(leaf)[0]
        keep = [v for v in range(len(current)) if v not in (leaf, other)]
        index = {v: i for i, v in enumerate(keep)}
        current = Presentation(
            tuple(current.coefficients[v] for v in keep),
            tuple((index[u], index[v]) for u, v in current.edges if u in index and v in index),
        )
        applied = True
        if not repeat:
            return current


# ---------------------------------------------------------------------------
# Boileau-Zieschang family
# ---------------------------------------------------------------------------


def _split_bz(r: int, xs: Sequence[int]) -> tuple[int, list[int]]:
    if r < 5 or r % 2 == 0:
        raise ValueError(f"r must be odd and >= 5, got {r}")
    if len(xs) < 2 or len(xs) % 2:
        raise ValueError("expected x_{-1}, x_0, ..., x_{2n}: an even number (>= 2) of integers")
    return xs[0], list(xs[1:])


def bz_entries(r: int, xs: Sequence[int]) -> list[int]:
    """[r x_0, x_1, r x_2, ..., r x_{2n}] from (x_{-1}, x_0, ..., x_{2n})."""
    _, tail = _split_bz(r, xs)
    return [r * x if i % 2 == 0 else x for i, x in enumerate(tail)]


def _star(center: int, leaf) -> Presentation:
    coeffs = (Fraction(center), Fraction(2), Fraction(2), Fraction(2), _as_fraction(leaf))
    return Presentation(coeffs, ((0, 1), (0, 2), (0, 3), (0, 4)))


def bz_family(r: int, xs: Sequence[int]) -> Presentation:
    """Star: a central unknot framed x_{-1} clasping leaves 2, 2, 2 and p/q."""
    center, _ = _split_bz(r, xs)
    entries = bz_entries(r, xs)
    try:
        coefficient = fold(entries)
    except DegenerateContinuedFraction as exc:
        raise DegenerateContinuedFraction(f"BZ entries {entries} are degenerate: {exc}") from None
    return _star(center, coefficient)


def bz_chain(r: int, xs: Sequence[int]) -> Presentation:
    """The BZ star with the leaf already expanded along [r x_0, x_1, ..., r x_{2n}]."""
    center, _ = _split_bz(r, xs)
    return attach_chain(_star(center, 0), 4, bz_entries(r, xs))


def bz_comparison(r: int, xs: Sequence[int]) -> Presentation:
    """The BZ chain with every r-multiple entry replaced by 0: [0, x_1, 0, ..., 0]."""
    center, tail = _split_bz(r, xs)
    chain = [0 if i % 2 == 0 else x for i, x in enumerate(tail)]
    return attach_chain(_star(center, 0), 4, chain)
