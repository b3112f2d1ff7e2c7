"""Brute-force Kauffman bracket evaluation in the Temperley-Lieb algebra.

This module is the ground truth for the closed forms in :mod:`rt_data`.  It
knows nothing about quantum integers: loop values, Jones-Wenzl projectors and
crossings are all built from the skein relations and composed diagram by
diagram.

A pairing on ``n`` strands is a tuple ``m`` of length ``2n`` with
``m[m[i]] == i``.  Points ``0..n-1`` run left to right along the bottom edge
and points ``n..2n-1`` left to right along the top edge.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Sequence

from .cyclotomic import CycNum, RootChoice

__all__ = [
    "Template",
    "TangleSlice",
    "TLElement",
    "WorkCap",
    "WorkCapExceeded",
    "cabled_crossing",
    "chain3",
    "compose",
    "curl",
    "evaluate_template",
    "expand_crossing",
    "generate_pairings",
    "hopf",
    "identity_pairing",
    "is_noncrossing",
    "jones_wenzl",
    "loop_value",
    "twisted_unknot",
]


class WorkCapExceeded(RuntimeError):
    """Template too large for brute-force evaluation."""


# ---------------------------------------------------------------------------
# Pairings
# ---------------------------------------------------------------------------


def identity_pairing(n: int) -> tuple[int, ...]:
    return tuple(list(range(n, 2 * n)) + list(range(n)))


def cap_cup_pairing(n: int, i: int) -> tuple[int, ...]:
    """e_i: strands i and i+1 (1-based) joined by a cap below and a cup above."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"cap-cup position must lie in 1..{n - 1}, got {i}")
    m = list(identity_pairing(n))
    a, b = i - 1, i
    m[a], m[b] = b, a
    m[n + a], m[n + b] = n + b, n + a
    return tuple(m)


def _cyclic_position(p: int, n: int) -> int:
    # bottom left-to-right, then top right-to-left
    return p if p < n else 3 * n - 1 - p


def is_noncrossing(m: Sequence[int]) -> bool:
    """True if ``m`` is a fixed-point-free involution with no crossing arcs."""
    size = len(m)
    if size % 2:
        return False
    if not all(0 <= m[i] < size and m[i] != i and m[m[i]] == i for i in range(size)):
        return False
    n = size // 2
    order = sorted(range(size), key=lambda p: _cyclic_position(p, n))
    stack = []
    for p in order:
        q = m[p]
        if _cyclic_position(q, n) > _cyclic_position(p, n):
            stack.append(q)
        elif not stack or stack.pop() != p:
            return False
    return True


def _matchings(positions: tuple[int, ...]):
    if not positions:
        yield {}
        return
    first = positions[0]
    for k in range(1, len(positions), 2):
        partner = positions[k]
        for inner in _matchings(positions[1:k]):
            for outer in _matchings(positions[k + 1 :]):
                yield {first: partner, partner: first, **inner, **outer}


def generate_pairings(n: int) -> list[tuple[int, ...]]:
    """All Catalan(n) noncrossing pairings on n strands."""
    size = 2 * n
    to_point = sorted(range(size), key=lambda p: _cyclic_position(p, n))
    out = []
    for match in _matchings(tuple(range(size))):
        m = [0] * size
        for a, b in match.items():
            m[to_point[a]] = to_point[b]
        out.append(tuple(m))
    return sorted(out)


@functools.lru_cache(maxsize=500_000)
def _compose_pairings(lower: tuple[int, ...], upper: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Stack ``upper`` on top of ``lower``; returns (pairing, number of closed loops)."""
    n = len(lower) // 2
    seen = [False] * n
    out = [0] * (2 * n)

    def follow(in_upper: bool, p: int) -> int:
        while True:
            if not in_upper:
                q = lower[p]
                if q < n:
                    return q
                seen[q - n] = True
                in_upper, p = True, q - n
            else:
                q = upper[p]
                if q >= n:
                    return q
                seen[q] = True
                in_upper, p = False, q + n

    for i in range(n):
        out[i] = follow(False, i)
    for i in range(n, 2 * n):
        out[i] = follow(True, i)
    loops = 0
    for start in range(n):
        if seen[start]:
            continue
        loops += 1
        mid = start
        while not seen[mid]:
            seen[mid] = True
            nxt = upper[mid]  # bottom-to-bottom arc in upper
            seen[nxt] = True
            mid = lower[n + nxt] - n  # top-to-top arc in lower
    return tuple(out), loops


def _tensor_pairings(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    na, nb = len(a) // 2, len(b) // 2
    n = na + nb

    def relabel_a(p):
        return p if p < na else n + (p - na)

    def relabel_b(p):
        return na + p if p < nb else n + na + (p - nb)

    out = [0] * (2 * n)
    for p, q in enumerate(a):
        out[relabel_a(p)] = relabel_a(q)
    for p, q in enumerate(b):
        out[relabel_b(p)] = relabel_b(q)
    return tuple(out)


@functools.lru_cache(maxsize=200_000)
def _partial_trace_pairing(m: tuple[int, ...], k: int) -> tuple[tuple[int, ...], int]:
    """Close the rightmost ``k`` strands (top j joined to bottom j)."""
    n = len(m) // 2
    keep = n - k

    def closure(p):
        # the extra arc added by closing: top n+j <-> bottom j, for j >= keep
        if keep <= p < n:
            return n + p
        if p >= n + keep:
            return p - n
        return None

    def new_label(p):
        return p if p < keep else keep + (p - n)

    visited = [False] * (2 * n)
    out = [0] * (2 * keep)
    for p in list(range(keep)) + list(range(n, n + keep)):
        if visited[p]:
            continue
        visited[p] = True
        q = m[p]
        visited[q] = True
        while closure(q) is not None:
            q2 = closure(q)
            visited[q2] = True
            q = m[q2]
            visited[q] = True
        out[new_label(p)] = new_label(q)
        out[new_label(q)] = new_label(p)
    loops = 0
    for p in range(keep, n):
        if visited[p]:
            continue
        loops += 1
        q = p
        while not visited[q]:
            visited[q] = True
            q2 = m[q]
            visited[q2] = True
            q = closure(q2)
    return tuple(out), loops


# ---------------------------------------------------------------------------
# TLElement
# ---------------------------------------------------------------------------


def loop_value(root: RootChoice) -> CycNum:
    """Value of a trivial loop, -A^2 - A^{-2}."""
    return -root.A(2) - root.A(-2)


class StrandMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TLElement:
    """Finite linear combination of noncrossing pairings with CycNum coefficients."""

    root: RootChoice
    n: int
    terms: Mapping[tuple[int, ...], CycNum]

    def __post_init__(self):
        pruned = {d: c for d, c in self.terms.items() if not c.is_zero()}
        object.__setattr__(self, "terms", MappingProxyType(pruned))

    @classmethod
    def identity(cls, root: RootChoice, n: int) -> TLElement:
        return cls(root, n, {identity_pairing(n): CycNum.one(root.n)})

    @classmethod
    def basis(cls, root: RootChoice, pairing: Sequence[int]) -> TLElement:
        return cls(root, len(pairing) // 2, {tuple(pairing): CycNum.one(root.n)})

    @classmethod
    def cap_cup(cls, root: RootChoice, n: int, i: int) -> TLElement:
        return cls.basis(root, cap_cup_pairing(n, i))

    def _check(self, other: TLElement) -> None:
        if other.n != self.n:
            raise StrandMismatch(f"strand counts differ: {self.n} vs {other.n}")

    def __add__(self, other: TLElement) -> TLElement:
        self._check(other)
        acc = dict(self.terms)
        for d, c in other.terms.items():
            acc[d] = acc[d] + c if d in acc else c
        return TLElement(self.root, self.n, acc)

    def __neg__(self) -> TLElement:
        return TLElement(self.root, self.n, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def scale(self, c: CycNum | int) -> TLElement:
        return TLElement(self.root, self.n, {d: c * x for d, x in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def then(self, upper: TLElement) -> TLElement:
        """``upper`` stacked on top of ``self``."""
        return compose(self, upper)

    def tensor(self, other: TLElement) -> TLElement:
        """Place ``other`` to the right of ``self``."""
        acc: dict = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d = _tensor_pairings(d1, d2)
                c = c1 * c2
                acc[d] = acc[d] + c if d in acc else c
        return TLElement(self.root, self.n + other.n, acc)

    def partial_trace(self, k: int) -> TLElement:
        """Close the rightmost ``k`` strands."""
        delta = loop_value(self.root)
        acc: dict = {}
        for d, c in self.terms.items():
            d2, loops = _partial_trace_pairing(d, k)
            c = c * delta**loops if loops else c
            acc[d2] = acc[d2] + c if d2 in acc else c
        return TLElement(self.root, self.n - k, acc)

    def trace(self) -> CycNum:
        """Markov closure: a scalar."""
        closed = self.partial_trace(self.n)
        return closed.terms.get((), CycNum.zero(self.root.n))

    def coefficient(self, pairing: Sequence[int]) -> CycNum:
        return self.terms.get(tuple(pairing), CycNum.zero(self.root.n))

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.root == other.root and dict(self.terms) == dict(other.terms)

    def __len__(self):
        return len(self.terms)


def compose(a: TLElement, b: TLElement) -> TLElement:
    """Stack ``b`` on top of ``a``; every closed loop contributes -A^2 - A^{-2}."""
    a._check(b)
    delta = loop_value(a.root)
    powers = {0: CycNum.one(a.root.n)}
    acc: dict = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            d, loops = _compose_pairings(d1, d2)
            if loops not in powers:
                powers[loops] = delta**loops
            c = c1 * c2 * powers[loops] if loops else c1 * c2
            acc[d] = acc[d] + c if d in acc else c
    return TLElement(a.root, a.n, acc)


# ---------------------------------------------------------------------------
# Crossings and projectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TangleSlice:
    """One horizontal slice of a tangle: a crossing, a cap-cup, or the identity."""

    n: int
    kind: str  # "crossing" | "cap-cup" | "identity"
    i: int = 1
    sign: int = 1

    def __post_init__(self):
        if self.kind not in ("crossing", "cap-cup", "identity"):
            raise ValueError(f"unknown slice kind {self.kind!r}")
        if self.kind != "identity" and not 1 <= self.i <= self.n - 1:
            raise ValueError(f"slice position must lie in 1..{self.n - 1}")
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")

    def element(self, root: RootChoice) -> TLElement:
        if self.kind == "identity":
            return TLElement.identity(root, self.n)
        if self.kind == "cap-cup":
            return TLElement.cap_cup(root, self.n, self.i)
        return expand_crossing(self, root)


def expand_crossing(slice_: TangleSlice, root: RootChoice) -> TLElement:
    """Kauffman smoothing: positive -> A*id + A^{-1}*e_i, negative -> A^{-1}*id + A*e_i."""
    if slice_.kind != "crossing":
        raise ValueError("expand_crossing needs a crossing slice")
    a_id, a_e = (root.A(1), root.A(-1)) if slice_.sign > 0 else (root.A(-1), root.A(1))
    return TLElement(
        root,
        slice_.n,
        {identity_pairing(slice_.n): a_id, cap_cup_pairing(slice_.n, slice_.i): a_e},
    )


def _delta_sequence(root: RootChoice, upto: int) -> list[CycNum]:
    # Chebyshev recursion for the trace of p_k, independent of any closed form
    delta = loop_value(root)
    seq = [CycNum.one(root.n), delta]
    while len(seq) <= upto:
        seq.append(delta * seq[-1] - seq[-2])
    return seq


@functools.lru_cache(maxsize=None)
def jones_wenzl(n: int, root: RootChoice) -> TLElement:
    """The Jones-Wenzl projector p_n by Wenzl's recursion.

    p_{k+1} = p_k (x) 1 - (D_{k-1}/D_k) (p_k (x) 1) e_k (p_k (x) 1),
    with D_k the loop-value Chebyshev sequence.
    """
    if not 0 <= n <= root.r - 1:
        raise ValueError(f"Jones-Wenzl label must lie in 0..{root.r - 1}, got {n}")
    if n <= 1:
        return TLElement.identity(root, n)
    prev = jones_wenzl(n - 1, root).tensor(TLElement.identity(root, 1))
    d = _delta_sequence(root, n - 1)
    ratio = d[n - 2] / d[n - 1]
    middle = prev.then(TLElement.cap_cup(root, n, n - 1)).then(prev)
    return prev - middle.scale(ratio)


def cabled_crossing(root: RootChoice, a: int, b: int, sign: int = 1) -> TLElement:
    """Band of ``a`` parallel strands crossing a band of ``b`` strands.

    The left band ends on the right.  Every elementary crossing has the same
    handedness ``sign``; there are ``a*b`` of them.
    """
    n = a + b
    out = TLElement.identity(root, n)
    for strand in range(a - 1, -1, -1):
        for pos in range(strand, strand + b):
            out = out.then(expand_crossing(TangleSlice(n, "crossing", pos + 1, sign), root))
    return out


def curl(root: RootChoice, k: int, sign: int = 1) -> TLElement:
    """A k-strand band with one +-1 framing curl (partial closure of a cabled crossing)."""
    if k == 0:
        return TLElement.identity(root, 0)
    return cabled_crossing(root, k, k, sign).partial_trace(k)


# ---------------------------------------------------------------------------
# Templates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WorkCap:
    strands: int = 8
    crossings: int = 24


@dataclass(frozen=True)
class Template:
    """A small colored framed link: ``twisted_unknot``, ``hopf`` or ``chain3``.

    ``colors`` gives the Jones-Wenzl label of each component and ``framings``
    its blackboard framing.  Consecutive components in ``hopf`` / ``chain3``
    are Hopf-linked with two crossings of positive handedness.
    """

    kind: str
    colors: tuple[int, ...]
    framings: tuple[int, ...]

    def __post_init__(self):
        sizes = {"twisted_unknot": 1, "hopf": 2, "chain3": 3}
        if self.kind not in sizes:
            raise ValueError(f"unknown template {self.kind!r}")
        if len(self.colors) != sizes[self.kind] or len(self.framings) != sizes[self.kind]:
            raise ValueError(f"{self.kind} needs {sizes[self.kind]} colors and framings")

    @property
    def strands(self) -> int:
        linking = sum(self.colors)
        curls = max((2 * k for k, f in zip(self.colors, self.framings) if f), default=0)
        return max(linking, curls)

    @property
    def crossings(self) -> int:
        # each distinct cabled crossing is expanded once; curl powers reuse it
        c = self.colors
        links = sum(2 * c[i] * c[i + 1] for i in range(len(c) - 1))
        curls = sum(k * k for k, f in zip(c, self.framings) if f)
        return links + curls


def twisted_unknot(k: int, f: int = 0) -> Template:
    return Template("twisted_unknot", (k,), (f,))


def hopf(j: int, k: int, framings: tuple[int, int] = (0, 0)) -> Template:
    return Template("hopf", (j, k), tuple(framings))


def chain3(a: int, b: int, c: int, framings: tuple[int, int, int] = (0, 0, 0)) -> Template:
    return Template("chain3", (a, b, c), tuple(framings))


def _framing_element(root: RootChoice, k: int, f: int) -> TLElement:
    out = TLElement.identity(root, k)
    if k == 0 or f == 0:
        return out
    step = curl(root, k, 1 if f > 0 else -1)
    for _ in range(abs(f)):
        out = out.then(step)
    return out


def _full_twist_between(root: RootChoice, left: int, a: int, b: int, right: int) -> TLElement:
    """Bands a and b (after ``left`` straight strands) fully twisted around each other."""
    twist = cabled_crossing(root, a, b).then(cabled_crossing(root, b, a))
    return TLElement.identity(root, left).tensor(twist).tensor(TLElement.identity(root, right))


def evaluate_template(template: Template, root: RootChoice, cap: WorkCap = WorkCap()) -> CycNum:
    """Evaluate a colored framed link template directly from the skein relations."""
    if any(not 0 <= k <= root.r - 2 for k in template.colors):
        raise ValueError(f"colors must lie in 0..{root.r - 2}")
    if template.strands > cap.strands or template.crossings > cap.crossings:
        raise WorkCapExceeded(
            f"{template.kind}{template.colors} needs {template.strands} strands / "
            f"{template.crossings} crossings; cap is {cap.strands} / {cap.crossings}"
        )
    colors = template.colors
    projector = TLElement.identity(root, 0)
    framing = TLElement.identity(root, 0)
    for k, f in zip(colors, template.framings):
        projector = projector.tensor(jones_wenzl(k, root))
        framing = framing.tensor(_framing_element(root, k, f))
    body = projector.then(framing)
    total = sum(colors)
    offset = 0
    for i in range(len(colors) - 1):
        a, b = colors[i], colors[i + 1]
        rest = total - offset - a - b
        body = body.then(_full_twist_between(root, offset, a, b, rest))
        offset += a
    return body.trace()
