"""The SO(3) invariant I_A(M) of a forest presentation and the genus bound q_A(M)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclotomic import CycNum, RootChoice, _iv, embed
from .numeric import certify, interval_endpoints
from .rt_data import LevelData, MuScaled, build_level_data, omega_on_framed_unknot
from .surgery import Presentation, expand_rational, linking_matrix, signature

__all__ = [
    "ComponentCapExceeded",
    "InvariantResult",
    "LevelMismatch",
    "NonDistinguishedRoot",
    "colored_state_sum",
    "conjugate",
    "connected_sum",
    "genus_bound",
    "genus_bound_exceeds",
    "invariant",
    "mirror",
]

DEFAULT_COMPONENT_CAP = 64


class ComponentCapExceeded(ValueError):
    pass


class LevelMismatch(ValueError):
    pass


class NonDistinguishedRoot(ValueError):
    """The genus bound is only available at e^{+-2 pi i/4r} and i e^{2 pi i/4r} (and conjugate)."""


def colored_state_sum(
    pres: Presentation, data: LevelData, cap: int = DEFAULT_COMPONENT_CAP
) -> MuScaled:
    """<Omega, ..., Omega>_L for an integer-framed forest, by leaf-to-root contraction.

    Each vertex colored k contributes Delta_k * t_k^f * Delta_k^(1 - deg), each
    clasp H[k_u][k_v]; the result carries one factor of mu per component.
    """
    framings = pres.framings
    if len(framings) > cap:
        raise ComponentCapExceeded(f"{len(framings)} components exceeds the cap of {cap}")
    colors = data.even_labels
    n = data.root.n
    one = CycNum.one(n)
    delta_inv = {k: data.delta[k].inverse() for k in colors}

    def weight(v: int, k: int) -> CycNum:
        w = data.delta[k] * data.twist[k] ** framings[v]
        excess = pres.degree(v) - 1
        if excess > 0:
            w = w * delta_inv[k] ** excess
        elif excess < 0:
            w = w * data.delta[k]
        return w

    total = one
    visited = [False] * len(framings)
    for start in range(len(framings)):
        if visited[start]:
            continue
        # iterative DFS; children are processed before their parent
        order, parent = [], {start: None}
        stack = [start]
        while stack:
            v = stack.pop()
            visited[v] = True
            order.append(v)
            for u in pres.neighbors(v):
                if u != parent[v]:
                    parent[u] = v
                    stack.append(u)
        incoming: dict[int, list[CycNum]] = {v: [one] * len(colors) for v in order}
        for v in reversed(order):
            local = [weight(v, k) * incoming[v][i] for i, k in enumerate(colors)]
            p = parent[v]
            if p is None:
                component = sum(local[1:], local[0])
                total = total * component
                continue
            msg = []
            for k_parent in colors:
                acc = CycNum.zero(n)
                for i, k in enumerate(colors):
                    acc = acc + local[i] * data.hopf[k][k_parent]
                msg.append(acc)
            incoming[p] = [a * b for a, b in zip(incoming[p], msg)]
    return MuScaled(total, len(framings))


@dataclass(frozen=True)
class InvariantResult:
    """I_A(M) = value * mu**mu_exponent, together with sigma(L)."""

    root: RootChoice
    value: CycNum
    mu_exponent: int
    signature: int

    @property
    def data(self) -> LevelData:
        return build_level_data(self.root)

    def exact(self) -> tuple[CycNum, int]:
        """Canonical exact form (x, e), e in {0, 1}, so that I_A = x * mu**e."""
        return MuScaled(self.value, self.mu_exponent).folded(self.data.mu_squared)

    def same_as(self, other: InvariantResult) -> bool:
        """Exact equality of the invariants (not just of the bookkeeping)."""
        return self.root == other.root and self.exact() == other.exact()

    def modulus_squared(self) -> CycNum:
        return MuScaled(self.value, self.mu_exponent).modulus_squared(self.data.mu_squared)

    def modulus(self, precision: int = 128):
        """Interval enclosure of |I_A(M)|."""
        ctx = _iv(precision)
        return ctx.sqrt(embed(self.modulus_squared(), precision).abs())

    def genus_bound(self, precision: int = 128):
        return genus_bound(self, precision)

    def to_dict(self, precision: int = 128) -> dict:
        modulus = interval_endpoints(self.modulus(precision))
        try:
            q = list(interval_endpoints(self.genus_bound(precision)))
        except NonDistinguishedRoot:
            q = None
        return {
            "r": self.root.r,
            "root": self.root.name,
            "sigma": self.signature,
            "modulus": list(modulus),
            "q_A": q,
            "bracket_coeffs": list(self.value.coeffs),
            "bracket_den": self.value.den,
            "mu_exponent": self.mu_exponent,
        }


def invariant(pres: Presentation, data: LevelData | RootChoice, cap: int = DEFAULT_COMPONENT_CAP) -> InvariantResult:
    """I_A(M) = <Omega, ..., Omega>_L * <Omega>_{U_-}^sigma(L)."""
    if isinstance(data, RootChoice):
        data = build_level_data(data)
    expanded = pres if pres.is_integral else expand_rational(pres)
    sigma = signature(linking_matrix(expanded))
    bracket = colored_state_sum(expanded, data, cap)
    u_minus = omega_on_framed_unknot(-1, data)
    total = bracket * u_minus**sigma
    return InvariantResult(data.root, total.value, total.mu_exponent, sigma)


def connected_sum(a: InvariantResult, b: InvariantResult) -> InvariantResult:
    """I_A(M1 # M2) = I_A(M1) * I_A(M2)."""
    if a.root != b.root:
        raise LevelMismatch(f"roots differ: r={a.root.r}, s={a.root.s} vs r={b.root.r}, s={b.root.s}")
    return InvariantResult(a.root, a.value * b.value, a.mu_exponent + b.mu_exponent, a.signature + b.signature)


def mirror(pres: Presentation) -> Presentation:
    """Presentation of the orientation-reversed manifold."""
    return pres.mirror()


def conjugate(result: InvariantResult) -> InvariantResult:
    """The invariant of the mirror image: complex conjugation (A -> A^{-1})."""
    return InvariantResult(result.root, result.value.conj(), result.mu_exponent, -result.signature)


def genus_bound(result: InvariantResult, precision: int = 128):
    """q_A = ln|I_A| / ln(1/mu), an interval; q_A <= g(M) at the distinguished roots."""
    if not result.root.is_distinguished:
        raise NonDistinguishedRoot(f"s={result.root.s} is not a distinguished root for r={result.root.r}")
    ctx = _iv(precision)
    modsq = result.modulus_squared()
    if modsq.is_zero():
        return ctx.mpf([-math.inf, -math.inf])
    mu_sq = embed(result.data.mu_squared, precision).abs()
    return ctx.log(embed(modsq, precision).abs()) / -ctx.log(mu_sq)


def genus_bound_exceeds(result: InvariantResult, threshold: float, start: int = 64, cap: int = 1024) -> bool:
    """Certified decision of q_A(M) > threshold."""
    return certify(lambda p: genus_bound(result, p) > threshold, start, cap)
