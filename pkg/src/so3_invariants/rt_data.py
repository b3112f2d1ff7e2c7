"""Closed-form SO(3) level data: quantum dimensions, twists, Hopf pairings, Omega."""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass

from .cyclotomic import (
    CycNum,
    Level,
    RootChoice,
    _iv,
    embed,
    gauss_sum_quartic,
    gauss_sums_for_u_minus,
)
from .temperley_lieb import WorkCap, WorkCapExceeded, evaluate_template, hopf

__all__ = [
    "LevelData",
    "MuScaled",
    "OracleMismatch",
    "build_level_data",
    "omega_on_framed_unknot",
    "omega_u_minus_closed_form",
    "omega_u_plus_plus_closed_form",
    "quantum_integer",
]


class OracleMismatch(AssertionError):
    """A closed form disagrees with the Temperley-Lieb oracle."""


def quantum_integer(root: RootChoice, m: int) -> CycNum:
    """[m] = (A^{2m} - A^{-2m}) / (A^2 - A^{-2}), expanded as a geometric sum."""
    if m < 0:
        return -quantum_integer(root, -m)
    return CycNum.from_exponents(root.n, (root.s * 2 * (m - 1 - 2 * i) for i in range(m)))


@dataclass(frozen=True)
class MuScaled:
    """``value * mu**mu_exponent`` with mu the positive square root of mu_squared."""

    value: CycNum
    mu_exponent: int

    def __mul__(self, other: MuScaled) -> MuScaled:
        return MuScaled(self.value * other.value, self.mu_exponent + other.mu_exponent)

    def __pow__(self, k: int) -> MuScaled:
        return MuScaled(self.value**k, self.mu_exponent * k)

    def conj(self) -> MuScaled:
        return MuScaled(self.value.conj(), self.mu_exponent)

    def folded(self, mu_squared: CycNum) -> tuple[CycNum, int]:
        """Canonical form ``(x, e)`` with e in {0, 1}: even mu powers absorbed into x."""
        half, parity = divmod(self.mu_exponent, 2)
        return self.value * mu_squared**half, parity

    def modulus_squared(self, mu_squared: CycNum) -> CycNum:
        """|value * mu^e|^2 as an exact (real) CycNum."""
        return self.value * self.value.conj() * mu_squared**self.mu_exponent


@dataclass(frozen=True)
class LevelData:
    """Tables for one (r, A): indices run over colors 0..r-2."""

    root: RootChoice
    delta: tuple[CycNum, ...]
    twist: tuple[CycNum, ...]
    hopf: tuple[tuple[CycNum, ...], ...]
    mu_squared: CycNum

    @property
    def r(self) -> int:
        return self.root.r

    @property
    def even_labels(self) -> tuple[int, ...]:
        """Colors carried by Omega: even k from 0 to r-3."""
        return tuple(range(0, self.r - 2, 2))

    @property
    def omega_coeffs(self) -> dict[int, CycNum]:
        """Omega = mu * sum_k omega_coeffs[k] * S_k."""
        return {k: self.delta[k] for k in self.even_labels}

    def mu_interval(self, precision: int = 128):
        """Rigorous enclosure of mu > 0."""
        ball = embed(self.mu_squared, precision)
        return _iv(precision).sqrt(ball.abs())

    @property
    def mu_numeric(self) -> float:
        return float(self.mu_interval(128).mid.a)

    def to_json(self) -> str:
        def vec(x: CycNum):
            if x.den != 1:
                raise ValueError("level-data entries are expected to be integral")
            return list(x.coeffs)

        return json.dumps(
            {
                "r": self.r,
                "s": self.root.s,
                "delta": [vec(x) for x in self.delta],
                "twist": [vec(x) for x in self.twist],
                "hopf": [[vec(x) for x in row] for row in self.hopf],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> LevelData:
        raw = json.loads(text)
        root = RootChoice(Level(raw["r"]), raw["s"])
        n = root.n

        def num(c):
            return CycNum(n, c)

        data = cls(
            root=root,
            delta=tuple(num(c) for c in raw["delta"]),
            twist=tuple(num(c) for c in raw["twist"]),
            hopf=tuple(tuple(num(c) for c in row) for row in raw["hopf"]),
            mu_squared=_mu_squared(root),
        )
        if data != build_level_data(root):
            raise ValueError("level-data dump does not match the closed forms for this root")
        return data


def _mu_squared(root: RootChoice) -> CycNum:
    diff = root.A(2) - root.A(-2)
    return diff * diff / (-root.r)


def check_against_oracle(data: LevelData, cap: WorkCap = WorkCap(), max_color: int | None = None) -> int:
    """Compare the Hopf table with brute-force evaluation; returns entries checked.

    Entries beyond the work cap are skipped.
    """
    top = data.r - 2 if max_color is None else min(max_color, data.r - 2)
    checked = 0
    for j in range(top + 1):
        for k in range(top + 1):
            try:
                value = evaluate_template(hopf(j, k), data.root, cap)
            except WorkCapExceeded:
                continue
            if value != data.hopf[j][k]:
                raise OracleMismatch(f"H[{j}][{k}] disagrees with the oracle at r={data.r}, s={data.root.s}")
            checked += 1
    return checked


@functools.lru_cache(maxsize=None)
def _build(root: RootChoice) -> LevelData:
    top = root.r - 2
    delta = tuple((-1) ** k * quantum_integer(root, k + 1) for k in range(top + 1))
    twist = tuple((-1) ** k * root.A(k * k + 2 * k) for k in range(top + 1))
    hopf_table = tuple(
        tuple((-1) ** (j + k) * quantum_integer(root, (j + 1) * (k + 1)) for k in range(top + 1))
        for j in range(top + 1)
    )
    return LevelData(root, delta, twist, hopf_table, _mu_squared(root))


def build_level_data(root: RootChoice, oracle_check: bool = False, cap: WorkCap = WorkCap()) -> LevelData:
    """Level data for ``root``; with ``oracle_check`` the Hopf table is re-derived by brute force."""
    data = _build(root)
    if oracle_check:
        check_against_oracle(data, cap)
    return data


def omega_on_framed_unknot(f: int, data: LevelData) -> MuScaled:
    """<Omega> on an unknot with framing f: mu * sum_{even k} Delta_k^2 t_k^f."""
    total = CycNum.zero(data.root.n)
    for k in data.even_labels:
        total = total + data.delta[k] * data.delta[k] * data.twist[k] ** f
    return MuScaled(total, 1)


def omega_u_minus_closed_form(data: LevelData) -> MuScaled:
    """Gauss-sum closed form for the (-1)-framed unknot colored by Omega."""
    root = data.root
    short, full = gauss_sums_for_u_minus(root)
    numerator = -root.A(3) * (short - full / 2)
    return MuScaled(numerator / (root.A(2) - root.A(-2)), 1)


def omega_u_plus_plus_closed_form(data: LevelData) -> MuScaled:
    """Gauss-sum closed form for the 2-framed unknot colored by Omega."""
    root = data.root
    diff = root.A(2) - root.A(-2)
    numerator = (root.A(-4) - root.A(2 * (root.r - 1))) * gauss_sum_quartic(root)
    return MuScaled(numerator / (diff * diff), 1)
