"""Exact arithmetic in the cyclotomic field Q(zeta_n), with n = 4r.

Values are stored as an integer coefficient vector in the power basis
1, zeta, ..., zeta^(d-1) (d = phi(n)) together with a positive integer
denominator.  Integral elements simply have ``den == 1``; the denominator
absorbs the rational prefactors (1/2, 1/r, inverses of non-units) that show
up in the closed-form identities, so equality stays decidable coefficient-wise.

The variable A of the Kauffman bracket is always ``zeta**s`` for a chosen
exponent s (see :class:`RootChoice`), so every level-r quantity lives in the
same ring regardless of whether A has order 2r or 4r.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from mpmath.ctx_iv import MPIntervalContext
from sympy import isprime

__all__ = [
    "CycNum",
    "ComplexBall",
    "Level",
    "NonPrimeLevel",
    "RootChoice",
    "NAMED_ROOTS",
    "cyclotomic_polynomial",
    "embed",
    "gauss_sum_quartic",
    "gauss_sums_for_u_minus",
]


# ---------------------------------------------------------------------------
# Integer polynomials (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------


def _poly_trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials with monic ``den``."""
    num = list(num)
    d = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            quot[i - d] = c
            for j in range(d + 1):
                num[i - d + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    return quot


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Return the coefficients of Phi_n, lowest degree first.

    Phi_n is obtained from x^n - 1 by exact division by Phi_d for every proper
    divisor d of n.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(_poly_trim(poly))


class _Ring:
    """Per-n tables: Phi_n and the reduced power basis zeta^j, 0 <= j < n."""

    def __init__(self, n: int):
        self.n = n
        self.phi = cyclotomic_polynomial(n)
        self.degree = len(self.phi) - 1
        powers = []
        for j in range(n):
            c = [0] * max(j + 1, self.degree)
            c[j] = 1
            powers.append(tuple(self.reduce(c)))
        self.powers = powers
        self.units = tuple(a for a in range(1, n) if math.gcd(a, n) == 1)

    def reduce(self, c: list[int]) -> list[int]:
        """Reduce a coefficient list modulo Phi_n in place; returns length-d list."""
        d, phi = self.degree, self.phi
        for i in range(len(c) - 1, d - 1, -1):
            a = c[i]
            if a:
                for j in range(d):
                    c[i - d + j] -= a * phi[j]
        del c[d:]
        if len(c) < d:
            c.extend([0] * (d - len(c)))
        return c


@functools.lru_cache(maxsize=None)
def _ring(n: int) -> _Ring:
    return _Ring(n)


# ---------------------------------------------------------------------------
# CycNum
# ---------------------------------------------------------------------------


class CycNum:
    """An element of Q(zeta_n), zeta_n = exp(2 pi i / n), in canonical form.

    ``coeffs`` are integers with respect to the power basis of length phi(n)
    and ``den`` is a positive integer; ``gcd(coeffs..., den) == 1``.
    Instances are immutable and hashable.
    """

    __slots__ = ("n", "coeffs", "den")

    def __init__(self, n: int, coeffs: Iterable[int], den: int = 1):
        ring = _ring(n)
        c = [int(x) for x in coeffs]
        if len(c) != ring.degree:
            c = ring.reduce(c)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            c = [-x for x in c]
            den = -den
        g = den
        for x in c:
            if g == 1:
                break
            g = math.gcd(g, x)
        if g != 1:
            c = [x // g for x in c]
            den //= g
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, n: int, value: int | Fraction) -> CycNum:
        value = Fraction(value)
        d = _ring(n).degree
        return cls(n, [value.numerator] + [0] * (d - 1), value.denominator)

    @classmethod
    def zero(cls, n: int) -> CycNum:
        return cls.from_rational(n, 0)

    @classmethod
    def one(cls, n: int) -> CycNum:
        return cls.from_rational(n, 1)

    @classmethod
    def zeta(cls, n: int, exponent: int = 1) -> CycNum:
        """zeta_n ** exponent (any integer exponent)."""
        return cls(n, _ring(n).powers[exponent % n])

    @classmethod
    def from_exponents(cls, n: int, exponents: Iterable[int]) -> CycNum:
        """Sum of zeta_n ** e over the given exponents (with multiplicity)."""
        ring = _ring(n)
        counts = [0] * n
        for e in exponents:
            counts[e % n] += 1
        acc = [0] * ring.degree
        for j, m in enumerate(counts):
            if m:
                for i, x in enumerate(ring.powers[j]):
                    if x:
                        acc[i] += m * x
        return cls(n, acc)

    # -- coercion helpers ---------------------------------------------------

    def _coerce(self, other) -> CycNum:
        if isinstance(other, CycNum):
            if other.n != self.n:
                raise ValueError(f"cyclotomic orders differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(self.n, other)
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.den, other.den
        return CycNum(self.n, [x * b + y * a for x, y in zip(self.coeffs, other.coeffs)], a * b)

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.n, [-x for x in self.coeffs], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = _ring(self.n)
        return CycNum(self.n, ring.reduce(_poly_mul(self.coeffs, other.coeffs)), self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycNum:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CycNum.one(self.n)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    # -- Galois structure ---------------------------------------------------

    def galois(self, a: int) -> CycNum:
        """Apply the automorphism zeta -> zeta**a (gcd(a, n) == 1)."""
        n = self.n
        if math.gcd(a, n) != 1:
            raise ValueError(f"{a} is not a unit modulo {n}")
        ring = _ring(n)
        acc = [0] * ring.degree
        for j, x in enumerate(self.coeffs):
            if x:
                for i, y in enumerate(ring.powers[(a * j) % n]):
                    if y:
                        acc[i] += x * y
        return CycNum(n, acc, self.den)

    def conj(self) -> CycNum:
        """Complex conjugate; equivalently A -> A^{-1} for every root choice."""
        return self.galois(-1)

    def _cofactor(self) -> CycNum:
        # product of all non-identity conjugates
        out = CycNum.one(self.n)
        for a in _ring(self.n).units[1:]:
            out = out * self.galois(a)
        return out

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        if self.is_zero():
            return Fraction(0)
        value = (self * self._cofactor()).rational_value()
        assert value is not None
        return value

    def inverse(self) -> CycNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        cof = self._cofactor()
        nrm = (self * cof).rational_value()
        assert nrm is not None
        return cof * (1 / nrm)

    def is_unit(self) -> bool:
        """True when the element is a unit of the ring of integers Z[zeta_n]."""
        return self.den == 1 and not self.is_zero() and abs(self.norm()) == 1

    # -- predicates / conversions -------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def rational_value(self) -> Fraction | None:
        """The value as a Fraction if the element lies in Q, else None."""
        if any(self.coeffs[1:]):
            return None
        return Fraction(self.coeffs[0], self.den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_rational(self.n, other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.n == other.n and self.den == other.den and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs, self.den))

    def __repr__(self):
        terms = []
        for j, x in enumerate(self.coeffs):
            if not x:
                continue
            mono = "1" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if j == 0:
                terms.append(str(x))
            elif x == 1:
                terms.append(mono)
            elif x == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{x}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        if self.den != 1:
            body = f"({body})/{self.den}"
        return f"CycNum[{self.n}]({body})"

    def __reduce__(self):
        return (CycNum, (self.n, self.coeffs, self.den))


# ---------------------------------------------------------------------------
# Levels and roots
# ---------------------------------------------------------------------------


class NonPrimeLevel(ValueError):
    """Raised by operations whose identities are only claimed for prime r."""


@dataclass(frozen=True)
class Level:
    """The level r: an odd integer >= 5.  Primality is checked once and recorded."""

    r: int
    is_prime: bool = field(init=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 5 or self.r % 2 == 0:
            raise ValueError(f"level r must be an odd integer >= 5, got {self.r!r}")
        object.__setattr__(self, "is_prime", bool(isprime(self.r)))

    @property
    def n(self) -> int:
        """Order of the ambient cyclotomic field, 4r."""
        return 4 * self.r

    def require_prime(self, what: str) -> None:
        if not self.is_prime:
            raise NonPrimeLevel(f"{what} requires a prime level, got r={self.r}")


# name -> exponent s as a function of r, with A = zeta_{4r}^s
NAMED_ROOTS = {
    "q4r": lambda r: 1,  # e^{2 pi i/4r}
    "q4r-conj": lambda r: 4 * r - 1,  # e^{-2 pi i/4r}
    "iq4r": lambda r: r + 1,  # i e^{2 pi i/4r}
    "iq4r-conj": lambda r: 3 * r - 1,  # complex conjugate of iq4r
}


@dataclass(frozen=True)
class RootChoice:
    """A = zeta_{4r}^s.

    Accepted orders of A are 2r and 4r, plus order r: the named root
    ``iq4r`` (resp. ``iq4r-conj``) has order r when r = 3 mod 4.
    """

    level: Level
    s: int

    def __post_init__(self):
        n = self.level.n
        if not 1 <= self.s < n:
            raise ValueError(f"root exponent must satisfy 1 <= s < {n}, got {self.s}")
        if self.order not in (self.level.r, 2 * self.level.r, n):
            raise ValueError(
                f"A = zeta_{n}^{self.s} has order {self.order}; need a primitive "
                f"{2 * self.level.r}th or {n}th root of unity"
            )

    @classmethod
    def named(cls, level: Level | int, name: str = "q4r") -> RootChoice:
        if isinstance(level, int):
            level = Level(level)
        try:
            s = NAMED_ROOTS[name](level.r)
        except KeyError:
            raise ValueError(f"unknown root name {name!r}; expected one of {sorted(NAMED_ROOTS)}") from None
        return cls(level, s)

    @classmethod
    def parse(cls, level: Level | int, spec: str) -> RootChoice:
        """Parse a CLI-style root spec: a name from NAMED_ROOTS or ``s=<int>``."""
        if isinstance(level, int):
            level = Level(level)
        if spec.startswith("s="):
            return cls(level, int(spec[2:]))
        return cls.named(level, spec)

    @property
    def r(self) -> int:
        return self.level.r

    @property
    def n(self) -> int:
        return self.level.n

    @property
    def order(self) -> int:
        return self.n // math.gcd(self.s, self.n)

    @property
    def name(self) -> str:
        for name, fn in NAMED_ROOTS.items():
            if fn(self.r) == self.s:
                return name
        return f"s={self.s}"

    @property
    def is_distinguished(self) -> bool:
        """One of the four roots e^{+-2pi i/4r}, i e^{2pi i/4r} and its conjugate."""
        return any(fn(self.r) == self.s for fn in NAMED_ROOTS.values())

    def A(self, power: int = 1) -> CycNum:
        """A**power as an exact CycNum."""
        return CycNum.zeta(self.n, self.s * power)


# ---------------------------------------------------------------------------
# Complex embedding with rigorous error bounds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComplexBall:
    """Rectangular complex interval ``re + i*im`` from an mpmath interval context."""

    re: object
    im: object
    prec: int

    @property
    def radius(self) -> float:
        """Half of the larger side of the enclosing rectangle, rounded up to a float."""
        half = max(self.re.delta, self.im.delta).b / 2
        return math.nextafter(float(half.b), math.inf)

    def midpoint(self) -> complex:
        return complex(float(self.re.mid.a), float(self.im.mid.a))

    def abs2(self):
        """Interval enclosure of |z|^2."""
        return self.re**2 + self.im**2

    def abs(self):
        ctx = _iv(self.prec)
        return ctx.sqrt(self.abs2())

    def contains(self, z: complex) -> bool:
        return (z.real in self.re) and (z.imag in self.im)


def _iv(prec: int) -> MPIntervalContext:
    # private context per precision: no shared mutable precision state
    ctx = MPIntervalContext()
    ctx.prec = prec
    return ctx


@functools.lru_cache(maxsize=64)
def _unit_circle(n: int, prec: int):
    ctx = _iv(prec)
    angle = 2 * ctx.pi / n
    return ctx, tuple((ctx.cos(angle * j), ctx.sin(angle * j)) for j in range(_ring(n).degree))


def embed(x: CycNum, precision: int = 128) -> ComplexBall:
    """Evaluate ``x`` at zeta_n = exp(2 pi i/n) with outward-rounded intervals.

    The root choice is already encoded in ``x`` (A = zeta^s), so no root
    argument is needed here.
    """
    if precision < 64:
        raise ValueError("precision must be at least 64 bits")
    ctx, basis = _unit_circle(x.n, precision)
    re = ctx.mpf(0)
    im = ctx.mpf(0)
    for c, (cs, sn) in zip(x.coeffs, basis):
        if c:
            re += c * cs
            im += c * sn
    if x.den != 1:
        re /= x.den
        im /= x.den
    return ComplexBall(re, im, precision)


# ---------------------------------------------------------------------------
# Gauss sums
# ---------------------------------------------------------------------------


def gauss_sum_quartic(root: RootChoice) -> CycNum:
    """sum_{k=0}^{r-1} A^{8k^2}; its squared modulus is r for prime r."""
    root.level.require_prime("gauss_sum_quartic")
    r = root.r
    return CycNum.from_exponents(root.n, (8 * root.s * k * k for k in range(r)))


def gauss_sums_for_u_minus(root: RootChoice) -> tuple[CycNum, CycNum]:
    """The two sums in the closed form of the Omega-colored (-1)-framed unknot.

    Returns ``(sum_{k<r} A^{-4k^2}, sum_{k<4r} A^{-k^2})``; the second one is
    not halved.
    """
    root.level.require_prime("gauss_sums_for_u_minus")
    r, s = root.r, root.s
    short = CycNum.from_exponents(root.n, (-4 * s * k * k for k in range(r)))
    full = CycNum.from_exponents(root.n, (-s * k * k for k in range(4 * r)))
    return short, full
