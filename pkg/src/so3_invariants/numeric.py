"""Certified numeric comparisons with automatic precision doubling."""

from __future__ import annotations

import math
from typing import Callable

from .cyclotomic import _iv

DEFAULT_START_PRECISION = 64
DEFAULT_MAX_PRECISION = 1024


class PrecisionExhausted(ArithmeticError):
    """A comparison could not be decided within the precision cap."""


def certify(
    predicate: Callable[[int], bool | None],
    start: int = DEFAULT_START_PRECISION,
    cap: int = DEFAULT_MAX_PRECISION,
) -> bool:
    """Run ``predicate(prec)`` with doubling precision until it returns a bool.

    ``predicate`` follows mpmath interval comparison semantics: ``None`` means
    the enclosures overlap and the answer is not yet known.
    """
    prec = start
    while prec <= cap:
        answer = predicate(prec)
        if answer is not None:
            return bool(answer)
        prec *= 2
    raise PrecisionExhausted(f"comparison undecided at {cap} bits")


def certify_less(
    lhs: Callable[[int], object],
    rhs: Callable[[int], object],
    start: int = DEFAULT_START_PRECISION,
    cap: int = DEFAULT_MAX_PRECISION,
) -> bool:
    """Decide ``lhs < rhs`` where both sides are interval-valued functions of precision."""
    return certify(lambda p: lhs(p) < rhs(p), start, cap)


def interval_endpoints(x) -> tuple[float, float]:
    """Outward-rounded float endpoints of an mpmath interval."""
    lo, hi = float(x.a), float(x.b)
    if math.isfinite(lo):
        lo = math.nextafter(lo, -math.inf)
    if math.isfinite(hi):
        hi = math.nextafter(hi, math.inf)
    return lo, hi


def interval(value, prec: int = 128):
    """Coerce a number (or an interval from another context) into a context at ``prec``."""
    ctx = _iv(prec)
    if hasattr(value, "a") and hasattr(value, "b"):
        return ctx.mpf([value.a, value.b])
    return ctx.mpf(value)
