"""Verification suites: one per identity or property of the SO(3) invariant.

Each suite returns a list of :class:`Check` records; the CLI prints them and
the test-suite asserts on them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .cyclotomic import Level, RootChoice, embed, gauss_sum_quartic
from .invariant import connected_sum, conjugate, genus_bound, invariant
from .numeric import certify, certify_less
from .rt_data import (
    build_level_data,
    omega_on_framed_unknot,
    omega_u_minus_closed_form,
    omega_u_plus_plus_closed_form,
)
from .surgery import (
    DegenerateContinuedFraction,
    Presentation,
    alternate_continued_fraction,
    bz_chain,
    bz_comparison,
    bz_family,
    delete_zero_meridian,
    expand_rational,
    lens_space,
)
from .temperley_lieb import WorkCapExceeded, evaluate_template, twisted_unknot

__all__ = [
    "Check",
    "SUITES",
    "VerifyConfig",
    "random_bz_parameters",
    "random_forest",
    "rp3_value",
    "run_suite",
]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    mode: str  # "exact", "numeric" or "certified"
    detail: str = ""


@dataclass(frozen=True)
class VerifyConfig:
    r_values: tuple[int, ...] | None = None  # None: suite default
    root: str = "q4r"
    precision: int = 128
    seed: int = 0
    count: int = 20
    mode: str = "exact"  # or "numeric"

    def levels(self, default: Sequence[int]) -> list[int]:
        return list(self.r_values or default)

    def root_for(self, r: int) -> RootChoice:
        return RootChoice.parse(Level(r), self.root)


# ---------------------------------------------------------------------------
# Random instances
# ---------------------------------------------------------------------------


def random_forest(rng: random.Random, max_vertices: int = 6, framing: int = 4) -> Presentation:
    """Random integer-framed forest with 1..max_vertices components."""
    n = rng.randint(1, max_vertices)
    edges = []
    for v in range(1, n):
        if rng.random() < 0.8:
            edges.append((rng.randrange(v), v))
    framings = [rng.randint(-framing, framing) for _ in range(n)]
    return Presentation.from_framings(framings, edges)


def random_bz_parameters(rng: random.Random, r: int, max_n: int = 2, bound: int = 3) -> list[int]:
    """(x_{-1}, x_0, ..., x_{2n}) with nonzero entries in [-bound, bound] and a non-degenerate fold."""
    values = [x for x in range(-bound, bound + 1) if x]
    while True:
        n = rng.randint(0, max_n)
        xs = [rng.choice(values) for _ in range(2 * n + 2)]
        try:
            bz_family(r, xs)
        except DegenerateContinuedFraction:
            continue
        return xs


def rp3_value(r: int) -> float:
    """cos(pi/2r) / sin(pi/r)."""
    return math.cos(math.pi / (2 * r)) / math.sin(math.pi / r)


def _equal_moduli(a, b, config: VerifyConfig) -> bool:
    if config.mode == "exact":
        return a.modulus_squared() == b.modulus_squared()
    ma, mb = a.modulus(config.precision), b.modulus(config.precision)
    return abs(float(ma.mid.a) - float(mb.mid.a)) < 1e-10 * max(1.0, float(ma.mid.a))


def _mode(config: VerifyConfig) -> str:
    return "exact" if config.mode == "exact" else "numeric"


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def suite_omuminus(config: VerifyConfig) -> list[Check]:
    out = []
    for r in config.levels((5, 7, 11)):
        data = build_level_data(config.root_for(r))
        direct = omega_on_framed_unknot(-1, data)
        closed = omega_u_minus_closed_form(data)
        out.append(Check("omuminus", f"r={r} closed form == direct Omega sum", direct == closed, "exact"))
        unit = direct.modulus_squared(data.mu_squared) == 1
        out.append(Check("omuminus", f"r={r} |<Omega>_U-|^2 == 1", unit, "exact"))
        modulus = float(embed(direct.modulus_squared(data.mu_squared), config.precision).abs().mid.a)
        out.append(
            Check("omuminus", f"r={r} |<Omega>_U-| within 1e-10 of 1", abs(math.sqrt(modulus) - 1) < 1e-10, "numeric")
        )
    return out


def suite_uplusplus(config: VerifyConfig) -> list[Check]:
    out = []
    for r in config.levels((5, 7, 11)):
        root = config.root_for(r)
        data = build_level_data(root)
        direct = omega_on_framed_unknot(2, data)
        out.append(
            Check("uplusplus", f"r={r} closed form == direct Omega sum", direct == omega_u_plus_plus_closed_form(data), "exact")
        )
        if root.is_distinguished:
            value = math.sqrt(float(embed(direct.modulus_squared(data.mu_squared), config.precision).abs().mid.a))
            out.append(
                Check(
                    "uplusplus",
                    f"r={r} |<Omega>_U++| == cos(pi/2r)/sin(pi/r)",
                    abs(value - rp3_value(r)) < 1e-9,
                    "numeric",
                    f"{value:.12f}",
                )
            )
    return out


def gauss_target(root: RootChoice) -> complex:
    """i^{r(r-1)/2} sqrt(r), conjugated when A^8 is the conjugate of e^{2 pi i 8/4r}."""
    r = root.r
    value = (1j) ** ((r * (r - 1) // 2) % 4) * math.sqrt(r)
    return value if (8 * root.s) % root.n == 8 % root.n else value.conjugate()


def suite_gauss(config: VerifyConfig) -> list[Check]:
    out = []
    for r in config.levels((5, 7, 11, 13)):
        root = config.root_for(r)
        g = gauss_sum_quartic(root)
        out.append(Check("gauss", f"r={r} |G|^2 == r", g * g.conj() == r, "exact"))
        got = embed(g, config.precision).midpoint()
        target = gauss_target(root)
        out.append(
            Check("gauss", f"r={r} G == i^(r(r-1)/2) sqrt(r)", abs(got - target) < 1e-10, "numeric", f"{got:.10f}")
        )
    return out


def suite_twist(config: VerifyConfig) -> list[Check]:
    out = []
    rng = random.Random(config.seed)
    for r in config.levels((5, 7)):
        root = config.root_for(r)
        data = build_level_data(root)
        ok = all(
            omega_on_framed_unknot(f, data) == omega_on_framed_unknot(f + r * rng.randint(-3, 3), data)
            for f in range(-2 * r, 2 * r + 1)
        )
        out.append(Check("twist", f"r={r} <Omega>_U_f == <Omega>_U_(f+rm)", ok, "exact"))
        ok = all(data.twist[k] ** r == 1 for k in data.even_labels)
        out.append(Check("twist", f"r={r} t_k^r == 1 for even k", ok, "exact"))
        for k in data.even_labels:
            if 2 * k > 8:
                continue
            try:
                same = evaluate_template(twisted_unknot(k, 1), root) == evaluate_template(twisted_unknot(k, 1 + r), root)
            except WorkCapExceeded:
                continue
            out.append(Check("twist", f"r={r} oracle: color {k}, framing 1 vs 1+r", same, "exact"))
    return out


def suite_kr(config: VerifyConfig) -> list[Check]:
    out = []
    rng = random.Random(config.seed)
    for r in config.levels((5, 7)):
        root = config.root_for(r)
        root.level.require_prime("the framing-congruence check")
        failures = 0
        for _ in range(config.count):
            pres = random_forest(rng)
            shifted = Presentation.from_framings(
                [f + r * rng.randint(-2, 2) for f in pres.framings], pres.edges
            )
            if not _equal_moduli(invariant(pres, root), invariant(shifted, root), config):
                failures += 1
        out.append(
            Check("kr", f"r={r} framings shifted by multiples of r: equal |I_A| ({config.count} forests)", failures == 0, _mode(config), f"{failures} failures")
        )
    return out


def suite_cf(config: VerifyConfig) -> list[Check]:
    out = []
    rng = random.Random(config.seed)
    for r in config.levels((5, 7)):
        root = config.root_for(r)
        failures = 0
        for _ in range(config.count):
            m = rng.randint(1, 4)
            entries = [rng.randint(-5, 5) for _ in range(m)]
            shifted = [x + r * rng.randint(-2, 2) for x in entries]
            a = invariant(Presentation.from_framings(entries, [(i, i + 1) for i in range(m - 1)]), root)
            b = invariant(Presentation.from_framings(shifted, [(i, i + 1) for i in range(m - 1)]), root)
            if not _equal_moduli(a, b, config):
                failures += 1
        out.append(
            Check("cf", f"r={r} chains with entries equal mod r: equal |I_A| ({config.count} chains)", failures == 0, _mode(config), f"{failures} failures")
        )
    return out


def suite_bz(config: VerifyConfig) -> list[Check]:
    out = []
    rng = random.Random(config.seed)
    for r in config.levels((5,)):
        root = config.root_for(r)
        rp3 = invariant(Presentation.from_framings([2]), root)
        target = rp3.modulus_squared() ** 3
        for _ in range(min(config.count, 5)):
            xs = random_bz_parameters(rng, r)
            m = invariant(bz_family(r, xs), root)
            out.append(Check("bz", f"r={r} x={xs}: |I_A(M)|^2 == |I_A(RP3)|^6", m.modulus_squared() == target, "exact"))
            same_chain = invariant(bz_chain(r, xs), root).same_as(m)
            out.append(Check("bz", f"r={r} x={xs}: rational leaf == explicit chain", same_chain, "exact"))
            reduced = delete_zero_meridian(bz_comparison(r, xs), repeat=True)
            out.append(
                Check("bz", f"r={r} x={xs}: comparison reduces to three 2-framed unknots", reduced == Presentation.from_framings([2, 2, 2]), "exact")
            )
    return out


def suite_bzcor(config: VerifyConfig) -> list[Check]:
    out = []
    rng = random.Random(config.seed)
    for r in config.levels((5, 7, 11)):
        root = config.root_for(r)
        data = build_level_data(root)
        rp3 = invariant(Presentation.from_framings([2]), root)

        def mu_inv_sq(prec, data=data):
            return 1 / embed(data.mu_squared, prec).abs()

        def rp3_cubed(prec, rp3=rp3):
            return rp3.modulus(prec) ** 3

        out.append(Check("bzcor", f"r={r} mu^-2 < |I_A(RP3)|^3", certify_less(mu_inv_sq, rp3_cubed), "certified"))
        xs = random_bz_parameters(rng, r)
        m = invariant(bz_family(r, xs), root)
        exceeds = certify(lambda p: genus_bound(m, p) > 2)
        q = genus_bound(m, config.precision)
        out.append(Check("bzcor", f"r={r} x={xs}: q_A(M) > 2", exceeds, "certified", f"q_A in [{float(q.a):.6f}, {float(q.b):.6f}]"))
    return out


def suite_blowdown(config: VerifyConfig) -> list[Check]:
    out = []
    rng = random.Random(config.seed)
    for r in config.levels((5, 7)):
        root = config.root_for(r)
        failures = 0
        for _ in range(config.count):
            pres = random_forest(rng)
            base = invariant(pres, root)
            for sign in (1, -1):
                if not invariant(pres.disjoint_union(Presentation.from_framings([sign])), root).same_as(base):
                    failures += 1
        out.append(Check("blowdown", f"r={r} disjoint +-1 unknots leave I_A unchanged", failures == 0, "exact", f"{failures} failures"))
    return out


def suite_mirror(config: VerifyConfig) -> list[Check]:
    out = []
    rng = random.Random(config.seed)
    for r in config.levels((5, 7)):
        root = config.root_for(r)
        failures = 0
        for _ in range(config.count):
            pres = random_forest(rng)
            if not invariant(pres.mirror(), root).same_as(conjugate(invariant(pres, root))):
                failures += 1
        out.append(Check("mirror", f"r={r} I_A(mirror M) == conj I_A(M)", failures == 0, "exact", f"{failures} failures"))
        lens = invariant(Presentation.from_framings([4, 2], [(0, 1)]), root)
        lens_bar = invariant(Presentation.from_framings([-4, -2], [(0, 1)]), root)
        out.append(Check("mirror", f"r={r} chain [4,2] vs [-4,-2] conjugate", lens_bar.same_as(conjugate(lens)), "exact"))
    return out


def suite_connsum(config: VerifyConfig) -> list[Check]:
    out = []
    rng = random.Random(config.seed)
    for r in config.levels((5, 7)):
        root = config.root_for(r)
        failures = 0
        for _ in range(config.count):
            a, b = random_forest(rng), random_forest(rng)
            if not invariant(a.disjoint_union(b), root).same_as(connected_sum(invariant(a, root), invariant(b, root))):
                failures += 1
        out.append(Check("connsum", f"r={r} I_A(M1 # M2) == I_A(M1) I_A(M2)", failures == 0, "exact", f"{failures} failures"))
        rp3 = invariant(Presentation.from_framings([2]), root)
        triple = connected_sum(connected_sum(rp3, rp3), rp3)
        union = invariant(Presentation.from_framings([2, 2, 2]), root)
        out.append(Check("connsum", f"r={r} RP3 # RP3 # RP3 == three 2-framed unknots", triple.same_as(union), "exact"))
    return out


def suite_welldefined(config: VerifyConfig) -> list[Check]:
    out = []
    rng = random.Random(config.seed)
    for r in config.levels((5, 7)):
        root = config.root_for(r)
        failures = 0
        for _ in range(config.count):
            q = rng.randint(1, 40)
            p = rng.randint(1, 60)
            while math.gcd(p, q) != 1:
                p += 1
            pres = lens_space(p, q)
            coeff = pres.coefficients[0]
            canonical = expand_rational(pres)
            alt_entries = alternate_continued_fraction(coeff.numerator, coeff.denominator, rng)
            alternate = expand_rational(pres, {0: alt_entries})
            if not invariant(canonical, root).same_as(invariant(alternate, root)):
                failures += 1
        out.append(Check("welldefined", f"r={r} L(p,q) from two expansions: identical I_A", failures == 0, "exact", f"{failures} failures"))
    return out


SUITES: dict[str, Callable[[VerifyConfig], list[Check]]] = {
    "omuminus": suite_omuminus,
    "kr": suite_kr,
    "cf": suite_cf,
    "twist": suite_twist,
    "uplusplus": suite_uplusplus,
    "gauss": suite_gauss,
    "bz": suite_bz,
    "bzcor": suite_bzcor,
    "blowdown": suite_blowdown,
    "mirror": suite_mirror,
    "connsum": suite_connsum,
    "welldefined": suite_welldefined,
}


def run_suite(name: str, config: VerifyConfig = VerifyConfig()) -> list[Check]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None
    return suite(config)
