"""Command-line interface: ``so3inv invariant|verify|oracle|table``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 computation error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .cyclotomic import Level, RootChoice
from .invariant import InvariantResult, NonDistinguishedRoot, genus_bound_exceeds, invariant
from .numeric import PrecisionExhausted, interval_endpoints
from .rt_data import build_level_data
from .surgery import DegenerateContinuedFraction, Presentation, bz_family
from .temperley_lieb import WorkCapExceeded, evaluate_template, hopf, twisted_unknot
from .verify import SUITES, Check, VerifyConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    r_values: tuple[int, ...] | None
    root: str
    precision: int
    mode: str
    output: str
    seed: int

    def __post_init__(self):
        for r in self.r_values or ():
            if r < 5 or r % 2 == 0:
                raise UsageError(f"--r values must be odd and >= 5, got {r}")
        if self.precision < 64:
            raise UsageError("--precision must be at least 64")

    def levels(self, default: Sequence[int]) -> list[int]:
        return list(self.r_values or default)

    def root_for(self, r: int) -> RootChoice:
        try:
            return RootChoice.parse(Level(r), self.root)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


def _r_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fmt(x: float) -> str:
    return repr(float(x))


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------


def _emit_rows(rows: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(row.get(k)) for k in columns})
    else:
        widths = {c: max(len(c), *(len(_csv_cell(row.get(c))) for row in rows)) if rows else len(c) for c in columns}
        out.write("  ".join(c.ljust(widths[c]) for c in columns) + "\n")
        for row in rows:
            out.write("  ".join(_csv_cell(row.get(c)).ljust(widths[c]) for c in columns) + "\n")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_csv_cell(v) for v in value) + "]"
    return str(value)


def _certified_gt(result: InvariantResult, threshold: float) -> bool | None:
    try:
        return genus_bound_exceeds(result, threshold)
    except (NonDistinguishedRoot, PrecisionExhausted):
        return None


def _result_row(result: InvariantResult, precision: int, **extra) -> dict:
    row = dict(extra)
    row.update(result.to_dict(precision))
    row["q_A_gt_2"] = _certified_gt(result, 2)
    return row


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _load_presentations(path: str) -> list[Presentation]:
    try:
        with open(path) as fh:
            raw = json.load(fh)
        items = raw if isinstance(raw, list) else [raw]
        return [Presentation.from_dict(item) for item in items]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read presentation file {path}: {exc}") from None


def cmd_invariant(path: str, config: RunConfig, out) -> int:
    presentations = _load_presentations(path)
    rows = []
    for index, pres in enumerate(presentations):
        for r in config.levels((5,)):
            result = invariant(pres, config.root_for(r))
            rows.append(_result_row(result, config.precision, index=index))
    columns = ["index", "r", "root", "sigma", "modulus", "q_A", "q_A_gt_2", "mu_exponent"]
    _emit_rows(rows, columns, config.output, out)
    return EXIT_OK


def cmd_verify(suite: str, config: RunConfig, out, count: int = 20) -> int:
    if suite not in SUITES and suite != "all":
        raise UsageError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}, all")
    vconfig = VerifyConfig(
        r_values=config.r_values,
        root=config.root,
        precision=config.precision,
        seed=config.seed,
        count=count,
        mode="exact" if config.mode == "exact" else "numeric",
    )
    names = list(SUITES) if suite == "all" else [suite]
    checks: list[Check] = []
    for name in names:
        checks.extend(run_suite(name, vconfig))
    rows = [
        {"suite": c.suite, "check": c.name, "status": "PASS" if c.passed else "FAIL", "mode": c.mode, "detail": c.detail}
        for c in checks
    ]
    _emit_rows(rows, ["suite", "status", "mode", "check", "detail"], config.output, out)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def oracle_checks(r: int, root_spec: str = "q4r") -> list[dict]:
    """Temperley-Lieb brute force vs closed-form Delta, t and H tables at level r."""
    root = RootChoice.parse(Level(r), root_spec)
    data = build_level_data(root)
    top_twist = min(3, r - 2)
    top_hopf = 3 if r == 5 else 2
    rows = []

    def record(table, key, expected, template):
        try:
            got = evaluate_template(template, root)
        except WorkCapExceeded as exc:
            rows.append({"r": r, "table": table, "entry": key, "status": "SKIP", "detail": str(exc)})
            return
        rows.append({"r": r, "table": table, "entry": key, "status": "PASS" if got == expected else "FAIL", "detail": ""})

    for k in range(top_twist + 1):
        record("delta", f"k={k}", data.delta[k], twisted_unknot(k, 0))
    for k in range(top_twist + 1):
        for f in range(-2, 3):
            record("twist", f"k={k},f={f}", data.twist[k] ** f * data.delta[k], twisted_unknot(k, f))
    for j in range(top_hopf + 1):
        for k in range(top_hopf + 1):
            record("hopf", f"j={j},k={k}", data.hopf[j][k], hopf(j, k))
    return rows


def cmd_oracle(config: RunConfig, out) -> int:
    rows = []
    for r in config.levels((5, 7)):
        rows.extend(oracle_checks(r, config.root))
    _emit_rows(rows, ["r", "table", "entry", "status", "detail"], config.output, out)
    return EXIT_FAIL if any(row["status"] == "FAIL" for row in rows) else EXIT_OK


def _family_instances(spec: str) -> list[tuple[str, str, object]]:
    """``lens:4,2`` | ``bz:x_-1,x_0,...`` | ``rp3-powers:k``."""
    name, _, args = spec.partition(":")
    try:
        values = [int(x) for x in args.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad family arguments in {spec!r}") from None
    if name == "lens":
        if not values:
            raise UsageError("lens family needs continued-fraction entries, e.g. lens:4,2")
        pres = Presentation.from_framings(values, [(i, i + 1) for i in range(len(values) - 1)])
        return [(name, args, lambda r, pres=pres: pres)]
    if name == "rp3-powers":
        k = values[0] if values else 3
        pres = Presentation.from_framings([2] * k)
        return [(name, str(k), lambda r, pres=pres: pres)]
    if name == "bz":
        if len(values) < 2 or len(values) % 2:
            raise UsageError("bz family needs x_-1,x_0,...,x_2n (an even count >= 2)")
        return [(name, args, lambda r, xs=tuple(values): bz_family(r, xs))]
    raise UsageError(f"unknown family {name!r}; expected lens, bz or rp3-powers")


TABLE_COLUMNS = ["family", "instance", "r", "sigma", "modulus_mid", "q_A_lo", "q_A_hi", "q_A_gt_2"]


def cmd_table(families: Sequence[str], config: RunConfig, out) -> int:
    instances = [inst for spec in families for inst in _family_instances(spec)]
    rows = []
    for family, label, build in instances:
        for r in config.levels((5, 7, 11)):
            root = config.root_for(r)
            try:
                pres = build(r)
            except DegenerateContinuedFraction as exc:
                raise UsageError(str(exc)) from None
            result = invariant(pres, root)
            modulus = result.modulus(config.precision)
            try:
                q_lo, q_hi = interval_endpoints(result.genus_bound(config.precision))
            except NonDistinguishedRoot:
                q_lo = q_hi = None
            rows.append(
                {
                    "family": family,
                    "instance": label,
                    "r": r,
                    "sigma": result.signature,
                    "modulus_mid": f"{float(modulus.mid.a):.10f}",
                    "q_A_lo": q_lo,
                    "q_A_hi": q_hi,
                    "q_A_gt_2": _certified_gt(result, 2),
                }
            )
    _emit_rows(rows, TABLE_COLUMNS, config.output, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=_r_list, default=None, help="comma-separated odd levels >= 5, e.g. 5,7,11")
    common.add_argument("--root", default="q4r", help="q4r | q4r-conj | iq4r | iq4r-conj | s=<int>")
    common.add_argument("--precision", type=int, default=128, help="interval precision in bits")
    common.add_argument("--mode", choices=["exact", "numeric"], default="exact")
    common.add_argument("--format", dest="output", choices=["json", "csv", "pretty"], default="pretty")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="so3inv", description="SO(3) quantum invariants and Heegaard genus bounds")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("invariant", parents=[common], help="invariants of presentations in a JSON file")
    p.add_argument("file")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=", ".join(list(SUITES) + ["all"]))
    p.add_argument("--count", type=int, default=20, help="random instances per level")
    sub.add_parser("oracle", parents=[common], help="cross-check closed forms against Temperley-Lieb brute force")
    p = sub.add_parser("table", parents=[common], help="CSV sweep over levels for built-in families")
    p.add_argument("families", nargs="*", help="lens:4,2  bz:0,1,1,1  rp3-powers:3")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(args.r, args.root, args.precision, args.mode, args.output, args.seed)
        if args.command == "invariant":
            return cmd_invariant(args.file, config, out)
        if args.command == "verify":
            return cmd_verify(args.suite, config, out, args.count)
        if args.command == "oracle":
            return cmd_oracle(config, out)
        return cmd_table(args.families, config, out)
    except UsageError as exc:
        print(f"so3inv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, ValueError, WorkCapExceeded) as exc:
        print(f"so3inv: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
