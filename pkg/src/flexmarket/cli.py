"""Command-line surface.

Subcommands: validate, clear, sweep, capacity. Exit codes: 0 success,
1 validation error, 2 I/O error, 3 paradox (with --fail-on-paradox, or a
capacity settlement with no one to pay).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from ._numeric import frac, to_number
from .analysis import clear_scenario, sweep_p0
from .capacity import UnallocatableFeeError, build_pool, settle
from .reports import FORMATS, ROUNDING_MODES, emit_report, emit_settlement, emit_sweep
from .scenario import Scenario, ScenarioError, load_scenario

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_PARADOX = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flexmarket",
        description="Spot-market simulator with operational-inflexibility fees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("scenario", help="scenario file (JSON, or CSV plant table)")
        p.add_argument("--format", default="plain-table", choices=FORMATS)
        p.add_argument("--rounding", default="exact", choices=ROUNDING_MODES)
        p.add_argument("--output", help="write the report here instead of stdout")

    sub.add_parser("validate", help="parse and validate a scenario").add_argument(
        "scenario"
    )

    p_clear = sub.add_parser("clear", help="clear the spot market once")
    add_common(p_clear)
    p_clear.add_argument("--p0", help="override the scenario reference price")
    p_clear.add_argument("--demand", help="override the scenario demand (MW)")

    p_sweep = sub.add_parser("sweep", help="sweep the reference price p0")
    add_common(p_sweep)
    p_sweep.add_argument(
        "--p0-grid", required=True, metavar="LO:HI:STEP",
        help="inclusive grid of reference prices",
    )
    p_sweep.add_argument(
        "--fail-on-paradox", action="store_true",
        help="exit 3 if any sweep point depletes the capacity reserve",
    )

    p_cap = sub.add_parser("capacity", help="settle reliability payments")
    add_common(p_cap)
    group = p_cap.add_mutually_exclusive_group()
    group.add_argument("--cf", help="fee pool C_f in EUR/h")
    group.add_argument(
        "--from-clearing", action="store_true",
        help="take C_f from a spot clearing of the same scenario",
    )
    p_cap.add_argument(
        "--allow-overlap", action="store_true",
        help="let dispatched plants join the reserve pool",
    )
    return parser


def _parse_grid(spec: str) -> list[Fraction]:
    try:
        lo_s, hi_s, step_s = spec.split(":")
        lo, hi, step = frac(lo_s), frac(hi_s), frac(step_s)
    except (ValueError, TypeError):
        raise ScenarioError(f"bad p0 grid {spec!r}, expected LO:HI:STEP") from None
    if step <= 0 or hi < lo:
        raise ScenarioError(f"bad p0 grid {spec!r}: need lo <= hi and step > 0")
    grid = []
    p0 = lo
    while p0 <= hi:
        grid.append(p0)
        p0 += step
    return grid


def _write(payload: bytes, output: str | None) -> None:
    if output:
        Path(output).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


def _cmd_validate(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    print(
        f"OK: {len(scenario.plants)} plants, demand "
        f"{to_number(scenario.market.demand)} MW, measure {scenario.measure_name}"
    )
    return EXIT_OK


def _cmd_clear(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    if args.demand is not None:
        from dataclasses import replace

        scenario = replace(
            scenario, market=replace(scenario.market, demand=frac(args.demand))
        )
    result = clear_scenario(
        scenario, frac(args.p0) if args.p0 is not None else None
    )
    _write(emit_report(result, args.format, args.rounding), args.output)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    sweep = sweep_p0(scenario, _parse_grid(args.p0_grid))
    _write(emit_sweep(sweep, args.format, args.rounding), args.output)
    if args.fail_on_paradox and any(pt.paradox for pt in sweep.points):
        print("paradox: capacity reserve depleted at some sweep points",
              file=sys.stderr)
        return EXIT_PARADOX
    return EXIT_OK


def _cmd_capacity(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    result = clear_scenario(scenario)
    cf = result.total_fee_cf if (args.from_clearing or args.cf is None) else frac(args.cf)
    pool = build_pool(
        scenario.plants,
        scenario.flexibilities(),
        threshold=scenario.capacity.threshold,
        participants=scenario.capacity.participants,
        dispatched=result.dispatch,
        allow_overlap=args.allow_overlap or scenario.capacity.allow_overlap,
    )
    try:
        settlement = settle(pool, cf)
    except UnallocatableFeeError as exc:
        print(f"paradox: {exc}", file=sys.stderr)
        return EXIT_PARADOX
    _write(emit_settlement(settlement, args.format, args.rounding), args.output)
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "clear": _cmd_clear,
    "sweep": _cmd_sweep,
    "capacity": _cmd_capacity,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ScenarioError, ValueError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    raise SystemExit(main())
