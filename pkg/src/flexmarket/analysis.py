"""Reference-price sweeps: merit-order change detection and the
reserve-depletion paradox.

The paradox: a reference price high enough that every eligible flexible
plant clears on the spot market, leaving the capacity pool empty.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from ._numeric import frac
from .capacity import eligible_plants
from .scenario import Scenario
from .spotmarket import ClearingResult, MarketConfig, clear, make_offers

__all__ = ["SweepPoint", "SweepResult", "clear_scenario", "sweep_p0", "find_first_change"]


@dataclass(frozen=True)
class SweepPoint:
    p0: Fraction
    clearing_price: Fraction
    merit_order: tuple[str, ...]
    dispatched: frozenset[str]
    total_fee_cf: Fraction
    reserve: frozenset[str]  # eligible and not dispatched
    paradox: bool


@dataclass(frozen=True)
class SweepResult:
    points: tuple[SweepPoint, ...]
    change_points: tuple[Fraction, ...]


def clear_scenario(scenario: Scenario, p0: Fraction | None = None) -> ClearingResult:
    """Run one spot clearing of the scenario, optionally overriding p0."""
    if not scenario.plants:
        raise ValueError("scenario has no plants")
    config = scenario.market
    if p0 is not None:
        config = replace(config, reference_price_p0=frac(p0))
    offers = make_offers(scenario.plants, scenario.flexibilities(), config)
    return clear(offers, scenario.plants, config)


def sweep_p0(scenario: Scenario, p0_grid: Sequence[Fraction]) -> SweepResult:
    """Clear the scenario at every grid point, flagging merit-order changes.

    Grid points are independent clearings; the output is ordered by p0.
    """
    if not scenario.plants:
        raise ValueError("scenario has no plants")
    grid = [frac(p) for p in p0_grid]
    if not grid:
        raise ValueError("p0 grid must not be empty")
    if any(a >= b for a, b in zip(grid, grid[1:])):
        raise ValueError("p0 grid must be strictly ascending")
    if grid[0] < 0:
        raise ValueError("p0 grid must be non-negative")

    eligible = set(
        eligible_plants(
            scenario.plants, scenario.flexibilities(), scenario.capacity.threshold
        )
    )
    points = []
    change_points = []
    previous_order: tuple[str, ...] | None = None
    for p0 in grid:
        result = clear_scenario(scenario, p0)
        dispatched = frozenset(result.dispatch)
        reserve = frozenset(eligible - dispatched)
        points.append(
            SweepPoint(
                p0=p0,
                clearing_price=result.clearing_price,
                merit_order=result.merit_order,
                dispatched=dispatched,
                total_fee_cf=result.total_fee_cf,
                reserve=reserve,
                paradox=bool(eligible) and not reserve,
            )
        )
        if previous_order is not None and result.merit_order != previous_order:
            change_points.append(p0)
        previous_order = result.merit_order
    return SweepResult(tuple(points), tuple(change_points))


def find_first_change(
    scenario: Scenario,
    lo: Fraction,
    hi: Fraction,
    resolution: Fraction,
) -> Fraction | None:
    """Smallest grid point in [lo, hi] (step = resolution) whose merit order
    differs from the order at lo; None if the order never changes."""
    lo, hi, resolution = frac(lo), frac(hi), frac(resolution)
    if not lo < hi:
        raise ValueError("lo must be < hi")
    if resolution <= 0:
        raise ValueError("resolution must be > 0")
    base = clear_scenario(scenario, lo).merit_order
    p0 = lo + resolution
    while p0 <= hi:
        if clear_scenario(scenario, p0).merit_order != base:
            return p0
        p0 += resolution
    return None
