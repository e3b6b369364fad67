"""Scenario model and file ingestion (JSON canonical, CSV plant table).

Scenario numbers are parsed into exact fractions; `start_up_time_h` accepts
the string "inf" for plants with no guaranteed start-up.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from ._numeric import frac, to_number
from .flexibility import BUILTIN_MEASURES, FlexibilityMeasure, StartUpTime
from .plants import PowerPlant, flexibilities_for
from .spotmarket import MarketConfig

__all__ = [
    "ScenarioError",
    "ScenarioParseError",
    "UnknownMeasureError",
    "DuplicatePlantIdError",
    "InvalidNumberError",
    "CapacityConfig",
    "Scenario",
    "load_scenario",
    "scenario_to_json",
    "toy_grid",
]


class ScenarioError(ValueError):
    """Base class for scenario validation failures."""


class ScenarioParseError(ScenarioError):
    """The file is not parseable or structurally malformed."""


class UnknownMeasureError(ScenarioError):
    """The named flexibility measure is not a built-in."""


class DuplicatePlantIdError(ScenarioError):
    """Two plants share an id."""


class InvalidNumberError(ScenarioError):
    """A numeric field is missing, non-numeric, or out of range."""


@dataclass(frozen=True)
class CapacityConfig:
    threshold: Fraction = Fraction(1, 2)
    participants: tuple[str, ...] | None = None  # None = "auto"
    allow_overlap: bool = False


@dataclass(frozen=True)
class Scenario:
    plants: tuple[PowerPlant, ...]
    market: MarketConfig
    p0_grid: tuple[Fraction, ...] | None = None
    capacity: CapacityConfig = field(default_factory=CapacityConfig)
    measure_name: str = "hyperbolic"

    def measure(self) -> FlexibilityMeasure:
        try:
            return BUILTIN_MEASURES[self.measure_name]()
        except KeyError:
            raise UnknownMeasureError(
                f"measure: unknown measure {self.measure_name!r}"
            ) from None

    def flexibilities(self) -> dict[str, Fraction]:
        return flexibilities_for(self.plants, self.measure())


def _number(raw: object, path: str, *, minimum: Fraction | None = None) -> Fraction:
    try:
        value = frac(raw)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise InvalidNumberError(f"{path}: expected a number, got {raw!r}") from None
    if minimum is not None and value < minimum:
        raise InvalidNumberError(f"{path}: {value} is below minimum {minimum}")
    return value


def _start_up(raw: object, path: str) -> StartUpTime:
    if raw == "inf":
        return StartUpTime.unbounded()
    value = _number(raw, path)
    if value < 0:
        raise InvalidNumberError(f"{path}: start-up time must be >= 0")
    return StartUpTime(value)


def _plant_from_record(record: dict, path: str) -> PowerPlant:
    pid = record.get("id")
    if not isinstance(pid, str) or not pid:
        raise ScenarioParseError(f"{path}.id: expected a non-empty string")
    return PowerPlant(
        id=pid,
        start_up_time=_start_up(
            record.get("start_up_time_h"), f"{path}.start_up_time_h"
        ),
        marginal_cost=_number(
            record.get("marginal_cost_eur_per_mwh"),
            f"{path}.marginal_cost_eur_per_mwh",
            minimum=Fraction(0),
        ),
        capacity=_number(
            record.get("capacity_mw"), f"{path}.capacity_mw"
        ),
    )


def _check_unique_ids(plants: Sequence[PowerPlant]) -> None:
    seen: set[str] = set()
    for p in plants:
        if p.id in seen:
            raise DuplicatePlantIdError(f"plants: duplicate plant id {p.id!r}")
        seen.add(p.id)


def _scenario_from_dict(doc: dict) -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioParseError("scenario document must be a JSON object")
    raw_plants = doc.get("plants")
    if not isinstance(raw_plants, list) or not raw_plants:
        raise ScenarioParseError("plants: expected a non-empty list")
    plants = []
    for i, record in enumerate(raw_plants):
        if not isinstance(record, dict):
            raise ScenarioParseError(f"plants[{i}]: expected an object")
        try:
            plants.append(_plant_from_record(record, f"plants[{i}]"))
        except ValueError as exc:
            if isinstance(exc, ScenarioError):
                raise
            raise InvalidNumberError(f"plants[{i}]: {exc}") from None
    _check_unique_ids(plants)

    market = doc.get("market", {})
    if not isinstance(market, dict):
        raise ScenarioParseError("market: expected an object")
    p0_grid = None
    if "p0_grid" in market:
        raw_grid = market["p0_grid"]
        if not isinstance(raw_grid, list) or not raw_grid:
            raise ScenarioParseError("market.p0_grid: expected a non-empty list")
        p0_grid = tuple(
            _number(v, f"market.p0_grid[{i}]", minimum=Fraction(0))
            for i, v in enumerate(raw_grid)
        )
        p0 = p0_grid[0]
    else:
        p0 = _number(
            market.get("p0_eur_per_mwh", 0),
            "market.p0_eur_per_mwh",
            minimum=Fraction(0),
        )
    try:
        config = MarketConfig(
            reference_price_p0=p0,
            demand=_number(market.get("demand_mw", 0), "market.demand_mw",
                           minimum=Fraction(0)),
            period=_number(market.get("period_h", 1), "market.period_h"),
        )
    except ValueError as exc:
        raise InvalidNumberError(f"market: {exc}") from None

    cap = doc.get("capacity", {})
    if not isinstance(cap, dict):
        raise ScenarioParseError("capacity: expected an object")
    raw_participants = cap.get("participants", "auto")
    if raw_participants == "auto":
        participants = None
    elif isinstance(raw_participants, list):
        participants = tuple(raw_participants)
        known = {p.id for p in plants}
        for pid in participants:
            if pid not in known:
                raise ScenarioParseError(
                    f"capacity.participants: unknown plant id {pid!r}"
                )
    else:
        raise ScenarioParseError('capacity.participants: expected "auto" or a list')
    threshold = _number(cap.get("threshold", Fraction(1, 2)), "capacity.threshold")
    if not (0 < threshold < 1):
        raise InvalidNumberError("capacity.threshold: must lie in (0, 1)")
    capacity = CapacityConfig(
        threshold=threshold,
        participants=participants,
        allow_overlap=bool(cap.get("allow_overlap", False)),
    )

    measure_name = doc.get("measure", "hyperbolic")
    if measure_name not in BUILTIN_MEASURES:
        raise UnknownMeasureError(f"measure: unknown measure {measure_name!r}")

    return Scenario(
        plants=tuple(plants),
        market=config,
        p0_grid=p0_grid,
        capacity=capacity,
        measure_name=measure_name,
    )


def _scenario_from_csv(text: str) -> Scenario:
    """Convenience plant-table format: one row per plant, market defaults."""
    reader = csv.DictReader(io.StringIO(text))
    required = {"id", "start_up_time_h", "marginal_cost_eur_per_mwh", "capacity_mw"}
    if reader.fieldnames is None or not required.issubset(reader.fieldnames):
        raise ScenarioParseError(
            f"CSV plant table must have columns {sorted(required)}"
        )
    records = [dict(row) for row in reader]
    if not records:
        raise ScenarioParseError("CSV plant table has no rows")
    return _scenario_from_dict({"plants": records})


def load_scenario(path: str | Path) -> Scenario:
    """Parse and validate a scenario file (JSON, or CSV plant table)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".csv":
        return _scenario_from_csv(text)
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(f"{path}: not valid JSON: {exc}") from None
    return _scenario_from_dict(doc)


def scenario_to_dict(scenario: Scenario) -> dict:
    plants = [
        {
            "id": p.id,
            "start_up_time_h": "inf"
            if p.start_up_time.is_unbounded
            else to_number(p.start_up_time.hours),
            "marginal_cost_eur_per_mwh": to_number(p.marginal_cost),
            "capacity_mw": to_number(p.capacity),
        }
        for p in scenario.plants
    ]
    market: dict = {
        "demand_mw": to_number(scenario.market.demand),
        "period_h": to_number(scenario.market.period),
    }
    if scenario.p0_grid is not None:
        market["p0_grid"] = [to_number(v) for v in scenario.p0_grid]
    else:
        market["p0_eur_per_mwh"] = to_number(scenario.market.reference_price_p0)
    return {
        "plants": plants,
        "market": market,
        "capacity": {
            "threshold": to_number(scenario.capacity.threshold),
            "participants": "auto"
            if scenario.capacity.participants is None
            else list(scenario.capacity.participants),
            "allow_overlap": scenario.capacity.allow_overlap,
        },
        "measure": scenario.measure_name,
    }


def scenario_to_json(scenario: Scenario) -> bytes:
    return (
        json.dumps(scenario_to_dict(scenario), indent=2, sort_keys=True) + "\n"
    ).encode("utf-8")


def toy_grid(
    p0: Fraction | int | str = 10,
    demand: Fraction | int | str = 25,
) -> Scenario:
    """The bundled eight-plant toy grid (all capacities 5 MW)."""
    rows = [
        ("wind", None, 1),
        ("hydro", "0.02", 1),
        ("gas", "0.12", 90),
        ("chp", "0.17", 50),
        ("ccgt", "5", 50),
        ("coal", "6", 60),
        ("lignite", "9", 40),
        ("nuclear", "50", 5),
    ]
    plants = tuple(
        PowerPlant(
            id=pid,
            start_up_time=StartUpTime.unbounded()
            if hours is None
            else StartUpTime.of(hours),
            marginal_cost=Fraction(mc),
            capacity=Fraction(5),
        )
        for pid, hours, mc in rows
    )
    return Scenario(
        plants=plants,
        market=MarketConfig(
            reference_price_p0=frac(p0), demand=frac(demand), period=Fraction(1)
        ),
    )
