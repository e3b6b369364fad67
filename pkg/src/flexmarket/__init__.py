"""Electricity spot-market simulator with operational-inflexibility fees
funding capacity-reserve reliability payments."""

from .analysis import SweepPoint, SweepResult, clear_scenario, find_first_change, sweep_p0
from .capacity import (
    CapacityPool,
    CapacitySettlement,
    UnallocatableFeeError,
    build_pool,
    eligible_plants,
    settle,
)
from .flexibility import (
    FlexibilityMeasure,
    MeasureValidationReport,
    StartUpTime,
    hyperbolic_measure,
    validate_measure,
)
from .plants import PlantFlexibility, PowerPlant, flexibilities_for, flexibility_of
from .reports import emit_report, emit_settlement, emit_sweep
from .scenario import (
    Scenario,
    ScenarioError,
    load_scenario,
    scenario_to_json,
    toy_grid,
)
from .spotmarket import (
    ClearingResult,
    MarketConfig,
    Offer,
    clear,
    make_offers,
    market_wide_fee_intensity,
    merit_order,
    total_fee,
)

__version__ = "0.1.0"
