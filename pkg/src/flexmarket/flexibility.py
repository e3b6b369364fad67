"""Operational-flexibility measures.

A measure maps a plant's guaranteed start-up time (hours) to a score in
[0, 1]: strictly decreasing, approaching 1 for instantaneous start-up and 0
for arbitrarily slow plants. A plant with no guaranteed start-up at all
(e.g. a wind turbine) scores exactly 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ._numeric import frac

__all__ = [
    "StartUpTime",
    "FlexibilityMeasure",
    "MeasureValidationReport",
    "hyperbolic_measure",
    "validate_measure",
]


@dataclass(frozen=True)
class StartUpTime:
    """Guaranteed start-up time in hours; `hours is None` means unbounded.

    Unbounded is a first-class value, not a large finite surrogate: it maps
    to a flexibility of exactly zero under every measure.
    """

    hours: Fraction | None

    def __post_init__(self) -> None:
        if self.hours is not None:
            h = frac(self.hours)
            if h < 0:
                raise ValueError(f"start-up time must be >= 0, got {h}")
            object.__setattr__(self, "hours", h)

    @classmethod
    def of(cls, hours: int | float | str | Fraction) -> "StartUpTime":
        return cls(frac(hours))

    @classmethod
    def unbounded(cls) -> "StartUpTime":
        return cls(None)

    @property
    def is_unbounded(self) -> bool:
        return self.hours is None


@dataclass(frozen=True)
class FlexibilityMeasure:
    """A named scoring function over finite start-up times.

    The wrapped function only ever sees finite hours; unbounded start-up is
    short-circuited to exactly 0 here so every measure satisfies it.
    """

    name: str
    fn: Callable[[Fraction], Fraction] = field(repr=False)

    def __call__(self, t: StartUpTime) -> Fraction:
        if t.is_unbounded:
            return Fraction(0)
        return Fraction(self.fn(t.hours))


def hyperbolic_measure() -> FlexibilityMeasure:
    """The default measure: score(x) = 1 / (x + 1)."""
    return FlexibilityMeasure("hyperbolic", lambda x: Fraction(1, 1) / (x + 1))


@dataclass(frozen=True)
class MeasureValidationReport:
    violations: tuple[str, ...]

    @property
    def is_valid(self) -> bool:
        return not self.violations


def validate_measure(
    measure: FlexibilityMeasure,
    probe_grid: Sequence[StartUpTime],
    *,
    near_one_probe: Fraction = Fraction(1, 1000),
    near_zero_probe: Fraction = Fraction(1000),
    near_one_min: Fraction = Fraction(99, 100),
    near_zero_max: Fraction = Fraction(1, 100),
) -> MeasureValidationReport:
    """Check the measure axioms on a finite probe grid.

    The axioms are asymptotic, so this is the testable surrogate: strict
    monotone decrease and range [0, 1] across the grid, plus near-limit
    checks at two fixed probes (defaults: score(0.001) >= 0.99 and
    score(1000) <= 0.01). An empty violation list means valid on the grid.
    """
    if not probe_grid:
        raise ValueError("probe grid must not be empty")
    hours = []
    for i, t in enumerate(probe_grid):
        if t.is_unbounded:
            raise ValueError(f"probe_grid[{i}]: probes must be finite")
        hours.append(t.hours)
    if any(a >= b for a, b in zip(hours, hours[1:])):
        raise ValueError("probe grid must be strictly ascending")

    violations: list[str] = []
    scores = [measure(t) for t in probe_grid]
    for x, s in zip(hours, scores):
        if not (0 <= s <= 1):
            violations.append(f"range: score({x}) = {s} outside [0, 1]")
    for (x1, s1), (x2, s2) in zip(zip(hours, scores), zip(hours[1:], scores[1:])):
        if not s1 > s2:
            violations.append(
                f"monotonicity: score({x1}) = {s1} not > score({x2}) = {s2}"
            )
    lo = measure(StartUpTime(near_one_probe))
    if lo < near_one_min:
        violations.append(
            f"limit: score({near_one_probe}) = {lo} < {near_one_min} (should approach 1)"
        )
    hi = measure(StartUpTime(near_zero_probe))
    if hi > near_zero_max:
        violations.append(
            f"limit: score({near_zero_probe}) = {hi} > {near_zero_max} (should approach 0)"
        )
    return MeasureValidationReport(tuple(violations))


BUILTIN_MEASURES: dict[str, Callable[[], FlexibilityMeasure]] = {
    "hyperbolic": hyperbolic_measure,
}
