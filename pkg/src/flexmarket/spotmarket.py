"""Spot-market offer pricing, merit order, uniform-price clearing and the
inflexibility-fee ledger.

Each plant's offer is its marginal cost plus an inflexibility fee
(1 - phi) * p0, where p0 is a market-wide reference price set by the market
authority. Dispatch fills the merit order until the (inelastic) demand is
met; the last dispatched plant sets the uniform clearing price. Fees are
charged on dispatched power only and accumulate into the pool C_f that
funds the capacity mechanism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ._numeric import frac, round_half_away
from .plants import PlantFlexibility, PowerPlant, as_phi_map

__all__ = [
    "MarketConfig",
    "Offer",
    "Profit",
    "ClearingResult",
    "make_offers",
    "merit_order",
    "clear",
    "total_fee",
    "market_wide_fee_intensity",
]


@dataclass(frozen=True)
class MarketConfig:
    """Reference price p0 (EUR/MWh), demand (MW), period (h)."""

    reference_price_p0: Fraction
    demand: Fraction
    period: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "reference_price_p0", frac(self.reference_price_p0))
        object.__setattr__(self, "demand", frac(self.demand))
        object.__setattr__(self, "period", frac(self.period))
        if self.reference_price_p0 < 0:
            raise ValueError("reference price p0 must be >= 0")
        if self.demand < 0:
            raise ValueError("demand must be >= 0")
        if self.period <= 0:
            raise ValueError("period must be > 0")


@dataclass(frozen=True)
class Offer:
    """A sell bid: offer_price = marginal_cost + fee_rate, exactly."""

    plant_id: str
    offer_price: Fraction
    fee_rate: Fraction
    phi: Fraction


@dataclass(frozen=True)
class Profit:
    """Per-plant profit: margin (EUR/MWh) and absolute rate (EUR/h)."""

    margin: Fraction
    per_hour: Fraction


@dataclass(frozen=True)
class ClearingResult:
    merit_order: tuple[str, ...]
    clearing_price: Fraction
    dispatch: dict[str, Fraction]
    profits: dict[str, Profit]
    fee_ledger: dict[str, Fraction]
    total_fee_cf: Fraction
    consumed_energy: Fraction
    blackout: bool
    total_capacity: Fraction
    offers: tuple[Offer, ...] = field(default=(), repr=False)
    capacities: dict[str, Fraction] = field(default_factory=dict, repr=False)


def make_offers(
    plants: Sequence[PowerPlant],
    flexibilities: Mapping[str, Fraction] | Iterable[PlantFlexibility],
    config: MarketConfig,
) -> list[Offer]:
    """One offer per plant at full precision."""
    phi = as_phi_map(flexibilities)
    offers = []
    for plant in plants:
        if plant.id not in phi:
            raise ValueError(f"no flexibility score for plant {plant.id!r}")
        fee_rate = (1 - phi[plant.id]) * config.reference_price_p0
        offers.append(
            Offer(plant.id, plant.marginal_cost + fee_rate, fee_rate, phi[plant.id])
        )
    return offers


def merit_order(offers: Sequence[Offer]) -> list[Offer]:
    """Ascending by offer price; ties broken by higher phi, then plant id."""
    if not offers:
        raise ValueError("offer list must not be empty")
    return sorted(offers, key=lambda o: (o.offer_price, -o.phi, o.plant_id))


def clear(
    offers: Sequence[Offer],
    plants: Sequence[PowerPlant],
    config: MarketConfig,
) -> ClearingResult:
    """Uniform-price clearing of inelastic demand against the merit order.

    The marginal (last dispatched) plant sets the clearing price and may be
    partially dispatched; its fee is pro-rata on dispatched MW. Demand above
    total capacity is a blackout outcome (flag set, full dispatch at the
    highest offer), not an error, so reference-price sweeps can continue.
    """
    capacity = {p.id: p.capacity for p in plants}
    for offer in offers:
        if offer.plant_id not in capacity:
            raise ValueError(f"offer references unknown plant {offer.plant_id!r}")
    total_capacity = sum((capacity[o.plant_id] for o in offers), Fraction(0))
    demand = config.demand

    if not offers:
        return ClearingResult(
            merit_order=(),
            clearing_price=Fraction(0),
            dispatch={},
            profits={},
            fee_ledger={},
            total_fee_cf=Fraction(0),
            consumed_energy=demand * config.period,
            blackout=demand > 0,
            total_capacity=Fraction(0),
        )

    stack = merit_order(offers)
    order = tuple(o.plant_id for o in stack)
    blackout = demand > total_capacity

    dispatch: dict[str, Fraction] = {}
    if blackout:
        dispatch = {o.plant_id: capacity[o.plant_id] for o in stack}
        clearing_price = stack[-1].offer_price
    elif demand == 0:
        clearing_price = Fraction(0)
    else:
        remaining = demand
        clearing_price = Fraction(0)
        for offer in stack:
            if remaining == 0:
                break
            mw = min(capacity[offer.plant_id], remaining)
            dispatch[offer.plant_id] = mw
            remaining -= mw
            clearing_price = offer.offer_price

    price_of = {o.plant_id: o for o in stack}
    fee_ledger = {pid: price_of[pid].fee_rate * mw for pid, mw in dispatch.items()}
    profits = {
        pid: Profit(
            margin=clearing_price - price_of[pid].offer_price,
            per_hour=(clearing_price - price_of[pid].offer_price) * mw,
        )
        for pid, mw in dispatch.items()
    }
    return ClearingResult(
        merit_order=order,
        clearing_price=clearing_price,
        dispatch=dispatch,
        profits=profits,
        fee_ledger=fee_ledger,
        total_fee_cf=sum(fee_ledger.values(), Fraction(0)),
        consumed_energy=demand * config.period,
        blackout=blackout,
        total_capacity=total_capacity,
        offers=tuple(stack),
        capacities={o.plant_id: capacity[o.plant_id] for o in stack},
    )


def total_fee(result: ClearingResult, mode: str = "exact") -> Fraction:
    """The fee pool C_f in EUR/h.

    `exact` sums the full-precision ledger. `paper-rounded` rounds each
    per-plant fee rate to integer EUR/MWh before multiplying by dispatched
    MW; it is a reporting convention only and never affects clearing.
    """
    if mode == "exact":
        return result.total_fee_cf
    if mode == "paper-rounded":
        rate = {o.plant_id: o.fee_rate for o in result.offers}
        return sum(
            (round_half_away(rate[pid]) * mw for pid, mw in result.dispatch.items()),
            Fraction(0),
        )
    raise ValueError(f"unknown fee mode {mode!r}")


def market_wide_fee_intensity(offers: Sequence[Offer]) -> Fraction:
    """Sum of fee rates over all offering plants (EUR/MWh), dispatch-independent."""
    return sum((o.fee_rate for o in offers), Fraction(0))
