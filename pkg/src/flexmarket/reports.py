"""Report emission: plain tables, CSV, JSON and an SVG merit-order stack.

All emitters are deterministic and byte-stable for identical inputs. The
rounding mode affects displayed values only: `exact` prints full-precision
floats, `paper-rounded` rounds money columns to integer EUR per unit, half
away from zero.
"""

from __future__ import annotations

import io
import json
from fractions import Fraction

from ._numeric import round_half_away, to_number
from .analysis import SweepResult
from .capacity import CapacitySettlement
from .spotmarket import ClearingResult, total_fee

__all__ = ["emit_report", "emit_sweep", "emit_settlement"]

FORMATS = ("plain-table", "csv", "json", "svg-stack")
ROUNDING_MODES = ("exact", "paper-rounded")


def _check(format: str, rounding_mode: str) -> None:
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r} (choose from {FORMATS})")
    if rounding_mode not in ROUNDING_MODES:
        raise ValueError(
            f"unknown rounding mode {rounding_mode!r} (choose from {ROUNDING_MODES})"
        )


def _disp(x: Fraction, mode: str) -> int | float:
    if mode == "paper-rounded":
        return int(round_half_away(x))
    return to_number(x)


def _clearing_rows(result: ClearingResult, mode: str) -> list[dict]:
    rows = []
    for offer in result.offers:  # already in merit order
        pid = offer.plant_id
        dispatched = result.dispatch.get(pid)
        profit = result.profits.get(pid)
        rows.append(
            {
                "plant_id": pid,
                "phi": to_number(offer.phi),
                "fee_rate_eur_per_mwh": _disp(offer.fee_rate, mode),
                "offer_eur_per_mwh": _disp(offer.offer_price, mode),
                "capacity_mw": to_number(result.capacities[pid]),
                "dispatch_mw": to_number(dispatched) if dispatched is not None else 0,
                "profit_margin_eur_per_mwh": _disp(profit.margin, mode)
                if profit
                else "",
                "fee_eur_per_h": _disp(result.fee_ledger[pid], mode)
                if pid in result.fee_ledger
                else "",
            }
        )
    return rows


def _clearing_summary(result: ClearingResult, mode: str) -> dict:
    return {
        "clearing_price_eur_per_mwh": _disp(result.clearing_price, mode),
        "total_fee_cf_eur_per_h": _disp(total_fee(result, "exact"), mode)
        if mode == "exact"
        else _disp(total_fee(result, "paper-rounded"), mode),
        "consumed_energy_mwh": to_number(result.consumed_energy),
        "total_capacity_mw": to_number(result.total_capacity),
        "blackout": result.blackout,
    }


def _table(headers: list[str], rows: list[list[object]]) -> bytes:
    cells = [[str(c) for c in row] for row in rows]
    widths = [
        max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
        for i, h in enumerate(headers)
    ]
    out = io.StringIO()
    out.write("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip() + "\n")
    out.write("  ".join("-" * w for w in widths) + "\n")
    for row in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
    return out.getvalue().encode("utf-8")


def _csv(headers: list[str], rows: list[list[object]]) -> bytes:
    out = io.StringIO()
    out.write(",".join(headers) + "\n")
    for row in rows:
        out.write(",".join(str(c) for c in row) + "\n")
    return out.getvalue().encode("utf-8")


def _json_bytes(doc: object) -> bytes:
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")


def emit_report(
    result: ClearingResult,
    format: str = "plain-table",
    rounding_mode: str = "exact",
) -> bytes:
    """Render one clearing result."""
    _check(format, rounding_mode)
    rows = _clearing_rows(result, rounding_mode)
    summary = _clearing_summary(result, rounding_mode)

    if format == "json":
        return _json_bytes({"plants": rows, "summary": summary})

    headers = list(rows[0].keys()) if rows else [
        "plant_id", "phi", "fee_rate_eur_per_mwh", "offer_eur_per_mwh",
        "capacity_mw", "dispatch_mw", "profit_margin_eur_per_mwh", "fee_eur_per_h",
    ]
    table_rows = [[r[h] for h in headers] for r in rows]
    if format == "csv":
        body = _csv(headers, table_rows)
        footer = "".join(f"# {k}={v}\n" for k, v in summary.items())
        return body + footer.encode("utf-8")
    if format == "plain-table":
        body = _table(headers, table_rows)
        footer = "".join(f"{k}: {v}\n" for k, v in summary.items())
        return body + footer.encode("utf-8")
    return _svg_stack(result)


_PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
    "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
)


def _svg_stack(result: ClearingResult) -> bytes:
    """Merit-order block diagram: width proportional to capacity, height to
    offer price, with the clearing price as a dashed rule and the served
    demand as a vertical marker."""
    width, height = 800.0, 400.0
    margin = 50.0
    plot_w, plot_h = width - 2 * margin, height - 2 * margin
    total_mw = float(result.total_capacity) or 1.0
    max_price = max(
        [float(o.offer_price) for o in result.offers]
        + [float(result.clearing_price), 1.0]
    )
    demand_mw = float(sum(result.dispatch.values(), Fraction(0)))

    def x(mw: float) -> float:
        return margin + plot_w * mw / total_mw

    def y(price: float) -> float:
        return height - margin - plot_h * price / max_price

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect x="0" y="0" width="{width:.0f}" height="{height:.0f}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
    ]
    cursor = 0.0
    for i, offer in enumerate(result.offers):
        mw = float(result.capacities[offer.plant_id])
        price = float(offer.offer_price)
        x0, x1 = x(cursor), x(cursor + mw)
        y0 = y(price)
        fill = _PALETTE[i % len(_PALETTE)]
        parts.append(
            f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{x1 - x0:.2f}" '
            f'height="{height - margin - y0:.2f}" fill="{fill}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{(x0 + x1) / 2:.2f}" y="{height - margin + 14:.0f}" '
            f'font-size="10" text-anchor="middle">{offer.plant_id}</text>'
        )
        cursor += mw
    p_star_y = y(float(result.clearing_price))
    parts.append(
        f'<line x1="{margin}" y1="{p_star_y:.2f}" x2="{width - margin}" '
        f'y2="{p_star_y:.2f}" stroke="red" stroke-dasharray="6,4"/>'
    )
    parts.append(
        f'<text x="{margin + 4:.0f}" y="{p_star_y - 4:.2f}" font-size="11" '
        f'fill="red">p* = {float(result.clearing_price):g} EUR/MWh</text>'
    )
    if demand_mw > 0:
        demand_x = x(demand_mw)
        parts.append(
            f'<line x1="{demand_x:.2f}" y1="{margin}" x2="{demand_x:.2f}" '
            f'y2="{height - margin}" stroke="red" stroke-dasharray="6,4"/>'
        )
        parts.append(
            f'<text x="{demand_x + 4:.2f}" y="{margin + 12:.0f}" font-size="11" '
            f'fill="red">q = {demand_mw:g} MW</text>'
        )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")


def emit_sweep(
    sweep: SweepResult,
    format: str = "plain-table",
    rounding_mode: str = "exact",
) -> bytes:
    """Render a reference-price sweep as table records."""
    if format == "svg-stack":
        raise ValueError("svg-stack applies to single clearings, not sweeps")
    _check(format, rounding_mode)
    headers = [
        "p0", "clearing_price", "merit_order", "dispatched",
        "total_fee_cf", "reserve", "paradox",
    ]
    rows = []
    for pt in sweep.points:
        rows.append(
            [
                to_number(pt.p0),
                _disp(pt.clearing_price, rounding_mode),
                "|".join(pt.merit_order),
                "|".join(sorted(pt.dispatched)),
                _disp(pt.total_fee_cf, rounding_mode),
                "|".join(sorted(pt.reserve)),
                pt.paradox,
            ]
        )
    if format == "json":
        doc = {
            "points": [dict(zip(headers, row)) for row in rows],
            "change_points": [to_number(p) for p in sweep.change_points],
        }
        return _json_bytes(doc)
    body = _csv(headers, rows) if format == "csv" else _table(headers, rows)
    changes = ",".join(str(to_number(p)) for p in sweep.change_points)
    prefix = "# " if format == "csv" else ""
    return body + f"{prefix}change_points: {changes}\n".encode("utf-8")


def emit_settlement(
    settlement: CapacitySettlement,
    format: str = "plain-table",
    rounding_mode: str = "exact",
) -> bytes:
    """Render reliability payments."""
    if format == "svg-stack":
        raise ValueError("svg-stack applies to clearings, not settlements")
    _check(format, rounding_mode)
    items = sorted(
        settlement.payments.items(), key=lambda kv: (-kv[1], kv[0])
    )
    rows = [[pid, _disp(value, rounding_mode)] for pid, value in items]
    headers = ["plant_id", "reliability_payment_eur_per_h"]
    summary = {"source_fee_cf_eur_per_h": _disp(settlement.source_fee_cf, rounding_mode)}
    if format == "json":
        return _json_bytes(
            {"payments": [dict(zip(headers, r)) for r in rows], "summary": summary}
        )
    body = _csv(headers, rows) if format == "csv" else _table(headers, rows)
    prefix = "# " if format == "csv" else ""
    line = f"{prefix}source_fee_cf_eur_per_h: {summary['source_fee_cf_eur_per_h']}\n"
    return body + line.encode("utf-8")
