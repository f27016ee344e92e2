"""Deterministic SVG bar charts of quantum states.

Bar height is the amplitude magnitude (not the probability) and the fill hue
is the amplitude's phase mapped onto the color wheel, so real positive
amplitudes come out red (0 degrees) and real negative ones blue-cyan
(180 degrees).  Output is byte-stable: fixed element order and floats
printed with 6 decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sim import RegisterLayout, StateVector


@dataclass(frozen=True)
class ChartBar:
    label: str
    height: float
    hue: float


@dataclass(frozen=True)
class ChartSpec:
    bars: tuple[ChartBar, ...]
    width: int
    height: int


def hue_of(amplitude: complex) -> float:
    """Phase of the amplitude mapped to [0, 360) degrees."""
    angle = math.atan2(amplitude.imag, amplitude.real) % (2.0 * math.pi)
    return (angle / (2.0 * math.pi)) * 360.0 % 360.0


def chart_from_state(
    state: StateVector,
    layout: RegisterLayout | None = None,
    width: int | None = None,
    height: int = 320,
) -> ChartSpec:
    """One bar per basis state, labeled by index or by key:value pair."""
    bars = []
    for outcome in state.outcomes():
        if layout is None:
            label = str(outcome.index)
        else:
            key, value = layout.split_index(outcome.index)
            label = f"{key}:{value}"
        bars.append(ChartBar(label, abs(outcome.amplitude), hue_of(outcome.amplitude)))
    if width is None:
        width = max(360, 14 * len(bars) + 80)
    return ChartSpec(tuple(bars), width, height)


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def render_svg(chart: ChartSpec) -> str:
    """Render the chart; identical input yields byte-identical SVG."""
    left, right, top, bottom = 44.0, 16.0, 34.0, 42.0
    plot_w = chart.width - left - right
    plot_h = chart.height - top - bottom
    count = len(chart.bars)
    slot = plot_w / count
    bar_w = slot * 0.8

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{chart.width}" height="{chart.height}" '
        f'viewBox="0 0 {chart.width} {chart.height}">',
        f'<rect x="0" y="0" width="{chart.width}" height="{chart.height}" fill="white"/>',
    ]

    # frame and unit line
    base_y = top + plot_h
    parts.append(
        f'<line x1="{_fmt(left)}" y1="{_fmt(base_y)}" x2="{_fmt(left + plot_w)}" '
        f'y2="{_fmt(base_y)}" stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{_fmt(left)}" y1="{_fmt(top)}" x2="{_fmt(left + plot_w)}" y2="{_fmt(top)}" '
        f'stroke="#cccccc" stroke-width="1" stroke-dasharray="3,3"/>'
    )
    parts.append(
        f'<text x="{_fmt(left - 6)}" y="{_fmt(top + 4)}" font-size="10" text-anchor="end">1.0</text>'
    )
    parts.append(
        f'<text x="{_fmt(left - 6)}" y="{_fmt(base_y + 4)}" font-size="10" text-anchor="end">0.0</text>'
    )

    for i, bar in enumerate(chart.bars):
        h = min(max(bar.height, 0.0), 1.0) * plot_h
        x = left + i * slot + (slot - bar_w) / 2.0
        y = base_y - h
        fill = f"hsl({_fmt(bar.hue)}, 85%, 50%)"
        parts.append(
            f'<rect class="bar" x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(bar_w)}" '
            f'height="{_fmt(h)}" fill="{fill}"><title>{bar.label}</title></rect>'
        )

    label_step = max(1, count // 32)
    for i, bar in enumerate(chart.bars):
        if i % label_step:
            continue
        x = left + i * slot + slot / 2.0
        parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(base_y + 14)}" font-size="9" '
            f'text-anchor="middle">{bar.label}</text>'
        )

    # color-wheel legend: hue swatches across the top
    swatches = 24
    sw = 7.0
    legend_x = left
    legend_y = 8.0
    for i in range(swatches):
        hue = 360.0 * i / swatches
        parts.append(
            f'<rect class="legend" x="{_fmt(legend_x + i * sw)}" y="{_fmt(legend_y)}" '
            f'width="{_fmt(sw)}" height="10.000000" fill="hsl({_fmt(hue)}, 85%, 50%)"/>'
        )
    parts.append(
        f'<text x="{_fmt(legend_x + swatches * sw + 6)}" y="{_fmt(legend_y + 9)}" '
        f'font-size="9">amplitude phase 0&#176;&#8594;360&#176;</text>'
    )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_state_svg(
    state: StateVector, layout: RegisterLayout | None = None, width: int | None = None
) -> str:
    return render_svg(chart_from_state(state, layout, width))
