"""Static SVG charts: yearly publication trend and stacked discipline weights.

Charts are 960x540. Axis ticks follow the 1-2-5 rule: the step is the
smallest of {1, 2, 5} x 10^k giving at most ``MAX_TICKS`` intervals over the
data range, and tick positions are the multiples of the step inside it.
Coordinates are written with two decimals so output is byte-stable.
"""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

import numpy as np

from .corpus import YearSeries
from .metrics import WeightMatrix
from .regress import FitResult, predict

WIDTH, HEIGHT = 960, 540
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 230, 40, 50
MAX_TICKS = 8
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def nice_step(span: float, max_ticks: int = MAX_TICKS) -> float:
    if span <= 0:
        return 1.0
    exp = math.floor(math.log10(span / max_ticks))
    for base in (1, 2, 5, 10):
        step = base * 10.0 ** exp
        if span / step <= max_ticks:
            return step
    return 10.0 ** (exp + 1)


def ticks(lo: float, hi: float, max_ticks: int = MAX_TICKS, integer: bool = False) -> list[float]:
    step = nice_step(hi - lo, max_ticks)
    if integer:
        step = max(1.0, round(step))
    first = math.ceil(lo / step - 1e-9)
    last = math.floor(hi / step + 1e-9)
    return [k * step for k in range(first, last + 1)]


def _num(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _label(x: float) -> str:
    return f"{x:g}" if abs(x) < 1e6 else f"{x:.3g}"


class _Frame:
    def __init__(self, x_lo, x_hi, y_lo, y_hi):
        self.x_lo, self.x_hi = x_lo, x_hi if x_hi > x_lo else x_lo + 1
        self.y_lo, self.y_hi = y_lo, y_hi if y_hi > y_lo else y_lo + 1
        self.left, self.right = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
        self.top, self.bottom = MARGIN_TOP, HEIGHT - MARGIN_BOTTOM

    def x(self, v):
        return self.left + (v - self.x_lo) / (self.x_hi - self.x_lo) * (self.right - self.left)

    def y(self, v):
        return self.bottom - (v - self.y_lo) / (self.y_hi - self.y_lo) * (self.bottom - self.top)

    def axes(self, title, x_ticks, y_ticks, y_label) -> list[str]:
        out = [
            f'<text x="{WIDTH / 2:.2f}" y="24.00" text-anchor="middle" font-size="16">{escape(title)}</text>',
            f'<line x1="{_num(self.left)}" y1="{_num(self.bottom)}" x2="{_num(self.right)}" '
            f'y2="{_num(self.bottom)}" stroke="#000"/>',
            f'<line x1="{_num(self.left)}" y1="{_num(self.top)}" x2="{_num(self.left)}" '
            f'y2="{_num(self.bottom)}" stroke="#000"/>',
        ]
        for v in x_ticks:
            px = _num(self.x(v))
            out.append(f'<line x1="{px}" y1="{_num(self.bottom)}" x2="{px}" y2="{_num(self.bottom + 5)}" stroke="#000"/>')
            out.append(f'<text x="{px}" y="{_num(self.bottom + 20)}" text-anchor="middle" font-size="11">{_label(v)}</text>')
        for v in y_ticks:
            py = _num(self.y(v))
            out.append(f'<line x1="{_num(self.left - 5)}" y1="{py}" x2="{_num(self.left)}" y2="{py}" stroke="#000"/>')
            out.append(f'<text x="{_num(self.left - 8)}" y="{py}" text-anchor="end" '
                       f'dominant-baseline="middle" font-size="11">{_label(v)}</text>')
        out.append(f'<text x="16.00" y="{_num((self.top + self.bottom) / 2)}" font-size="12" '
                   f'transform="rotate(-90 16.00 {_num((self.top + self.bottom) / 2)})" '
                   f'text-anchor="middle">{escape(y_label)}</text>')
        return out


def _legend(entries: Sequence[tuple[str, str]]) -> list[str]:
    out = []
    x = WIDTH - MARGIN_RIGHT + 15
    for i, (name, color) in enumerate(entries):
        y = MARGIN_TOP + 16 * i
        out.append(f'<rect x="{_num(x)}" y="{_num(y)}" width="10.00" height="10.00" fill="{color}"/>')
        out.append(f'<text x="{_num(x + 15)}" y="{_num(y + 9)}" font-size="11">{escape(name)}</text>')
    return out


def _document(body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">')
    return "\n".join([head, f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#fff"/>', *body, "</svg>"]) + "\n"


def trend_chart(series: YearSeries, fit: FitResult | None, title: str = "") -> str:
    """Observed publications per year as a polyline, fitted curve as a path."""
    t, y = series.arrays()
    curve = None
    if fit is not None and not fit.degenerate and len(t):
        grid = np.linspace(t[0], t[-1], max(2, 4 * (int(t[-1] - t[0]) + 1)))
        curve = (grid, np.asarray(predict(fit, grid), dtype=float))
    y_hi = max([float(y.max()) if len(y) else 1.0]
               + ([float(np.nanmax(curve[1]))] if curve is not None else []))
    x_ticks = ticks(float(t[0]), float(t[-1]), integer=True)
    y_ticks = ticks(0.0, y_hi)
    frame = _Frame(float(t[0]), float(t[-1]), 0.0, max(y_hi, y_ticks[-1]))
    body = frame.axes(title or "Publications per year", x_ticks, y_ticks, "publications")

    pts = " ".join(f"{_num(frame.x(a))},{_num(frame.y(b))}" for a, b in zip(t, y))
    body.append(f'<polyline class="series observed" fill="none" stroke="{PALETTE[0]}" '
                f'stroke-width="2" points="{pts}"/>')
    entries = [("observed", PALETTE[0])]
    if curve is not None:
        d = " ".join(("M" if i == 0 else "L") + f"{_num(frame.x(a))},{_num(frame.y(b))}"
                     for i, (a, b) in enumerate(zip(*curve)))
        body.append(f'<path class="series fitted" fill="none" stroke="{PALETTE[3]}" '
                    f'stroke-width="2" stroke-dasharray="6 4" d="{d}"/>')
        entries.append((f"{fit.kind.value} fit", PALETTE[3]))
    body += _legend(entries)
    return _document(body)


def weights_chart(weights: WeightMatrix, title: str = "") -> str:
    """Stacked areas of yearly discipline weights, one closed path per discipline."""
    years = weights.years
    names = weights.disciplines
    x_lo, x_hi = float(years[0]), float(years[-1])
    frame = _Frame(x_lo, x_hi, 0.0, 1.0)
    body = frame.axes(title or "Annual weight of each discipline",
                      ticks(x_lo, x_hi, integer=True), ticks(0.0, 1.0), "weight")

    base = np.zeros(len(years))
    entries = []
    for i, name in enumerate(names):
        top = base + np.array([weights.weights[t].get(name, 0.0) for t in years])
        upper = [f"{_num(frame.x(t))},{_num(frame.y(v))}" for t, v in zip(years, top)]
        lower = [f"{_num(frame.x(t))},{_num(frame.y(v))}" for t, v in zip(reversed(years), base[::-1])]
        d = "M" + " L".join(upper + lower) + " Z"
        color = PALETTE[i % len(PALETTE)]
        body.append(f'<path class="series" fill="{color}" fill-opacity="0.85" stroke="none" d="{d}"/>')
        entries.append((name, color))
        base = top
    body += _legend(entries)
    return _document(body)
