"""Minimal SVG line and bar charts for experiment results.

Rows are duck-typed: anything with ``n``, ``family``, ``c_mtf``, ``c_imtf``
and ``g`` attributes can be plotted.
"""
from __future__ import annotations

import math
from collections.abc import Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 760, 460
LEFT, RIGHT, TOP, BOTTOM = 80, 170, 50, 90
SERIES = ("c_mtf", "c_imtf", "g")
SERIES_LABELS = {"c_mtf": "C_MTF", "c_imtf": "C_IMTF", "g": "gain g (%)"}
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f")


class EmptyInput(ValueError):
    pass


def _nice_ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    start = math.floor(lo / step) * step
    ticks = []
    t = start
    while t <= hi + step * 1e-9:
        ticks.append(round(t, 10))
        t += step
    if ticks[-1] < hi:
        ticks.append(round(t, 10))
    return ticks


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _tick_label(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:g}"


def _groups(rows):
    order = []
    for row in rows:
        if row.family not in order:
            order.append(row.family)
    return order


class _Canvas:
    def __init__(self, title: str):
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
            f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
            f'<text class="title" x="{WIDTH / 2:.0f}" y="24" text-anchor="middle" font-size="15">{escape(title)}</text>',
        ]
        self.x0, self.x1 = LEFT, WIDTH - RIGHT
        self.y0, self.y1 = HEIGHT - BOTTOM, TOP

    def add(self, text: str) -> None:
        self.parts.append(text)

    def y_axis(self, ticks, label, ymap):
        self.add(f'<line class="axis" x1="{self.x0}" y1="{self.y0}" x2="{self.x0}" y2="{self.y1}" stroke="black"/>')
        for t in ticks:
            y = ymap(t)
            self.add(f'<line x1="{self.x0 - 4}" y1="{_fmt(y)}" x2="{self.x1}" y2="{_fmt(y)}" stroke="#dddddd"/>')
            self.add(f'<text x="{self.x0 - 8}" y="{_fmt(y + 4)}" text-anchor="end">{_tick_label(t)}</text>')
        cy = (self.y0 + self.y1) / 2
        self.add(
            f'<text class="ylabel" x="20" y="{_fmt(cy)}" text-anchor="middle" '
            f'transform="rotate(-90 20 {_fmt(cy)})">{escape(label)}</text>'
        )

    def x_axis(self, label, baseline):
        self.add(f'<line class="axis" x1="{self.x0}" y1="{_fmt(baseline)}" x2="{self.x1}" y2="{_fmt(baseline)}" stroke="black"/>')
        self.add(
            f'<text class="xlabel" x="{(self.x0 + self.x1) / 2:.0f}" y="{HEIGHT - 20}" '
            f'text-anchor="middle">{escape(label)}</text>'
        )

    def legend(self, entries):
        x = self.x1 + 20
        for k, (text, color) in enumerate(entries):
            y = self.y1 + 10 + 20 * k
            self.add(f'<rect x="{x}" y="{y - 9}" width="12" height="12" fill="{color}"/>')
            self.add(f'<text class="legend" x="{x + 18}" y="{y + 1}">{escape(text)}</text>')

    def render(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def _y_range(values):
    lo = min(0.0, min(values))
    hi = max(values)
    ticks = _nice_ticks(lo, hi if hi > lo else lo + 1)
    return ticks[0], ticks[-1], ticks


def _y_label(series):
    if all(s == "g" for s in series):
        return "Gain g (%)"
    if "g" in series:
        return "Cost / gain (%)"
    return "Total access cost"


def emit_chart(rows: Sequence, kind: str = "line", series: Sequence[str] = ("c_mtf", "c_imtf"),
               title: str | None = None) -> str:
    """Render rows as an SVG line or bar chart of the chosen series against N.

    Line charts draw one polyline per (dataset family, series). Bar charts
    place one bar group per row, rows of the same family sharing a bracket
    label underneath.
    """
    rows = list(rows)
    series = list(series)
    if not rows:
        raise EmptyInput("nothing to plot")
    if not series or any(s not in SERIES for s in series):
        raise ValueError(f"series must be a non-empty subset of {SERIES}")
    if kind not in ("line", "bar"):
        raise ValueError(f"unknown chart kind {kind!r}")

    title = title or f"{', '.join(SERIES_LABELS[s] for s in series)} vs N"
    canvas = _Canvas(title)
    values = [float(getattr(r, s)) for r in rows for s in series]
    lo, hi, ticks = _y_range(values)

    def ymap(v):
        return canvas.y0 - (v - lo) / (hi - lo) * (canvas.y0 - canvas.y1)

    canvas.y_axis(ticks, _y_label(series), ymap)
    families = _groups(rows)
    if kind == "line":
        _line(canvas, rows, series, families, ymap)
    else:
        _bar(canvas, rows, series, families, ymap)
    canvas.x_axis("Request sequence length N", ymap(0.0))
    return canvas.render()


def _line(canvas, rows, series, families, ymap):
    ns = sorted({r.n for r in rows})
    n_lo, n_hi = ns[0], ns[-1]
    pad = 20

    def xmap(n):
        if n_hi == n_lo:
            return (canvas.x0 + canvas.x1) / 2
        return canvas.x0 + pad + (n - n_lo) / (n_hi - n_lo) * (canvas.x1 - canvas.x0 - 2 * pad)

    for n in ns:
        x = xmap(n)
        canvas.add(f'<text x="{_fmt(x)}" y="{canvas.y0 + 18}" text-anchor="middle">{n}</text>')

    legend = []
    k = 0
    for fam in families:
        fam_rows = sorted((r for r in rows if r.family == fam), key=lambda r: r.n)
        for s in series:
            color = PALETTE[k % len(PALETTE)]
            k += 1
            pts = " ".join(f"{_fmt(xmap(r.n))},{_fmt(ymap(float(getattr(r, s))))}" for r in fam_rows)
            canvas.add(
                f'<polyline class="series" data-series="{s}" data-group="{escape(str(fam))}" '
                f'points="{pts}" fill="none" stroke="{color}" stroke-width="2"/>'
            )
            for r in fam_rows:
                canvas.add(
                    f'<circle cx="{_fmt(xmap(r.n))}" cy="{_fmt(ymap(float(getattr(r, s))))}" r="3" fill="{color}"/>'
                )
            name = SERIES_LABELS[s] if len(families) == 1 else f"{fam} {SERIES_LABELS[s]}"
            legend.append((name, color))
    canvas.legend(legend)


def _bar(canvas, rows, series, families, ymap):
    ordered = [r for fam in families for r in rows if r.family == fam]
    slot = (canvas.x1 - canvas.x0) / len(ordered)
    bar_w = slot * 0.8 / len(series)
    base = ymap(0.0)
    for idx, r in enumerate(ordered):
        left = canvas.x0 + idx * slot + slot * 0.1
        for j, s in enumerate(series):
            v = float(getattr(r, s))
            y = ymap(v)
            top, height = (y, base - y) if y <= base else (base, y - base)
            canvas.add(
                f'<rect class="bar" data-series="{s}" data-group="{escape(str(r.family))}" data-n="{r.n}" '
                f'x="{_fmt(left + j * bar_w)}" y="{_fmt(top)}" width="{_fmt(bar_w)}" '
                f'height="{_fmt(height)}" fill="{PALETTE[j % len(PALETTE)]}"/>'
            )
        canvas.add(
            f'<text x="{_fmt(canvas.x0 + (idx + 0.5) * slot)}" y="{canvas.y0 + 16}" '
            f'text-anchor="middle" font-size="10">{r.n}</text>'
        )
    start = 0
    for fam in families:
        count = sum(1 for r in ordered if r.family == fam)
        a = canvas.x0 + start * slot + 4
        b = canvas.x0 + (start + count) * slot - 4
        y = canvas.y0 + 30
        canvas.add(f'<line class="group" x1="{_fmt(a)}" y1="{y}" x2="{_fmt(b)}" y2="{y}" stroke="#555555"/>')
        canvas.add(
            f'<text class="group-label" x="{_fmt((a + b) / 2)}" y="{y + 14}" '
            f'text-anchor="middle">{escape(str(fam))}</text>'
        )
        start += count
    canvas.legend([(SERIES_LABELS[s], PALETTE[j % len(PALETTE)]) for j, s in enumerate(series)])
