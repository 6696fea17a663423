"""Deterministic matplotlib SVG rendering for the report figures.

Byte-stable output is a test surface: the SVG backend runs with a fixed
``svg.hashsalt``, the creation date stripped from metadata, and
``svg.fonttype: none`` so every value label lands in the file as a literal
``<text>`` element. Rendering the same ChartSpec twice must produce
identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from pathlib import Path

import matplotlib

matplotlib.use("svg")

import matplotlib as mpl
from matplotlib.figure import Figure

VALUE_FORMAT = "%.4f"
GRADE_RANGE = (1.0, 12.0)

_RC = {
    "svg.hashsalt": "readlevel",
    "svg.fonttype": "none",
    "font.family": "sans-serif",
    "figure.dpi": 100,
}
_COLORS = ("#4878a8", "#d1605e", "#6aa56e", "#e49444", "#8a6fae")


@dataclass(frozen=True)
class ChartSpec:
    """Declarative chart: kind, title, and (label, points) series.

    Bar kinds expect categorical x values (one y per label within a
    series); lines expect (date, y) points. ``y_range`` defaults to the
    1-12 grade scale and may be None to auto-scale (e.g. sd charts).
    """

    kind: str  # "bar" | "grouped_bar" | "line"
    title: str
    series: tuple[tuple[str, tuple[tuple[object, float], ...]], ...]
    y_range: tuple[float, float] | None = GRADE_RANGE
    y_label: str = ""

    def __post_init__(self):
        if self.kind not in ("bar", "grouped_bar", "line"):
            raise ValueError(f"unknown chart kind {self.kind!r}")
        if not self.series or any(not points for _, points in self.series):
            raise ValueError("every chart series needs at least one point")
        if self.kind in ("bar", "grouped_bar"):
            for label, points in self.series:
                xs = [x for x, _ in points]
                if len(xs) != len(set(xs)):
                    raise ValueError(f"series {label!r} has duplicate bar labels")


def render_chart(spec: ChartSpec, path: str | Path) -> None:
    """Render one chart to an SVG file with stable bytes."""
    with mpl.rc_context(_RC):
        fig = Figure(figsize=(8.0, 4.5))
        ax = fig.add_subplot(111)
        if spec.kind == "line":
            _draw_lines(ax, spec)
        else:
            _draw_bars(ax, spec)
        ax.set_title(spec.title)
        if spec.y_label:
            ax.set_ylabel(spec.y_label)
        if spec.y_range is not None:
            ax.set_ylim(*spec.y_range)
        ax.grid(axis="y", linewidth=0.4, alpha=0.5)
        ax.set_axisbelow(True)
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})


def _draw_bars(ax, spec: ChartSpec) -> None:
    categories: list[str] = []
    for _, points in spec.series:
        for x, _ in points:
            if x not in categories:
                categories.append(str(x))
    index = {c: i for i, c in enumerate(categories)}
    width = 0.8 / len(spec.series)
    for s, (label, points) in enumerate(spec.series):
        offset = (s - (len(spec.series) - 1) / 2.0) * width
        xs = [index[str(x)] + offset for x, _ in points]
        ys = [y for _, y in points]
        bars = ax.bar(xs, ys, width=width, color=_COLORS[s % len(_COLORS)], label=label)
        ax.bar_label(bars, fmt=VALUE_FORMAT, fontsize=7)
    ax.set_xticks(range(len(categories)), categories)
    if len(spec.series) > 1:
        ax.legend(fontsize=8)


def _draw_lines(ax, spec: ChartSpec) -> None:
    all_dates: list[date] = []
    for s, (label, points) in enumerate(spec.series):
        xs = [x for x, _ in points]
        ys = [y for _, y in points]
        ax.plot(xs, ys, marker="o", color=_COLORS[s % len(_COLORS)], label=label)
        for x, y in points:
            ax.annotate(
                VALUE_FORMAT % y,
                (x, y),
                textcoords="offset points",
                xytext=(0, 5),
                ha="center",
                fontsize=7,
            )
        for x in xs:
            if x not in all_dates:
                all_dates.append(x)
    # Explicit date ticks keep the axis free of auto-locator decisions.
    all_dates.sort()
    ax.set_xticks(all_dates, [d.isoformat() for d in all_dates], rotation=45, ha="right", fontsize=8)
    if len(spec.series) > 1:
        ax.legend(fontsize=8)
