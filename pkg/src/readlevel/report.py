"""Report emission: figures plus matching data tables from a scores list.

For each figure the same numbers go to a sibling ``.csv`` (formatted to 4
decimal places) and into the SVG as text labels, so the two can be checked
against each other. With the shipped 5-speaker fixture this produces 16
SVG + 16 CSV files:

    lexical_mean, lexical_sd, grammar_mean, grammar_sd      (bars)
    announcement_lexical, announcement_grammar              (bars)
    timeseries_<speaker>_<measure> for 5 speakers x 2       (lines)

Output is deterministic: fixed canvas, no timestamps, stable ordering.
"""

from __future__ import annotations

import csv
import logging
import re
from pathlib import Path
from typing import Sequence

from .charts import ChartSpec, render_chart
from .errors import EmptyEvidenceError
from .pipeline import ScoreRecord, aggregate, apply_assume_2016, filter_occasion, time_series

logger = logging.getLogger(__name__)

MEASURES = ("lexical", "grammar")
ANNOUNCEMENT_SUBSTRING = "campaign announcement"


def speaker_slug(name: str) -> str:
    return re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")


def _write_data_csv(path: Path, header: tuple[str, str], rows: list[tuple[str, float]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for label, value in rows:
            writer.writerow([label, "%.4f" % value])


def _emit(out_dir: Path, stem: str, spec: ChartSpec, header: tuple[str, str],
          rows: list[tuple[str, float]], written: list[Path]) -> None:
    svg = out_dir / f"{stem}.svg"
    data = out_dir / f"{stem}.csv"
    render_chart(spec, svg)
    _write_data_csv(data, header, rows)
    written.extend([svg, data])


def generate_report(
    records: Sequence[ScoreRecord],
    out_dir: str | Path,
    assume_2016: bool = False,
) -> list[Path]:
    """Write every figure + data table for a scored corpus; returns paths."""
    if not records:
        raise EmptyEvidenceError("no score records to report on")
    if assume_2016:
        records = apply_assume_2016(records)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    for measure in MEASURES:
        stats = aggregate(records, measure)
        mean_rows = [(s.group_key, float(s.mean)) for s in stats]
        if mean_rows:
            _emit(
                out,
                f"{measure}_mean",
                ChartSpec(
                    kind="bar",
                    title=f"Mean {measure} grade per speaker",
                    series=((measure, tuple(mean_rows)),),
                    y_label="grade",
                ),
                ("speaker", "value"),
                mean_rows,
                written,
            )
        sd_rows = [(s.group_key, float(s.sd)) for s in stats if s.sd is not None]
        if sd_rows:
            _emit(
                out,
                f"{measure}_sd",
                ChartSpec(
                    kind="bar",
                    title=f"{measure.capitalize()} grade standard deviation per speaker",
                    series=((measure, tuple(sd_rows)),),
                    y_range=None,
                    y_label="sample standard deviation",
                ),
                ("speaker", "value"),
                sd_rows,
                written,
            )

    announcements = filter_occasion(records, ANNOUNCEMENT_SUBSTRING)
    for measure in MEASURES:
        rows = [
            (s.group_key, float(s.mean)) for s in aggregate(announcements, measure)
        ] if announcements else []
        if rows:
            _emit(
                out,
                f"announcement_{measure}",
                ChartSpec(
                    kind="bar",
                    title=f"Announcement speech {measure} grade per speaker",
                    series=((measure, tuple(rows)),),
                    y_label="grade",
                ),
                ("speaker", "value"),
                rows,
                written,
            )
        else:
            logger.warning("no announcement records for %s; chart skipped", measure)

    speakers = sorted({r.speaker for r in records})
    for speaker in speakers:
        series = time_series(records, speaker)
        for measure in MEASURES:
            points = [
                (p.date, float(getattr(p, measure)))
                for p in series
                if getattr(p, measure) is not None
            ]
            if not points:
                logger.warning("no %s time series for %s; chart skipped", measure, speaker)
                continue
            rows = [(d.isoformat(), v) for d, v in points]
            _emit(
                out,
                f"timeseries_{speaker_slug(speaker)}_{measure}",
                ChartSpec(
                    kind="line",
                    title=f"{speaker}: {measure} grade over time",
                    series=((measure, tuple(points)),),
                    y_label="grade",
                ),
                ("date", "value"),
                rows,
                written,
            )
    return written
