# ABOUTME: Renders ROC curves as a static SVG chart and a long-format CSV table
# ABOUTME: Output is byte-identical for identical input

from __future__ import annotations

import logging
from html import escape
from typing import TYPE_CHECKING, NamedTuple

from maneuverml.constants import ROC_CSV_FILE, ROC_SVG_FILE
from maneuverml.errors import EmptyCurveSet

from .roc import auc

if TYPE_CHECKING:
    from collections.abc import Sequence
    from pathlib import Path

    from .models import RocCurve

__all__ = ["ROC_CSV_HEADER", "RocArtifacts", "render_roc", "write_roc"]

logger = logging.getLogger(__name__)

ROC_CSV_HEADER = "algorithm,threshold,fpr,tpr"

_SIZE = 480
_MARGIN = 56
_PLOT = _SIZE - 2 * _MARGIN
_PALETTE = ("#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")


class RocArtifacts(NamedTuple):
    svg: str
    csv: str


def _x(fpr: float) -> str:
    return f"{_MARGIN + fpr * _PLOT:.2f}"


def _y(tpr: float) -> str:
    return f"{_MARGIN + (1.0 - tpr) * _PLOT:.2f}"


def _render_csv(curves: Sequence[tuple[str, RocCurve]]) -> str:
    lines = [ROC_CSV_HEADER]
    for name, curve in curves:
        lines.extend(
            f"{name},{point.threshold!r},{point.fpr!r},{point.tpr!r}"
            for point in curve.points
        )
    return "\n".join(lines) + "\n"


def _render_axes() -> list[str]:
    low, high = _MARGIN, _MARGIN + _PLOT
    parts = [
        f'<rect x="{low}" y="{low}" width="{_PLOT}" height="{_PLOT}" '
        'fill="white" stroke="black" stroke-width="1"/>',
    ]
    for tick in (0.0, 0.25, 0.5, 0.75, 1.0):
        parts.append(
            f'<text x="{_x(tick)}" y="{high + 16}" font-size="11" '
            f'text-anchor="middle">{tick:g}</text>'
        )
        parts.append(
            f'<text x="{low - 8}" y="{_y(tick)}" font-size="11" '
            f'text-anchor="end" dominant-baseline="middle">{tick:g}</text>'
        )
    parts.append(
        f'<text x="{_SIZE / 2:g}" y="{_SIZE - 12}" font-size="13" '
        'text-anchor="middle">False positive rate</text>'
    )
    parts.append(
        f'<text x="16" y="{_SIZE / 2:g}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 16 {_SIZE / 2:g})">True positive rate</text>'
    )
    return parts


def _render_svg(curves: Sequence[tuple[str, RocCurve]]) -> str:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" '
        f'height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        "<title>ROC curves</title>",
        *_render_axes(),
        f'<line class="chance" x1="{_x(0.0)}" y1="{_y(0.0)}" x2="{_x(1.0)}" '
        f'y2="{_y(1.0)}" stroke="red" stroke-width="1" stroke-dasharray="6 4"/>',
    ]
    for index, (name, curve) in enumerate(curves):
        colour = _PALETTE[index % len(_PALETTE)]
        points = " ".join(f"{_x(p.fpr)},{_y(p.tpr)}" for p in curve.points)
        parts.append(
            f'<polyline class="roc-curve" data-algorithm="{escape(name)}" '
            f'points="{points}" fill="none" stroke="{colour}" stroke-width="2"/>'
        )
        legend_y = _MARGIN + _PLOT - 16 * (len(curves) - index)
        parts.append(
            f'<text class="legend" x="{_MARGIN + _PLOT - 8}" y="{legend_y}" '
            f'font-size="12" text-anchor="end" fill="{colour}">'
            f"{escape(name)} (AUC {auc(curve):.4f})</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_roc(curves: Sequence[tuple[str, RocCurve]]) -> RocArtifacts:
    """
    Render named ROC curves.

    The SVG draws the unit square, the dashed red chance diagonal, one
    ``roc-curve`` polyline per algorithm in input order, and a legend with
    each AUC. The CSV holds one row per curve point.

    Raises:
        EmptyCurveSet: If no curves are given
    """
    if not curves:
        msg = "no ROC curves to render"
        raise EmptyCurveSet(msg)
    return RocArtifacts(svg=_render_svg(curves), csv=_render_csv(curves))


def write_roc(artifacts: RocArtifacts, directory: Path) -> tuple[Path, Path]:
    """Write ``roc.svg`` and ``roc.csv`` into a directory."""
    directory.mkdir(parents=True, exist_ok=True)
    svg_path = directory / ROC_SVG_FILE
    csv_path = directory / ROC_CSV_FILE
    svg_path.write_text(artifacts.svg, encoding="utf-8", newline="\n")
    csv_path.write_text(artifacts.csv, encoding="utf-8", newline="\n")
    logger.info("Wrote ROC chart to %s and points to %s", svg_path, csv_path)
    return svg_path, csv_path
