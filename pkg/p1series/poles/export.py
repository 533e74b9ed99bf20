"""Pole maps as CSV (``re,im,stability``) or a plain SVG scatter."""
import csv
import io
import logging
import os
from typing import List, Optional, Tuple

import mpmath

from p1series.core.exceptions import InsufficientOrderError, SeriesDomainError, handle_exception
from p1series.exact.precision import decimal_string, working_precision
from p1series.poles.trusted import PoleSet, sort_key

logger = logging.getLogger(__name__)

CSV = "csv"
SVG = "svg"
FORMATS = (CSV, SVG)

SVG_SIZE = 600
SVG_MARGIN = 30


def pole_rows(poleset: PoleSet, decimals: Optional[int] = None) -> List[Tuple[str, str, str]]:
    """(re, im, stability) strings ordered by modulus then argument."""
    if not poleset.zeros:
        raise InsufficientOrderError("refusing to export an empty pole set")
    if decimals is None:
        decimals = max(poleset.digits // 2, 1)
    with working_precision(poleset.digits + decimals):
        zeros = sorted(poleset.zeros, key=lambda zero: sort_key(zero.value, max(decimals - 2, 1)))
        return [(decimal_string(mpmath.re(zero.value), decimals), decimal_string(mpmath.im(zero.value), decimals),
                 mpmath.nstr(zero.stability, 5)) for zero in zeros]


def pole_map_csv(poleset: PoleSet, decimals: Optional[int] = None) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["re", "im", "stability"])
    writer.writerows(pole_rows(poleset, decimals))
    return buffer.getvalue()


def pole_map_svg(poleset: PoleSet, decimals: Optional[int] = None) -> str:
    """One circle per CSV row on square axes centred at the origin."""
    rows = pole_rows(poleset, decimals)
    extent = max(max(abs(float(re)), abs(float(im))) for re, im, _ in rows) or 1.0
    scale = (SVG_SIZE / 2 - SVG_MARGIN) / extent
    centre = SVG_SIZE / 2
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<line x1="0" y1="{centre}" x2="{SVG_SIZE}" y2="{centre}" stroke="#bbbbbb" stroke-width="1"/>',
        f'<line x1="{centre}" y1="0" x2="{centre}" y2="{SVG_SIZE}" stroke="#bbbbbb" stroke-width="1"/>',
    ]
    for re, im, _ in rows:
        x = centre + float(re) * scale
        y = centre - float(im) * scale
        lines.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="#1f3a93"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


@handle_exception
def export_pole_map(poleset: PoleSet, path: str, format: str = CSV, decimals: Optional[int] = None) -> str:
    """
    Write the pole map to ``path``.

    Returns:
        str: the path written

    Raises:
        InsufficientOrderError: for an empty pole set
        CacheFileSystemError: when the file cannot be written
    """
    if format == CSV:
        text = pole_map_csv(poleset, decimals)
    elif format == SVG:
        text = pole_map_svg(poleset, decimals)
    else:
        raise SeriesDomainError(f"unknown pole map format '{format}'", details={"known": list(FORMATS)})
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fp:
        fp.write(text)
    logger.info("wrote %d poles to %s", len(poleset), path)
    return path
