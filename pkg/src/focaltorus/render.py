# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        render
# Purpose:     SVG rendering of planar Brillouin zones
#
# Author:      focaltorus developers
#
# Copyright:   (c) 2026 ff. focaltorus developers
# License:     This program is free software. You can redistribute it, use it
#              and/or modify it under the terms of the 2-clause BSD license.
#              For license details please read the file LICENCE.txt provided
#              together with the source code.
# ----------------------------------------------------------------------------
# $Source$
# $Revision$


"""Render the Brillouin zones of a rank 2 lattice as radial fan.

Every sampled ray is drawn as a sequence of segments, one per zone, colored
by zone index. The annuli bounding the zones are overlaid as circles.

Floats only appear here: points are mapped to the plane by the lattice's
embedding and all coordinates are written with exactly three decimal
digits, so the output is byte-identical for identical input.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
from decimalfp import Decimal

from .focal import RadialProfile
from .lattice import Lattice
from .utils import fixed_sqrt

CANVAS_SIZE = 600
MARGIN = 20
COORD_PRECISION = 3

#: Zone colors, cycled by zone index
PALETTE = (
    '#1b9e77',
    '#d95f02',
    '#7570b3',
    '#e7298a',
    '#66a61e',
    '#e6ab02',
    '#a6761d',
    '#666666',
    )

AnnulusRowT = Tuple[int, Fraction, Fraction]


def zone_color(k: int) -> str:
    """Return the color of zone `k` (k >= 1)."""
    return PALETTE[(k - 1) % len(PALETTE)]


def _fmt(value: float) -> str:
    res = str(Decimal(value, COORD_PRECISION))
    return '0.000' if res == '-0.000' else res


def render_zone_fan(lattice: Lattice, profiles: Sequence[RadialProfile],
                    annuli: Sequence[AnnulusRowT], k_max: int) -> str:
    """Return an SVG document showing zones 1 … `k_max` of `lattice`.

    Args:
        lattice: lattice of rank 2
        profiles: radial profiles with at least `k_max` crossings each
        annuli: rows (k, r2_min, r2_max) drawn as pairs of circles
        k_max: number of zones to draw

    Raises:
        ValueError: lattice rank is not 2
    """
    if lattice.rank != 2:
        raise ValueError("Zones can only be rendered for rank 2 lattices.")
    emb = lattice.embedding
    segments: List[Tuple[int, np.ndarray, np.ndarray]] = []
    extent = 0.0
    for profile in profiles:
        u = np.array([float(x) for x in profile.direction]) @ emb
        for k in range(1, k_max + 1):
            start, stop = profile.zone_interval(k)
            if start == stop:
                continue
            p, q = float(start) * u, float(stop) * u
            segments.append((k, p, q))
            extent = max(extent, float(np.hypot(*q)))
    for _, _, r2_max in annuli:
        extent = max(extent, float(fixed_sqrt(r2_max)))
    if extent == 0.0:
        extent = 1.0
    center = CANVAS_SIZE / 2
    scale = (center - MARGIN) / extent

    def to_canvas(point: np.ndarray) -> Tuple[str, str]:
        return _fmt(center + scale * point[0]), _fmt(center - scale * point[1])

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS_SIZE}" '
        f'height="{CANVAS_SIZE}" viewBox="0 0 {CANVAS_SIZE} {CANVAS_SIZE}">',
        f'<rect width="{CANVAS_SIZE}" height="{CANVAS_SIZE}" fill="white"/>',
        '<g stroke-width="1.5" stroke-linecap="round">',
        ]
    for k, p, q in segments:
        (x1, y1), (x2, y2) = to_canvas(p), to_canvas(q)
        lines.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                     f'stroke="{zone_color(k)}"/>')
    lines.append('</g>')
    lines.append('<g fill="none" stroke="black" stroke-width="0.5" '
                 'stroke-dasharray="4 2">')
    for k, r2_min, r2_max in annuli:
        for r2 in (r2_min, r2_max):
            radius = _fmt(scale * float(fixed_sqrt(r2)))
            lines.append(f'<circle cx="{_fmt(center)}" cy="{_fmt(center)}" '
                         f'r="{radius}" data-zone="{k}"/>')
    lines.append('</g>')
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'
