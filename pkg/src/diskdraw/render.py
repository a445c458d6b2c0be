"""Raster rendering of colorings and scripts to binary PGM, plus SVG outlines.

Pixels are sampled at their centers with no antialiasing; the three-valued
semantics map to 0 (black), 255 (white) and a mid-gray for boundary, so a
render is a faithful picture of the verdicts.  Identical inputs produce
byte-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .canvas import DrawingScript, Shade, eval_script
from .geometry import DEFAULT_TAU, Arc, Point, Segment
from .obstruction import Coloring


@dataclass(frozen=True)
class RasterSpec:
    xmin: float
    ymin: float
    xmax: float
    ymax: float
    resolution: float  # pixels per unit
    boundary_value: int = 128

    def __post_init__(self):
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise ValueError("raster bbox must have positive extent")
        if self.resolution < 1.0:
            raise ValueError(f"resolution must be >= 1 pixel per unit, got {self.resolution}")
        if not (0 <= self.boundary_value <= 255):
            raise ValueError("boundary_value must be a byte")

    @property
    def width(self) -> int:
        return max(1, round((self.xmax - self.xmin) * self.resolution))

    @property
    def height(self) -> int:
        return max(1, round((self.ymax - self.ymin) * self.resolution))


RenderSource = Union[DrawingScript, Coloring, Callable[[Point], Shade]]

_SHADE_BYTE = {Shade.BLACK: 0, Shade.WHITE: 255}


def _as_classifier(source: RenderSource, tau: float) -> Callable[[Point], Shade]:
    if isinstance(source, DrawingScript):
        return lambda p: eval_script(p, source, tau)
    if isinstance(source, Coloring):
        return source.classify
    if callable(source):
        return source
    raise TypeError(f"cannot render {source!r}")


def render(source: RenderSource, spec: RasterSpec, tau: float = DEFAULT_TAU) -> bytes:
    """Evaluate the source at every pixel center; returns raw row-major bytes."""
    classify = _as_classifier(source, tau)
    w, h = spec.width, spec.height
    sx = (spec.xmax - spec.xmin) / w
    sy = (spec.ymax - spec.ymin) / h
    rows = bytearray(w * h)
    idx = 0
    for i in range(h):
        y = spec.ymax - (i + 0.5) * sy
        for j in range(w):
            shade = classify(Point(spec.xmin + (j + 0.5) * sx, y))
            rows[idx] = _SHADE_BYTE.get(shade, spec.boundary_value)
            idx += 1
    return bytes(rows)


def to_pgm(pixels: bytes, spec: RasterSpec) -> bytes:
    header = f"P5\n{spec.width} {spec.height}\n255\n".encode("ascii")
    return header + pixels


def write_pgm(path: str, source: RenderSource, spec: RasterSpec, tau: float = DEFAULT_TAU) -> None:
    with open(path, "wb") as fh:
        fh.write(to_pgm(render(source, spec, tau), spec))


def black_fraction(pixels: bytes) -> float:
    if not pixels:
        return 0.0
    return sum(1 for b in pixels if b == 0) / len(pixels)


def _svg_piece(piece) -> str:
    if isinstance(piece, Segment):
        return f"M {piece.a.x:.6f} {piece.a.y:.6f} L {piece.b.x:.6f} {piece.b.y:.6f}"
    if isinstance(piece, Arc):
        p0, p1 = piece.start_point, piece.end_point
        large = 1 if piece.sweep > math.pi else 0
        # SVG's y axis points down; the caller flips with a transform, making
        # a ccw arc here a sweep=0 arc in SVG coordinates.
        sweep = 0 if piece.ccw else 1
        return (
            f"M {p0.x:.6f} {p0.y:.6f} "
            f"A {piece.radius:.6f} {piece.radius:.6f} 0 {large} {sweep} {p1.x:.6f} {p1.y:.6f}"
        )
    raise TypeError(f"cannot render piece {piece!r}")


def write_svg(path: str, pieces, spec: RasterSpec, stroke_width: float = 0.02) -> None:
    """Write the boundary pieces as an SVG outline over the raster bbox."""
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{spec.xmin} {-spec.ymax} {spec.xmax - spec.xmin} {spec.ymax - spec.ymin}">',
        f'<g transform="scale(1,-1)" fill="none" stroke="black" stroke-width="{stroke_width}">',
    ]
    for piece in pieces:
        parts.append(f'<path d="{_svg_piece(piece)}"/>')
    parts.append("</g></svg>")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(parts) + "\n")
