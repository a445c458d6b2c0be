"""Shared test utilities: random geometry, random scripts, grid oracles."""

from __future__ import annotations

import math
import random

import numpy as np

from diskdraw import (
    Arc,
    CenterSet,
    DiskModel,
    DrawingScript,
    OffsetHalfPlane,
    Point,
    Segment,
    SinglePoint,
    Stroke,
    Tool,
    WholePlane,
)


def random_point(rng: random.Random, span: float = 3.0) -> Point:
    return Point(rng.uniform(-span, span), rng.uniform(-span, span))


def random_primitive(rng: random.Random, span: float = 3.0):
    roll = rng.random()
    if roll < 0.5:
        return SinglePoint(random_point(rng, span))
    if roll < 0.75:
        a = random_point(rng, span)
        b = random_point(rng, span)
        while a == b:
            b = random_point(rng, span)
        return Segment(a, b)
    if roll < 0.95:
        a0 = rng.uniform(0.0, 2.0 * math.pi)
        return Arc(
            random_point(rng, span),
            rng.uniform(0.2, 2.0),
            a0,
            a0 + rng.uniform(0.3, 2.0 * math.pi),
            ccw=rng.random() < 0.5,
        )
    if roll < 0.99:
        ang = rng.uniform(0.0, 2.0 * math.pi)
        return OffsetHalfPlane(Point(math.cos(ang), math.sin(ang)), rng.uniform(-3.0, 3.0))
    return WholePlane()


def random_script(rng: random.Random, max_strokes: int = 8, span: float = 3.0) -> DrawingScript:
    n = rng.randint(1, max_strokes)
    strokes = []
    for k in range(1, n + 1):
        tool = Tool.PENCIL if k % 2 == 1 else Tool.ERASER
        prims = tuple(random_primitive(rng, span) for _ in range(rng.randint(1, 2)))
        strokes.append(Stroke(tool, CenterSet(prims)))
    return DrawingScript(DiskModel.OPEN, tuple(strokes))


def grid_max_min_dist(obstacles, anchor: Point, rho: float, resolution: float) -> float:
    """Brute-force max over the constraint disk of min distance to obstacles."""
    n = int(2.0 * rho / resolution) + 1
    xs = np.linspace(anchor.x - rho, anchor.x + rho, n)
    ys = np.linspace(anchor.y - rho, anchor.y + rho, n)
    gx, gy = np.meshgrid(xs, ys)
    inside = (gx - anchor.x) ** 2 + (gy - anchor.y) ** 2 <= rho * rho
    best = np.full(gx.shape, np.inf)
    for p in obstacles:
        np.minimum(best, np.hypot(gx - p.x, gy - p.y), out=best)
    best[~inside] = -np.inf
    return float(best.max())


def rigid_motion(angle: float, shift: Point):
    c, s = math.cos(angle), math.sin(angle)

    def move(p: Point) -> Point:
        return Point(c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y)

    return move
