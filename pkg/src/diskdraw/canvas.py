"""The drawing model: strokes, scripts, membership, stationary numbers.

A script is an ordered list of strokes applying unit-disk neighborhoods of
center sets, pencil strokes at odd positions and eraser strokes at even ones
(the alternating normal form).  All comparisons against the critical radius 1
use a symmetric margin and produce three-valued verdicts; boundary verdicts
are propagated, never silently rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Sequence

from .geometry import (
    DEFAULT_TAU,
    OffsetHalfPlane,
    Point,
    Primitive,
    SinglePoint,
    Segment,
    Arc,
    WholePlane,
    check_tolerance,
    dist_to_primitive,
)


class DiskModel(Enum):
    OPEN = "open"
    CLOSED = "closed"


class Tool(Enum):
    PENCIL = "pencil"
    ERASER = "eraser"


class Containment(Enum):
    """Three-valued membership verdict for a single neighborhood."""

    IN = "in"
    OUT = "out"
    BOUNDARY = "boundary"


class Shade(Enum):
    """Three-valued canvas color."""

    BLACK = "black"
    WHITE = "white"
    BOUNDARY = "boundary"


class NonUnitNormal(ValueError):
    pass


class NonConvexInput(ValueError):
    pass


class BoundaryPoint(Exception):
    """Raised when a query cannot be decided because a stroke verdict is Boundary."""


# Dummy strokes inserted by relaxed normalization sit far from any sensible
# query, so they never change a verdict near the working region.
FAR_DUMMY = Point(1.0e7, 1.0e7)


@dataclass(frozen=True, slots=True)
class CenterSet:
    """A finite union of primitives serving as the center set of one stroke."""

    primitives: tuple[Primitive, ...]

    def __post_init__(self):
        if not self.primitives:
            raise ValueError("center set must contain at least one primitive")

    def dist(self, x: Point) -> float:
        return min(dist_to_primitive(x, prim) for prim in self.primitives)

    @staticmethod
    def of_points(*pts: Point) -> "CenterSet":
        return CenterSet(tuple(SinglePoint(p) for p in pts))


@dataclass(frozen=True, slots=True)
class Stroke:
    tool: Tool
    centers: CenterSet


@dataclass(frozen=True, slots=True)
class DrawingScript:
    """Ordered strokes in alternating normal form (pencil odd, eraser even).

    Use DrawingScript.relaxed to build from an arbitrary tool order; padding
    strokes with a far-away dummy center restore alternation without
    affecting verdicts near the working region.
    """

    model: DiskModel
    strokes: tuple[Stroke, ...]

    def __post_init__(self):
        for k, stroke in enumerate(self.strokes, start=1):
            want = Tool.PENCIL if k % 2 == 1 else Tool.ERASER
            if stroke.tool is not want:
                raise ValueError(
                    f"stroke {k} must be {want.value} in alternating form; "
                    "use DrawingScript.relaxed for arbitrary orders"
                )

    @classmethod
    def relaxed(cls, model: DiskModel, strokes: Sequence[Stroke]) -> "DrawingScript":
        out: list[Stroke] = []
        for stroke in strokes:
            want = Tool.PENCIL if (len(out) + 1) % 2 == 1 else Tool.ERASER
            if stroke.tool is not want:
                out.append(Stroke(want, CenterSet.of_points(FAR_DUMMY)))
            out.append(stroke)
        return cls(model, tuple(out))

    def __len__(self) -> int:
        return len(self.strokes)


def nbhd_contains(
    x: Point, centers: CenterSet, model: DiskModel, tau: float = DEFAULT_TAU
) -> Containment:
    """Three-valued test of x against the unit neighborhood of a center set.

    IN when the distance is < 1 - tau, OUT when > 1 + tau, BOUNDARY in the
    collar.  The model does not change the verdict; it fixes how exact-1
    points would resolve (open excludes them, closed includes them), which is
    precisely the regime reported as BOUNDARY.
    """
    check_tolerance(tau)
    d = centers.dist(x)
    if d < 1.0 - tau:
        return Containment.IN
    if d > 1.0 + tau:
        return Containment.OUT
    return Containment.BOUNDARY


def _stroke_verdicts(x: Point, script: DrawingScript, tau: float) -> list[Containment]:
    return [nbhd_contains(x, s.centers, script.model, tau) for s in script.strokes]


def eval_script(x: Point, script: DrawingScript, tau: float = DEFAULT_TAU) -> Shade:
    """Color of x under the script: the parity of the last covering stroke.

    Black when the last stroke whose neighborhood definitely contains x is a
    pencil, white when it is an eraser or no stroke ever covers x.  Boundary
    when some stroke at or above that index has a boundary verdict (an
    earlier boundary stroke is overridden and ignored).
    """
    verdicts = _stroke_verdicts(x, script, tau)
    m = 0
    for k, v in enumerate(verdicts, start=1):
        if v is Containment.IN:
            m = k
    if any(v is Containment.BOUNDARY for v in verdicts[m:]):
        return Shade.BOUNDARY
    if m == 0:
        return Shade.WHITE
    return Shade.BLACK if m % 2 == 1 else Shade.WHITE


def reference_eval(x: Point, script: DrawingScript, tau: float = DEFAULT_TAU) -> Shade:
    """Direct recursive evaluation of the alternating union/difference chain.

    Independent of eval_script's last-cover shortcut; conservative about
    boundaries (any boundary stroke verdict makes the result Boundary).
    """
    verdicts = _stroke_verdicts(x, script, tau)
    if any(v is Containment.BOUNDARY for v in verdicts):
        return Shade.BOUNDARY
    black = False
    for k, v in enumerate(verdicts, start=1):
        covered = v is Containment.IN
        if k % 2 == 1:
            black = black or covered
        else:
            black = black and not covered
    return Shade.BLACK if black else Shade.WHITE


def _sn_definite(covered: Sequence[bool]) -> int:
    last_odd = 0
    last_even = 0
    for k, c in enumerate(covered, start=1):
        if c:
            if k % 2 == 1:
                last_odd = k
            else:
                last_even = k
    if last_odd == 0 and last_even == 0:
        return 0  # never covered; all genuine stationary numbers are >= 1
    if last_odd > last_even:  # final color black
        for k, c in enumerate(covered, start=1):
            if c and k % 2 == 1 and k > last_even:
                return k
    else:  # final color white
        for k, c in enumerate(covered, start=1):
            if c and k % 2 == 0 and k > last_odd:
                return k
    raise AssertionError("unreachable")


def stationary_number(x: Point, script: DrawingScript, tau: float = DEFAULT_TAU) -> int:
    """Index of the stroke that fixed x's final color; 0 when never covered.

    For a final-black point this is the smallest odd covering index after
    which no eraser covers x; dually for final-white.  Boundary stroke
    verdicts are tolerated only when they provably cannot change the answer
    (both resolutions are enumerated); otherwise BoundaryPoint is raised.
    """
    verdicts = _stroke_verdicts(x, script, tau)
    boundary_idx = [i for i, v in enumerate(verdicts) if v is Containment.BOUNDARY]
    base = [v is Containment.IN for v in verdicts]
    if not boundary_idx:
        return _sn_definite(base)
    if len(boundary_idx) > 10:
        raise BoundaryPoint(f"{len(boundary_idx)} boundary strokes at {x}")
    values = set()
    for assignment in product((False, True), repeat=len(boundary_idx)):
        trial = list(base)
        for i, bit in zip(boundary_idx, assignment):
            trial[i] = bit
        values.add(_sn_definite(trial))
        if len(values) > 1:
            raise BoundaryPoint(f"stationary number of {x} depends on a boundary verdict")
    return values.pop()


# ---------------------------------------------------------------------------
# Convex-set script builders
# ---------------------------------------------------------------------------


def halfplane_center_set(normal: Point, offset: float) -> CenterSet:
    """Center set whose open unit neighborhood is the open halfspace <x,n> > offset.

    The centers are the points of the halfspace at distance >= 1 from its
    defining line.
    """
    if abs(normal.norm() - 1.0) > 1e-12:
        raise NonUnitNormal(f"normal {normal} must have unit length")
    return CenterSet((OffsetHalfPlane(normal, offset, margin=1.0),))


def convex_polygon_script(
    vertices: Sequence[Point], model: DiskModel, tau: float = DEFAULT_TAU
) -> DrawingScript:
    """Two-stroke script that is black exactly on the closed convex polygon.

    Paints the whole plane, then erases the open complement halfspace of each
    edge.  Vertices must be in ccw order with strictly convex turns.
    """
    check_tolerance(tau)
    n = len(vertices)
    if n < 3:
        raise NonConvexInput("need at least 3 vertices")
    scale = max(vertices[i].distance_to(vertices[(i + 1) % n]) for i in range(n))
    for i in range(n):
        a, b, c = vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]
        if (b - a).cross(c - b) <= tau * scale * scale:
            raise NonConvexInput(f"turn at vertex {(i + 1) % n} is not strictly convex ccw")
    halfplanes = []
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        outward = Point(b.y - a.y, a.x - b.x).normalized()  # edge direction rotated cw
        halfplanes.append(
            OffsetHalfPlane(outward, a.dot(outward), margin=1.0, strict=model is DiskModel.CLOSED)
        )
    return DrawingScript(
        model,
        (
            Stroke(Tool.PENCIL, CenterSet((WholePlane(),))),
            Stroke(Tool.ERASER, CenterSet(tuple(halfplanes))),
        ),
    )
