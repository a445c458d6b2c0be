"""Planar primitives and the exact/search kernels shared by the whole package.

Distances to every primitive kind are closed-form (no sampling).  The
constrained largest-empty-circle solver enumerates an exhaustive candidate
set (circumcenters, bisector/boundary intersections, antipodal escapes) and
polishes the winner with bounded golden-section steps, never returning a
value below the best exact candidate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

DEFAULT_TAU = 1e-9

TWO_PI = 2.0 * math.pi


class GeometryError(ValueError):
    """Base class for geometric precondition failures."""


class CollinearPoints(GeometryError):
    """Three points too close to a common line for a circumcircle."""


class InvalidTrapezoid(GeometryError):
    """Isosceles-trapezoid parameters violate 0 <= a < b, h > 0."""


class EmptyObstacleSet(GeometryError):
    """Largest-empty-circle query against no obstacles (clearance would be infinite)."""


def check_tolerance(tau: float) -> float:
    """Validate a comparison margin.  Must sit in (0, 1e-3)."""
    if not (0.0 < tau < 1e-3):
        raise ValueError(f"tolerance must be in (0, 1e-3), got {tau!r}")
    return tau


@dataclass(frozen=True, slots=True)
class Point:
    """A point of the plane with finite coordinates."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, k: float) -> "Point":
        return Point(k * self.x, k * self.y)

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def rot90(self) -> "Point":
        """Counterclockwise quarter turn."""
        return Point(-self.y, self.x)

    def normalized(self) -> "Point":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return Point(self.x / n, self.y / n)


def unit(angle: float) -> Point:
    return Point(math.cos(angle), math.sin(angle))


def rotate_about(p: Point, center: Point, angle: float) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    dx, dy = p.x - center.x, p.y - center.y
    return Point(center.x + c * dx - s * dy, center.y + s * dx + c * dy)


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius >= 0.0):
            raise ValueError(f"circle radius must be finite and >= 0, got {self.radius!r}")


# ---------------------------------------------------------------------------
# Primitives (building blocks of stroke center sets and boundary paths)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SinglePoint:
    p: Point


@dataclass(frozen=True, slots=True)
class Segment:
    """Directed straight segment from a to b; endpoints must be distinct."""

    a: Point
    b: Point

    def __post_init__(self):
        if self.a.x == self.b.x and self.a.y == self.b.y:
            raise ValueError("segment endpoints must be distinct")

    @property
    def length(self) -> float:
        return self.a.distance_to(self.b)

    def direction(self) -> Point:
        return (self.b - self.a).normalized()

    def point_at(self, f: float) -> Point:
        return Point(self.a.x + f * (self.b.x - self.a.x), self.a.y + f * (self.b.y - self.a.y))


@dataclass(frozen=True, slots=True)
class Arc:
    """Circular arc from start_angle to end_angle around center.

    Traversal direction is counterclockwise when ccw is true.  Equal angles
    denote the full circle.
    """

    center: Point
    radius: float
    start_angle: float
    end_angle: float
    ccw: bool = True

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"arc radius must be positive, got {self.radius!r}")

    @property
    def sweep(self) -> float:
        """Unsigned angular extent in (0, 2*pi]."""
        if self.ccw:
            s = (self.end_angle - self.start_angle) % TWO_PI
        else:
            s = (self.start_angle - self.end_angle) % TWO_PI
        return TWO_PI if s == 0.0 else s

    @property
    def length(self) -> float:
        return self.radius * self.sweep

    def angle_at(self, f: float) -> float:
        return self.start_angle + (self.sweep * f if self.ccw else -self.sweep * f)

    def point_at(self, f: float) -> Point:
        ang = self.angle_at(f)
        return Point(
            self.center.x + self.radius * math.cos(ang),
            self.center.y + self.radius * math.sin(ang),
        )

    @property
    def start_point(self) -> Point:
        return self.point_at(0.0)

    @property
    def end_point(self) -> Point:
        return self.point_at(1.0)

    def contains_angle(self, theta: float, slack: float = 1e-12) -> bool:
        """Whether the polar angle theta (about the center) lies on the arc."""
        sweep = self.sweep
        if sweep >= TWO_PI:
            return True
        if self.ccw:
            d = (theta - self.start_angle) % TWO_PI
        else:
            d = (self.start_angle - theta) % TWO_PI
        return d <= sweep + slack or d >= TWO_PI - slack


@dataclass(frozen=True, slots=True)
class OffsetHalfPlane:
    """Center set {z + lam*normal : <z, normal> = offset, lam >= margin}.

    Equivalently all points at inner-product height >= offset + margin.  The
    strict flag records lam > margin semantics; the infimum distance is the
    same either way, so it only matters on the measure-zero boundary that the
    three-valued verdicts already report as such.
    """

    normal: Point
    offset: float
    margin: float = 1.0
    strict: bool = False

    def __post_init__(self):
        if abs(self.normal.norm() - 1.0) > 1e-12:
            raise ValueError("half-plane normal must have unit length (tolerance 1e-12)")


@dataclass(frozen=True, slots=True)
class WholePlane:
    pass


Primitive = Union[SinglePoint, Segment, Arc, OffsetHalfPlane, WholePlane]


def dist_to_segment(x: Point, a: Point, b: Point) -> float:
    vx, vy = b.x - a.x, b.y - a.y
    wx, wy = x.x - a.x, x.y - a.y
    vv = vx * vx + vy * vy
    t = (wx * vx + wy * vy) / vv
    if t <= 0.0:
        return math.hypot(wx, wy)
    if t >= 1.0:
        return math.hypot(x.x - b.x, x.y - b.y)
    return math.hypot(wx - t * vx, wy - t * vy)


def dist_to_primitive(x: Point, prim: Primitive) -> float:
    """Exact distance from x to the primitive's point set."""
    if isinstance(prim, SinglePoint):
        return x.distance_to(prim.p)
    if isinstance(prim, Segment):
        return dist_to_segment(x, prim.a, prim.b)
    if isinstance(prim, Arc):
        vx, vy = x.x - prim.center.x, x.y - prim.center.y
        r = math.hypot(vx, vy)
        if r == 0.0:
            return prim.radius
        if prim.contains_angle(math.atan2(vy, vx)):
            return abs(r - prim.radius)
        return min(x.distance_to(prim.start_point), x.distance_to(prim.end_point))
    if isinstance(prim, OffsetHalfPlane):
        height = x.dot(prim.normal) - (prim.offset + prim.margin)
        return max(0.0, -height)
    if isinstance(prim, WholePlane):
        return 0.0
    raise TypeError(f"unknown primitive {prim!r}")


# ---------------------------------------------------------------------------
# Circumcircles and the isosceles-trapezoid radius formula
# ---------------------------------------------------------------------------


def _circumcenter_xy(a, b, c):
    """Circumcenter of three (x, y) tuples, or None if degenerate."""
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    aa = ax * ax + ay * ay
    bb = bx * bx + by * by
    cc = cx * cx + cy * cy
    ux = (aa * (by - cy) + bb * (cy - ay) + cc * (ay - by)) / d
    uy = (aa * (cx - bx) + bb * (ax - cx) + cc * (bx - ax)) / d
    return (ux, uy)


def circumcircle3(p: Point, q: Point, r: Point, tau: float = DEFAULT_TAU) -> Circle:
    """Unique circle through three points.

    Raises CollinearPoints when the signed triangle area is below
    tau * (max pairwise distance)^2; the threshold is scale-relative so large
    coordinates do not defeat it.
    """
    check_tolerance(tau)
    area2 = (q - p).cross(r - p)  # twice the signed area
    dmax = max(p.distance_to(q), q.distance_to(r), r.distance_to(p))
    if abs(area2) * 0.5 < tau * dmax * dmax or dmax == 0.0:
        raise CollinearPoints(f"points {p}, {q}, {r} are (nearly) collinear")
    cx, cy = _circumcenter_xy((p.x, p.y), (q.x, q.y), (r.x, r.y))
    center = Point(cx, cy)
    radius = (center.distance_to(p) + center.distance_to(q) + center.distance_to(r)) / 3.0
    return Circle(center, radius)


def trapezoid_circumradius(a: float, b: float, h: float) -> float:
    """Circumradius of the isosceles trapezoid with base lengths a < b and height h.

    The leg length is c = sqrt(((b - a)/2)^2 + h^2) and the radius is
    c * sqrt(a*b + c^2) / (2*h).  a = 0 is allowed: the degenerate trapezoid is
    an isosceles triangle with apex on the circumcircle.
    """
    if not (0.0 <= a < b) or not (h > 0.0):
        raise InvalidTrapezoid(f"need 0 <= a < b and h > 0, got a={a}, b={b}, h={h}")
    c = math.hypot((b - a) / 2.0, h)
    return c * math.sqrt(a * b + c * c) / (2.0 * h)


# ---------------------------------------------------------------------------
# Constrained largest empty circle
# ---------------------------------------------------------------------------


def _golden_max(fn, lo: float, hi: float, iters: int):
    """Golden-section maximization on [lo, hi]; returns the best sample seen."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fn(c), fn(d)
    best_x, best_v = (c, fc) if fc >= fd else (d, fd)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fn(c)
            if fc > best_v:
                best_x, best_v = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fn(d)
            if fd > best_v:
                best_x, best_v = d, fd
    return best_x, best_v


def constrained_largest_empty_circle(
    obstacles: Sequence[Point],
    anchor: Point,
    rho: float,
    tau: float = DEFAULT_TAU,
    refine_iters: int = 60,
) -> tuple[Point, float]:
    """Maximize min-distance to the obstacles over the closed disk |x - anchor| <= rho.

    Returns (center, clearance).  The candidate set is exhaustive for point
    obstacles: (i) circumcenters of obstacle triples inside the constraint
    disk, (ii) pairwise perpendicular-bisector intersections with the
    constraint circle, (iii) per-obstacle antipodal escape points on the
    circle, (iv) the anchor itself.  Golden-section refinement along each
    coordinate (refine_iters single-sample steps in total) can only improve
    the reported clearance.
    """
    check_tolerance(tau)
    if not obstacles:
        raise EmptyObstacleSet("largest empty circle needs at least one obstacle")
    if not (math.isfinite(rho) and rho > 0.0):
        raise ValueError(f"constraint radius must be finite and positive, got {rho!r}")

    pts = [(p.x, p.y) for p in obstacles]
    tx, ty = anchor.x, anchor.y

    def f(x: float, y: float) -> float:
        best = math.inf
        for sx, sy in pts:
            d = math.hypot(x - sx, y - sy)
            if d < best:
                best = d
        return best

    rho2 = rho * rho
    cands: list[tuple[float, float]] = [(tx, ty)]

    for sx, sy in pts:  # antipodal escape from each obstacle
        dx, dy = tx - sx, ty - sy
        d = math.hypot(dx, dy)
        if d > 0.0:
            cands.append((tx + rho * dx / d, ty + rho * dy / d))

    for (ax, ay), (bx, by) in combinations(pts, 2):
        dx, dy = bx - ax, by - ay
        ln = math.hypot(dx, dy)
        if ln == 0.0:
            continue
        ux, uy = -dy / ln, dx / ln  # bisector direction
        mx, my = (ax + bx) / 2.0, (ay + by) / 2.0
        px, py = mx - tx, my - ty
        bh = px * ux + py * uy
        disc = bh * bh - (px * px + py * py - rho2)
        if disc >= 0.0:
            root = math.sqrt(disc)
            cands.append((mx + (-bh - root) * ux, my + (-bh - root) * uy))
            cands.append((mx + (-bh + root) * ux, my + (-bh + root) * uy))

    if len(pts) >= 3:
        bound2 = rho2 * (1.0 + 1e-12)
        for a, b, c in combinations(pts, 3):
            cc = _circumcenter_xy(a, b, c)
            if cc is None:
                continue
            dx, dy = cc[0] - tx, cc[1] - ty
            if dx * dx + dy * dy <= bound2:
                cands.append(cc)

    best_x, best_y, best_v = tx, ty, f(tx, ty)
    for x, y in cands[1:]:
        v = f(x, y)
        if v > best_v:
            best_x, best_y, best_v = x, y, v

    # Coordinate-wise polish; golden-section brackets are clipped to the
    # constraint disk chord through the current center.
    iters_per_axis = max(1, refine_iters // 4)
    for _ in range(2):
        dy2 = rho2 - (best_y - ty) ** 2
        if dy2 > 0.0:
            half = math.sqrt(dy2)
            x, v = _golden_max(lambda s: f(s, best_y), tx - half, tx + half, iters_per_axis)
            if v > best_v:
                best_x, best_v = x, v
        dx2 = rho2 - (best_x - tx) ** 2
        if dx2 > 0.0:
            half = math.sqrt(dx2)
            y, v = _golden_max(lambda s: f(best_x, s), ty - half, ty + half, iters_per_axis)
            if v > best_v:
                best_y, best_v = y, v

    return Point(best_x, best_y), best_v


# ---------------------------------------------------------------------------
# Convex hull helpers (used by the obstruction module's escape radius)
# ---------------------------------------------------------------------------


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Andrew's monotone chain; returns hull vertices in ccw order."""
    pts = sorted(set((p.x, p.y) for p in points))
    if len(pts) <= 2:
        return [Point(x, y) for x, y in pts]

    def half(seq):
        out: list[tuple[float, float]] = []
        for p in seq:
            while len(out) >= 2:
                ox, oy = out[-2]
                ax, ay = out[-1]
                if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) <= 0.0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    ring = lower[:-1] + upper[:-1]
    return [Point(x, y) for x, y in ring]


def strictly_inside_hull(hull: Sequence[Point], p: Point, rel_margin: float = 1e-12) -> bool:
    """True when p is strictly interior to the ccw hull polygon.

    The margin is relative to the edge length, i.e. it thresholds the
    perpendicular distance from the edge line.
    """
    if len(hull) < 3:
        return False
    n = len(hull)
    scale = max(max(abs(q.x), abs(q.y)) for q in hull) + 1.0
    for i in range(n):
        a = hull[i]
        b = hull[(i + 1) % n]
        edge = b - a
        if edge.cross(p - a) <= rel_margin * edge.norm() * scale:
            return False
    return True
