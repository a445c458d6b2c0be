"""Canonical example sets: chessboards, the curvature-bounded snake region,
and the sharpness script for the dissection bound.

The snake boundary is assembled from tangent-continuous arc and segment
pieces; tangency constraints against the twelve rays are solved in closed
form and cross-checked numerically, with three printed length anchors pinned
by tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .canvas import CenterSet, DiskModel, DrawingScript, Shade, Stroke, Tool
from .geometry import (
    DEFAULT_TAU,
    Arc,
    Point,
    Segment,
    check_tolerance,
    dist_to_primitive,
    rotate_about,
    unit,
)
from .obstruction import Coloring, DissectionSpec, InvalidN

TWO_PI = 2.0 * math.pi

PathPiece = Segment | Arc


class ConstructionInconsistent(ValueError):
    pass


class _DegenerateRay(Exception):
    pass


# ---------------------------------------------------------------------------
# Piecewise boundary paths
# ---------------------------------------------------------------------------


def _piece_start(piece: PathPiece) -> Point:
    return piece.a if isinstance(piece, Segment) else piece.start_point


def _piece_end(piece: PathPiece) -> Point:
    return piece.b if isinstance(piece, Segment) else piece.end_point


def _piece_length(piece: PathPiece) -> float:
    return piece.length


def _reverse_piece(piece: PathPiece) -> PathPiece:
    if isinstance(piece, Segment):
        return Segment(piece.b, piece.a)
    return Arc(piece.center, piece.radius, piece.end_angle, piece.start_angle, not piece.ccw)


def rotate_piece(piece: PathPiece, center: Point, angle: float) -> PathPiece:
    if isinstance(piece, Segment):
        return Segment(rotate_about(piece.a, center, angle), rotate_about(piece.b, center, angle))
    return Arc(
        rotate_about(piece.center, center, angle),
        piece.radius,
        piece.start_angle + angle,
        piece.end_angle + angle,
        piece.ccw,
    )


@dataclass(frozen=True)
class PiecewisePath:
    """A closed, simple, ccw-oriented chain of segments and arcs.

    Consecutive pieces must share endpoints to 1e-9 and the last piece must
    close onto the first.  Orientation is normalized at construction;
    simplicity is checked pairwise in closed form by validate_simple (called
    by the snake builder and by tests, since it is the expensive part).
    """

    pieces: tuple[PathPiece, ...]

    def __post_init__(self):
        if len(self.pieces) < 2:
            raise ValueError("path needs at least two pieces")
        n = len(self.pieces)
        for i in range(n):
            gap = _piece_end(self.pieces[i]).distance_to(_piece_start(self.pieces[(i + 1) % n]))
            if gap > 1e-9:
                raise ValueError(f"pieces {i} and {(i + 1) % n} do not meet (gap {gap:.3e})")
        if self.signed_area() < 0.0:
            rev = tuple(_reverse_piece(p) for p in reversed(self.pieces))
            object.__setattr__(self, "pieces", rev)

    def signed_area(self) -> float:
        total = 0.0
        for piece in self.pieces:
            if isinstance(piece, Segment):
                total += 0.5 * (piece.a.x * piece.b.y - piece.b.x * piece.a.y)
            else:
                r = piece.radius
                th0 = piece.start_angle
                sweep = piece.sweep if piece.ccw else -piece.sweep
                th1 = th0 + sweep
                cx, cy = piece.center.x, piece.center.y
                total += 0.5 * (
                    r * r * sweep
                    + r * (cx * (math.sin(th1) - math.sin(th0)) - cy * (math.cos(th1) - math.cos(th0)))
                )
        return total

    @property
    def total_length(self) -> float:
        return sum(_piece_length(p) for p in self.pieces)

    def piece_offsets(self) -> list[float]:
        out = [0.0]
        for p in self.pieces:
            out.append(out[-1] + _piece_length(p))
        return out

    def locate(self, s: float) -> tuple[int, float]:
        """Piece index and local fraction for the arclength parameter s."""
        total = self.total_length
        s = s % total
        acc = 0.0
        for i, p in enumerate(self.pieces):
            ln = _piece_length(p)
            if s <= acc + ln or i == len(self.pieces) - 1:
                return i, min(1.0, max(0.0, (s - acc) / ln))
            acc += ln
        raise AssertionError("unreachable")

    def point_at(self, s: float) -> Point:
        i, f = self.locate(s)
        return _piece_point(self.pieces[i], f)

    def tangent_at(self, s: float) -> Point:
        i, f = self.locate(s)
        return _piece_tangent(self.pieces[i], f)

    def distance_to(self, x: Point) -> float:
        return min(dist_to_primitive(x, p) for p in self.pieces)

    def validate_simple(self, tol: float = 1e-7) -> None:
        """Raise ConstructionInconsistent when non-adjacent pieces intersect
        or adjacent pieces meet anywhere besides their shared endpoint."""
        n = len(self.pieces)
        for i, j in combinations(range(n), 2):
            if j == i + 1:
                shared = _piece_start(self.pieces[j])
            elif i == 0 and j == n - 1:
                shared = _piece_start(self.pieces[0])
            else:
                shared = None
            hits = _piece_intersections(self.pieces[i], self.pieces[j], tol)
            if not hits:
                continue
            if shared is None:
                raise ConstructionInconsistent(
                    f"pieces {i} and {j} intersect at {hits[0]} (non-adjacent)"
                )
            for h in hits:
                if h.distance_to(shared) > tol * 10.0:
                    raise ConstructionInconsistent(
                        f"adjacent pieces {i} and {j} intersect away from their junction at {h}"
                    )


def _piece_point(piece: PathPiece, f: float) -> Point:
    return piece.point_at(f)


def _piece_tangent(piece: PathPiece, f: float) -> Point:
    if isinstance(piece, Segment):
        return piece.direction()
    ang = piece.angle_at(f)
    radial = unit(ang)
    t = radial.rot90()
    return t if piece.ccw else Point(-t.x, -t.y)


# --- closed-form pairwise intersections (for simplicity checks) -----------


def _seg_seg_intersections(s1: Segment, s2: Segment, tol: float) -> list[Point]:
    d1 = s1.b - s1.a
    d2 = s2.b - s2.a
    denom = d1.cross(d2)
    rel = s2.a - s1.a
    scale = max(d1.norm(), d2.norm())
    if abs(denom) < 1e-14 * scale * scale:
        # parallel; report the overlap midpoint only if truly collinear
        if abs(rel.cross(d1)) > tol * d1.norm():
            return []
        t0 = rel.dot(d1) / d1.dot(d1)
        t1 = t0 + d2.dot(d1) / d1.dot(d1)
        lo = max(min(t0, t1), 0.0)
        hi = min(max(t0, t1), 1.0)
        if hi < lo:
            return []
        return [s1.point_at(0.5 * (lo + hi))]
    t = rel.cross(d2) / denom
    u = rel.cross(d1) / denom
    eps = tol / scale
    if -eps <= t <= 1.0 + eps and -eps <= u <= 1.0 + eps:
        return [s1.point_at(min(1.0, max(0.0, t)))]
    return []


def _line_circle_params(a: Point, d: Point, center: Point, radius: float) -> list[float]:
    """Parameters t with |a + t d - center| = radius (d not normalized)."""
    fx, fy = a.x - center.x, a.y - center.y
    A = d.dot(d)
    B = 2.0 * (fx * d.x + fy * d.y)
    C = fx * fx + fy * fy - radius * radius
    disc = B * B - 4.0 * A * C
    if disc < 0.0:
        return []
    root = math.sqrt(disc)
    return [(-B - root) / (2.0 * A), (-B + root) / (2.0 * A)]


def _seg_arc_intersections(seg: Segment, arc: Arc, tol: float) -> list[Point]:
    d = seg.b - seg.a
    eps = tol / max(d.norm(), 1e-300)
    out = []
    for t in _line_circle_params(seg.a, d, arc.center, arc.radius):
        if -eps <= t <= 1.0 + eps:
            p = seg.point_at(min(1.0, max(0.0, t)))
            theta = math.atan2(p.y - arc.center.y, p.x - arc.center.x)
            if arc.contains_angle(theta, slack=tol / arc.radius):
                out.append(p)
    return out


def _arc_arc_intersections(a1: Arc, a2: Arc, tol: float) -> list[Point]:
    d = a2.center - a1.center
    dist = d.norm()
    r1, r2 = a1.radius, a2.radius
    if dist < 1e-15:
        return []  # concentric: either disjoint or overlapping circles; paths never do this
    if dist > r1 + r2 + tol or dist < abs(r1 - r2) - tol:
        return []
    # clamp for tangency
    x = (dist * dist - r2 * r2 + r1 * r1) / (2.0 * dist)
    h2 = r1 * r1 - x * x
    h = math.sqrt(h2) if h2 > 0.0 else 0.0
    ux, uy = d.x / dist, d.y / dist
    base = Point(a1.center.x + x * ux, a1.center.y + x * uy)
    cands = [Point(base.x - h * uy, base.y + h * ux)]
    if h > 0.0:
        cands.append(Point(base.x + h * uy, base.y - h * ux))
    out = []
    for p in cands:
        th1 = math.atan2(p.y - a1.center.y, p.x - a1.center.x)
        th2 = math.atan2(p.y - a2.center.y, p.x - a2.center.x)
        if a1.contains_angle(th1, slack=tol / r1) and a2.contains_angle(th2, slack=tol / r2):
            out.append(p)
    return out


def _piece_intersections(p1: PathPiece, p2: PathPiece, tol: float) -> list[Point]:
    if isinstance(p1, Segment) and isinstance(p2, Segment):
        return _seg_seg_intersections(p1, p2, tol)
    if isinstance(p1, Segment):
        return _seg_arc_intersections(p1, p2, tol)
    if isinstance(p2, Segment):
        return _seg_arc_intersections(p2, p1, tol)
    return _arc_arc_intersections(p1, p2, tol)


# ---------------------------------------------------------------------------
# Crossing-number membership against a piecewise path
# ---------------------------------------------------------------------------

_BASE_CAST_ANGLE = 0.6180339887498949  # irrational slope; re-randomized on grazing hits


def crossing_parity(path: PiecewisePath, p: Point, angle: float) -> int:
    """Number of proper crossings of the ray from p at the given angle, mod nothing.

    Raises _DegenerateRay on tangencies, endpoint grazes, or collinear
    overlaps; callers retry with a rotated direction.
    """
    u = unit(angle)
    total = 0
    for piece in path.pieces:
        if isinstance(piece, Segment):
            d = piece.b - piece.a
            denom = u.cross(d)
            rel = piece.a - p
            if abs(denom) < 1e-13 * d.norm():
                if abs(rel.cross(u)) < 1e-10 * max(1.0, rel.norm()):
                    raise _DegenerateRay("ray collinear with a segment")
                continue
            t = rel.cross(d) / denom
            s = rel.cross(u) / denom
            if t <= 1e-12:
                continue
            if s < -1e-9 or s > 1.0 + 1e-9:
                continue
            if s < 1e-9 or s > 1.0 - 1e-9:
                raise _DegenerateRay("ray grazes a segment endpoint")
            total += 1
        else:
            ts = _line_circle_params(p, u, piece.center, piece.radius)
            if not ts:
                continue
            if abs(ts[1] - ts[0]) < 1e-7:
                if min(ts) > 1e-12 or max(ts) > 1e-12:
                    raise _DegenerateRay("ray nearly tangent to an arc")
                continue
            sweep = piece.sweep
            full = sweep >= TWO_PI - 1e-12
            for t in ts:
                if t <= 1e-12:
                    continue
                q = Point(p.x + t * u.x, p.y + t * u.y)
                theta = math.atan2(q.y - piece.center.y, q.x - piece.center.x)
                if piece.ccw:
                    off = (theta - piece.start_angle) % TWO_PI
                else:
                    off = (piece.start_angle - theta) % TWO_PI
                margin = 1e-9
                if not full:
                    if off < margin or off > TWO_PI - margin or abs(off - sweep) < margin:
                        raise _DegenerateRay("ray grazes an arc endpoint")
                    if off > sweep:
                        continue
                total += 1
    return total


def classify_against_path(
    path: PiecewisePath, p: Point, tau: float = DEFAULT_TAU, base_angle: float = _BASE_CAST_ANGLE
) -> Shade:
    """Three-valued membership for the closed region bounded by the path."""
    if path.distance_to(p) <= tau:
        return Shade.BOUNDARY
    for k in range(32):
        try:
            inside = crossing_parity(path, p, base_angle + 0.3999966 * k) % 2 == 1
        except _DegenerateRay:
            continue
        return Shade.BLACK if inside else Shade.WHITE
    raise RuntimeError(f"no non-degenerate ray direction found from {p}")


# ---------------------------------------------------------------------------
# Chessboards
# ---------------------------------------------------------------------------


def chessboard_coloring(c: float, tau: float = DEFAULT_TAU) -> Coloring:
    """Black on the two diagonal squares [0,c]^2 and [-c,0]^2, white elsewhere,
    boundary within tau of the square edges."""
    if not c > 0.0:
        raise ValueError(f"square side must be positive, got {c}")
    check_tolerance(tau)
    corners1 = [Point(0, 0), Point(c, 0), Point(c, c), Point(0, c)]
    corners2 = [Point(0, 0), Point(-c, 0), Point(-c, -c), Point(0, -c)]
    edges = [
        Segment(corners1[i], corners1[(i + 1) % 4]) for i in range(4)
    ] + [Segment(corners2[i], corners2[(i + 1) % 4]) for i in range(4)]

    def classify(p: Point) -> Shade:
        if min(dist_to_primitive(p, e) for e in edges) <= tau:
            return Shade.BOUNDARY
        if (0.0 <= p.x <= c and 0.0 <= p.y <= c) or (-c <= p.x <= 0.0 and -c <= p.y <= 0.0):
            return Shade.BLACK
        return Shade.WHITE

    return Coloring(classify, f"2x2 chessboard, side {c}")


def rounded_chessboard_coloring(rho: float, tau: float = DEFAULT_TAU) -> Coloring:
    """Chessboard with the central corner of each black square rounded off.

    The central rho-square of each black square is cut away and replaced by
    the rho-disk sitting at (rho, rho) (respectively (-rho, -rho)), producing
    a boundary fillet of curvature 1/rho > 1 that separates the two black
    regions.
    """
    if not (0.0 < rho < 1.0):
        raise ValueError(f"fillet radius must be in (0, 1), got {rho}")
    check_tolerance(tau)
    pieces: list[PathPiece] = [
        Segment(Point(rho, 0), Point(1, 0)),
        Segment(Point(1, 0), Point(1, 1)),
        Segment(Point(1, 1), Point(0, 1)),
        Segment(Point(0, 1), Point(0, rho)),
        Arc(Point(rho, rho), rho, math.pi, 1.5 * math.pi, ccw=True),
        Segment(Point(-rho, 0), Point(-1, 0)),
        Segment(Point(-1, 0), Point(-1, -1)),
        Segment(Point(-1, -1), Point(0, -1)),
        Segment(Point(0, -1), Point(0, -rho)),
        Arc(Point(-rho, -rho), rho, 0.0, 0.5 * math.pi, ccw=True),
    ]

    def in_square_with_fillet(x: float, y: float) -> bool:
        if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
            return False
        if x < rho and y < rho:
            return (x - rho) ** 2 + (y - rho) ** 2 <= rho * rho
        return True

    def classify(p: Point) -> Shade:
        if min(dist_to_primitive(p, piece) for piece in pieces) <= tau:
            return Shade.BOUNDARY
        if in_square_with_fillet(p.x, p.y) or in_square_with_fillet(-p.x, -p.y):
            return Shade.BLACK
        return Shade.WHITE

    return Coloring(classify, f"rounded chessboard, fillet {rho}")


# ---------------------------------------------------------------------------
# The snake
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SnakeGeometry:
    """All named points, the twelve ray angles, and the boundary path."""

    r: float
    points: dict
    ray_angles: tuple[float, ...]
    boundary: PiecewisePath

    @property
    def apex(self) -> Point:
        return self.points["O"]

    @property
    def ae_len(self) -> float:
        return self.points["A"].distance_to(self.points["E"])

    @property
    def oe_len(self) -> float:
        return self.points["O"].distance_to(self.points["E"])

    @property
    def oe_prime_len(self) -> float:
        return self.points["O"].distance_to(self.points["Eprime"])


def _arc_between(center: Point, radius: float, p_from: Point, p_to: Point, kind: str) -> Arc:
    th0 = math.atan2(p_from.y - center.y, p_from.x - center.x)
    th1 = math.atan2(p_to.y - center.y, p_to.x - center.x)
    ccw_sweep = (th1 - th0) % TWO_PI
    if kind == "minor":
        ccw = ccw_sweep <= math.pi
    elif kind == "major":
        ccw = ccw_sweep > math.pi
    else:
        raise ValueError(f"kind must be 'minor' or 'major', got {kind!r}")
    return Arc(center, radius, th0, th1, ccw=ccw)


def _sector_tangent_circle(apex: Point, ang_i: float, ang_j: float, radius: float):
    """Circle of the given radius tangent to both rays, nested in the sector
    spanned from ang_i to ang_j the short way around.  Returns
    (center, tangent point on ray i, tangent point on ray j)."""
    a = ang_i % TWO_PI
    b = ang_j % TWO_PI
    if a > b:
        a, b = b, a
    if b - a > math.pi:  # sector wraps through zero
        a += TWO_PI
    half = abs(b - a) / 2.0
    bis = (a + b) / 2.0
    d = radius / math.sin(half)
    tl = d * math.cos(half)
    center = apex + unit(bis).scaled(d)
    return center, apex + unit(ang_i).scaled(tl), apex + unit(ang_j).scaled(tl)


def _check(label: str, value: float, expected: float, tol: float = 1e-6) -> None:
    if abs(value - expected) > tol:
        raise ConstructionInconsistent(f"{label}: {value!r} vs expected {expected!r}")


def build_snake(r: float = 1.001) -> SnakeGeometry:
    """Construct the snake region for osculating radius r (max curvature 1/r).

    The kite apex A sits at the origin with the symmetry axis along +x; the
    ray hub O lies further along the axis.  The boundary is one tangent-
    continuous open path from S to T plus its half-turn image about O.
    """
    if not (1.0 < r <= 1.1):
        raise ValueError(f"osculating radius must be in (1, 1.1], got {r}")
    s15, c15 = math.sin(math.radians(15.0)), math.cos(math.radians(15.0))
    sqrt3 = math.sqrt(3.0)

    ab_len = sqrt3 * r / c15
    A = Point(0.0, 0.0)
    leg = Point(s15, c15)  # direction of AB, 75 degrees above the axis
    B = leg.scaled(ab_len)
    C = Point(B.x, -B.y)
    D = B + Point(r, -sqrt3 * r)
    M = Point((B.x + D.x) / 2.0, (B.y + D.y) / 2.0)
    N = Point((C.x + D.x) / 2.0, (C.y + D.y) / 2.0)
    E = leg.scaled(ab_len - r)
    F = Point(E.x, -E.y)

    ae = ab_len - r
    O = Point(ae / s15, 0.0)

    # Twelve rays from O, thirty degrees apart; ray 1 runs through E.
    phase = math.radians(165.0)
    ray_angles = tuple(phase + math.radians(30.0) * j for j in range(12))
    ang = {j + 1: ray_angles[j] for j in range(12)}

    _check("|BD| = 2r", B.distance_to(D), 2.0 * r)
    _check("|DC| = 2r", C.distance_to(D), 2.0 * r)
    _check("D on the axis", D.y, 0.0)
    ba, bc, bd = (A - B).normalized(), (C - B).normalized(), (D - B).normalized()
    _check("angle at B between BA and BC", math.acos(ba.dot(bc)), math.radians(15.0))
    _check("angle at B between BC and BD", math.acos(bc.dot(bd)), math.radians(30.0))
    _check("E on ray 1", abs(unit(ang[1]).cross(E - O)), 0.0, 1e-9)
    _check("F on ray 2", abs(unit(ang[2]).cross(F - O)), 0.0, 1e-9)

    c4, p4_l12, p4_l3 = _sector_tangent_circle(O, ang[12], ang[3], r)
    c5, p5_l11, p5_l4 = _sector_tangent_circle(O, ang[11], ang[4], r)
    c6, p6_l12, e_prime = _sector_tangent_circle(O, ang[12], ang[1], r)
    c7, p7_l3, p7_l4 = _sector_tangent_circle(O, ang[3], ang[4], r)

    if e_prime.distance_to(A) > p6_l12.distance_to(A):
        raise ConstructionInconsistent("tangent point naming: expected the ray-1 point nearer A")

    # The big closing arc is tangent to ray 2 and ray 5 with tangent length
    # |OE'|; that makes its ray-2 tangent point the mirror of E' and its
    # ray-5 tangent point the half-turn image of S.
    tl = O.distance_to(e_prime)
    half8 = abs(ang[5] - ang[2]) / 2.0
    r8 = tl * math.tan(half8)
    c8 = O + unit((ang[2] + ang[5]) / 2.0).scaled(tl / math.cos(half8))
    f_prime = O + unit(ang[2]).scaled(tl)
    T = O + unit(ang[5]).scaled(tl)
    S = O + unit(ang[11]).scaled(tl)

    for label, center, radius, angles in (
        ("a4", c4, r, (ang[12], ang[3])),
        ("a5", c5, r, (ang[11], ang[4])),
        ("a6", c6, r, (ang[12], ang[1])),
        ("a7", c7, r, (ang[3], ang[4])),
        ("a8", c8, r8, (ang[2], ang[5])),
    ):
        for a in angles:
            _check(f"{label} tangent to ray line", abs(unit(a).cross(center - O)), radius)
    _check("circle B tangent to ray 1", abs(unit(ang[1]).cross(B - O)), r)
    _check("circle C tangent to ray 2", abs(unit(ang[2]).cross(C - O)), r)

    half = [
        Segment(S, p5_l11),
        _arc_between(c5, r, p5_l11, p5_l4, "minor"),
        Segment(p5_l4, p7_l4),
        _arc_between(c7, r, p7_l4, p7_l3, "major"),
        Segment(p7_l3, p4_l3),
        _arc_between(c4, r, p4_l3, p4_l12, "minor"),
        Segment(p4_l12, p6_l12),
        _arc_between(c6, r, p6_l12, e_prime, "major"),
        Segment(e_prime, E),
        _arc_between(B, r, E, M, "minor"),
        _arc_between(D, r, M, N, "major"),
        _arc_between(C, r, N, F, "minor"),
        Segment(F, f_prime),
        _arc_between(c8, r8, f_prime, T, "major"),
    ]
    pieces = tuple(half) + tuple(rotate_piece(p, O, math.pi) for p in half)
    boundary = PiecewisePath(pieces)
    boundary.validate_simple()

    # Half-turn symmetry: the rotated piece endpoints must land on the path.
    for probe in (S, T, rotate_about(E, O, math.pi)):
        if boundary.distance_to(probe) > 1e-9:
            raise ConstructionInconsistent("boundary is not half-turn symmetric about O")

    points = {
        "A": A, "B": B, "C": C, "D": D, "E": E, "F": F, "M": M, "N": N, "O": O,
        "Eprime": e_prime, "Fprime": f_prime, "S": S, "T": T,
    }
    return SnakeGeometry(r=r, points=points, ray_angles=ray_angles, boundary=boundary)


def snake_coloring(geom: SnakeGeometry, tau: float = DEFAULT_TAU) -> Coloring:
    """Membership in the region enclosed by the snake boundary."""
    path = geom.boundary
    return Coloring(
        classify=lambda p: classify_against_path(path, p, tau),
        description=f"snake region, osculating radius {geom.r}",
    )


SNAKE_DISSECTION_A = 2.964
SNAKE_DISSECTION_B = 3.735
SNAKE_DISSECTION_D = 0.793


def snake_dissection_spec(geom: SnakeGeometry, tau: float = DEFAULT_TAU) -> DissectionSpec:
    """The total 12-dissection exhibited by the snake.

    Interval and thickness are the published constants; they sit strictly
    inside the boundary-segment span (|OE|, |OE'|) of every ray.  The side
    holding the full rectangle on ray 1 is probed from the actual coloring.
    """
    coloring = snake_coloring(geom, tau)
    mid = 0.5 * (SNAKE_DISSECTION_A + SNAKE_DISSECTION_B)
    u1 = unit(geom.ray_angles[0])
    probe = geom.apex + u1.scaled(mid) + u1.rot90().scaled(0.05)
    shade = coloring.classify(probe)
    if shade is Shade.BOUNDARY:
        raise ConstructionInconsistent("orientation probe landed on the boundary")
    return DissectionSpec(
        apex=geom.apex,
        n=12,
        a=SNAKE_DISSECTION_A,
        b=SNAKE_DISSECTION_B,
        d=SNAKE_DISSECTION_D,
        phase=geom.ray_angles[0],
        first_orientation="ccw" if shade is Shade.BLACK else "cw",
    )


# ---------------------------------------------------------------------------
# Sharpness of the dissection bound
# ---------------------------------------------------------------------------


def sharp_ndissected_script(n: int, truncation: float = 25.0) -> DrawingScript:
    """Pencil-only script that is totally n-dissected at (cot(pi/n), inf).

    In every other sector between consecutive rays, a unit disk tangent to
    both bounding rays (tangent points at distance cot(pi/n) from the apex)
    is slid outward along each ray; the stroke center sets are the segments
    swept by the disk center, truncated at the given length.
    """
    if n < 4 or n % 2 != 0:
        raise InvalidN(f"n must be even and >= 4, got {n}")
    if truncation <= 0.0:
        raise ValueError("truncation must be positive")
    beta = math.pi / n
    strokes = []
    for j in range(0, n, 2):  # black sector between rays j+1 and j+2 (1-based)
        ang_lo = TWO_PI * j / n
        ang_hi = TWO_PI * (j + 1) / n
        vertex = unit((ang_lo + ang_hi) / 2.0).scaled(1.0 / math.sin(beta))
        for ray_ang in (ang_lo, ang_hi):
            end = vertex + unit(ray_ang).scaled(truncation)
            strokes.append(Stroke(Tool.PENCIL, CenterSet((Segment(vertex, end),))))
    return DrawingScript.relaxed(DiskModel.OPEN, strokes)
