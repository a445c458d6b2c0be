"""Obstruction machinery: encirclement, descent certificates, dissections.

A point family S encircles T when no open unit disk can touch a point of T
while avoiding every point of S.  Chains of families with alternating colors
and pairwise encirclement force strictly decreasing stationary numbers under
any script, so a self-similar chain certifies that no script can produce the
coloring.  Verdicts are three-valued and certificates only accept definite
yes answers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Sequence

from .canvas import DrawingScript, Shade, eval_script
from .geometry import (
    DEFAULT_TAU,
    Point,
    check_tolerance,
    circumcircle3,
    constrained_largest_empty_circle,
    convex_hull,
    strictly_inside_hull,
    unit,
    _circumcenter_xy,
)


class Verdict(Enum):
    YES = "yes"
    NO = "no"
    BOUNDARY = "boundary"


class MisclassifiedPoint(ValueError):
    pass


class EncirclementFailed(ValueError):
    def __init__(self, stage: int, message: str = ""):
        self.stage = stage
        super().__init__(message or f"encirclement failed at stage {stage}")


class InvalidParameters(ValueError):
    pass


class RadiiTooLarge(ValueError):
    pass


class InvalidN(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """A deterministic black/white membership oracle over the plane."""

    classify: Callable[[Point], Shade]
    description: str = ""


def script_coloring(script: DrawingScript, tau: float = DEFAULT_TAU, description: str = "") -> Coloring:
    return Coloring(
        classify=lambda p: eval_script(p, script, tau),
        description=description or f"script with {len(script)} strokes",
    )


@dataclass(frozen=True)
class StageFamily:
    """One stage of a descent chain: its black points and its white points."""

    blacks: tuple[Point, ...]
    whites: tuple[Point, ...]
    stage_index: int

    @classmethod
    def checked(
        cls,
        coloring: Coloring,
        blacks: Sequence[Point],
        whites: Sequence[Point],
        stage_index: int,
    ) -> "StageFamily":
        fam = cls(tuple(blacks), tuple(whites), stage_index)
        _verify_family_colors(coloring, fam)
        return fam


def _verify_family_colors(coloring: Coloring, fam: StageFamily) -> None:
    from .canvas import BoundaryPoint

    for p in fam.blacks:
        shade = coloring.classify(p)
        if shade is Shade.BOUNDARY:
            raise BoundaryPoint(f"stage {fam.stage_index}: black point {p} is on the boundary")
        if shade is not Shade.BLACK:
            raise MisclassifiedPoint(f"stage {fam.stage_index}: {p} should be black, got {shade.value}")
    for p in fam.whites:
        shade = coloring.classify(p)
        if shade is Shade.BOUNDARY:
            raise BoundaryPoint(f"stage {fam.stage_index}: white point {p} is on the boundary")
        if shade is not Shade.WHITE:
            raise MisclassifiedPoint(f"stage {fam.stage_index}: {p} should be white, got {shade.value}")


# ---------------------------------------------------------------------------
# Encirclement
# ---------------------------------------------------------------------------


def encircles(S: Sequence[Point], T: Sequence[Point], tau: float = DEFAULT_TAU) -> Verdict:
    """Can no open unit disk touch T while avoiding S?

    YES when for every t in T the largest empty circle among S with center
    constrained to |x - t| <= 1 has clearance < 1 - tau.  NO when a witness
    center sits definitely inside the touching region (distance to T below
    1 - tau) with distance to S above 1 + tau.  BOUNDARY otherwise.  Empty T
    is vacuously YES; empty S with nonempty T is NO.
    """
    check_tolerance(tau)
    if not T:
        return Verdict.YES
    if not S:
        return Verdict.NO
    boundary = False
    for t in T:
        _, clearance = constrained_largest_empty_circle(S, t, 1.0, tau)
        if clearance < 1.0 - tau:
            continue
        # Look for a definite counterexample strictly inside the touch region.
        witness, inner = constrained_largest_empty_circle(S, t, 1.0 - 2.0 * tau, tau)
        if inner > 1.0 + tau:
            return Verdict.NO
        boundary = True
    return Verdict.BOUNDARY if boundary else Verdict.YES


def escape_radius(S: Sequence[Point], T: Sequence[Point]) -> float:
    """Radius of the largest disk that can reach a point of T while avoiding S.

    Formally max over t in T of sup{|x - t| : |x - t| <= dist(x, S)}: the
    disk has t on its boundary and no point of S inside.  Infinite when some
    t is not strictly interior to the convex hull of S (a halfplane escapes).
    A finite value below 1 certifies encirclement and scales linearly under
    similarity, which makes it the natural per-stage clearance of a
    self-similar descent chain.
    """
    if not T:
        return 0.0
    if len(S) < 3:
        return math.inf
    hull = convex_hull(S)
    if len(hull) < 3:
        return math.inf
    pts = [(p.x, p.y) for p in S]
    best = 0.0
    for t in T:
        if not strictly_inside_hull(hull, t):
            return math.inf
        txy = (t.x, t.y)
        for a, b in combinations(pts, 2):
            cc = _circumcenter_xy(txy, a, b)
            if cc is None:
                continue
            rho = math.hypot(cc[0] - t.x, cc[1] - t.y)
            dmin = min(math.hypot(cc[0] - sx, cc[1] - sy) for sx, sy in pts)
            if dmin >= rho * (1.0 - 1e-9):
                if rho > best:
                    best = rho
    return best


# ---------------------------------------------------------------------------
# Descent certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckRecord:
    stage: int
    kind: str  # "colors" or "enc"
    verdict: Verdict
    clearance: float

    def line(self) -> str:
        return (
            f"stage={self.stage} kind={self.kind} "
            f"verdict={self.verdict.value} clearance={self.clearance!r}"
        )


@dataclass(frozen=True)
class DescentCertificate:
    stages: tuple[StageFamily, ...]
    checks: tuple[CheckRecord, ...]
    valid: bool

    def report_lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def enc_clearances(self) -> list[float]:
        return [c.clearance for c in self.checks if c.kind == "enc"]


def descent_verify(
    coloring: Coloring,
    stages: Sequence[StageFamily],
    tau: float = DEFAULT_TAU,
    strict: bool = True,
) -> DescentCertificate:
    """Verify a descent chain against a coloring.

    Every listed point must classify definitely with its declared color
    (MisclassifiedPoint / BoundaryPoint otherwise).  For each consecutive pair
    of stages the blacks of stage i must encircle the whites of stage i+1 and
    the whites of stage i must encircle the blacks of stage i+1; the recorded
    clearance is the escape radius of the pair (the largest disk that can
    still reach the inner family while dodging the outer one).  With strict
    set, a non-YES encirclement raises EncirclementFailed; otherwise it is
    recorded and the certificate comes back invalid.
    """
    check_tolerance(tau)
    if not stages:
        raise InvalidParameters("descent chain needs at least one stage")
    checks: list[CheckRecord] = []
    for fam in stages:
        _verify_family_colors(coloring, fam)
        checks.append(CheckRecord(fam.stage_index, "colors", Verdict.YES, 0.0))
    for fam, nxt in zip(stages, stages[1:]):
        v1 = encircles(fam.blacks, nxt.whites, tau)
        v2 = encircles(fam.whites, nxt.blacks, tau)
        if v1 is Verdict.NO or v2 is Verdict.NO:
            verdict = Verdict.NO
        elif v1 is Verdict.YES and v2 is Verdict.YES:
            verdict = Verdict.YES
        else:
            verdict = Verdict.BOUNDARY
        clearance = max(
            escape_radius(fam.blacks, nxt.whites),
            escape_radius(fam.whites, nxt.blacks),
        )
        if strict and verdict is not Verdict.YES:
            raise EncirclementFailed(fam.stage_index)
        checks.append(CheckRecord(fam.stage_index, "enc", verdict, clearance))
    valid = all(c.verdict is Verdict.YES for c in checks)
    return DescentCertificate(tuple(stages), tuple(checks), valid)


# ---------------------------------------------------------------------------
# Chessboard stages
# ---------------------------------------------------------------------------


def chessboard_stages(r: float, theta: float, depth: int) -> list[StageFamily]:
    """Descent stages for the two-square chessboard with side 1.

    Stage 1 has four black points at radius r, spread by the angle theta into
    the black quadrants, and four white points mirrored into the white
    quadrants.  Each further stage is the previous one scaled by exactly 1/2,
    so every derived clearance halves exactly as well.
    """
    if not (0.0 < r < 1.0):
        raise InvalidParameters(f"need 0 < r < 1, got {r}")
    if not (0.0 < theta < math.pi / 4.0):
        raise InvalidParameters(f"need 0 < theta < pi/4, got {theta}")
    if depth < 1:
        raise InvalidParameters(f"need depth >= 1, got {depth}")
    from .constructions import chessboard_coloring

    coloring = chessboard_coloring(1.0)
    b1a = Point(r * math.cos(theta), r * math.sin(theta))
    b1b = Point(b1a.y, b1a.x)  # reflection about the diagonal
    w1a = Point(r * math.cos(theta), -r * math.sin(theta))
    w1b = Point(-w1a.y, -w1a.x)
    blacks = [b1a, b1b, Point(-b1a.x, -b1a.y), Point(-b1b.x, -b1b.y)]
    whites = [w1a, w1b, Point(-w1a.x, -w1a.y), Point(-w1b.x, -w1b.y)]
    stages = []
    for i in range(depth):
        k = 0.5**i  # power of two: scaling is exact in floating point
        stages.append(
            StageFamily.checked(
                coloring,
                [p.scaled(k) for p in blacks],
                [p.scaled(k) for p in whites],
                stage_index=i + 1,
            )
        )
    return stages


# ---------------------------------------------------------------------------
# Total n-dissection: parameters, five-circle radii, stage generation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StageParams:
    """Parameters of one descent-stage construction around dissection rays.

    The two offsets satisfy t < s < 1; the regime of interest has t between
    s^2 and s, enforced by the default t = s^1.5.
    """

    n: int
    L: float
    s: float
    t: float = -1.0  # sentinel; replaced by s**1.5

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise InvalidParameters(f"n must be even and >= 2, got {self.n}")
        if not (self.L > 0.0 and math.isfinite(self.L)):
            raise InvalidParameters(f"L must be positive, got {self.L}")
        if self.t == -1.0:
            object.__setattr__(self, "t", self.s**1.5)
        if not (0.0 < self.t < self.s < 1.0):
            raise InvalidParameters(f"need 0 < t < s < 1, got s={self.s}, t={self.t}")


@dataclass(frozen=True)
class FiveCircleRadii:
    r_a: float
    r_c: float
    r_d: float
    r_e: float

    def all_values(self) -> tuple[float, float, float, float]:
        return (self.r_a, self.r_c, self.r_d, self.r_e)


def five_circle_radii(params: StageParams) -> FiveCircleRadii:
    """Radii of the critical circles pinning one stage of the dissection descent.

    r_a is the circle through one white pair and the nearby ray anchor
    (a degenerate isosceles trapezoid with one base of length 0, radius
    u^2 / (2 t) where u = hypot(s, t)).  r_d and r_e are the closed forms for
    the cross-ray circles; both tend to L * tan(pi/n) as s -> 0.  r_c has no
    closed form here and is computed as a numeric circumcircle; it must stay
    below r_d.
    """
    n, L, s, t = params.n, params.L, params.s, params.t
    alpha = math.pi / n
    phi = math.atan2(t, s)
    u = math.hypot(s, t)

    r_a = u * u / (2.0 * t)
    r_d = (
        math.sqrt(
            (L * math.sin(alpha)) * (L * math.sin(alpha) + u * math.sin(alpha + phi)) + u * u
        )
        / math.cos(alpha + phi)
    )
    r_e = (
        math.sqrt(
            (L * math.sin(alpha) + u * math.sin(alpha - phi))
            * (L * math.sin(alpha) + u * math.sin(alpha + phi))
            + (2.0 * s) ** 2
        )
        / math.cos(alpha)
    )

    # Numeric circumcircle through one white point and the two ray anchors.
    u1 = unit(alpha)
    n1 = u1.rot90()  # away from the wedge interior
    w1 = u1.scaled(L - s) + n1.scaled(t)
    o1 = u1.scaled(L)
    o2 = Point(o1.x, -o1.y)
    r_c = circumcircle3(w1, o1, o2).radius
    if not r_c < r_d:
        raise InvalidParameters(f"expected r_c < r_d, got r_c={r_c}, r_d={r_d}")
    return FiveCircleRadii(r_a=r_a, r_c=r_c, r_d=r_d, r_e=r_e)


def default_dissection_L(n: int, a: float, b: float) -> float:
    """Midpoint of (a, min(b, cot(pi/n))), the widest safe anchor distance."""
    hi = min(b, undrawability_bound(n))
    if not a < hi:
        raise InvalidParameters(f"no valid anchor distance in ({a}, {hi})")
    return 0.5 * (a + hi)


def dissection_stages(
    params: StageParams,
    apex: Point,
    phase: float,
    depth: int,
    first_black_side: int = 1,
    tau: float = DEFAULT_TAU,
) -> list[StageFamily]:
    """Point families of the dissection descent around n evenly spaced rays.

    Ray j (1-based) leaves the apex at angle phase + 2*pi*(j-1)/n.  Each ray
    carries one black pair and one white pair per stage, at along-ray feet
    L -/+ s_i and perpendicular offset t_i, black on the side given by
    first_black_side * (-1)^(j-1) (+1 = counterclockwise).  Stage i shrinks
    the offsets by 2^-i (s halves; t follows t = s^1.5), so each family nests
    into the encircled neighborhoods of the previous one.  Rotating a ray's
    configuration by 2*pi/n gives the next ray's configuration with the
    colors swapped.
    """
    if depth < 0:
        raise InvalidParameters(f"depth must be >= 0, got {depth}")
    if first_black_side not in (1, -1):
        raise InvalidParameters("first_black_side must be +1 (ccw) or -1 (cw)")
    radii = five_circle_radii(params)
    worst = max(radii.all_values())
    if not worst < 1.0 - tau:
        raise RadiiTooLarge(f"critical circle radius {worst} is not below 1")
    n, L = params.n, params.L
    stages = []
    for i in range(depth + 1):
        s_i = params.s * (0.5**i)
        t_i = s_i**1.5
        blacks: list[Point] = []
        whites: list[Point] = []
        for j in range(n):
            u = unit(phase + 2.0 * math.pi * j / n)
            p = u.rot90()
            side = first_black_side * (1 if j % 2 == 0 else -1)
            for foot in (L - s_i, L + s_i):
                base = apex + u.scaled(foot)
                blacks.append(base + p.scaled(side * t_i))
                whites.append(base + p.scaled(-side * t_i))
        stages.append(StageFamily(tuple(blacks), tuple(whites), stage_index=i))
    return stages


def dissection_wedge_checks(
    stages: Sequence[StageFamily], n: int, tau: float = DEFAULT_TAU
) -> list[tuple[int, int, Verdict]]:
    """Per-wedge encirclement of the case split behind the descent chain.

    For consecutive stages and each wedge between rays j and j+1, the four
    stage-i points on the outer sides of the wedge must encircle the four
    stage-(i+1) points inside it.  Families must come from dissection_stages
    (the point layout per ray is two blacks then two whites, rays in order).
    Returns (stage_index, wedge_index, verdict) triples.
    """
    out = []
    for fam, nxt in zip(stages, stages[1:]):
        for j in range(n):
            jn = (j + 1) % n
            outer: list[Point] = []
            inner: list[Point] = []
            # The wedge interior is the ccw side (+1) of ray j and the cw
            # side (-1) of ray j+1.  The outer four points are the pairs on
            # the far sides (one color); the inner four are the
            # opposite-color pairs inside the wedge at the next stage.
            for ray, into_wedge_sign in ((j, 1), (jn, -1)):
                black_side = _family_black_side(fam, ray)
                if black_side == into_wedge_sign:
                    outer.extend(fam.whites[2 * ray : 2 * ray + 2])
                    inner.extend(nxt.blacks[2 * ray : 2 * ray + 2])
                else:
                    outer.extend(fam.blacks[2 * ray : 2 * ray + 2])
                    inner.extend(nxt.whites[2 * ray : 2 * ray + 2])
            out.append((fam.stage_index, j + 1, encircles(outer, inner, tau)))
    return out


def _family_black_side(fam: StageFamily, ray: int) -> int:
    """Recover, from the generated layout, which side of the ray is black.

    dissection_stages emits pairs in ray order, blacks mirrored against
    whites, so the sign of the cross product of the ray direction with the
    black offset gives the side.
    """
    b = fam.blacks[2 * ray]
    w = fam.whites[2 * ray]
    mid = Point((b.x + w.x) / 2.0, (b.y + w.y) / 2.0)  # on the ray
    # direction along the ray is unknown here; use offset vector sign against
    # the ray direction reconstructed from the two feet of the pair
    b2 = fam.blacks[2 * ray + 1]
    w2 = fam.whites[2 * ray + 1]
    mid2 = Point((b2.x + w2.x) / 2.0, (b2.y + w2.y) / 2.0)
    u = (mid2 - mid).normalized()
    return 1 if u.cross(b - mid) > 0 else -1


# ---------------------------------------------------------------------------
# Dissection specification and sampled verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DissectionSpec:
    """Total n-dissection: rays from the apex, one full and one empty
    rectangle over the interval (a, b) with thickness d on either side of
    each ray, orientations alternating ray to ray."""

    apex: Point
    n: int
    a: float
    b: float
    d: float
    phase: float
    first_orientation: str = "ccw"  # side of ray 1 holding the black rectangle

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise InvalidParameters(f"n must be even and >= 2, got {self.n}")
        if not (0.0 <= self.a < self.b):
            raise InvalidParameters(f"need 0 <= a < b, got a={self.a}, b={self.b}")
        if not self.d > 0.0:
            raise InvalidParameters(f"thickness must be positive, got {self.d}")
        if self.first_orientation not in ("ccw", "cw"):
            raise InvalidParameters("first_orientation must be 'ccw' or 'cw'")

    def ray_angle(self, j: int) -> float:
        """Angle of ray j (1-based)."""
        return self.phase + 2.0 * math.pi * (j - 1) / self.n

    def black_side(self, j: int) -> int:
        """+1 when the black rectangle of ray j is on the ccw side."""
        first = 1 if self.first_orientation == "ccw" else -1
        return first * (1 if (j - 1) % 2 == 0 else -1)


@dataclass(frozen=True)
class DissectionCheckResult:
    ok: bool
    failures: tuple[tuple[int, int, Point, str], ...]  # (ray, side, sample, got)

    def __bool__(self) -> bool:
        return self.ok


def dissection_sample_check(
    coloring: Coloring,
    spec: DissectionSpec,
    samples_per_rect: int,
    tau: float = DEFAULT_TAU,
    seed: int = 0,
) -> DissectionCheckResult:
    """Stratified sampling check of the dissection pattern against a coloring.

    Both rectangles of every ray are shrunk by tau and sampled on a jittered
    grid; the rectangle on the black side must classify black throughout and
    the other white.  Returns ok=False with the failing (ray, side, sample)
    records instead of raising.
    """
    check_tolerance(tau)
    if samples_per_rect < 1:
        raise InvalidParameters("samples_per_rect must be >= 1")
    k = max(1, math.isqrt(samples_per_rect - 1) + 1)
    failures: list[tuple[int, int, Point, str]] = []
    for j in range(1, spec.n + 1):
        u = unit(spec.ray_angle(j))
        p = u.rot90()
        black_side = spec.black_side(j)
        for side in (1, -1):
            expect = Shade.BLACK if side == black_side else Shade.WHITE
            rng = random.Random(1_000_003 * seed + 1_009 * j + (side + 1))
            lo_s, hi_s = spec.a + tau, spec.b - tau
            lo_h, hi_h = tau, spec.d - tau
            for gi in range(k):
                for gj in range(k):
                    fs = (gi + 0.25 + 0.5 * rng.random()) / k
                    fh = (gj + 0.25 + 0.5 * rng.random()) / k
                    s_val = lo_s + fs * (hi_s - lo_s)
                    h_val = lo_h + fh * (hi_h - lo_h)
                    sample = spec.apex + u.scaled(s_val) + p.scaled(side * h_val)
                    got = coloring.classify(sample)
                    if got is not expect:
                        failures.append((j, side, sample, got.value))
    return DissectionCheckResult(not failures, tuple(failures))


def dissection_pattern_coloring(spec: DissectionSpec, tau: float = DEFAULT_TAU) -> Coloring:
    """The idealized coloring of a dissection pattern (white background).

    Points inside a ray's black rectangle are black, inside its white
    rectangle white, everything else white; rectangle edges within tau are
    boundary.  Used to verify abstract descent stages without a concrete
    target set.
    """

    def classify(pt: Point) -> Shade:
        rel = pt - spec.apex
        for j in range(1, spec.n + 1):
            u = unit(spec.ray_angle(j))
            s_val = rel.dot(u)
            h_val = u.cross(rel)
            if not (spec.a - tau < s_val < spec.b + tau and abs(h_val) < spec.d + tau):
                continue
            on_edge = (
                abs(s_val - spec.a) <= tau
                or abs(s_val - spec.b) <= tau
                or abs(h_val) <= tau
                or abs(abs(h_val) - spec.d) <= tau
            )
            if on_edge:
                return Shade.BOUNDARY
            side = 1 if h_val > 0 else -1
            return Shade.BLACK if side == spec.black_side(j) else Shade.WHITE
        return Shade.WHITE

    return Coloring(classify, f"ideal {spec.n}-dissection pattern")


def undrawability_bound(n: int) -> float:
    """cot(pi/n): total n-dissection below this anchor distance obstructs drawing."""
    if n < 4 or n % 2 != 0:
        raise InvalidN(f"n must be even and >= 4, got {n}")
    return 1.0 / math.tan(math.pi / n)
