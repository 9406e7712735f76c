"""Planar primitives: distances, exact orientation, segment crossing,
diametral pairs, disk/ellipse membership, circle intersections, and the
rigid-frame transform the tree algorithms run in.

Everything here is a pure function; no shared mutable state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

LEFT = 1
RIGHT = -1
COLLINEAR = 0

# Static filter bound for the 2x2 orientation determinant evaluated in
# doubles (Shewchuk's errbound A).  |det| above this bound guarantees the
# floating-point sign is correct; below it we fall back to exact rationals.
_ORIENT_ERRBOUND = (3.0 + 16.0 * 2.0 ** -53) * 2.0 ** -53

_TANGENT_RTOL = 1e-12


class Point(NamedTuple):
    x: float
    y: float


class Segment(NamedTuple):
    a: Point
    b: Point


def dist(p: Sequence[float], q: Sequence[float]) -> float:
    """Euclidean distance between two points."""
    return math.hypot(p[0] - q[0], p[1] - q[1])


def orientation(p: Sequence[float], q: Sequence[float], r: Sequence[float]) -> int:
    """Sign of the signed area of triangle (p, q, r).

    Returns LEFT (+1) when r lies left of the directed line p->q, RIGHT (-1)
    when it lies right, COLLINEAR (0) otherwise.  A floating-point filter
    with an exact rational fallback makes the sign always correct, so the
    crossing tests built on top are combinatorially reliable.
    """
    detleft = (q[0] - p[0]) * (r[1] - p[1])
    detright = (q[1] - p[1]) * (r[0] - p[0])
    det = detleft - detright
    detsum = abs(detleft) + abs(detright)
    if abs(det) > _ORIENT_ERRBOUND * detsum:
        return LEFT if det > 0.0 else RIGHT
    if detsum == 0.0:
        # both products are exactly zero; det == 0 is exact
        return COLLINEAR
    exact = (Fraction(q[0]) - Fraction(p[0])) * (Fraction(r[1]) - Fraction(p[1])) - (
        Fraction(q[1]) - Fraction(p[1])
    ) * (Fraction(r[0]) - Fraction(p[0]))
    if exact > 0:
        return LEFT
    if exact < 0:
        return RIGHT
    return COLLINEAR


def _within_box(a: Sequence[float], b: Sequence[float], x: Sequence[float]) -> bool:
    # x is assumed collinear with segment ab; closed bounding-box test
    return (
        min(a[0], b[0]) <= x[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= x[1] <= max(a[1], b[1])
    )


def segments_cross(s1: Segment | Sequence, s2: Segment | Sequence) -> bool:
    """Whether two segments cross.

    A crossing is an intersection at a point interior to at least one of the
    two segments.  Meeting at a shared endpoint does not count; a collinear
    overlap of positive length does.  Symmetric in its arguments and in each
    segment's endpoint order.

    Raises ValueError for zero-length segments.
    """
    a, b = s1
    c, d = s2
    a, b, c, d = tuple(a), tuple(b), tuple(c), tuple(d)
    if a == b or c == d:
        raise ValueError("degenerate segment")
    d1 = orientation(c, d, a)
    d2 = orientation(c, d, b)
    d3 = orientation(a, b, c)
    d4 = orientation(a, b, d)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True  # proper crossing, interior to both
    if d1 == 0 and d2 == 0:
        # all four points collinear; a line with |dx| >= |dy| is x-monotone,
        # so comparing along the dominant axis is exact
        axis = 0 if abs(b[0] - a[0]) >= abs(b[1] - a[1]) else 1
        lo1, hi1 = sorted((a[axis], b[axis]))
        lo2, hi2 = sorted((c[axis], d[axis]))
        return max(lo1, lo2) < min(hi1, hi2)
    # Non-collinear lines meet at most once, so any remaining contact is an
    # endpoint of one segment lying on the other.
    x = None
    if d1 == 0 and _within_box(c, d, a):
        x = a
    elif d2 == 0 and _within_box(c, d, b):
        x = b
    elif d3 == 0 and _within_box(a, b, c):
        x = c
    elif d4 == 0 and _within_box(a, b, d):
        x = d
    if x is None:
        return False
    shared = x in (a, b) and x in (c, d)
    return not shared


def diametral_pair(points: Sequence[Sequence[float]]) -> tuple[int, int]:
    """Index pair (i, j), i < j, attaining the maximum pairwise distance.

    Quadratic scan; ties break to the lexicographically smallest pair.
    """
    if len(points) < 2:
        raise ValueError("too few points")
    best = -1.0
    pair = (0, 1)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            dij = dist(points[i], points[j])
            if dij > best:
                best = dij
                pair = (i, j)
    return pair


def bichromatic_diametral_pair(
    points: Sequence[Sequence[float]], colors: Sequence[int]
) -> tuple[int, int]:
    """Farthest pair of points carrying different colors.

    Same scan and tie-break as diametral_pair.  Raises ValueError when all
    points share one color.
    """
    if len(points) != len(colors):
        raise ValueError("points and colors differ in length")
    best = -1.0
    pair = None
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if colors[i] == colors[j]:
                continue
            dij = dist(points[i], points[j])
            if dij > best:
                best = dij
                pair = (i, j)
    if pair is None:
        raise ValueError("no bichromatic pair")
    return pair


@dataclass(frozen=True)
class Frame:
    """Rigid motion plus optional uniform scaling, mapping input coordinates
    to a canonical position (anchor at the origin, mate on the positive
    x-axis).  apply followed by invert reproduces coordinates to ~1e-9."""

    translation: tuple[float, float]
    rotation: float
    scale: float

    def apply(self, p: Sequence[float]) -> Point:
        dx = p[0] - self.translation[0]
        dy = p[1] - self.translation[1]
        c = math.cos(self.rotation)
        s = math.sin(self.rotation)
        return Point(self.scale * (c * dx + s * dy), self.scale * (-s * dx + c * dy))

    def invert(self, p: Sequence[float]) -> Point:
        x = p[0] / self.scale
        y = p[1] / self.scale
        c = math.cos(self.rotation)
        s = math.sin(self.rotation)
        return Point(
            self.translation[0] + c * x - s * y,
            self.translation[1] + s * x + c * y,
        )

    def apply_all(self, points: Iterable[Sequence[float]]) -> list[Point]:
        return [self.apply(p) for p in points]


def canonical_frame(
    points: Sequence[Sequence[float]],
    i: int,
    j: int,
    target_len: str = "unit",
) -> tuple[Frame, list[Point]]:
    """Frame mapping points[i] to the origin and points[j] onto the positive
    x-axis, at distance 1 (target_len="unit") or at the original distance
    (target_len="preserve").  Returns the frame and the transformed copy.
    """
    if target_len not in ("unit", "preserve"):
        raise ValueError(f"unknown target_len {target_len!r}")
    p, q = points[i], points[j]
    d = dist(p, q)
    if d == 0.0:
        raise ValueError("coincident pair")
    rotation = math.atan2(q[1] - p[1], q[0] - p[0])
    scale = 1.0 / d if target_len == "unit" else 1.0
    frame = Frame(translation=(p[0], p[1]), rotation=rotation, scale=scale)
    return frame, frame.apply_all(points)


def in_disk(p: Sequence[float], center: Sequence[float], r: float) -> bool:
    """Closed-disk membership."""
    return dist(p, center) <= r


def in_ellipse(
    p: Sequence[float], f1: Sequence[float], f2: Sequence[float], total: float
) -> bool:
    """Whether |p f1| + |p f2| <= total (closed ellipse with the given foci).

    Raises ValueError when total is smaller than the focal distance.
    """
    if total < dist(f1, f2):
        raise ValueError("empty ellipse")
    return dist(p, f1) + dist(p, f2) <= total


def circle_circle_intersections(
    c1: Sequence[float], r1: float, c2: Sequence[float], r2: float
) -> list[Point]:
    """Intersection points of two circle boundaries, sorted by y descending.

    Empty when the circles are disjoint, nested, or concentric; a single
    point when tangent within relative tolerance 1e-12.
    """
    if r1 <= 0 or r2 <= 0:
        raise ValueError("radius must be positive")
    d = dist(c1, c2)
    if d == 0.0:
        return []
    scale = max(r1, r2, d)
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    tol = _TANGENT_RTOL * scale * scale
    if h2 < -tol:
        return []
    ux = (c2[0] - c1[0]) / d
    uy = (c2[1] - c1[1]) / d
    mx = c1[0] + a * ux
    my = c1[1] + a * uy
    if h2 <= tol:
        return [Point(mx, my)]
    h = math.sqrt(h2)
    pts = [Point(mx - h * uy, my + h * ux), Point(mx + h * uy, my - h * ux)]
    pts.sort(key=lambda p: (-p.y, p.x))
    return pts
