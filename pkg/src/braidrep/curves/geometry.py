"""Exact planar primitives over rationals.

All points are pairs of `fractions.Fraction`.  Every predicate either returns
an exact answer or raises `Degenerate` when the configuration is on a
boundary case the callers are expected to avoid (callers retry with perturbed
lane positions rather than guess).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Point = Tuple[Fraction, Fraction]


class Degenerate(Exception):
    """A geometric predicate hit a non-generic configuration."""


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def pt(x, y) -> Point:
    return (frac(x), frac(y))


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def scale(a: Point, s: Fraction) -> Point:
    return (a[0] * s, a[1] * s)


def cross(u: Point, v: Point) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Point, v: Point) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of triangle abc (+1 = counterclockwise)."""
    v = cross(sub(b, a), sub(c, a))
    return (v > 0) - (v < 0)


def linf(p: Point) -> Fraction:
    return max(abs(p[0]), abs(p[1]))


def seg_cross_vertical(a: Point, b: Point, x0: Fraction):
    """Interior crossing of segment ab with the line x = x0.

    Returns (t, y, direction) with t in (0, 1) exclusive, y the exact crossing
    ordinate, direction +1 eastward / -1 westward; or None when the open
    segment does not cross.  A vertex exactly on the line is Degenerate (the
    caller decides whether that vertex is a legitimate arc endpoint).
    """
    ax, bx = a[0], b[0]
    if ax == x0 or bx == x0:
        raise Degenerate(f"vertex on vertical x={x0}")
    if (ax < x0) == (bx < x0):
        return None
    t = (x0 - ax) / (bx - ax)
    y = a[1] + t * (b[1] - a[1])
    return (t, y, 1 if bx > ax else -1)


def seg_intersect(a: Point, b: Point, c: Point, d: Point):
    """Proper interior intersection of open segments ab and cd.

    Returns (t, u, point) with both parameters strictly inside (0, 1), or
    None when disjoint.  Touching configurations (an endpoint on the other
    segment, collinear overlap) raise Degenerate.
    """
    r = sub(b, a)
    s = sub(d, c)
    denom = cross(r, s)
    qp = sub(c, a)
    if denom == 0:
        if cross(qp, r) == 0:
            # Collinear: overlap test along the common line.
            rr = dot(r, r)
            if rr == 0:
                raise Degenerate("zero-length segment")
            t0 = dot(qp, r) / rr
            t1 = t0 + dot(s, r) / rr
            lo, hi = min(t0, t1), max(t0, t1)
            if hi <= 0 or lo >= 1:
                return None
            raise Degenerate("collinear overlap")
        return None
    t = cross(qp, s) / denom
    u = cross(qp, r) / denom
    if t <= 0 or t >= 1 or u <= 0 or u >= 1:
        if (0 <= t <= 1) and (0 <= u <= 1):
            raise Degenerate("segment touching")
        return None
    p = add(a, scale(r, t))
    return (t, u, p)


def point_on_segment(p: Point, a: Point, b: Point) -> bool:
    """Exact: p lies on the closed segment ab."""
    if cross(sub(b, a), sub(p, a)) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def point_in_polygon(p: Point, poly: Sequence[Point]) -> bool:
    """Exact even-odd test; p on the boundary raises Degenerate."""
    inside = False
    m = len(poly)
    for i in range(m):
        a, b = poly[i], poly[(i + 1) % m]
        if a == b:
            continue
        if point_on_segment(p, a, b):
            raise Degenerate("point on polygon boundary")
        (ax, ay), (bx, by) = a, b
        if (ay > p[1]) != (by > p[1]):
            # x-coordinate of the edge at height p[1]
            xs = ax + (p[1] - ay) * (bx - ax) / (by - ay)
            if xs == p[0]:
                raise Degenerate("point on polygon boundary")
            if xs > p[0]:
                inside = not inside
    return inside


class Affine:
    """Exact affine map z -> M z + v."""

    __slots__ = ("m00", "m01", "m10", "m11", "v0", "v1")

    def __init__(self, m00, m01, m10, m11, v0, v1):
        self.m00, self.m01 = frac(m00), frac(m01)
        self.m10, self.m11 = frac(m10), frac(m11)
        self.v0, self.v1 = frac(v0), frac(v1)

    def __call__(self, p: Point) -> Point:
        return (
            self.m00 * p[0] + self.m01 * p[1] + self.v0,
            self.m10 * p[0] + self.m11 * p[1] + self.v1,
        )

    def det(self) -> Fraction:
        return self.m00 * self.m11 - self.m01 * self.m10

    @staticmethod
    def from_triangles(src: Sequence[Point], dst: Sequence[Point]) -> "Affine":
        """Unique affine map sending src triangle vertices to dst (in order)."""
        (x0, y0), (x1, y1), (x2, y2) = src
        d = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
        if d == 0:
            raise Degenerate("degenerate source triangle")
        coeffs = []
        for k in range(2):
            u0, u1, u2 = dst[0][k], dst[1][k], dst[2][k]
            # Solve a*x + b*y + c = u on the three vertices.
            a = ((u1 - u0) * (y2 - y0) - (u2 - u0) * (y1 - y0)) / d
            b = ((u2 - u0) * (x1 - x0) - (u1 - u0) * (x2 - x0)) / d
            c = u0 - a * x0 - b * y0
            coeffs.append((a, b, c))
        (a0, b0, c0), (a1, b1, c1) = coeffs
        return Affine(a0, b0, a1, b1, c0, c1)


def point_in_triangle(p: Point, tri: Sequence[Point]) -> bool:
    """Closed-triangle membership (boundary counts as inside)."""
    a, b, c = tri
    s = orient(a, b, c)
    if s == 0:
        raise Degenerate("flat triangle")
    if s < 0:
        b, c = c, b
    return orient(a, b, p) >= 0 and orient(b, c, p) >= 0 and orient(c, a, p) >= 0


def polyline_is_simpleish(pts: Sequence[Point]) -> bool:
    """Cheap sanity: consecutive points distinct, no exact vertex reversals."""
    for i in range(len(pts) - 1):
        if pts[i] == pts[i + 1]:
            return False
    for i in range(1, len(pts) - 1):
        u = sub(pts[i], pts[i - 1])
        v = sub(pts[i + 1], pts[i])
        if cross(u, v) == 0 and dot(u, v) < 0:
            return False
    return True


def segs_touch(p: Point, q: Point, a: Point, b: Point) -> int:
    """Exact segment intersection: 0 disjoint, 1 proper crossing, 2 touch."""
    r, s = sub(q, p), sub(b, a)
    d1 = cross(r, sub(a, p))
    d2 = cross(r, sub(b, p))
    d3 = cross(s, sub(p, a))
    d4 = cross(s, sub(q, a))
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
       ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return 1

    def within(u, v, z):
        return (min(u[0], v[0]) <= z[0] <= max(u[0], v[0])
                and min(u[1], v[1]) <= z[1] <= max(u[1], v[1]))

    if d1 == 0 and within(p, q, a):
        return 2
    if d2 == 0 and within(p, q, b):
        return 2
    if d3 == 0 and within(a, b, p):
        return 2
    if d4 == 0 and within(a, b, q):
        return 2
    return 0


def seg_outbox(a: Point, b: Point):
    """Float bounding box of segment ab, rounded outward one ulp so that
    box-overlap filtering stays conservative over the exact coordinates."""
    return (math.nextafter(float(min(a[0], b[0])), -math.inf),
            math.nextafter(float(max(a[0], b[0])), math.inf),
            math.nextafter(float(min(a[1], b[1])), -math.inf),
            math.nextafter(float(max(a[1], b[1])), math.inf))


class SegGrid:
    """Uniform grid over the outward-rounded segment boxes of a polyline.

    Oversized boxes (long diagonal runs) go on a short always-checked list
    instead of flooding the grid."""

    CELL = 1.0 / 32
    BIG = 96

    def __init__(self, pts: Sequence[Point], boxes=None):
        if boxes is None:
            boxes = [seg_outbox(pts[k], pts[k + 1]) for k in range(len(pts) - 1)]
        self.count = len(boxes)
        self.boxes = boxes
        self.cells = {}
        self.big = []
        for k, box in enumerate(self.boxes):
            x0, x1, y0, y1 = self._cellspan(box, 0)
            if (x1 - x0 + 1) * (y1 - y0 + 1) > self.BIG:
                self.big.append(k)
                continue
            for cx in range(x0, x1 + 1):
                for cy in range(y0, y1 + 1):
                    self.cells.setdefault((cx, cy), []).append(k)

    def _cellspan(self, box, pad):
        h = self.CELL
        return (math.floor(box[0] / h) - pad, math.floor(box[1] / h) + pad,
                math.floor(box[2] / h) - pad, math.floor(box[3] / h) + pad)

    def near(self, box, pad=0):
        """Indices of segments possibly within pad cells of the box."""
        x0, x1, y0, y1 = self._cellspan(box, pad)
        if (x1 - x0 + 1) * (y1 - y0 + 1) > 4 * self.BIG:
            return range(self.count)
        found = set(self.big)
        for cx in range(x0, x1 + 1):
            for cy in range(y0, y1 + 1):
                found.update(self.cells.get((cx, cy), ()))
        return found


def dedupe(pts: Iterable[Point]) -> list:
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    return out
