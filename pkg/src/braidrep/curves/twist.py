"""Piecewise-affine half twist swapping two adjacent punctures.

The twist supported near (k + 1/2, 0) is built from square rings (sup-norm
circles) around the center:

* inside radius 9/16: the point reflection through the center (the two
  punctures sit at sup-distance 1/2 and swap);
* between radii 9/16 < 19/32 < 5/8 < 21/32 < 11/16: four square annuli, each
  twisted by one eighth of a turn, interpolating from a half turn to the
  identity.  Each ring carries eight marked slots (four corners, four edge
  midpoints) listed counterclockwise; an annulus is cut into sixteen
  triangles between consecutive slots and mapped by the affine maps induced
  by shifting inner slots one step further than outer slots;
* outside radius 11/16: the identity.

Positive sign = counterclockwise (slots shift upward).  The outermost radius
11/16 < 1 keeps the support clear of the other punctures and the boundary.
Everything is exact rational arithmetic; the template is validated once at
import (orientations positive, triangle areas tile each annulus on both
sides of the map).
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .geometry import Affine, Point, cross, dedupe, frac, linf, point_in_triangle, sub

RADII = [Fraction(9, 16), Fraction(19, 32), Fraction(5, 8), Fraction(21, 32), Fraction(11, 16)]
SUPPORT = RADII[-1]


def _slots(rho: Fraction) -> List[Point]:
    z = Fraction(0)
    return [
        (rho, z),
        (rho, rho),
        (z, rho),
        (-rho, rho),
        (-rho, z),
        (-rho, -rho),
        (z, -rho),
        (rho, -rho),
    ]


def _tri_area2(tri: Sequence[Point]) -> Fraction:
    a, b, c = tri
    return cross(sub(b, a), sub(c, a))


def _build_annuli(sign: int):
    """For each annulus: list of (source triangle, affine map)."""
    annuli = []
    for j in range(4):
        inner = _slots(RADII[j])
        outer = _slots(RADII[j + 1])
        si = sign * (4 - j)
        so = sign * (3 - j)
        tris = []
        area_src = Fraction(0)
        area_img = Fraction(0)
        for t in range(8):
            t1 = (t + 1) % 8
            # The slab between consecutive slots is a quad; its image is
            # sheared one slot along the twist direction, so the cut diagonal
            # must lean the same way or the image triangles fold over.
            if sign > 0:
                pairs = [
                    ((outer[t], outer[t1], inner[t]),
                     (outer[(t + so) % 8], outer[(t1 + so) % 8], inner[(t + si) % 8])),
                    ((outer[t1], inner[t1], inner[t]),
                     (outer[(t1 + so) % 8], inner[(t1 + si) % 8], inner[(t + si) % 8])),
                ]
            else:
                pairs = [
                    ((outer[t], inner[t1], inner[t]),
                     (outer[(t + so) % 8], inner[(t1 + si) % 8], inner[(t + si) % 8])),
                    ((outer[t], outer[t1], inner[t1]),
                     (outer[(t + so) % 8], outer[(t1 + so) % 8], inner[(t1 + si) % 8])),
                ]
            for src, img in pairs:
                a_src = _tri_area2(src)
                a_img = _tri_area2(img)
                assert a_src > 0 and a_img > 0, "twist template triangle flipped"
                area_src += a_src
                area_img += a_img
                tris.append((src, Affine.from_triangles(src, img)))
        ann_area = 4 * (RADII[j + 1] ** 2 - RADII[j] ** 2)
        assert area_src == 2 * ann_area and area_img == 2 * ann_area, "twist template does not tile"
        annuli.append(tris)
    return annuli


_ANNULI = {1: _build_annuli(1), -1: _build_annuli(-1)}

# Subdivision lines (a, b, c) meaning a*x + b*y = c, in center-relative
# coordinates: ring edge lines, the two axes, the two main diagonals, and the
# sixteen distinct diagonal-edge lines of the triangulations.
def _template_lines():
    lines = []
    for rho in RADII:
        lines.append((Fraction(1), Fraction(0), rho))
        lines.append((Fraction(1), Fraction(0), -rho))
        lines.append((Fraction(0), Fraction(1), rho))
        lines.append((Fraction(0), Fraction(1), -rho))
    lines.append((Fraction(1), Fraction(0), Fraction(0)))
    lines.append((Fraction(0), Fraction(1), Fraction(0)))
    lines.append((Fraction(1), Fraction(-1), Fraction(0)))
    lines.append((Fraction(1), Fraction(1), Fraction(0)))
    seen = set()
    for j in range(4):
        inner = _slots(RADII[j])
        outer = _slots(RADII[j + 1])
        for t in range(8):
            # cut diagonals of both twist directions
            for a, b in ((outer[(t + 1) % 8], inner[t]),
                         (outer[t], inner[(t + 1) % 8])):
                la = b[1] - a[1]
                lb = a[0] - b[0]
                lc = la * a[0] + lb * a[1]
                # Normalize so duplicates collapse.
                for lead in (la, lb):
                    if lead != 0:
                        la, lb, lc = la / lead, lb / lead, lc / lead
                        break
                key = (la, lb, lc)
                if key not in seen:
                    seen.add(key)
                    lines.append(key)
    return lines


_LINES = _template_lines()


def _classify(p: Point):
    r = linf(p)
    if r > SUPPORT:
        return ("out", 0)
    if r <= RADII[0]:
        return ("core", 0)
    for j in range(4):
        if RADII[j] < r <= RADII[j + 1]:
            return ("ann", j)
    raise AssertionError("unreachable radius classification")


def _map_point(p: Point, sign: int) -> Point:
    kind, j = _classify(p)
    if kind == "out":
        return p
    if kind == "core":
        return (-p[0], -p[1])
    for src, aff in _ANNULI[sign][j]:
        if point_in_triangle(p, src):
            return aff(p)
    raise AssertionError(f"point {p} not covered by annulus triangulation")


def half_twist(points: Sequence[Point], k: int, sign: int) -> List[Point]:
    """Image of a polyline under the half twist swapping punctures k, k+1.

    `sign` +1 twists counterclockwise (the positive generator), -1 clockwise.
    The polyline is subdivided exactly at every template line so each piece
    lies in a single affine region; pieces outside the support are untouched.
    """
    assert sign in (1, -1)
    cx = frac(k) + Fraction(1, 2)
    rel = [(p[0] - cx, frac(p[1])) for p in points]
    out: List[Point] = [_map_point(rel[0], sign)]
    for i in range(len(rel) - 1):
        a, b = rel[i], rel[i + 1]
        dx, dy = b[0] - a[0], b[1] - a[1]
        # Quick reject: segment bounding box clear of the support square.
        if (max(a[0], b[0]) < -SUPPORT or min(a[0], b[0]) > SUPPORT
                or max(a[1], b[1]) < -SUPPORT or min(a[1], b[1]) > SUPPORT):
            out.append(b)
            continue
        ts = []
        for (la, lb, lc) in _LINES:
            den = la * dx + lb * dy
            if den == 0:
                continue
            t = (lc - la * a[0] - lb * a[1]) / den
            if 0 < t < 1:
                # Only subdivide where the template can actually bend the
                # segment; breakpoints beyond the support are spurious and
                # would plant vertices exactly on extraction cut lines.
                p = (a[0] + t * dx, a[1] + t * dy)
                if linf(p) <= SUPPORT:
                    ts.append(t)
        ts = sorted(set(ts))
        prev_t = Fraction(0)
        prev_p = a
        for t in ts + [Fraction(1)]:
            cur_p = (a[0] + t * dx, a[1] + t * dy) if t != 1 else b
            mid = ((prev_p[0] + cur_p[0]) / 2, (prev_p[1] + cur_p[1]) / 2)
            kind, j = _classify(mid)
            if kind == "out":
                out.append(cur_p)
            elif kind == "core":
                out.append((-cur_p[0], -cur_p[1]))
            else:
                aff = None
                for src, cand in _ANNULI[sign][j]:
                    if point_in_triangle(mid, src):
                        aff = cand
                        break
                assert aff is not None, "midpoint escaped triangulation"
                if out[-1] != aff(prev_p):
                    # Region maps agree on shared boundaries; a mismatch here
                    # would mean the subdivision missed a region edge.
                    raise AssertionError("twist pieces disagree at breakpoint")
                out.append(aff(cur_p))
            prev_t, prev_p = t, cur_p
    out = [(p[0] + cx, p[1]) for p in dedupe(out)]
    return out
