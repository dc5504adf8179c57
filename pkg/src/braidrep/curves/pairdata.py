"""Intersection data between a tracked fork and a standard noodle.

For each crossing x_s of the (tightened) tine with the noodle line x = c
there is a based loop: travel the access path from the anchor, hop around the
junction puncture (an octant walk at sup-radius 1/512 that never passes
through the north direction, so it stays clear of the ascending rays), run
along the tine to x_s, then return: step just west of the noodle, ride its
push-off down below the punctures, and walk the bottom corridor back to the
basepoint cluster.  The data recorded per crossing:

* eps: +1 when the tine crosses the noodle eastward (tine tangent then
  noodle tangent is a positively oriented frame);
* a: the total winding of the loop around the punctures = the signed count
  of crossings with the ascending rays {x = k, y > 0}, westward positive.
  The return stays below the punctures and the hop ducks south, so neither
  contributes, and a is a prefix sum along the access-plus-tine travel;
* b[s][s']: the exchange number of the two cable strands when copy 1 targets
  x_s and copy 2 targets x_s'.  Copy 2 rides a left-offset of the spine; the
  two points march in parallel formation (difference D constant along
  segments, rotating across straight connectors at vertices), the early
  arriver waits at its crossing while the other finishes, and both return
  in single file along the noodle push-off, the leader landing on the far
  basepoint.  The pair of basepoints comes back as a set, possibly swapped,
  and b counts the signed sign changes of D_x (counterclockwise passes
  positive), which is exactly the crossing number of the two moving strands;
  it is odd precisely when the landing swaps.

The exchange numbers are only meaningful when the two tracks are genuinely
disjoint: then any time schedule of the two walks gives the same braid class
and the formation/solo/queue decomposition below is just one convenient
schedule.  So the cable is certified before use: corners are blunted until
every turn is acute enough that the straight offset connectors stay inside
their corner wedge, the offset width is capped below the spine's measured
self-clearance, and an exact segment test confirms the offset copy never
meets the spine (except the basepoint pre-leg, which crosses the first spine
segment once by construction, scheduled before copy 1 moves).

Everything is exact; non-generic configurations raise Degenerate and the
computation retries with a fresh lane salt and a halved cable offset.  All
extracted numbers are isotopy invariants, so retries never change answers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .codes import DiskModel
from .geometry import (Degenerate, Point, SegGrid, add, cross, dedupe, linf,
                       point_in_polygon, polyline_is_simpleish, seg_outbox,
                       segs_touch, sub)
from .tracker import Arc, rebuild_system

_F = Fraction
RH = _F(1, 512)      # hop radius around the junction puncture
LAM = _F(1, 512)     # return corridor spacing unit
W0 = _F(1, 8192)     # initial cable offset


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _octant_index(d: Point) -> int:
    """Angular position in sixteenths: even = exact compass direction
    (0=E, 2=NE, 4=N, ..., 12=S, 14=SE), odd = open sector between them."""
    dx, dy = d
    if dx == 0 and dy == 0:
        raise Degenerate("zero direction at junction")
    if dy == 0:
        return 0 if dx > 0 else 8
    if dx == 0:
        return 4 if dy > 0 else 12
    c = _sgn(abs(dx) - abs(dy))
    if dx > 0 and dy > 0:
        return 2 if c == 0 else (1 if c > 0 else 3)
    if dx < 0 and dy > 0:
        return 6 if c == 0 else (5 if c < 0 else 7)
    if dx < 0 and dy < 0:
        return 10 if c == 0 else (9 if c > 0 else 11)
    return 14 if c == 0 else (13 if c < 0 else 15)


_COMPASS = [
    (RH, _F(0)), (RH, RH), (_F(0), RH), (-RH, RH),
    (-RH, _F(0)), (-RH, -RH), (_F(0), -RH), (RH, -RH),
]


def _hop(p: Point, wF: Point, wT: Point) -> List[Point]:
    """Waypoints around p sweeping counterclockwise from wF to wT.

    The sweep direction is part of the fork: the handle meets the tine from
    a definite side, and orientation-preserving homeomorphisms keep that
    side counterclockwise.  Walking the other way would be off by a full
    loop around the junction puncture.
    """
    iF, iT = _octant_index(wF), _octant_index(wT)
    if iF in (4, 12) or iT in (4, 12):
        raise Degenerate("junction germ along the wall")
    if iF == iT:
        return []
    path = []
    idx = iF
    while True:
        idx = (idx + 1) % 16
        if idx == iT:
            break
        path.append(idx)
    return [add(p, _COMPASS[i // 2]) for i in path if i % 2 == 0]


def _is_sharp(d1: Point, d2: Point) -> bool:
    """True when the turn from direction d1 to d2 is sixty degrees or more."""
    dot = d1[0] * d2[0] + d1[1] * d2[1]
    if dot <= 0:
        return True
    n1 = d1[0] * d1[0] + d1[1] * d1[1]
    n2 = d2[0] * d2[0] + d2[1] * d2[1]
    return 4 * dot * dot <= n1 * n2


def _arm_fraction(nsq_self: int, nsq_other) -> Fraction:
    """Fraction of a segment giving an arm of about a quarter of the
    shorter adjacent segment (by length).  Only the balance of the two
    arms rides on this, so a float square root is fine; the returned
    fraction is exact and capped so neighbouring cuts never meet."""
    s = math.sqrt(float(nsq_other) / float(nsq_self)) / 4
    s = _F(min(s, 0.25)).limit_denominator(1024)
    if s <= 0:
        s = _F(1, 1024)
    return min(s, _F(1, 4))


def _shaved_clear(npunc: int, v: Point, pm: Point, pp: Point) -> bool:
    """True when the closed triangle (v, pm, pp) avoids every puncture."""
    ys = (v[1], pm[1], pp[1])
    if min(ys) > 0 or max(ys) < 0:
        return True
    xs = (v[0], pm[0], pp[0])
    lo = max(1, math.ceil(min(xs)))
    hi = min(npunc, math.floor(max(xs)))
    d = cross(sub(pm, v), sub(pp, v))
    for k in range(lo, hi + 1):
        z = (_F(k), _F(0))
        s1 = cross(sub(pm, v), sub(z, v))
        s2 = cross(sub(pp, pm), sub(z, pm))
        s3 = cross(sub(v, pp), sub(z, pp))
        if d > 0 and s1 >= 0 and s2 >= 0 and s3 >= 0:
            return False
        if d < 0 and s1 <= 0 and s2 <= 0 and s3 <= 0:
            return False
    return True


def _tri_touches_seg(tri, a: Point, b: Point) -> bool:
    """Exact: does segment ab touch the closed triangle tri = (c0, c1, c2)?"""
    c0, c1, c2 = tri
    if (segs_touch(a, b, c0, c1) or segs_touch(a, b, c1, c2)
            or segs_touch(a, b, c2, c0)):
        return True
    d = cross(sub(c1, c0), sub(c2, c0))
    for z in (a, b):
        s1 = cross(sub(c1, c0), sub(z, c0))
        s2 = cross(sub(c2, c1), sub(z, c1))
        s3 = cross(sub(c0, c2), sub(z, c2))
        if d > 0 and s1 > 0 and s2 > 0 and s3 > 0:
            return True
        if d < 0 and s1 < 0 and s2 < 0 and s3 < 0:
            return True
    return False


def _tri_box(tri):
    (x0, y0), (x1, y1), (x2, y2) = tri
    return (math.nextafter(float(min(x0, x1, x2)), -math.inf),
            math.nextafter(float(max(x0, x1, x2)), math.inf),
            math.nextafter(float(min(y0, y1, y2)), -math.inf),
            math.nextafter(float(max(y0, y1, y2)), math.inf))


def _blunt_corners(pts: Sequence[Point], npunc: int, max_passes: int = 12):
    """Round corners until every turn is strictly under sixty degrees.

    A pass replaces a bent interior vertex by two points on its adjacent
    segments at (nearly) equal distances from the vertex, so the cut chord
    runs along the bisector and the turn splits roughly in half; passes
    repeat until all turns are acute enough that the offset cable's straight
    connectors provably stay inside their corner wedge and cannot reach back
    across the adjacent segments.  Cutting also moves every bend strictly
    between the measuring lines: rebuilt arcs bend exactly on the walls, and
    a corner sitting on a measuring line would let the offset copy wiggle
    across it.  Each cut shaves a triangle, and both arms are halved (keeping
    their balance) until the triangle provably holds no puncture and touches
    no other part of the path - canonical drawings run strands very close
    together, so an unchecked shave could cut straight across a neighbouring
    strand.  A strand in the triangle's interior would have to cross its
    boundary, and nothing can cross the two arm sides, so checking the other
    segments against the closed triangle is a complete test.  Returns the new
    points and a map from old vertex indices to new ones.
    """
    pts = list(pts)
    imap = list(range(len(pts)))
    for pass_no in range(max_passes):
        boxes = [seg_outbox(pts[j], pts[j + 1]) for j in range(len(pts) - 1)]
        grid = SegGrid(None, boxes)
        done_tris = []
        out = [pts[0]]
        pmap = [0]
        for i in range(1, len(pts) - 1):
            prev, v, nxt = pts[i - 1], pts[i], pts[i + 1]
            d1, d2 = sub(v, prev), sub(nxt, v)
            if cross(d1, d2) == 0:
                if d1[0] * d2[0] + d1[1] * d2[1] <= 0:
                    raise Degenerate("spine folds back on itself")
                pmap.append(len(out))
                out.append(v)
                continue
            if pass_no > 0 and not _is_sharp(d1, d2):
                pmap.append(len(out))
                out.append(v)
                continue
            n1 = d1[0] * d1[0] + d1[1] * d1[1]
            n2 = d2[0] * d2[0] + d2[1] * d2[1]
            s1 = _arm_fraction(n1, min(n1, n2))
            s2 = _arm_fraction(n2, min(n1, n2))
            for _ in range(64):
                pm = (v[0] + (prev[0] - v[0]) * s1,
                      v[1] + (prev[1] - v[1]) * s1)
                pp = (v[0] + (nxt[0] - v[0]) * s2,
                      v[1] + (nxt[1] - v[1]) * s2)
                tri = (v, pm, pp)
                if _shaved_clear(npunc, v, pm, pp):
                    box = _tri_box(tri)
                    clear = True
                    for j in sorted(grid.near(box)):
                        if j in (i - 1, i):
                            continue
                        bj = boxes[j]
                        if bj[0] > box[1] or bj[1] < box[0] \
                                or bj[2] > box[3] or bj[3] < box[2]:
                            continue
                        if _tri_touches_seg(tri, pts[j], pts[j + 1]):
                            clear = False
                            break
                    if clear:
                        for obox, other in done_tris:
                            if obox[0] > box[1] or obox[1] < box[0] \
                                    or obox[2] > box[3] or obox[3] < box[2]:
                                continue
                            if (_tri_touches_seg(tri, other[0], other[1])
                                    or _tri_touches_seg(tri, other[1], other[2])
                                    or _tri_touches_seg(tri, other[2], other[0])):
                                clear = False
                                break
                    if clear:
                        break
                s1, s2 = s1 / 2, s2 / 2
            else:
                raise Degenerate("corner rounds onto a puncture or a strand")
            done_tris.append((_tri_box(tri), tri))
            pmap.append(len(out))
            out.append(pm)
            out.append(pp)
        pmap.append(len(out))
        out.append(pts[-1])
        pts = out
        imap = [pmap[k] for k in imap]
        if not any(
                cross(sub(pts[i], pts[i - 1]), sub(pts[i + 1], pts[i])) != 0
                and _is_sharp(sub(pts[i], pts[i - 1]), sub(pts[i + 1], pts[i]))
                for i in range(1, len(pts) - 1)):
            return pts, imap
    raise Degenerate("corner blunting did not settle")


def _build_spine(model: DiskModel, access: Arc, tine: Arc):
    """Copy-1 travel path: access ++ hop ++ tine, avoiding the junction."""
    assert access.end == tine.start, "access path must end at the tine start"
    p = model.endpoint_pos(access.end)
    f, t = access.points, tine.points
    u = sub(p, f[-2])
    v = sub(t[1], p)
    lu, lv = linf(u), linf(v)
    if lu <= 2 * RH or lv <= 2 * RH:
        raise Degenerate("junction germ too short for the hop")
    qF = (p[0] - u[0] * RH / lu, p[1] - u[1] * RH / lu)
    qT = (p[0] + v[0] * RH / lv, p[1] + v[1] * RH / lv)
    hop = _hop(p, sub(qF, p), sub(qT, p))
    spine = list(f[:-1]) + [qF] + hop + [qT] + list(t[1:])
    if len(dedupe(spine)) != len(spine):
        raise Degenerate("spine degenerate at the junction")
    spine, imap = _blunt_corners(spine, model.n)
    if not polyline_is_simpleish(spine):
        raise Degenerate("spine degenerate at the junction")
    return spine, imap[len(f) + len(hop)]  # index of (the cut of) qT


def _line_crossings(pts: Sequence[Point], x0: Fraction):
    """Transverse crossings with the vertical line x = x0.

    Returns [(key, y, direction)] sorted along the polyline, key = (segment,
    parameter); a vertex crossing is stamped ((index, 0)) at its arrival on
    the line.  Polyline endpoints may lie on the line (no crossing there);
    an interior piece running along the line is Degenerate.  Zero-length
    segments (repeated points) are tolerated.
    """
    out = []
    m = len(pts)
    for i in range(m - 1):
        a, b = pts[i], pts[i + 1]
        if a[0] == x0 or b[0] == x0:
            continue
        if (a[0] < x0) == (b[0] < x0):
            continue
        t = (x0 - a[0]) / (b[0] - a[0])
        out.append(((i, t), a[1] + t * (b[1] - a[1]), 1 if b[0] > a[0] else -1))
    i = 0
    while i < m:
        if pts[i][0] != x0:
            i += 1
            continue
        j = i
        while j + 1 < m and pts[j + 1][0] == x0:
            j += 1
        if any(pts[k][1] != pts[i][1] for k in range(i + 1, j + 1)):
            raise Degenerate("polyline runs along the line")
        if i > 0 and j < m - 1:
            prev, nxt = pts[i - 1], pts[j + 1]
            if (prev[0] < x0) != (nxt[0] < x0):
                out.append(((i, _F(0)), pts[i][1], 1 if nxt[0] > x0 else -1))
        i = j + 1
    out.sort(key=lambda r: r[0])
    return out


def _upray_events(model: DiskModel, pts: Sequence[Point]):
    """Signed crossings with the ascending rays above the punctures.

    Westward passes count +1: travelling west above a puncture winds
    counterclockwise around it once the loop closes below.
    """
    evs = []
    for k in range(1, model.n + 1):
        for (key, y, d) in _line_crossings(pts, _F(k)):
            if y == 0:
                raise AssertionError("crossing at a puncture")
            if y > 0:
                evs.append((key, -d))
    evs.sort()
    return evs


@dataclass
class _Target:
    time: Tuple      # timeline key (leg, parameter)
    y: Fraction
    direction: int
    a: Optional[int] = None


def _t1_time(key) -> Tuple:
    """Timeline key of a copy-1 crossing from its spine key (segment, t).

    A vertex crossing is stamped at the arrival instant (start of the
    connector leg at that vertex): the copy is already on the noodle line
    while copy 2 still walks its connector.
    """
    i, t = key
    if t == 0:
        return (2 * i, _F(0))
    return (1 + 2 * i, t)


def _count_passings(dpts: Sequence[Point]) -> int:
    """Signed sign changes of D_x along a piecewise-linear D path.

    A pass of the vertical axis counts sign(before) * sign(D_y at the pass):
    counterclockwise half-turns are +1.  Dwells on the axis are fine as long
    as D_y keeps its sign; reaching the origin means the two cable points
    collide, which is Degenerate.
    """
    total = 0
    sprev = 0
    for k in range(len(dpts) - 1):
        a, b = dpts[k], dpts[k + 1]
        if a == b:
            continue
        ax, ay = a
        bx, by = b
        if ax == 0 and bx == 0:
            if ay == 0 or by == 0 or (ay > 0) != (by > 0):
                raise Degenerate("cable difference crossed the origin")
            continue
        if ax == 0:
            if ay == 0:
                raise Degenerate("cable points collided")
            snew = _sgn(bx)
            if sprev != 0 and snew == -sprev:
                total += sprev * _sgn(ay)
            sprev = snew
            continue
        if bx == 0:
            if by == 0:
                raise Degenerate("cable points collided")
            sprev = _sgn(ax)
            continue
        sa, sb = _sgn(ax), _sgn(bx)
        if sa != sb:
            t = ax / (ax - bx)
            ystar = ay + t * (by - ay)
            if ystar == 0:
                raise Degenerate("cable points collided")
            total += sa * _sgn(ystar)
        sprev = sb
    return total


def _return_d_waypoints(model: DiskModel, dy: Fraction) -> List[Point]:
    """D waypoints of the single-file queue return.

    Both points step just west of the noodle onto the same push-off track,
    ride it down to the boundary corridor in queue order, and walk west; the
    leader (the southern point) takes the far basepoint, the follower stops
    at the near one.  The configuration returns to the basepoint pair as a
    set, but the points land swapped exactly when copy 2 sits south of
    copy 1 at the crossings - which is why a westward crossing, where the
    left cable offset points south, always carries an odd self-exchange.
    The queue keeps the two tracks collision-free with no passing, so the
    whole return contributes at most the half-turn of the corner swing.
    """
    if dy == 0:
        raise Degenerate("cable crossings coincide")
    bp1, bp2 = model.basepoint(1), model.basepoint(2)
    dbx = bp2[0] - bp1[0]
    s = 1 if dy > 0 else -1
    return [(_F(0), dy), (dy, _F(0)), (s * dbx, _F(0))]


class _Cable:
    """Shared-timeline geometry of the two cable copies.

    Timeline legs: 0 = copy 2 walking from its basepoint onto the offset,
    odd legs 2s+1 = both copies riding spine segment s in parallel, even
    legs 2s = copy 2 crossing the connector at vertex s while copy 1 waits.
    """

    def __init__(self, model: DiskModel, spine: List[Point], w: Fraction):
        self.model = model
        self.spine = spine
        S = len(spine) - 1
        self.offsets = []
        for s in range(S):
            d = sub(spine[s + 1], spine[s])
            scale = w / linf(d)  # uniform sup-norm gap w
            self.offsets.append((-d[1] * scale, d[0] * scale))
        pts2 = [model.basepoint(2), add(spine[0], self.offsets[0])]
        for s in range(S):
            pts2.append(add(spine[s + 1], self.offsets[s]))
            if s + 1 < S:
                pts2.append(add(spine[s + 1], self.offsets[s + 1]))
        self.pts2 = pts2  # segment L of pts2 is exactly timeline leg L

    def pos1(self, time):
        L, t = time
        if L == 0:
            return self.spine[0]
        if L % 2 == 1:
            s = (L - 1) // 2
            a, b = self.spine[s], self.spine[s + 1]
            return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
        return self.spine[L // 2]

    def pos2(self, time):
        L, t = time
        a, b = self.pts2[L], self.pts2[L + 1]
        return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))

    def formation_d(self, upto) -> List[Point]:
        """D waypoints from the start until timeline `upto`."""
        bp1, bp2 = self.model.basepoint(1), self.model.basepoint(2)
        D = [sub(bp2, bp1)]
        if upto[0] == 0:
            D.append(sub(self.pos2(upto), bp1))
            return D
        D.append(self.offsets[0])
        S = len(self.spine) - 1
        for s in range(1, S):
            leg = 2 * s  # connector at vertex s
            if upto[0] < leg:
                break
            if upto[0] == leg:
                o0, o1 = self.offsets[s - 1], self.offsets[s]
                t = upto[1]
                D.append((o0[0] + t * (o1[0] - o0[0]), o0[1] + t * (o1[1] - o0[1])))
                break
            D.append(self.offsets[s])
        return D

    def vertex1_departure(self, s):
        return (1 + 2 * s, _F(0))

    def solo2_waypoints(self, t_from, t_to) -> List[Point]:
        """Copy 2 waypoints over (t_from, t_to], both timeline keys."""
        wps = [self.pos2(t_from)]
        for j in range(len(self.pts2)):
            key = (j, _F(0))
            if t_from < key <= t_to:
                wps.append(self.pts2[j])
        if t_to[1] != 0:
            wps.append(self.pos2(t_to))
        return wps

    def solo1_waypoints(self, t_from, t_to) -> List[Point]:
        wps = [self.pos1(t_from)]
        for s in range(len(self.spine)):
            key = self.vertex1_departure(s)
            if t_from < key <= t_to:
                wps.append(self.spine[s])
        if t_to[1] != 0 or t_to[0] % 2 == 0:
            wps.append(self.pos1(t_to))
        return wps


def _pair_exchange(cable: _Cable, c: Fraction, t1: _Target, t2: _Target) -> int:
    """Exchange number when copy 1 targets t1 and copy 2 targets t2."""
    model = cable.model
    z1 = (c, t1.y)
    z2 = (c, t2.y)
    if t1.y == t2.y:
        raise Degenerate("cable crossings coincide")
    first1 = t1.time <= t2.time
    tdiv = t1.time if first1 else t2.time
    D = cable.formation_d(tdiv)
    if first1:
        for q in cable.solo2_waypoints(t1.time, t2.time):
            D.append(sub(q, z1))
    else:
        for q in cable.solo1_waypoints(t2.time, t1.time):
            D.append(sub(z2, q))
    D.extend(_return_d_waypoints(model, t2.y - t1.y))
    return _count_passings(D)


class IntersectionData:
    """l crossings listed bottom-to-top along the noodle, with signs eps,
    winding exponents a, and the exchange matrix b.

    b[s][s'] is the strand crossing number when the lower cable copy
    targets crossing s and the upper copy targets s'.  It need not be
    symmetric: the two orders differ by which copy makes the far excursion,
    and the queue return settles them onto the basepoints differently.
    The diagonal obeys the sign law eps[s] == (-1)**b[s][s]."""

    __slots__ = ("l", "eps", "a", "_b", "_thunk")

    def __init__(self, l, eps, a, b=None, thunk=None):
        self.l = l
        self.eps = tuple(eps)
        self.a = tuple(a)
        self._b = b
        self._thunk = thunk

    @property
    def b(self):
        if self._b is None:
            self._b = self._thunk()
            self._thunk = None
            for i in range(self.l):
                par = 1 if self._b[i][i] % 2 == 0 else -1
                assert par == self.eps[i], "sign/self-exchange parity violated"
        return self._b

    def __eq__(self, other):
        if not isinstance(other, IntersectionData):
            return NotImplemented
        return (self.l, self.eps, self.a) == (other.l, other.eps, other.a) and self.b == other.b

    def __repr__(self):
        return f"IntersectionData(l={self.l}, eps={self.eps}, a={self.a})"

    def to_json(self):
        return {"l": self.l, "eps": list(self.eps), "a": list(self.a),
                "b": [list(r) for r in self.b]}

    def dumps(self, pretty=False):
        blob = self.to_json()
        if pretty:
            return json.dumps(blob, indent=2, sort_keys=True)
        return json.dumps(blob, sort_keys=True, separators=(",", ":"))


def _eager_data(model: DiskModel, access: Arc, tine: Arc, c: Fraction):
    spine, qt_idx = _build_spine(model, access, tine)
    crossings = _line_crossings(spine, c)
    rays = _upray_events(model, spine)
    targets = []
    for (key, y, d) in crossings:
        if key[0] >= qt_idx:
            a_val = sum(s for (k, s) in rays if k < key)
            targets.append(_Target(_t1_time(key), y, d, a_val))
    return spine, targets


def intersection_data(model: DiskModel, fork, noodle) -> IntersectionData:
    """Intersection data of a (access, tine) fork pair with a standard noodle.

    `fork` is the pair returned by standard_fork / apply_word; `noodle` is a
    noodle index or a standard noodle Arc.
    """
    if isinstance(noodle, Arc):
        assert noodle.start[0] == "boundary" and not noodle.recs, \
            "pairing is defined against standard noodles"
        j = noodle.start[1]
    else:
        j = int(noodle)
    access, tine = fork
    c = model.noodle_x(j)

    last = None
    for attempt in range(10):
        try:
            if attempt == 0:
                acc, tin = access, tine
            else:
                drawn = rebuild_system(
                    model,
                    [(access.start, access.end, access.recs, access.role),
                     (tine.start, tine.end, tine.recs, tine.role)],
                    attempt)
                (ap, ar), (tp, tr) = drawn
                acc = Arc(model, access.start, access.end, ap, ar, access.role)
                tin = Arc(model, tine.start, tine.end, tp, tr, tine.role)
            spine, targets = _eager_data(model, acc, tin, c)
            break
        except Degenerate as exc:
            last = exc
    else:
        raise RuntimeError(f"no generic position for intersection data: {last}")

    order = sorted(range(len(targets)), key=lambda i: targets[i].y)
    eps = [targets[i].direction for i in order]
    a = [targets[i].a for i in order]
    l = len(targets)

    a_state = (access.start, access.end, access.recs, access.role)
    t_state = (tine.start, tine.end, tine.recs, tine.role)

    def thunk():
        return _exchange_matrix(model, a_state, t_state, c, order)

    return IntersectionData(l, eps, a, thunk=thunk)


def _fdist_segs(p: Point, q: Point, a: Point, b: Point) -> float:
    """Float distance between two non-crossing segments (endpoint cases)."""
    pf = (float(p[0]), float(p[1]))
    qf = (float(q[0]), float(q[1]))
    af = (float(a[0]), float(a[1]))
    bf = (float(b[0]), float(b[1]))

    def pd(z, u, v):
        dx, dy = v[0] - u[0], v[1] - u[1]
        dd = dx * dx + dy * dy
        if dd <= 0:
            return math.hypot(z[0] - u[0], z[1] - u[1])
        t = ((z[0] - u[0]) * dx + (z[1] - u[1]) * dy) / dd
        t = 0.0 if t < 0 else (1.0 if t > 1 else t)
        return math.hypot(z[0] - u[0] - t * dx, z[1] - u[1] - t * dy)

    return min(pd(pf, af, bf), pd(qf, af, bf), pd(af, pf, qf), pd(bf, pf, qf))


def _clearance_cap(model: DiskModel, spine: Sequence[Point], grid: SegGrid):
    """Power-of-two cable width cap from the spine's float self-clearance.

    The offset copy stays within the cable width of the spine (and of the
    basepoint corridor on its pre-leg), so a width safely below the distance
    between non-adjacent spine segments keeps all far pairs clear; corner
    blunting covers adjacent ones.  Floats only steer the choice - the exact
    ribbon certification below is the authority.
    """
    est = SegGrid.CELL
    for k in range(grid.count):
        pk, qk = spine[k], spine[k + 1]
        for j in grid.near(grid.boxes[k], 1):
            if j <= k + 1:
                continue
            d = _fdist_segs(pk, qk, spine[j], spine[j + 1])
            if d < est:
                est = d
    bp1, bp2 = model.basepoint(1), model.basepoint(2)
    for j in grid.near(seg_outbox(bp1, bp2), 1):
        if j == 0:
            continue
        d = _fdist_segs(bp1, bp2, spine[j], spine[j + 1])
        if d < est:
            est = d
    if est <= 0:
        raise Degenerate("spine self-clearance vanished")
    e = math.frexp(est / 8)[1]
    return _F(2) ** (e - 1)


def _certify_ribbon(spine: Sequence[Point], grid: SegGrid, pts2: Sequence[Point]):
    """Exact proof that the offset copy never meets the spine.

    One contact is legal: the basepoint pre-leg (first offset segment) may
    cross spine segment 0 transversally - that crossing happens while copy 1
    still sits on its basepoint and is part of the landing convention checked
    against the algebraic route.  Everything else raises Degenerate and the
    caller retries with fresh geometry.
    """
    for L in range(len(pts2) - 1):
        a, b = pts2[L], pts2[L + 1]
        box = seg_outbox(a, b)
        for k in grid.near(box):
            other = grid.boxes[k]
            if box[1] < other[0] or other[1] < box[0] \
                    or box[3] < other[2] or other[3] < box[2]:
                continue
            hit = segs_touch(spine[k], spine[k + 1], a, b)
            if hit == 0:
                continue
            if L == 0 and k == 0 and hit == 1:
                continue
            raise Degenerate("cable ribbon meets the spine")


def _certify_spine(spine: Sequence[Point], grid: SegGrid):
    """Exact proof that the spine is an embedded polyline.

    The two arcs are drawn jointly disjoint, but the junction hop and corner
    blunting rework the vertices afterwards, so simplicity is re-proved on
    the final spine rather than assumed.  Adjacent segments share a vertex
    and are exempt; everything else must stay strictly apart.
    """
    for k in range(grid.count):
        a, b = spine[k], spine[k + 1]
        box = grid.boxes[k]
        for j in grid.near(box):
            if j <= k + 1:
                continue
            other = grid.boxes[j]
            if box[1] < other[0] or other[1] < box[0] \
                    or box[3] < other[2] or other[3] < box[2]:
                continue
            if segs_touch(a, b, spine[j], spine[j + 1]):
                raise Degenerate("spine is not embedded")


_BUNDLES: dict = {}


def _certified_cable(model: DiskModel, a_state, t_state, attempt: int):
    """Spine plus certified-disjoint cable for one retry attempt (cached).

    The bundle does not depend on the noodle, so it is shared across the
    noodle loop of a pairing matrix; only certified bundles are cached.
    """
    key = (model.n, repr(a_state), repr(t_state), attempt)
    hit = _BUNDLES.get(key)
    if hit is not None:
        return hit
    salt = attempt // 2
    drawn = rebuild_system(model, [a_state, t_state], salt)
    (ap, ar), (tp, tr) = drawn
    acc = Arc(model, a_state[0], a_state[1], ap, ar, a_state[3])
    tin = Arc(model, t_state[0], t_state[1], tp, tr, t_state[3])
    spine, qt_idx = _build_spine(model, acc, tin)
    grid = SegGrid(spine)
    _certify_spine(spine, grid)
    w = min(W0 / (2 ** attempt), _clearance_cap(model, spine, grid))
    # The spine is simple and exact, so the offset copy separates from it
    # once the width drops below the local feature size; halve until the
    # certificate holds (clusters of blunted corners can need widths far
    # below the far-pair clearance).
    cable = None
    for _ in range(64):
        candidate = _Cable(model, spine, w)
        try:
            _certify_ribbon(spine, grid, candidate.pts2)
        except Degenerate:
            w /= 2
            continue
        cable = candidate
        break
    if cable is None:
        raise Degenerate("no certified cable width for this spine")
    if len(_BUNDLES) >= 48:
        _BUNDLES.pop(next(iter(_BUNDLES)))
    _BUNDLES[key] = (spine, qt_idx, cable)
    return spine, qt_idx, cable


def _exchange_matrix(model: DiskModel, a_state, t_state, c, order):
    last = None
    for attempt in range(16):
        try:
            spine, qt_idx, cable = _certified_cable(model, a_state, t_state,
                                                    attempt)
            cr1 = _line_crossings(spine, c)
            cr2 = _line_crossings(cable.pts2, c)
            if len(cr1) != len(cr2):
                raise Degenerate("cable copies cross the noodle differently")
            # Match copy-2 crossings to copy-1 crossings in travel order and
            # check the offset stayed well below the crossing separation.
            ys = sorted(y for (_, y, _) in cr1)
            min_gap = min((ys[i + 1] - ys[i] for i in range(len(ys) - 1)),
                          default=_F(1))
            t1s, t2s = [], []
            for (k1, y1, d1), (k2, y2, d2) in zip(cr1, cr2):
                if d1 != d2 or abs(y2 - y1) * 2 >= min_gap:
                    raise Degenerate("cable copies out of step")
                if k1[0] >= qt_idx:
                    t1s.append(_Target(_t1_time(k1), y1, d1))
                    t2s.append(_Target((k2[0], k2[1]), y2, d2))
                elif not (k2[0] < 1 + 2 * qt_idx):
                    raise Degenerate("cable copies out of step at the hop")
            if len(t1s) != len(order):
                raise Degenerate("tine crossing count changed under salt")
            m = len(t1s)
            raw = [[None] * m for _ in range(m)]
            for i in range(m):
                for jdx in range(m):
                    raw[i][jdx] = _pair_exchange(cable, c, t1s[i], t2s[jdx])
            return [[raw[order[i]][order[j]] for j in range(m)] for i in range(m)]
        except Degenerate as exc:
            last = exc
    raise RuntimeError(f"no generic cable offset found: {last}")


def _chord_crossings(pts: Sequence[Point], a: Point, b: Point):
    """Proper crossings of a polyline with the open chord a-b.

    Returns [(key, u, point)] with key the position along the polyline and
    u in (0,1) the position along the chord.  Touching configurations are
    Degenerate.
    """
    out = []
    r = sub(b, a)
    for i in range(len(pts) - 1):
        p, q = pts[i], pts[i + 1]
        s = sub(q, p)
        den = cross(r, s)
        qp = sub(p, a)
        if den == 0:
            if cross(qp, r) == 0:
                # collinear with the chord line: any overlap is degenerate
                rr = r[0] * r[0] + r[1] * r[1]
                up = (qp[0] * r[0] + qp[1] * r[1]) / rr
                uq = ((q[0] - a[0]) * r[0] + (q[1] - a[1]) * r[1]) / rr
                if min(up, uq) < 1 and max(up, uq) > 0:
                    raise Degenerate("polyline runs along the chord")
            continue
        u = cross(qp, s) / den
        t = cross(qp, r) / den
        if 0 < u < 1 and 0 < t < 1:
            out.append(((i, t), u, add(p, (s[0] * t, s[1] * t))))
        elif (0 <= u <= 1) and (0 <= t <= 1):
            raise Degenerate("polyline touches the chord")
    out.sort(key=lambda rec: rec[0])
    return out


def minimal_crossings(pts: Sequence[Point], a: Point, b: Point,
                      punctures: Sequence[Point]) -> int:
    """Minimal transverse intersection number of an arc with the chord a-b.

    Removes empty bigons: a pair of crossings consecutive along both the
    polyline and the chord whose enclosed region contains no puncture and no
    other piece of the arc can be pushed off.  The polyline subpath must stay
    on one side of the chord line for the region to be a disk; other pairs
    are left alone and the loop retries after each removal.
    """
    pts = list(pts)
    guard = 0
    while True:
        guard += 1
        assert guard < 200, "bigon removal did not terminate"
        crossings = _chord_crossings(pts, a, b)
        removed = False
        for ci in range(len(crossings) - 1):
            (k1, u1, p1), (k2, u2, p2) = crossings[ci], crossings[ci + 1]
            # consecutive along the chord as well?
            between = [u for (_, u, _) in crossings if min(u1, u2) < u < max(u1, u2)]
            if between:
                continue
            sub_vs = pts[k1[0] + 1:k2[0] + 1]
            rvec = sub(b, a)
            sides = {_sgn(cross(rvec, sub(v, a))) for v in sub_vs}
            sides.discard(0)
            if len(sides) != 1:
                continue
            side = sides.pop()
            poly = [p1] + sub_vs + [p2]
            try:
                if any(point_in_polygon(pp, poly) for pp in punctures):
                    continue
                others = [v for idx, v in enumerate(pts)
                          if not (k1[0] < idx <= k2[0])]
                if any(point_in_polygon(v, poly) for v in others
                       if v not in (p1, p2)):
                    continue
            except Degenerate:
                continue
            # push the subpath across: hug the chord on the far side
            eps = _F(1, 2 ** 12)
            nrm = (-rvec[1] * eps, rvec[0] * eps)
            ok = False
            for _ in range(8):
                hug = [add((a[0] + u * rvec[0], a[1] + u * rvec[1]),
                           (nrm[0] * -side, nrm[1] * -side))
                       for u in (u1, u2)]
                cand = pts[:k1[0] + 1] + [p1] + hug + [p2] + pts[k2[0] + 1:]
                cand = dedupe(cand)
                try:
                    if len(_chord_crossings(cand, a, b)) == len(crossings) - 2:
                        ok = True
                        break
                except Degenerate:
                    pass
                nrm = (nrm[0] / 2, nrm[1] / 2)
            if ok:
                pts = cand
                removed = True
                break
        if not removed:
            return len(crossings)
