"""Tracking arcs through braid words on the punctured disk.

Pipeline per generator letter: (1) map every arc's polyline through the
piecewise-affine half twist; (2) extract each crossing sequence with the cut
system exactly; (3) tighten all codes jointly, performing a move only when
the disk it sweeps is empty in the shared figure; (4) rebuild canonical
polylines realizing the tightened codes with small rational coordinates, so
coordinate complexity resets after every letter.

Tightening applies two local moves until exhaustion:

* cancelling pair: two consecutive crossings of the same cut half in
  opposite directions bound an empty bigon and are erased;
* endpoint unwind: an arc emanating from puncture k whose first (or last)
  crossing is with wall k slides that crossing off around its own puncture.

Exhaustion leaves no empty bigon between any arc and any cut, so every cut
is crossed minimally within the isotopy class rel endpoints; in particular a
tightened tine meets each noodle line in the geometric minimum number of
points.  Performing only empty-disk moves never blocks that outcome - an
innermost cancelling pair always bounds an empty disk - but it guarantees
that no move drags the arc across another strand, so the ordinates carried
by the surviving records remain those of a genuinely embedded figure.

The rebuild draws all arcs of a system against one shared set of per-cut
lanes: crossings of every arc on a cut half are ranked together by the
ordinates they carried in the geometry they were extracted from, so the
drawn strands keep their true mutual vertical order and straight chords
between adjacent cuts never cross.  Consecutive same-wall crossings wrap
around the puncture on short horizontal excursions, endpoints sitting on
their own cut bend around it; both kinds of excursion are sized per nesting
family and capped below the reach of every straight chord through their box,
so they cannot collide with passing strands.  The result is certified by an
exact segment scan - each polyline simple, different arcs disjoint except at
shared endpoints - and any failure raises Degenerate for a salted retry.
Every quantity read off downstream is an isotopy invariant, so the salt
never changes an answer.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Sequence, Tuple

from .codes import ArcCode, DiskModel, Event
from .geometry import (Degenerate, Point, SegGrid, cross, dedupe, dot,
                       seg_outbox, segs_touch, sub)
from .twist import half_twist

LETTERS_LEFT_FIRST = True  # word letters act left to right; gate-calibrated

_F = Fraction

# Shared lane bands per cut half.  Wall lanes stay a quarter away from the
# puncture on the wall; mid cuts carry no puncture, so their band just keeps
# clear of the boundary.
_BANDS = {
    ("wall", 1): (_F(1, 4), _F(31, 32)),
    ("wall", -1): (_F(-31, 32), _F(-1, 4)),
    ("mid", 0): (_F(-25, 32), _F(25, 32)),
}

_EXC_CAP = _F(3, 16)  # excursions stay well inside their half-box


@dataclass
class Crossing:
    kind: str
    index: int
    side: int
    direction: int
    y: Fraction
    key: Tuple


class Arc:
    """A tightened arc: combinatorial code plus a canonical polyline."""

    __slots__ = ("model", "start", "end", "points", "recs", "role")

    def __init__(self, model, start, end, points, recs, role):
        self.model = model
        self.start = start
        self.end = end
        self.points = points
        self.recs = recs
        self.role = role

    @property
    def code(self) -> ArcCode:
        """Fully unwound code: canonical for equality of arcs rel endpoints.

        The stored records keep junction germs faithful instead; the unwind
        here only normalizes the free-endpoint wrapping, which carries no
        class information for a single arc.
        """
        canon = tighten(self.recs, self.start, self.end)
        return ArcCode(
            self.model.n,
            self.start,
            self.end,
            tuple(Event(r.kind, r.index, r.side, r.direction) for r in canon),
        )

    def __repr__(self):
        return f"Arc({self.start}->{self.end}, {len(self.recs)} crossings)"


def extract_events(model: DiskModel, pts: Sequence[Point], start, end) -> List[Crossing]:
    recs: List[Crossing] = []
    m = len(pts)
    for (kind, idx) in model.cuts():
        x0 = model.cut_x(kind, idx)
        for i in range(m - 1):
            a, b = pts[i], pts[i + 1]
            if a[0] == x0 and b[0] == x0:
                raise Degenerate(f"segment along cut {kind} {idx}")
            if a[0] == x0 or b[0] == x0:
                continue  # handled as vertex crossings below
            if (a[0] < x0) == (b[0] < x0):
                continue
            t = (x0 - a[0]) / (b[0] - a[0])
            y = a[1] + t * (b[1] - a[1])
            recs.append(_mk_crossing(kind, idx, y, 1 if b[0] > a[0] else -1, (i, t)))
        for j in range(1, m - 1):
            if pts[j][0] != x0:
                continue
            if kind == "wall" and pts[j][1] == 0:
                raise AssertionError("arc interior passes through a puncture")
            prev, nxt = pts[j - 1], pts[j + 1]
            # Segments along the cut were rejected above, so both neighbors
            # are strictly off the line.
            if (prev[0] < x0) == (nxt[0] < x0):
                continue  # tangency, homotopically invisible
            recs.append(_mk_crossing(kind, idx, pts[j][1], 1 if nxt[0] > x0 else -1,
                                     (j, _F(0))))
    recs.sort(key=lambda r: r.key)
    return recs


def _mk_crossing(kind, idx, y, direction, key) -> Crossing:
    if kind == "wall":
        if y == 0:
            raise AssertionError("wall crossing at the puncture")
        side = 1 if y > 0 else -1
    else:
        side = 0
    return Crossing(kind, idx, side, direction, y, key)


def tighten(recs: List[Crossing], start, end,
            unwind_start: bool = True, unwind_end: bool = True) -> List[Crossing]:
    """Erase empty bigons; optionally unwind endpoint wall crossings.

    Unwinding slides a crossing with the endpoint's own wall off around the
    puncture.  It shortens codes but rotates the endpoint germ across the
    wall, so it must be suppressed at a fork junction: the side on which the
    access path meets the tine is part of the fork and a germ rotation there
    would silently change every loop winding by a full turn.
    """
    recs = list(recs)
    changed = True
    while changed:
        changed = False
        if unwind_start and start[0] == "puncture":
            while recs and recs[0].kind == "wall" and recs[0].index == start[1]:
                recs.pop(0)
                changed = True
        if unwind_end and end[0] == "puncture":
            while recs and recs[-1].kind == "wall" and recs[-1].index == end[1]:
                recs.pop()
                changed = True
        i = 0
        while i + 1 < len(recs):
            a, b = recs[i], recs[i + 1]
            if (a.kind, a.index, a.side) == (b.kind, b.index, b.side) and a.direction == -b.direction:
                del recs[i:i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
    return recs


def _own_cut(model: DiskModel, desc):
    if desc[0] == "puncture":
        return ("wall", desc[1])
    if desc[0] == "boundary":
        return ("mid", desc[1])
    return None


def _entry_lambda(P: Point, Q: Point, xk, bulge: int, lo, hi):
    """Depth at which segment PQ first enters an excursion strip.

    The strip grows from the cut line x = xk toward side `bulge`; clipping
    PQ to { bulge*(x-xk) >= 0, lo <= y <= hi } and minimizing the depth
    coordinate is exact linear arithmetic.  Returns None when PQ misses the
    quadrant entirely or only touches the cut line itself (a crossing point
    of the cut belongs to the line, not to either side's excursion).
    """
    u1 = bulge * (P[0] - xk)
    u2 = bulge * (Q[0] - xk)
    y1, y2 = P[1], Q[1]
    t0, t1 = _F(0), _F(1)
    dy = y2 - y1
    if dy == 0:
        if not lo <= y1 <= hi:
            return None
    else:
        ta = (lo - y1) / dy
        tb = (hi - y1) / dy
        if ta > tb:
            ta, tb = tb, ta
        t0 = max(t0, ta)
        t1 = min(t1, tb)
        if t0 > t1:
            return None
    du = u2 - u1
    if du == 0:
        if u1 < 0:
            return None
    else:
        tz = -u1 / du
        if du > 0:
            t0 = max(t0, tz)
        else:
            t1 = min(t1, tz)
        if t0 > t1:
            return None
    ua = u1 + t0 * du
    ub = u1 + t1 * du
    if ua <= 0 and ub <= 0:
        return None
    return min(ua, ub)


def _certify_system(polylines: List[List[Point]]):
    """Exact joint embeddedness proof for the drawn arcs.

    Every polyline must be simple and any two arcs disjoint; the only
    tolerated contact is two segments of different arcs meeting at an
    exactly shared endpoint (a fork junction) without running back along
    each other.
    """
    segs = []
    for ai, pts in enumerate(polylines):
        for k in range(len(pts) - 1):
            segs.append((ai, k, pts[k], pts[k + 1]))
    boxes = [seg_outbox(p, q) for (_, _, p, q) in segs]
    grid = SegGrid(None, boxes)
    for s1 in range(len(segs)):
        a1, k1, p1, q1 = segs[s1]
        b1 = boxes[s1]
        for s2 in grid.near(b1):
            if s2 <= s1:
                continue
            a2, k2, p2, q2 = segs[s2]
            if a1 == a2 and abs(k1 - k2) <= 1:
                continue
            b2 = boxes[s2]
            if b1[1] < b2[0] or b2[1] < b1[0] or b1[3] < b2[2] or b2[3] < b1[2]:
                continue
            hit = segs_touch(p1, q1, p2, q2)
            if hit == 0:
                continue
            if hit == 2 and a1 != a2:
                if p1 == p2:
                    s, u, v = p1, q1, q2
                elif p1 == q2:
                    s, u, v = p1, q1, p2
                elif q1 == p2:
                    s, u, v = q1, p1, q2
                elif q1 == q2:
                    s, u, v = q1, p1, p2
                else:
                    raise Degenerate("rebuilt arcs collide")
                du, dv = sub(u, s), sub(v, s)
                if cross(du, dv) == 0 and dot(du, dv) > 0:
                    raise Degenerate("rebuilt arcs overlap at a shared endpoint")
                continue
            raise Degenerate("rebuilt arcs collide")


def rebuild_system(model: DiskModel, specs: Sequence[Tuple], salt: int):
    """Canonical polylines realizing several tightened codes at once.

    `specs` lists (start, end, recs, role) per arc.  Returns one
    (points, new_recs) pair per spec, where the new records carry the
    canonical lane ordinates, so the system can be rebuilt again (with a
    different salt) without re-extraction.  All arcs are drawn against one
    shared lane assignment and the result is certified embedded; any
    degeneracy raises Degenerate so the caller can retry salted.
    """
    groups = {}
    for (start, end, recs, role) in specs:
        for r in recs:
            groups.setdefault((r.kind, r.index, r.side), []).append(r)
    lane = {}
    for (kind, idx, side), rs in groups.items():
        ys = sorted(r.y for r in rs)
        if len(set(ys)) != len(ys):
            raise Degenerate("coincident crossings on a cut")
        lo, hi = _BANDS[(kind, side)]
        denom = len(rs) + 1 + _F(salt, 5)
        for r in rs:
            rank = ys.index(r.y)
            lane[id(r)] = lo + (hi - lo) * _F(rank + 1) / denom

    # Straight connecting chords and excursion items of the whole system.
    # Chords run between crossing nodes on adjacent cuts (or endpoint
    # beelines); excursions (puncture wraps, endpoint bends, the eventless
    # noodle bulge) poke sideways off one cut and are sized afterwards.
    chords = []
    items = []
    for ai, (start, end, recs, role) in enumerate(specs):
        spos = model.endpoint_pos(start)
        epos = model.endpoint_pos(end)
        nodes = [(model.cut_x(e.kind, e.index), lane[id(e)]) for e in recs]
        start_bend = bool(recs) and _own_cut(model, start) == (recs[0].kind, recs[0].index)
        end_bend = bool(recs) and _own_cut(model, end) == (recs[-1].kind, recs[-1].index)
        bulge = not recs and start[0] == "boundary" and end[0] == "boundary"

        if not recs:
            if bulge:
                lo, hi = sorted((spos[1], epos[1]))
                items.append({
                    "fam": ("mid", start[1], 1), "lo": lo, "hi": hi,
                    "tag": "bulge", "anchors": (spos, epos),
                    "nodes": (spos, epos), "key": (ai, "bulge"),
                })
            elif {start[0], end[0]} <= {"anchor", "basepoint", "puncture"}:
                if end[0] == "puncture" and epos[0] > 1:
                    raise AssertionError("eventless arc cannot reach an inner puncture")
                chords.append((spos, epos))
            else:
                raise AssertionError(f"unexpected eventless arc {start}->{end}")
            continue

        if start_bend:
            e0 = recs[0]
            lo, hi = sorted((spos[1], nodes[0][1]))
            items.append({
                "fam": (e0.kind, e0.index, -e0.direction), "lo": lo, "hi": hi,
                "tag": "bend", "anchors": (spos,),
                "nodes": (spos, nodes[0]), "key": (ai, "start"),
            })
        else:
            if abs(spos[0] - nodes[0][0]) > _F(1, 2) and start[0] in ("puncture", "boundary"):
                raise AssertionError("first crossing not adjacent to start box")
            chords.append((spos, nodes[0]))
        for i in range(1, len(recs)):
            prev, e = recs[i - 1], recs[i]
            if (prev.kind, prev.index) == (e.kind, e.index):
                assert e.direction == -prev.direction, "same-cut crossings must alternate"
                assert e.kind == "wall" and e.side == -prev.side, \
                    "tightened same-cut pair must wrap around the puncture"
                lo, hi = sorted((nodes[i - 1][1], nodes[i][1]))
                items.append({
                    "fam": (e.kind, e.index, prev.direction), "lo": lo, "hi": hi,
                    "tag": "staple", "anchors": (),
                    "nodes": (nodes[i - 1], nodes[i]), "key": (ai, i),
                })
            else:
                assert abs(nodes[i - 1][0] - nodes[i][0]) == _F(1, 2), \
                    "consecutive crossings not box-adjacent"
                chords.append((nodes[i - 1], nodes[i]))
        if end_bend:
            e1 = recs[-1]
            lo, hi = sorted((nodes[-1][1], epos[1]))
            items.append({
                "fam": (e1.kind, e1.index, e1.direction), "lo": lo, "hi": hi,
                "tag": "bend", "anchors": (epos,),
                "nodes": (nodes[-1], epos), "key": (ai, "end"),
            })
        else:
            if abs(epos[0] - nodes[-1][0]) > _F(1, 2) and end[0] in ("puncture", "boundary"):
                raise AssertionError("last crossing not adjacent to end box")
            chords.append((nodes[-1], epos))

    # Nesting structure per family (one cut, one side).  Disjoint arcs wrap
    # laminarly, so within a family the intervals form a containment forest;
    # interleaving means the stored ordinates contradict any embedding.
    byfam = {}
    for it in items:
        byfam.setdefault(it["fam"], []).append(it)
    for its in byfam.values():
        for a in range(len(its)):
            ia = its[a]
            for b in range(a + 1, len(its)):
                ib = its[b]
                if (ia["lo"], ia["hi"]) == (ib["lo"], ib["hi"]):
                    raise Degenerate("coincident excursions on a cut")
                if ia["lo"] < ib["lo"] < ia["hi"] < ib["hi"] or \
                        ib["lo"] < ia["lo"] < ib["hi"] < ia["hi"]:
                    raise Degenerate("interleaved excursions on a cut")
        for it in its:
            it["containers"] = [o for o in its if o is not it
                                and o["lo"] <= it["lo"] and it["hi"] <= o["hi"]]
            it["depth"] = len(it["containers"])

    # Clearance: an excursion may reach at most 3/4 of the way to the first
    # straight segment entering its strip.  Chords incident to the item's
    # own nodes are its legitimate neighbours; for a bend, the other germs
    # leaving the same anchor cap the bend by a slope comparison instead
    # (the bend's outer vertex sits at half the interval height, so it stays
    # under a germ of slope m whenever its reach is below height/(2m)).
    for it in items:
        kind, idx, bulge_dir = it["fam"]
        xk = model.cut_x(kind, idx)
        own = set(it["nodes"])
        lam = _F(1, 4)
        for (P, Q) in chords:
            if P in own or Q in own:
                if it["tag"] == "bend":
                    anch = it["anchors"][0]
                    if P == anch or Q == anch:
                        other = Q if P == anch else P
                        au = bulge_dir * (other[0] - anch[0])
                        sigma = 1 if anch[1] == it["lo"] else -1
                        av = sigma * (other[1] - anch[1])
                        if au > 0 and av > 0:
                            lam = min(lam, (it["hi"] - it["lo"]) * au / (2 * av))
                continue
            lam_pq = _entry_lambda(P, Q, xk, bulge_dir, it["lo"], it["hi"])
            if lam_pq is not None:
                if lam_pq <= 0:
                    raise Degenerate("no room for an excursion")
                lam = min(lam, lam_pq)
        it["lamstar"] = lam

    # Size excursions outside-in: each stays strictly inside its parent, and
    # nested bends off one anchor shrink with their interval ratio so the
    # inner triangle stays under the outer one's first edge.
    exc = {}
    for it in sorted(items, key=lambda d: d["depth"]):
        ceiling = it["lamstar"]
        for c in it["containers"]:
            c_lam = exc[c["key"]]
            if it["tag"] == "bend" and c["tag"] == "bend" \
                    and c["anchors"][0] == it["anchors"][0]:
                c_lam = c_lam * (it["hi"] - it["lo"]) / (c["hi"] - c["lo"])
            ceiling = min(ceiling, c_lam)
        lam = ceiling * _F(3, 4)
        if lam <= 0 or lam > _EXC_CAP:
            raise Degenerate("no room for an excursion")
        exc[it["key"]] = lam

    results = []
    for ai, (start, end, recs, role) in enumerate(specs):
        spos = model.endpoint_pos(start)
        epos = model.endpoint_pos(end)
        pts: List[Point] = [spos]
        prev = None
        for i, e in enumerate(recs):
            x_e = model.cut_x(e.kind, e.index)
            y_e = lane[id(e)]
            if prev is None:
                if (ai, "start") in exc:
                    # Leave the endpoint on the far side of its own cut and
                    # bend around so no leg runs along the cut line.
                    bx = x_e - e.direction * exc[(ai, "start")]
                    pts.append((bx, (spos[1] + y_e) / 2))
            elif (ai, i) in exc:
                sx = x_e + prev.direction * exc[(ai, i)]
                pts.append((sx, lane[id(prev)]))
                pts.append((sx, y_e))
            pts.append((x_e, y_e))
            prev = e
        if prev is None:
            if (ai, "bulge") in exc:
                pts.append((spos[0] + exc[(ai, "bulge")], (spos[1] + epos[1]) / 2))
        elif (ai, "end") in exc:
            x_p = model.cut_x(prev.kind, prev.index)
            bx = x_p + prev.direction * exc[(ai, "end")]
            pts.append((bx, (lane[id(prev)] + epos[1]) / 2))
        pts.append(epos)
        pts = dedupe(pts)
        if len(pts) < 2:
            raise Degenerate("rebuild produced a degenerate polyline")
        new_recs = [replace(r, y=lane[id(r)], key=None) for r in recs]
        results.append((pts, new_recs))

    _certify_system([pts for (pts, _) in results])
    return results


def rebuild(model: DiskModel, start, end, recs: List[Crossing], role: str, salt: int):
    """Canonical polyline for one tightened code; returns (points, new recs)."""
    return rebuild_system(model, [(start, end, recs, role)], salt)[0]


def _reduce_system(model: DiskModel, specs: List[Tuple]) -> List[Tuple]:
    """Geometric tightening of a jointly embedded system.

    `specs` lists (start, end, recs, role) with ordinates taken from one
    embedded figure.  Code-level tightening alone would leave the surviving
    records carrying ordinates from before the removals, and those can order
    strands inconsistently across arcs.  Here each move is performed only
    when the disk it sweeps is provably empty: a cancelling pair or endpoint
    unwind is applied only while no other excursion nests inside its span on
    the cut (an intruding strand would have to enter and leave through that
    span, leaving a nested pair of its own, so the interval check is
    complete).  Every performed move is then an isotopy moving nothing else,
    so all surviving ordinates remain faithful to an embedded picture and
    the subsequent joint rebuild can trust their order.  Junction germs
    (tine start, access end) are never unwound, as before.
    """
    specs = [(start, end, list(recs), role) for (start, end, recs, role) in specs]
    while True:
        items = []
        for ai, (start, end, recs, role) in enumerate(specs):
            for i in range(1, len(recs)):
                p, e = recs[i - 1], recs[i]
                if (p.kind, p.index) != (e.kind, e.index):
                    continue
                assert e.direction == -p.direction, "same-cut crossings must alternate"
                lo, hi = sorted((p.y, e.y))
                key = ("pair", ai, i) if p.side == e.side else None
                items.append(((e.kind, e.index, p.direction), lo, hi, key))
            if recs:
                spos = model.endpoint_pos(start)
                epos = model.endpoint_pos(end)
                f = recs[0]
                if _own_cut(model, start) == (f.kind, f.index):
                    lo, hi = sorted((spos[1], f.y))
                    key = ("start", ai) if start[0] == "puncture" and role != "tine" else None
                    items.append(((f.kind, f.index, -f.direction), lo, hi, key))
                last = recs[-1]
                if _own_cut(model, end) == (last.kind, last.index):
                    lo, hi = sorted((last.y, epos[1]))
                    key = ("end", ai) if end[0] == "puncture" and role != "access" else None
                    items.append(((last.kind, last.index, last.direction), lo, hi, key))
        removable = []
        for me, (fam, lo, hi, key) in enumerate(items):
            if key is None:
                continue
            if any(j != me and fam2 == fam and lo <= lo2 and hi2 <= hi
                   for j, (fam2, lo2, hi2, _) in enumerate(items)):
                continue
            removable.append(key)
        if not removable:
            if any(k is not None and k[0] == "pair" for (_, _, _, k) in items):
                # an innermost cancelling pair is always removable, so being
                # stuck means two excursions carry coincident ordinates
                raise Degenerate("coincident excursion spans on a cut")
            return specs
        drops = [set() for _ in specs]
        for key in removable:
            if key[0] == "pair":
                _, ai, i = key
                if {i - 1, i} & drops[ai]:
                    continue
                drops[ai].update((i - 1, i))
            elif key[0] == "start":
                ai = key[1]
                if 0 in drops[ai]:
                    continue
                drops[ai].add(0)
            else:
                ai = key[1]
                i = len(specs[ai][2]) - 1
                if i in drops[ai]:
                    continue
                drops[ai].add(i)
        specs = [(start, end,
                  [r for j, r in enumerate(recs) if j not in drops[ai]], role)
                 for ai, (start, end, recs, role) in enumerate(specs)]


def _permute_desc(desc, k):
    if desc[0] == "puncture":
        if desc[1] == k:
            return ("puncture", k + 1)
        if desc[1] == k + 1:
            return ("puncture", k)
    return desc


def _apply_letter(model: DiskModel, arcs: Sequence[Arc], k: int, sign: int) -> List[Arc]:
    last = None
    for salt in range(16):
        try:
            if salt == 0:
                sources = [arc.points for arc in arcs]
            else:
                redrawn = rebuild_system(
                    model,
                    [(a.start, a.end, a.recs, a.role) for a in arcs], salt)
                sources = [pts for (pts, _) in redrawn]
            raw = []
            for arc, src in zip(arcs, sources):
                img = half_twist(src, k, sign)
                ns = _permute_desc(arc.start, k)
                ne = _permute_desc(arc.end, k)
                raw.append((ns, ne, extract_events(model, img, ns, ne), arc.role))
            specs = _reduce_system(model, raw)
            drawn = rebuild_system(model, specs, salt)
            return [Arc(model, ns, ne, pts, recs, role)
                    for (ns, ne, _, role), (pts, recs) in zip(specs, drawn)]
        except Degenerate as exc:
            last = exc
    raise RuntimeError(f"no generic lane position found: {last}")


def apply_word(model: DiskModel, arcs, letters) -> List[Arc]:
    """Image of arcs under the braid word (one homeomorphism for all arcs)."""
    if hasattr(letters, "letters"):
        letters = letters.letters
    single = isinstance(arcs, Arc)
    cur = [arcs] if single else list(arcs)
    seq = letters if LETTERS_LEFT_FIRST else tuple(reversed(letters))
    for letter in seq:
        if letter == 0 or abs(letter) >= model.n:
            raise ValueError(f"letter {letter} out of range for n={model.n}")
        cur = _apply_letter(model, cur, abs(letter), 1 if letter > 0 else -1)
    return cur[0] if single else cur


def _from_code(model: DiskModel, start, end, events, role, salt=0) -> Arc:
    recs = []
    for i, (kind, idx, side, direction) in enumerate(events):
        # Synthetic pre-rebuild ordinates: order of appearance along the arc
        # doubles as the order along each cut for standard arcs.
        recs.append(Crossing(kind, idx, side, direction, _F(i + 1, len(events) + 2), (i,)))
    # Standard codes list each cut at most once, so any distinct ordinates do.
    pts, recs = rebuild(model, start, end, recs, role, salt)
    return Arc(model, start, end, pts, recs, role)


def standard_noodle(model: DiskModel, j: int) -> Arc:
    """Noodle j: the midline chord x = j + 1/2 oriented bottom to top."""
    return _from_code(model, ("boundary", j, -1), ("boundary", j, 1), [], "noodle")


def standard_access(model: DiskModel, i: int) -> Arc:
    """Canonical handle: anchor to puncture i, riding below punctures 1..i-1.

    The lower half-disk is free of ascending rays, so a canonical handle is
    winding-neutral and the untouched pairing matrix comes out exactly the
    identity.
    """
    events = []
    for k in range(1, i):
        events.append(("wall", k, -1, 1))
        events.append(("mid", k, 0, 1))
    return _from_code(model, ("anchor",), ("puncture", i), events, "access")


def standard_fork(model: DiskModel, i: int, l: int | None = None):
    """Tine between punctures i and l (default i+1) plus its canonical handle.

    Returns (access, tine); the tine is oriented away from the handle
    attachment at puncture i and dips below any intermediate punctures, so
    every standard fork is winding-neutral.
    """
    if l is None:
        l = i + 1
    if not (1 <= i < l <= model.n):
        raise ValueError(f"fork pair ({i}, {l}) out of range")
    access = standard_access(model, i)
    events = [("mid", i, 0, 1)]
    for s in range(i + 1, l):
        events.append(("wall", s, -1, 1))
        events.append(("mid", s, 0, 1))
    tine = _from_code(model, ("puncture", i), ("puncture", l), events, "tine")
    return access, tine
