"""Disk model and combinatorial crossing codes.

The disk is the rectangle [0, n+1] x [-1, 1] with punctures at (k, 0),
k = 1..n.  The cut system is all-vertical:

* wall k: the vertical chord x = k through puncture k, split by the puncture
  into an upper half (side +1, y > 0) and a lower half (side -1, y < 0);
* midline j: the full vertical chord x = j + 1/2 between punctures j and
  j+1, for j = 1..n-1.

An arc rel endpoints is encoded by its sequence of transverse crossings with
the cuts after tightening.  Wall events carry the side; midline events carry
side 0.  Directions: +1 eastward (x increasing), -1 westward.  The code plus
the endpoint descriptors determine the arc up to isotopy fixing the punctures
and the boundary; equality and hashing use only this combinatorial payload.

Endpoint descriptors: ("anchor",) for the boundary basepoint (1/4, -1),
("puncture", k), or ("boundary", j, s) for the two ends of noodle j on the
top (s=+1) / bottom (s=-1) boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

ANCHOR = (Fraction(1, 4), Fraction(-1))


@dataclass(frozen=True)
class Event:
    kind: str        # "wall" or "mid"
    index: int       # wall k in 1..n, midline j in 1..n-1
    side: int        # +1 above / -1 below for walls, 0 for midlines
    direction: int   # +1 eastward, -1 westward

    def to_json(self):
        return {
            "cut": self.kind,
            "index": self.index,
            "side": {1: "above", -1: "below", 0: None}[self.side],
            "dir": "east" if self.direction == 1 else "west",
        }

    @staticmethod
    def from_json(blob) -> "Event":
        side = {"above": 1, "below": -1, None: 0}[blob["side"]]
        return Event(blob["cut"], blob["index"], side, 1 if blob["dir"] == "east" else -1)


@dataclass(frozen=True)
class ArcCode:
    n: int
    start: Tuple
    end: Tuple
    events: Tuple[Event, ...]

    def wall_events(self) -> Tuple[Event, ...]:
        """The wall-crossing subsequence (midline events are bookkeeping)."""
        return tuple(e for e in self.events if e.kind == "wall")

    def to_json(self):
        return {
            "n": self.n,
            "start": list(self.start),
            "end": list(self.end),
            "events": [e.to_json() for e in self.events],
        }

    def dumps(self, pretty: bool = False) -> str:
        blob = self.to_json()
        if pretty:
            return json.dumps(blob, indent=2, sort_keys=True)
        return json.dumps(blob, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(blob) -> "ArcCode":
        return ArcCode(
            blob["n"],
            tuple(blob["start"]),
            tuple(blob["end"]),
            tuple(Event.from_json(e) for e in blob["events"]),
        )


class DiskModel:
    """Geometry constants for the n-punctured disk."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("need at least two punctures")
        self.n = n

    def puncture(self, k: int):
        assert 1 <= k <= self.n
        return (Fraction(k), Fraction(0))

    @property
    def anchor(self):
        return ANCHOR

    def basepoint(self, copy: int):
        """Basepoint for cable copy `copy` (1-based), east of the anchor.

        Higher copies sit further east: the inner (northern) return corridor
        lands east, so an eastward tine crossing sends every copy back to its
        own basepoint and self-exchange numbers get the right parity.
        """
        return (Fraction(1, 4) + Fraction(copy - 1, 64), Fraction(-1))

    def noodle_x(self, j: int) -> Fraction:
        assert 1 <= j <= self.n - 1
        return Fraction(2 * j + 1, 2)

    def cut_x(self, kind: str, index: int) -> Fraction:
        if kind == "wall":
            assert 1 <= index <= self.n
            return Fraction(index)
        assert kind == "mid" and 1 <= index <= self.n - 1
        return Fraction(2 * index + 1, 2)

    def cuts(self):
        for k in range(1, self.n + 1):
            yield ("wall", k)
        for j in range(1, self.n):
            yield ("mid", j)

    def endpoint_pos(self, desc: Tuple):
        if desc[0] == "anchor":
            return ANCHOR
        if desc[0] == "puncture":
            return self.puncture(desc[1])
        if desc[0] == "boundary":
            return (self.noodle_x(desc[1]), Fraction(desc[2]))
        if desc[0] == "basepoint":
            return self.basepoint(desc[1])
        raise ValueError(f"unknown endpoint descriptor {desc!r}")
