"""Curve engine on the punctured disk.

Two independent backends compute noodle/fork intersection data:

* the production tracker (`tracker`, `pairdata`): exact rational arithmetic,
  square-template half twists, canonical wall-crossing codes;
* the reference backend (`reference`): floating-point piecewise-linear
  simulation with a round damped-rotation twist and exact predicates on the
  float coordinates (every float is a dyadic rational, so the predicates
  certify the combinatorics exactly).

Shared conventions (fixed once, validated by the matrix gates):

* the disk is the rectangle [0, n+1] x [-1, 1]; puncture k sits at (k, 0);
* the basepoint anchor is (1/4, -1) on the lower boundary, left of all
  punctures; cable basepoint c sits at (1/4 + (c-1)/64, -1);
* positive generators act as counterclockwise half twists;
* noodle j is the vertical chord x = j + 1/2 oriented upward (anchor on its
  left); intersections are listed bottom-to-top along the noodle;
* an intersection is positive when the tine crosses the noodle eastward.
"""

from .codes import ArcCode, DiskModel
from .pairdata import IntersectionData, intersection_data, minimal_crossings
from .tracker import Arc, apply_word, standard_access, standard_fork, standard_noodle

__all__ = [
    "ArcCode",
    "DiskModel",
    "Arc",
    "IntersectionData",
    "apply_word",
    "intersection_data",
    "minimal_crossings",
    "standard_access",
    "standard_fork",
    "standard_noodle",
]
