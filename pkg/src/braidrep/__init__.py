"""Exact homological braid group representations and a braid word problem oracle.

The package computes, over the ring of integer Laurent polynomials in q and t:

* the reduced Burau representation (multiplicity 1),
* the Krammer representation (multiplicity 2),
* the general multiplicity-m representation, realised as a pairing matrix
  between vertical "noodle" arcs and cabled fork complexes in a punctured disk,

and cross-checks the matrix route against an independent curve-diagram engine.
A handle-reduction solver for the braid word problem is included so that the
representation-based triviality test can be validated against a purely
combinatorial one.
"""

from braidrep.laurent import LaurentPoly

__all__ = ["LaurentPoly"]
__version__ = "0.1.0"
