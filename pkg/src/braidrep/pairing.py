"""Cabled fork-noodle pairing and the kernel certificate built on it.

The m-cable pairing of a braid-image fork against a standard noodle is
assembled from single-fork intersection data: every ordered m-tuple of
tine crossings contributes the product of its signs times q to the summed
windings times (-t) to the summed pairwise exchange numbers.  With m = 1
this collapses to the signed winding sum (pure q, the reduced Burau row);
with m = 2 it lands on the Lawrence-Krammer action expressed against the
identity-braid pairing, which the test suite pins against the matrix
route entry by entry.

A braid homeomorphism maps parallel copies to parallel copies, so the
cable of the image equals the image of the cable and no multi-arc
geometry is ever needed: the single-fork data already carries the whole
cabled answer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .braid import BraidWord
from .curves import (DiskModel, IntersectionData, apply_word,
                     intersection_data, standard_fork)
from .laurent import LaurentPoly


def pair_cabled(data: IntersectionData, m: int) -> LaurentPoly:
    """Pairing of the m-cable of a fork with a noodle from its 1-cable data.

    Sums over ordered m-tuples (i_1..i_m) of crossings: the tuple term is
    (prod_j eps[i_j]) * q**(sum_j a[i_j]) * (-t)**(sum_{j<k} b[i_j][i_k]),
    where position j rides the j-th (lower) cable copy.  Runs in
    O(l**m * m) time; the word-problem gates only ever need small m.
    """
    if m < 1:
        raise ValueError(f"cable multiplicity must be >= 1, got {m}")
    l = data.l
    if l == 0:
        return LaurentPoly.zero()
    eps, a = data.eps, data.a
    b = data.b if m > 1 else None
    terms: dict[tuple[int, int], int] = {}
    picks: list[int] = []

    def extend(sign: int, qa: int, tb: int):
        if len(picks) == m:
            c = sign if tb % 2 == 0 else -sign
            key = (qa, tb)
            terms[key] = terms.get(key, 0) + c
            return
        for v in range(l):
            db = sum(b[u][v] for u in picks) if b is not None else 0
            picks.append(v)
            extend(sign * eps[v], qa + a[v], tb + db)
            picks.pop()

    extend(1, 0, 0)
    return LaurentPoly(terms)


@dataclass(frozen=True)
class PairingMatrix:
    """(n-1) x (n-1) table: entry (i, j) pairs the braid image of the
    standard fork i, cabled m times, against the standard noodle j."""

    n: int
    m: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def entry(self, i: int, j: int) -> LaurentPoly:
        """1-based fork/noodle indices, matching the disk labels."""
        return self.entries[i - 1][j - 1]

    def to_json(self) -> dict:
        return {
            "family": "pairing",
            "n": self.n,
            "m": self.m,
            "basis": list(range(1, self.n)),
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    def dumps(self, pretty: bool = False) -> str:
        blob = self.to_json()
        if pretty:
            return json.dumps(blob, indent=2, sort_keys=True)
        return json.dumps(blob, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, data: dict) -> "PairingMatrix":
        entries = tuple(
            tuple(LaurentPoly.from_json(e) for e in row)
            for row in data["entries"]
        )
        return cls(int(data["n"]), int(data["m"]), entries)


def pairing_matrix(w: BraidWord, n: int, m: int) -> PairingMatrix:
    """Pair every braid-image standard fork against every standard noodle.

    Each fork image is computed once and paired against all n-1 noodles;
    the intersection data exposes the exchange matrix lazily, so m = 1
    never pays for cable geometry.
    """
    if w.n != n:
        raise ValueError(f"word has {w.n} strands, expected {n}")
    if m < 1:
        raise ValueError(f"cable multiplicity must be >= 1, got {m}")
    model = DiskModel(n)
    rows = []
    for i in range(1, n):
        img = apply_word(model, standard_fork(model, i), w.letters)
        rows.append(tuple(
            pair_cabled(intersection_data(model, img, j), m)
            for j in range(1, n)
        ))
    return PairingMatrix(n, m, tuple(rows))


def kernel_test(w: BraidWord, n: int, m: int) -> bool:
    """True iff the pairing table of w matches the identity braid's.

    A representation-kernel element cannot move any pairing value, so a
    mismatch certifies a nontrivial image; agreement is necessary but not
    by itself a proof of triviality.
    """
    return pairing_matrix(w, n, m).entries == \
        pairing_matrix(BraidWord(n, ()), n, m).entries
