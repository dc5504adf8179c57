"""Braid words, permutations, crossing counts, and a word problem oracle.

Conventions fixed here and shared by every module:

* Generators are numbered 1..n-1; a letter is a nonzero int, sign = crossing
  sign.  Strands are labeled by their *starting* positions.
* Composition: ``concat(w, v)`` means "apply w first, then v".
* ``sigma_k`` exchanges the strands currently at positions k and k+1.

The triviality oracle is handle reduction: repeatedly rewrite the
leftmost-ending handle ``s_i^e v s_i^-e`` (v free of indices i-1 and i) until
no handle remains; the empty word is trivial and any nonempty handle-free
word is not.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class BudgetExceeded(RuntimeError):
    """A step budget ran out before a verdict was reached."""


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; images[k] is the image of k+1."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __len__(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(v == k + 1 for k, v in enumerate(self.images))

    def then(self, other: "Permutation") -> "Permutation":
        """self first, then other."""
        if len(other) != len(self):
            raise ValueError("size mismatch")
        return Permutation(tuple(other(self(k)) for k in range(1, len(self) + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for k, v in enumerate(self.images):
            inv[v - 1] = k + 1
        return Permutation(tuple(inv))

    def preserves(self, block: frozenset[int] | set[int]) -> bool:
        return {self(k) for k in block} == set(block)


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators of B_n."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        for pos, letter in enumerate(self.letters):
            if letter == 0 or not 1 <= abs(letter) <= self.n - 1:
                raise ValueError(
                    f"letter {letter} at position {pos} out of range for n={self.n}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __invert__(self) -> "BraidWord":
        return inverse(self)

    def to_json(self) -> dict:
        return {"n": self.n, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> "BraidWord":
        return cls(int(data["n"]), tuple(int(x) for x in data["letters"]))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters) if self.letters else "(empty)"


def parse_word(text: str, n: int) -> BraidWord:
    """Whitespace/comma separated signed generator indices, e.g. '1 2 -1'."""
    letters = []
    for pos, token in enumerate(re.split(r"[\s,]+", text.strip())):
        if not token:
            continue
        try:
            value = int(token)
        except ValueError:
            raise ValueError(f"token {token!r} at position {pos} is not an integer")
        if value == 0:
            raise ValueError(f"token at position {pos} is zero (no such generator)")
        if abs(value) > n - 1:
            raise ValueError(
                f"token {token!r} at position {pos} out of range: |k| <= {n - 1}"
            )
        letters.append(value)
    return BraidWord(n, tuple(letters))


def concat(w: BraidWord, v: BraidWord) -> BraidWord:
    """w followed by v (w acts first)."""
    if w.n != v.n:
        raise ValueError(f"strand count mismatch: {w.n} vs {v.n}")
    return BraidWord(w.n, w.letters + v.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-x for x in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for letter in w.letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return BraidWord(w.n, tuple(out))


def permutation(w: BraidWord) -> Permutation:
    pos = list(range(1, w.n + 1))  # pos[p-1] = strand currently at position p
    for letter in w.letters:
        k = abs(letter)
        pos[k - 1], pos[k] = pos[k], pos[k - 1]
    images = [0] * w.n
    for p, strand in enumerate(pos):
        images[strand - 1] = p + 1
    return Permutation(tuple(images))


def crossing_number(w: BraidWord, i: int, j: int) -> int:
    """Signed count of crossings between the strands starting at i and j."""
    if not (1 <= i <= w.n and 1 <= j <= w.n and i != j):
        raise ValueError(f"need distinct strand labels in 1..{w.n}, got {i}, {j}")
    total = 0
    pos = list(range(1, w.n + 1))
    pair = {i, j}
    for letter in w.letters:
        k = abs(letter)
        if {pos[k - 1], pos[k]} == pair:
            total += 1 if letter > 0 else -1
        pos[k - 1], pos[k] = pos[k], pos[k - 1]
    return total


def linking_block(w: BraidWord, block1: Iterable[int], block2: Iterable[int]) -> int:
    """Half the total signed crossing count between the two strand blocks."""
    b1, b2 = frozenset(block1), frozenset(block2)
    if b1 & b2:
        raise ValueError(f"blocks overlap: {sorted(b1 & b2)}")
    total = 0
    pos = list(range(1, w.n + 1))
    for letter in w.letters:
        k = abs(letter)
        a, b = pos[k - 1], pos[k]
        if (a in b1 and b in b2) or (a in b2 and b in b1):
            total += 1 if letter > 0 else -1
        pos[k - 1], pos[k] = pos[k], pos[k - 1]
    if total % 2:
        raise ValueError(
            "odd total crossing count between blocks; braid does not preserve them"
        )
    return total // 2


def pure_gen(i: int, j: int, n: int) -> BraidWord:
    """The standard pure braid generator: conjugate of s_i^2 linking strands i, j."""
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    conj = list(range(j - 1, i, -1))  # j-1, ..., i+1
    return BraidWord(n, tuple(conj) + (i, i) + tuple(-k for k in reversed(conj)))


def full_twist(n: int) -> BraidWord:
    """The central full twist: (s_1 ... s_{n-1})^n, length n(n-1)."""
    if n < 2:
        raise ValueError(f"full twist needs n >= 2, got {n}")
    return BraidWord(n, tuple(range(1, n)) * n)


def in_bnm(w: BraidWord, n: int, m: int) -> bool:
    """Does w (on n+m strands) preserve the blocks {1..n} and {n+1..n+m}?"""
    if w.n != n + m:
        raise ValueError(f"word has {w.n} strands, expected n+m={n + m}")
    return permutation(w).preserves(frozenset(range(1, n + 1)))


def rho_exponents(w: BraidWord, n: int, m: int) -> tuple[int, int]:
    """Exponents (a, b) with rho(w) = q^a t^b for a block-preserving word.

    a: linking number of the block {1..n} with the block {n+1..n+m};
    b: total signed crossing count within the last block.
    """
    if not in_bnm(w, n, m):
        raise ValueError("word does not preserve the strand blocks")
    a = linking_block(w, range(1, n + 1), range(n + 1, n + m + 1))
    b = 0
    pos = list(range(1, w.n + 1))
    for letter in w.letters:
        k = abs(letter)
        if pos[k - 1] > n and pos[k] > n:
            b += 1 if letter > 0 else -1
        pos[k - 1], pos[k] = pos[k], pos[k - 1]
    return a, b


@dataclass(frozen=True)
class HandleResult:
    trivial: bool
    witness: BraidWord  # handle-free (and freely reduced) rewrite of the input


def _find_handle(letters: Sequence[int]) -> tuple[int, int] | None:
    """Position pair (s, t) of the leftmost-ending handle, or None.

    A handle is letters[s] = e*i, letters[t] = -e*i with no letter of index
    i or i-1 strictly between.  Scanning closings left to right makes the
    first hit innermost: any handle inside (s, t) would end before t.
    """
    last_seen: dict[int, int] = {}  # index -> position of its last occurrence
    for t, letter in enumerate(letters):
        i = abs(letter)
        s = last_seen.get(i)
        if s is not None and letters[s] == -letter:
            between_ok = all(abs(letters[p]) not in (i, i - 1) for p in range(s + 1, t))
            if between_ok:
                return s, t
        last_seen[i] = t
    return None


def handle_reduce(w: BraidWord, max_steps: int = 1_000_000) -> HandleResult:
    """Decide triviality by handle reduction.

    Raises BudgetExceeded (never a wrong verdict) if max_steps reductions do
    not suffice.
    """
    letters = list(free_reduce(w).letters)
    steps = 0
    while True:
        found = _find_handle(letters)
        if found is None:
            return HandleResult(not letters, BraidWord(w.n, tuple(letters)))
        if steps >= max_steps:
            raise BudgetExceeded(f"handle reduction exceeded {max_steps} steps")
        steps += 1
        s, t = found
        e = 1 if letters[s] > 0 else -1
        i = abs(letters[s])
        replacement: list[int] = []
        for letter in letters[s + 1 : t]:
            if abs(letter) == i + 1:
                d = 1 if letter > 0 else -1
                replacement += [-e * (i + 1), d * i, e * (i + 1)]
            else:
                replacement.append(letter)
        new_letters = letters[:s] + replacement + letters[t + 1 :]
        # opportunistic free reduction keeps the word from bloating
        out: list[int] = []
        for letter in new_letters:
            if out and out[-1] == -letter:
                out.pop()
            else:
                out.append(letter)
        letters = out
