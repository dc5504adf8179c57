"""Sparse integer Laurent polynomials in the two commuting variables q and t.

Terms are stored as a dict mapping exponent pairs ``(dq, dt)`` to nonzero
integer coefficients.  All arithmetic is exact.  The canonical term order used
for printing, serialisation and division is lexicographic on ``(dq, dt)``.

Text format: terms joined by ``+``/``-``, each term ``c*q^a*t^b`` with the
usual abbreviations (``q`` for ``q^1``, coefficient 1 omitted), e.g.
``1 - 2*q - q^2*t``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Mapping

ExpPair = tuple[int, int]


class LaurentPoly:
    """An element of Z[q, q^-1, t, t^-1].  Immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExpPair, int] | None = None):
        clean: dict[ExpPair, int] = {}
        if terms:
            for (dq, dt), c in terms.items():
                if c:
                    clean[(int(dq), int(dt))] = int(c)
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, c: int, dq: int = 0, dt: int = 0) -> "LaurentPoly":
        return cls({(dq, dt): c})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[tuple[ExpPair, int]]:
        """Terms in increasing lexicographic order of (dq, dt)."""
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def as_monomial(self) -> tuple[int, int, int] | None:
        """Return (c, dq, dt) if self is a single term, else None."""
        if len(self._terms) != 1:
            return None
        ((dq, dt), c), = self._terms.items()
        return (c, dq, dt)

    def coeff(self, dq: int, dt: int) -> int:
        return self._terms.get((dq, dt), 0)

    def support_box(self) -> tuple[int, int, int, int] | None:
        """(min dq, max dq, min dt, max dt) over the support, or None if zero."""
        if not self._terms:
            return None
        qs = [e[0] for e in self._terms]
        ts = [e[1] for e in self._terms]
        return (min(qs), max(qs), min(ts), max(ts))

    # -- ring operations ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.monomial(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        out: dict[ExpPair, int] = {}
        for (aq, at), ac in self._terms.items():
            for (bq, bt), bc in other._terms.items():
                e = (aq + bq, at + bt)
                s = out.get(e, 0) + ac * bc
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            mono = self.as_monomial()
            if mono is None or mono[0] not in (1, -1):
                raise ValueError("negative power of a non-unit Laurent polynomial")
            c, dq, dt = mono
            inv = LaurentPoly.monomial(c, -dq, -dt)  # c in {1,-1} so c == 1/c
            return inv ** (-n)
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, dq: int, dt: int) -> "LaurentPoly":
        """Multiply by the monomial q^dq * t^dt."""
        return LaurentPoly({(a + dq, b + dt): c for (a, b), c in self._terms.items()})

    # -- division ----------------------------------------------------------

    def exact_div(self, d: "LaurentPoly") -> "LaurentPoly":
        """Return self / d, raises ValueError unless d divides self exactly."""
        if d.is_zero():
            raise ValueError("division by zero")
        if self.is_zero():
            return LaurentPoly.zero()
        box_p = self.support_box()
        box_d = d.support_box()
        assert box_p is not None and box_d is not None
        # If self == s*d then per variable: min/max exponents of s are the
        # differences of those of self and d (top products cannot cancel).
        lo_q, hi_q = box_p[0] - box_d[0], box_p[1] - box_d[1]
        lo_t, hi_t = box_p[2] - box_d[2], box_p[3] - box_d[3]
        if lo_q > hi_q or lo_t > hi_t:
            raise ValueError("not divisible")
        lead_d = max(d._terms)
        cd = d._terms[lead_d]
        rem = self
        quot: dict[ExpPair, int] = {}
        while rem:
            lead_r = max(rem._terms)
            cr = rem._terms[lead_r]
            if cr % cd:
                raise ValueError("not divisible")
            e = (lead_r[0] - lead_d[0], lead_r[1] - lead_d[1])
            if not (lo_q <= e[0] <= hi_q and lo_t <= e[1] <= hi_t):
                raise ValueError("not divisible")
            c = cr // cd
            quot[e] = c
            rem = rem - d.shift(*e) * c
        return LaurentPoly(quot)

    def scalar_ratio(self, other: "LaurentPoly") -> tuple[int, int, int] | None:
        """Find (c, dq, dt) with self == c * q^dq * t^dt * other, else None.

        A zero self gives (0, 0, 0); a zero other raises ValueError.
        """
        if other.is_zero():
            raise ValueError("scalar_ratio against the zero polynomial")
        if self.is_zero():
            return (0, 0, 0)
        lead_s = max(self._terms)
        lead_o = max(other._terms)
        cs, co = self._terms[lead_s], other._terms[lead_o]
        if cs % co:
            return None
        c = cs // co
        dq, dt = lead_s[0] - lead_o[0], lead_s[1] - lead_o[1]
        if self == other.shift(dq, dt) * c:
            return (c, dq, dt)
        return None

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, qval: Fraction, tval: Fraction) -> Fraction:
        """Exact evaluation at nonzero rational q, t."""
        qval, tval = Fraction(qval), Fraction(tval)
        if qval == 0 or tval == 0:
            raise ValueError("evaluation point must avoid q=0 and t=0")
        total = Fraction(0)
        for (dq, dt), c in self._terms.items():
            total += c * qval ** dq * tval ** dt
        return total

    # -- text and JSON forms -------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for i, ((dq, dt), c) in enumerate(self.terms()):
            factors: list[str] = []
            if abs(c) != 1 or (dq == 0 and dt == 0):
                factors.append(str(abs(c)))
            if dq:
                factors.append("q" if dq == 1 else f"q^{dq}")
            if dt:
                factors.append("t" if dt == 1 else f"t^{dt}")
            body = "*".join(factors)
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    _FACTOR_RE = re.compile(r"^(?:(-?\d+)|([qt])(?:\^(-?\d+))?)$")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of str(); accepts e.g. '1 - 2*q - q^2*t' or 'q^-1*t + 3'."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls.zero()
        # split into signed terms; '-' after '^' or '*' belongs to a factor
        s = re.sub(r"(?<![\^\*])-", "+-", s)
        total = cls.zero()
        pieces = s.split("+")
        for i, piece in enumerate(pieces):
            if not piece:
                if i == 0:  # a leading sign leaves one empty head piece
                    continue
                raise ValueError(f"dangling sign in {text!r}")
            c, dq, dt = 1, 0, 0
            if piece[0] == "-":
                c, piece = -1, piece[1:]
            if not piece:
                raise ValueError(f"dangling sign in {text!r}")
            saw_num = False
            for factor in piece.split("*"):
                m = cls._FACTOR_RE.match(factor)
                if not m:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                if m.group(1) is not None:
                    if saw_num:
                        raise ValueError(f"two numeric factors in {piece!r}")
                    saw_num = True
                    c *= int(m.group(1))
                else:
                    e = int(m.group(3)) if m.group(3) is not None else 1
                    if m.group(2) == "q":
                        dq += e
                    else:
                        dt += e
            total = total + cls.monomial(c, dq, dt)
        return total

    def to_json(self) -> list[dict[str, int]]:
        return [{"c": c, "dq": dq, "dt": dt} for (dq, dt), c in self.terms()]

    @classmethod
    def from_json(cls, data: list[dict[str, int]]) -> "LaurentPoly":
        out = cls.zero()
        for item in data:
            out = out + cls.monomial(item["c"], item["dq"], item["dt"])
        return out


Q = LaurentPoly.monomial(1, 1, 0)
T = LaurentPoly.monomial(1, 0, 1)
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()
