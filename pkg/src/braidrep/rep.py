"""Matrix representations of braid groups over the Laurent ring Z[q^±, t^±].

Two families:

* ``burau``: the reduced Burau representation, dimension n-1, in the
  fork-basis convention  s_k: e_{k-1} -> e_{k-1} + e_k,  e_k -> -q e_k,
  e_{k+1} -> q e_k + e_{k+1}.  The full twist acts as q^n.  This is the
  basis in which the curve engine's single-strand pairing matrix lands
  with no correction factor.
* ``lk``: the Krammer representation on the rank n(n-1)/2 module with basis
  v_{j,l} (1 <= j < l <= n).  The full twist acts as q^{2n} t^2.

Matrices are stored as tuples of rows where row i is the image of basis
vector i; words compose left-to-right, so
``evaluate(concat(w, v)) == mat_mul(evaluate(w), evaluate(v))``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from braidrep.braid import BraidWord
from braidrep.laurent import ONE, ZERO, LaurentPoly

Q = LaurentPoly.monomial(1, 1, 0)
T = LaurentPoly.monomial(1, 0, 1)

FAMILIES = ("burau", "lk")

Matrix = tuple[tuple[LaurentPoly, ...], ...]


def family_dim(family: str, n: int) -> int:
    _check_family(family)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return n - 1 if family == "burau" else n * (n - 1) // 2


def family_multiplicity(family: str) -> int:
    """The cabling multiplicity whose pairing this family matches."""
    _check_family(family)
    return 1 if family == "burau" else 2


def basis_labels(family: str, n: int):
    """Basis labels: ints 1..n-1 for burau, pairs (j, l) for lk."""
    _check_family(family)
    if family == "burau":
        return tuple(range(1, n))
    return tuple((j, l) for j in range(1, n) for l in range(j + 1, n + 1))


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def mat_identity(dim: int) -> Matrix:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(dim)) for i in range(dim)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("shape mismatch")
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((ra[k] * cb[k] for k in range(inner)), ZERO) for cb in bt)
        for ra in a
    )


def is_scalar(matrix: Matrix) -> LaurentPoly | None:
    """The common diagonal entry if the matrix is scalar, else None."""
    head = matrix[0][0]
    for i, row in enumerate(matrix):
        for j, entry in enumerate(row):
            if i == j:
                if entry != head:
                    return None
            elif not entry.is_zero():
                return None
    return head


def _burau_rows(n: int, k: int) -> list[list[LaurentPoly]]:
    dim = n - 1
    rows = [[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)]

    def setrow(basis_index: int, images: dict[int, LaurentPoly]) -> None:
        row = [ZERO] * dim
        for b, coeff in images.items():
            row[b - 1] = coeff
        rows[basis_index - 1] = row

    if k - 1 >= 1:
        setrow(k - 1, {k - 1: ONE, k: ONE})
    setrow(k, {k: -Q})
    if k + 1 <= dim:
        setrow(k + 1, {k: Q, k + 1: ONE})
    return rows


def _lk_rows(n: int, i: int) -> list[list[LaurentPoly]]:
    labels = basis_labels("lk", n)
    index = {pair: pos for pos, pair in enumerate(labels)}
    dim = len(labels)
    rows = []
    q2_minus_q = Q * Q - Q
    one_minus_q = ONE - Q
    for j, l in labels:
        if i == j and i == l - 1:
            images = {(j, l): -T * Q * Q}
        elif i == j - 1:
            images = {
                (j - 1, l): Q,
                (j - 1, j): q2_minus_q,
                (j, l): one_minus_q,
            }
        elif i == j:  # and i != l - 1
            images = {(j + 1, l): ONE}
        elif i == l - 1:  # and i != j
            images = {
                (j, l - 1): Q,
                (j, l): one_minus_q,
                (l - 1, l): -q2_minus_q * T,
            }
        elif i == l:
            images = {(j, l + 1): ONE}
        else:
            images = {(j, l): ONE}
        row = [ZERO] * dim
        for pair, coeff in images.items():
            row[index[pair]] += coeff
        rows.append(row)
    return rows


def _bareiss_inverse(rows: list[list[LaurentPoly]]) -> Matrix:
    """Fraction-free Gauss-Jordan inverse; valid because det is a unit."""
    dim = len(rows)
    width = 2 * dim
    a = [list(rows[i]) + [ONE if j == i else ZERO for j in range(dim)] for i in range(dim)]
    prev = ONE
    for p in range(dim):
        pivot_row = next((r for r in range(p, dim) if not a[r][p].is_zero()), None)
        if pivot_row is None:
            raise ValueError("matrix is singular")
        if pivot_row != p:
            a[p], a[pivot_row] = a[pivot_row], a[p]
        pivot = a[p][p]
        for i in range(dim):
            if i == p:
                continue
            factor = a[i][p]
            for j in range(width):
                a[i][j] = (pivot * a[i][j] - factor * a[p][j]).exact_div(prev)
        prev = pivot
    out = tuple(
        tuple(a[i][dim + j].exact_div(a[i][i]) for j in range(dim)) for i in range(dim)
    )
    check = mat_mul(tuple(tuple(r) for r in rows), out)
    if is_scalar(check) != ONE:
        raise AssertionError("inverse self-check failed")
    return out


@lru_cache(maxsize=None)
def generator_matrix(family: str, n: int, k: int, sign: int) -> Matrix:
    """Matrix of s_k^sign in the given family on n strands."""
    _check_family(family)
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range for n={n}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    rows = _burau_rows(n, k) if family == "burau" else _lk_rows(n, k)
    if sign == 1:
        return tuple(tuple(row) for row in rows)
    return _bareiss_inverse(rows)


def burau_generator(n: int, k: int, sign: int = 1) -> Matrix:
    return generator_matrix("burau", n, k, sign)


def lk_generator(n: int, k: int, sign: int = 1) -> Matrix:
    return generator_matrix("lk", n, k, sign)


@lru_cache(maxsize=None)
def _column_sparse(family: str, n: int, k: int, sign: int):
    """Columns of the generator that differ from the identity."""
    matrix = generator_matrix(family, n, k, sign)
    dim = len(matrix)
    touched = {}
    for j in range(dim):
        col = tuple((i, matrix[i][j]) for i in range(dim) if not matrix[i][j].is_zero())
        if col != ((j, ONE),):
            touched[j] = col
    return touched


def evaluate(w: BraidWord, family: str) -> Matrix:
    """Product of generator matrices in word order (left acts first)."""
    _check_family(family)
    dim = family_dim(family, w.n)
    rows = [list(r) for r in mat_identity(dim)]
    for letter in w.letters:
        touched = _column_sparse(family, w.n, abs(letter), 1 if letter > 0 else -1)
        for row in rows:
            updates = {
                j: sum((row[k] * c for k, c in col), ZERO)
                for j, col in touched.items()
            }
            for j, value in updates.items():
                row[j] = value
    return tuple(tuple(r) for r in rows)


def trivial(w: BraidWord) -> bool:
    """Word-problem verdict from the lk family: is the matrix the identity?"""
    return is_scalar(evaluate(w, "lk")) == ONE


def det(matrix: Matrix) -> LaurentPoly:
    """Fraction-free Bareiss determinant."""
    dim = len(matrix)
    if dim == 0:
        return ONE
    a = [list(row) for row in matrix]
    prev = ONE
    sign = 1
    for p in range(dim - 1):
        pivot_row = next((r for r in range(p, dim) if not a[r][p].is_zero()), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != p:
            a[p], a[pivot_row] = a[pivot_row], a[p]
            sign = -sign
        for i in range(p + 1, dim):
            for j in range(p + 1, dim):
                a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]).exact_div(prev)
            a[i][p] = ZERO
        prev = a[p][p]
    result = a[dim - 1][dim - 1]
    return -result if sign < 0 else result


def evaluate_at(matrix: Matrix, q0: Fraction, t0: Fraction) -> list[list[Fraction]]:
    """Numeric specialization at rational q0, t0 (both nonzero)."""
    return [[entry.evaluate(q0, t0) for entry in row] for row in matrix]


def matrix_json(family: str, n: int, matrix: Matrix) -> dict:
    _check_family(family)
    labels = basis_labels(family, n)
    if len(matrix) != len(labels):
        raise ValueError("matrix size does not match the family dimension")
    return {
        "family": family,
        "n": n,
        "m": family_multiplicity(family),
        "basis": [list(b) if isinstance(b, tuple) else b for b in labels],
        "entries": [[entry.to_json() for entry in row] for row in matrix],
    }


def matrix_from_json(data: dict) -> tuple[str, int, Matrix]:
    family, n = data["family"], int(data["n"])
    matrix = tuple(
        tuple(LaurentPoly.from_json(entry) for entry in row)
        for row in data["entries"]
    )
    return family, n, matrix
