"""Burau/Krammer matrix families: relations, scalars, determinants, JSON."""

import random
from fractions import Fraction

import pytest

from braidrep.braid import BraidWord, concat, full_twist, handle_reduce, inverse
from braidrep.laurent import ONE, LaurentPoly
from braidrep.rep import (
    basis_labels,
    burau_generator,
    det,
    evaluate,
    evaluate_at,
    family_dim,
    generator_matrix,
    is_scalar,
    lk_generator,
    mat_identity,
    mat_mul,
    matrix_from_json,
    matrix_json,
    trivial,
)

Q = LaurentPoly.monomial(1, 1, 0)
T = LaurentPoly.monomial(1, 0, 1)


def random_word(rng, n, length):
    return BraidWord(
        n, tuple(rng.choice([k, -k]) for k in (rng.randint(1, n - 1) for _ in range(length)))
    )


def test_dims_and_bases():
    assert family_dim("burau", 4) == 3
    assert family_dim("lk", 4) == 6
    assert basis_labels("burau", 4) == (1, 2, 3)
    assert basis_labels("lk", 3) == ((1, 2), (1, 3), (2, 3))
    with pytest.raises(ValueError):
        family_dim("weird", 3)


def test_small_generators():
    # n=2: burau is the 1x1 matrix (-q), lk is (-t q^2) whose square is q^4 t^2
    assert burau_generator(2, 1) == ((-Q,),)
    v = lk_generator(2, 1)[0][0]
    assert v == -T * Q * Q
    assert v * v == Q**4 * T**2


def test_generator_inverses():
    for family in ("burau", "lk"):
        for n in (2, 3, 4, 5):
            for k in range(1, n):
                prod = mat_mul(
                    generator_matrix(family, n, k, 1), generator_matrix(family, n, k, -1)
                )
                assert prod == mat_identity(family_dim(family, n))


def test_braid_and_commutation_relations():
    for family in ("burau", "lk"):
        for n in (3, 4, 5, 6):
            for k in range(1, n - 1):
                assert evaluate(BraidWord(n, (k, k + 1, k)), family) == evaluate(
                    BraidWord(n, (k + 1, k, k + 1)), family
                )
            for k in range(1, n):
                for l in range(k + 2, n):
                    assert evaluate(BraidWord(n, (k, l)), family) == evaluate(
                        BraidWord(n, (l, k)), family
                    )


def test_full_twist_scalars():
    # the full twist is central and acts by q^n (burau) resp. q^{2n} t^2 (lk)
    for n in (2, 3, 4, 5):
        assert is_scalar(evaluate(full_twist(n), "burau")) == Q**n
        assert is_scalar(evaluate(full_twist(n), "lk")) == Q ** (2 * n) * T**2


def test_representation_property():
    rng = random.Random(20260815)
    for family in ("burau", "lk"):
        for _ in range(30):
            n = rng.randint(2, 4)
            w = random_word(rng, n, rng.randint(0, 6))
            v = random_word(rng, n, rng.randint(0, 6))
            assert evaluate(concat(w, v), family) == mat_mul(
                evaluate(w, family), evaluate(v, family)
            )
            assert mat_mul(evaluate(w, family), evaluate(inverse(w), family)) == (
                mat_identity(family_dim(family, n))
            )


def test_det_is_monomial_linear_in_writhe():
    rng = random.Random(31337)
    for family in ("burau", "lk"):
        for n in (2, 3, 4):
            gen_det = det(evaluate(BraidWord(n, (1,)), family))
            assert gen_det.as_monomial() is not None
            # all generators are conjugate, so each letter contributes gen_det^sign
            for _ in range(10):
                w = random_word(rng, n, rng.randint(0, 8))
                writhe = sum(1 if x > 0 else -1 for x in w.letters)
                assert det(evaluate(w, family)) == gen_det**writhe


def test_is_scalar():
    assert is_scalar(mat_identity(3)) == ONE
    assert is_scalar(evaluate(BraidWord(3, (1,)), "lk")) is None
    assert is_scalar(evaluate(full_twist(3), "lk")) == Q**6 * T**2


def test_trivial_oracle():
    assert trivial(BraidWord(3, ()))
    assert trivial(BraidWord(3, (1, 2, 1, -2, -1, -2)))
    assert not trivial(BraidWord(3, (1,)))
    assert not trivial(BraidWord(4, (1, -3)))


def test_trivial_matches_handle_reduction():
    rng = random.Random(55)
    for _ in range(60):
        n = rng.randint(2, 4)
        w = random_word(rng, n, rng.randint(0, 8))
        assert trivial(w) == handle_reduce(w).trivial


def test_evaluate_at():
    w = BraidWord(3, (1, 2, -1))
    matrix = evaluate(w, "burau")
    q0, t0 = Fraction(3, 2), Fraction(-2, 5)
    numeric = evaluate_at(matrix, q0, t0)
    for row, nrow in zip(matrix, numeric):
        for entry, value in zip(row, nrow):
            assert entry.evaluate(q0, t0) == value


def test_matrix_json_roundtrip():
    w = BraidWord(4, (1, 3, -2))
    for family in ("burau", "lk"):
        matrix = evaluate(w, family)
        blob = matrix_json(family, 4, matrix)
        assert blob["family"] == family
        assert blob["n"] == 4
        assert blob["m"] == (1 if family == "burau" else 2)
        if family == "lk":
            assert blob["basis"][0] == [1, 2]
        fam2, n2, back = matrix_from_json(blob)
        assert (fam2, n2, back) == (family, 4, matrix)
