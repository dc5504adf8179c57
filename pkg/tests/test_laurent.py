import random
from fractions import Fraction

import pytest
import sympy

from braidrep.laurent import ONE, Q, T, ZERO, LaurentPoly


def random_poly(rng, max_terms=6, span=4):
    p = LaurentPoly.zero()
    for _ in range(rng.randrange(max_terms + 1)):
        c = rng.choice([c for c in range(-9, 10) if c])
        p = p + LaurentPoly.monomial(c, rng.randint(-span, span), rng.randint(-span, span))
    return p


def to_sympy(p, q, t):
    return sum((c * q**dq * t**dt for (dq, dt), c in p.terms()), sympy.Integer(0))


def test_basic_identities():
    assert Q * T == T * Q
    assert (Q + T) * (Q - T) == Q * Q - T * T
    assert Q + ZERO == Q
    assert Q * ONE == Q
    assert Q - Q == ZERO
    assert not ZERO
    assert ONE.is_one()
    assert (Q * 0).is_zero()


def test_monomial_inspection():
    m = LaurentPoly.monomial(-3, 2, -1)
    assert m.as_monomial() == (-3, 2, -1)
    assert (Q + T).as_monomial() is None
    assert m.coeff(2, -1) == -3
    assert m.coeff(0, 0) == 0


def test_pow():
    assert Q**0 == ONE
    assert (Q + T) ** 2 == Q * Q + 2 * Q * T + T * T
    assert Q**-3 == LaurentPoly.monomial(1, -3, 0)
    assert (-Q * T) ** -2 == LaurentPoly.monomial(1, -2, -2)
    with pytest.raises(ValueError):
        (Q + T) ** -1
    with pytest.raises(ValueError):
        (2 * Q) ** -1


def test_str_examples():
    assert str(ZERO) == "0"
    assert str(ONE - 2 * Q - Q**2 * T) == "1 - 2*q - q^2*t"
    assert str(LaurentPoly.monomial(-1, 0, 2)) == "-t^2"
    assert str(LaurentPoly.monomial(5, -1, 1)) == "5*q^-1*t"


def test_parse_examples():
    assert LaurentPoly.parse("0") == ZERO
    assert LaurentPoly.parse("1 - 2*q - q^2*t") == ONE - 2 * Q - Q**2 * T
    assert LaurentPoly.parse("-q^-2") == LaurentPoly.monomial(-1, -2, 0)
    assert LaurentPoly.parse("t*q") == Q * T
    for bad in ["", "q^", "2**q", "q+", "3*4*q", "u"]:
        with pytest.raises(ValueError):
            LaurentPoly.parse(bad)


def test_str_parse_roundtrip():
    rng = random.Random(20260815)
    for _ in range(300):
        p = random_poly(rng)
        assert LaurentPoly.parse(str(p)) == p


def test_json_roundtrip():
    rng = random.Random(1)
    for _ in range(100):
        p = random_poly(rng)
        data = p.to_json()
        assert data == sorted(data, key=lambda d: (d["dq"], d["dt"]))
        assert LaurentPoly.from_json(data) == p


def test_mul_against_sympy():
    q, t = sympy.symbols("q t")
    rng = random.Random(2)
    for _ in range(50):
        a, b = random_poly(rng), random_poly(rng)
        got = to_sympy(a * b, q, t)
        want = sympy.expand(to_sympy(a, q, t) * to_sympy(b, q, t))
        assert sympy.simplify(got - want) == 0


def test_evaluate_against_sympy():
    q, t = sympy.symbols("q t")
    rng = random.Random(3)
    for _ in range(50):
        p = random_poly(rng)
        qv, tv = Fraction(3, 2), Fraction(-2, 5)
        want = to_sympy(p, q, t).subs({q: sympy.Rational(3, 2), t: sympy.Rational(-2, 5)})
        assert p.evaluate(qv, tv) == Fraction(str(sympy.nsimplify(want)))
    with pytest.raises(ValueError):
        ONE.evaluate(Fraction(0), Fraction(1))


def test_exact_div():
    rng = random.Random(4)
    checked = 0
    for _ in range(200):
        s, d = random_poly(rng), random_poly(rng)
        if d.is_zero():
            continue
        assert (s * d).exact_div(d) == s
        checked += 1
    assert checked > 150
    with pytest.raises(ValueError):
        ONE.exact_div(ZERO)
    with pytest.raises(ValueError):
        (Q + T + ONE).exact_div(Q + T)
    with pytest.raises(ValueError):
        ONE.exact_div(Q + ONE)
    with pytest.raises(ValueError):
        (2 * Q + ONE).exact_div(2 * ONE)


def test_scalar_ratio():
    rng = random.Random(5)
    for _ in range(200):
        r = random_poly(rng)
        if r.is_zero():
            continue
        c = rng.choice([-3, -1, 1, 2, 7])
        dq, dt = rng.randint(-3, 3), rng.randint(-3, 3)
        p = r.shift(dq, dt) * c
        assert p.scalar_ratio(r) == (c, dq, dt)
    assert ZERO.scalar_ratio(Q) == (0, 0, 0)
    assert (Q + T).scalar_ratio(Q - T) is None
    assert (Q + T + ONE).scalar_ratio(Q + T) is None
    with pytest.raises(ValueError):
        ONE.scalar_ratio(ZERO)


def test_hash_consistency():
    assert hash(Q * T) == hash(T * Q)
    d = {Q + ONE: "a"}
    assert d[ONE + Q] == "a"
