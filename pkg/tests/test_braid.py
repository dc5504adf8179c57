"""Braid word combinatorics: crossing counts, block exponents, handle reduction."""

import random

import pytest

from braidrep.braid import (
    BraidWord,
    BudgetExceeded,
    Permutation,
    concat,
    crossing_number,
    free_reduce,
    full_twist,
    handle_reduce,
    in_bnm,
    inverse,
    linking_block,
    parse_word,
    permutation,
    pure_gen,
    rho_exponents,
)


def random_word(rng, n, length):
    return BraidWord(
        n, tuple(rng.choice([k, -k]) for k in (rng.randint(1, n - 1) for _ in range(length)))
    )


def test_parse_word():
    w = parse_word("1 2 -1", 4)
    assert w.letters == (1, 2, -1)
    assert parse_word("1,2,-1", 4) == w
    assert parse_word("  ", 4).letters == ()
    with pytest.raises(ValueError, match="position 1"):
        parse_word("1 x", 4)
    with pytest.raises(ValueError, match="zero"):
        parse_word("1 0 2", 4)
    with pytest.raises(ValueError, match="out of range"):
        parse_word("3", 3)


def test_word_json_roundtrip():
    w = BraidWord(4, (1, 2, -1))
    assert w.to_json() == {"n": 4, "letters": [1, 2, -1]}
    assert BraidWord.from_json(w.to_json()) == w


def test_permutation_basics():
    w = parse_word("1", 3)
    assert permutation(w).images == (2, 1, 3)
    # s1 s2 carries strand 1 to position 3, strand 2 to 1, strand 3 to 2
    assert permutation(parse_word("1 2", 3)).images == (3, 1, 2)
    assert permutation(full_twist(4)).is_identity()
    assert permutation(full_twist(5)).is_identity()


def test_permutation_composition_convention():
    # permutation(concat(w, v)) applies w's permutation first, then v's
    rng = random.Random(20260815)
    for _ in range(50):
        n = rng.randint(2, 6)
        w = random_word(rng, n, rng.randint(0, 8))
        v = random_word(rng, n, rng.randint(0, 8))
        assert permutation(concat(w, v)) == permutation(w).then(permutation(v))


def test_pure_gen_shape():
    # A_{1,3} in B_3 is s2 s1 s1 s2^-1
    assert pure_gen(1, 3, 3).letters == (2, 1, 1, -2)
    assert pure_gen(1, 2, 3).letters == (1, 1)
    assert pure_gen(2, 3, 3).letters == (2, 2)
    with pytest.raises(ValueError):
        pure_gen(2, 2, 3)


def test_pure_gen_crossing_numbers():
    # hand simulation of s2 s1 s1 s2^-1: the (1,3) pair crosses twice,
    # the s2 and s2^-1 crossings of (2,3) cancel, (1,2) never cross
    w = pure_gen(1, 3, 3)
    assert crossing_number(w, 1, 3) == 2
    assert crossing_number(w, 3, 1) == 2
    assert crossing_number(w, 2, 3) == 0
    assert crossing_number(w, 1, 2) == 0
    assert permutation(w).is_identity()
    # generally pure_gen(i, j, n) links exactly the pair (i, j)
    for n, i, j in [(4, 1, 3), (4, 2, 4), (5, 1, 5), (5, 3, 4)]:
        g = pure_gen(i, j, n)
        assert permutation(g).is_identity()
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                assert crossing_number(g, a, b) == (2 if (a, b) == (i, j) else 0)


def test_crossing_symmetry_and_additivity():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(2, 6)
        w = random_word(rng, n, rng.randint(0, 10))
        v = random_word(rng, n, rng.randint(0, 10))
        i, j = rng.sample(range(1, n + 1), 2)
        assert crossing_number(w, i, j) == crossing_number(w, j, i)
        pw = permutation(w)
        assert crossing_number(concat(w, v), i, j) == crossing_number(
            w, i, j
        ) + crossing_number(v, pw(i), pw(j))


def test_linking_block():
    # the full twist crosses every strand pair exactly twice
    for n, m in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        w = full_twist(n + m)
        assert linking_block(w, range(1, n + 1), range(n + 1, n + m + 1)) == n * m
    # a single generator acting across the blocks has odd crossing sum
    with pytest.raises(ValueError, match="odd"):
        linking_block(BraidWord(2, (1,)), {1}, {2})
    with pytest.raises(ValueError, match="overlap"):
        linking_block(BraidWord(3, ()), {1, 2}, {2, 3})
    assert linking_block(BraidWord(2, (1, 1)), {1}, {2}) == 1


def test_in_bnm():
    assert in_bnm(BraidWord(3, (1,)), 2, 1)
    assert not in_bnm(BraidWord(3, (2,)), 2, 1)
    assert in_bnm(BraidWord(3, (2, 2)), 2, 1)
    assert in_bnm(full_twist(4), 2, 2)
    with pytest.raises(ValueError, match="strands"):
        in_bnm(BraidWord(3, ()), 2, 2)


def test_rho_exponent_examples():
    # generator inside the second block: (0, 1)
    assert rho_exponents(BraidWord(4, (3,)), 2, 2) == (0, 1)
    # squared boundary generator: (1, 0)
    assert rho_exponents(BraidWord(4, (2, 2)), 2, 2) == (1, 0)
    # generator inside the first block: (0, 0)
    assert rho_exponents(BraidWord(4, (1,)), 2, 2) == (0, 0)
    with pytest.raises(ValueError, match="blocks"):
        rho_exponents(BraidWord(4, (2,)), 2, 2)


def _random_syntactic_bnm(rng, n, m, blocks):
    """A word built from the presentation generators of the block subgroup."""
    letters = []
    counts = {"a": 0, "b": 0}
    for _ in range(blocks):
        kind = rng.choice(["low", "square", "high"] if m >= 2 else ["low", "square"])
        sign = rng.choice([1, -1])
        if kind == "low" and n >= 2:
            letters.append(sign * rng.randint(1, n - 1))
        elif kind == "square":
            letters += [sign * n, sign * n]
            counts["a"] += sign
        elif kind == "high":
            k = rng.randint(n + 1, n + m - 1)
            letters.append(sign * k)
            counts["b"] += sign
    return BraidWord(n + m, tuple(letters)), counts["a"], counts["b"]


def test_rho_equals_naive_letter_count():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 4)
        m = rng.randint(1, 3)
        w, a, b = _random_syntactic_bnm(rng, n, m, rng.randint(0, 8))
        assert rho_exponents(w, n, m) == (a, b)


def test_rho_homomorphism():
    rng = random.Random(13)
    found = 0
    for _ in range(500):
        n, m = rng.randint(2, 3), rng.randint(1, 3)
        w = random_word(rng, n + m, rng.randint(0, 8))
        v = random_word(rng, n + m, rng.randint(0, 8))
        if not (in_bnm(w, n, m) and in_bnm(v, n, m)):
            continue
        found += 1
        aw, bw = rho_exponents(w, n, m)
        av, bv = rho_exponents(v, n, m)
        assert rho_exponents(concat(w, v), n, m) == (aw + av, bw + bv)
        assert rho_exponents(inverse(w), n, m) == (-aw, -bw)
    assert found > 50


def test_full_twist_shape():
    assert full_twist(2).letters == (1, 1)
    assert len(full_twist(5)) == 20
    with pytest.raises(ValueError):
        full_twist(1)


def test_free_reduce():
    assert free_reduce(BraidWord(3, (1, 2, -2, -1, 1))).letters == (1,)
    assert free_reduce(BraidWord(3, ())).letters == ()


def test_handle_reduce_basics():
    assert handle_reduce(BraidWord(3, ())).trivial
    res = handle_reduce(BraidWord(3, (1, -1)))
    assert res.trivial and res.witness.letters == ()
    res = handle_reduce(BraidWord(3, (1,)))
    assert not res.trivial
    # braid relation: s1 s2 s1 (s2 s1 s2)^-1 is trivial
    assert handle_reduce(BraidWord(3, (1, 2, 1, -2, -1, -2))).trivial
    # far-apart commutation: s1 s3 s1^-1 s3^-1 is trivial in B_5
    assert handle_reduce(BraidWord(5, (1, 3, -1, -3))).trivial


def test_handle_reduce_witness_is_sigma_definite():
    # nontrivial verdicts come with a handle-free word: its lowest index
    # occurs with only one sign, which is what certifies nontriviality
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(2, 5)
        w = random_word(rng, n, rng.randint(1, 12))
        res = handle_reduce(w)
        if res.trivial:
            assert res.witness.letters == ()
            continue
        lowest = min(abs(x) for x in res.witness.letters)
        signs = {x > 0 for x in res.witness.letters if abs(x) == lowest}
        assert len(signs) == 1


def test_handle_reduce_conjugation_and_insertion_invariance():
    rng = random.Random(515)
    for _ in range(100):
        n = rng.randint(2, 5)
        w = random_word(rng, n, rng.randint(0, 10))
        base = handle_reduce(w).trivial
        # free insertion of g g^-1 at a random spot
        spot = rng.randint(0, len(w.letters))
        g = rng.choice([1, -1]) * rng.randint(1, n - 1)
        padded = BraidWord(n, w.letters[:spot] + (g, -g) + w.letters[spot:])
        assert handle_reduce(padded).trivial == base
        # w v v^-1 stays in the same class
        v = random_word(rng, n, rng.randint(0, 6))
        assert handle_reduce(concat(concat(w, v), inverse(v))).trivial == base


def test_handle_reduce_braid_relation_rewrites():
    rng = random.Random(2718)
    for _ in range(60):
        n = rng.randint(3, 5)
        w = random_word(rng, n, rng.randint(2, 10))
        # rewrite a random s_k s_{k+1} s_k run (inserted deliberately)
        k = rng.randint(1, n - 2)
        spot = rng.randint(0, len(w.letters))
        with_abc = BraidWord(n, w.letters[:spot] + (k, k + 1, k) + w.letters[spot:])
        with_bcb = BraidWord(
            n, w.letters[:spot] + (k + 1, k, k + 1) + w.letters[spot:]
        )
        assert handle_reduce(with_abc).trivial == handle_reduce(with_bcb).trivial
        assert handle_reduce(
            concat(with_abc, inverse(with_bcb))
        ).trivial


def test_handle_reduce_budget():
    # this word needs several reductions; with budget 0 even one is too many
    w = BraidWord(3, (1, 2, -1, 2, 1, -2, -1, -2))
    assert not handle_reduce(w).trivial
    with pytest.raises(BudgetExceeded):
        handle_reduce(w, max_steps=0)


def test_word_algebra():
    w = parse_word("1 2", 3)
    assert (~w).letters == (-2, -1)
    assert (w * ~w != w) and free_reduce(w * ~w).letters == ()
    with pytest.raises(ValueError):
        concat(w, BraidWord(4, ()))
