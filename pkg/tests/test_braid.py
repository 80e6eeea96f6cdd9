"""Braid words, canonical forms, equality, positivity, conjugacy."""

import random

import pytest

from braidfact.braid import (
    BraidWord,
    Permutation,
    canonical_form,
    compose,
    conjugate,
    conjugacy_test,
    enumerate_braids,
    equals,
    exponent_sum,
    format_word,
    full_twist,
    half_twist,
    identity_word,
    invert,
    is_positive,
    normalized,
    parse_word,
    permutation_braid_letters,
    permutation_of,
)
from braidfact.errors import FormatError


def rand_word(rng, d, n):
    return BraidWord(d, tuple(rng.choice([1, -1]) * rng.randint(1, d - 1) for _ in range(n)))


def rewrite_equivalent(rng, w, steps):
    """Random sound rewrites: braid relations, far commutation, free pairs."""
    letters = list(w.letters)
    d = w.strands
    for _ in range(steps):
        kind = rng.randint(0, 3)
        if kind == 0 and len(letters) >= 3:
            # X_i X_{i+1} X_i <-> X_{i+1} X_i X_{i+1} where the pattern occurs
            spots = [
                j
                for j in range(len(letters) - 2)
                if letters[j] == letters[j + 2]
                and abs(abs(letters[j]) - abs(letters[j + 1])) == 1
                and letters[j] > 0 == (letters[j + 1] < 0) is False
                and letters[j] > 0
                and letters[j + 1] > 0
            ]
            if spots:
                j = rng.choice(spots)
                a, b = letters[j], letters[j + 1]
                letters[j : j + 3] = [b, a, b]
                continue
        if kind == 1 and len(letters) >= 2:
            spots = [
                j
                for j in range(len(letters) - 1)
                if abs(abs(letters[j]) - abs(letters[j + 1])) >= 2
            ]
            if spots:
                j = rng.choice(spots)
                letters[j], letters[j + 1] = letters[j + 1], letters[j]
                continue
        if kind == 2:
            j = rng.randint(0, len(letters))
            g = rng.choice([1, -1]) * rng.randint(1, d - 1)
            letters[j:j] = [g, -g]
            continue
        spots = [j for j in range(len(letters) - 1) if letters[j] == -letters[j + 1]]
        if spots:
            j = rng.choice(spots)
            del letters[j : j + 2]
    return BraidWord(d, tuple(letters))


def test_word_construction_checks():
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    with pytest.raises(ValueError):
        BraidWord(3, (0,))
    with pytest.raises(ValueError):
        BraidWord(0, ())
    with pytest.raises(ValueError):
        compose(BraidWord(3, (1,)), BraidWord(4, (1,)))


def test_canonical_form_anchors():
    cf = canonical_form(half_twist(3))
    assert (cf.inf, cf.canonical_length) == (1, 0)
    cf = canonical_form(full_twist(3))
    assert (cf.inf, cf.canonical_length) == (2, 0)
    cf = canonical_form(BraidWord(3, (1,)))
    assert cf.inf == 0 and [p.images for p in cf.factors] == [(2, 1, 3)]
    # to_word round trip preserves the braid
    w = BraidWord(4, (1, -2, 3, 3, -1))
    assert equals(canonical_form(w).to_word(), w)


def test_equals_relations():
    assert equals(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert equals(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))
    assert not equals(BraidWord(3, (1,)), BraidWord(3, (2,)))
    with pytest.raises(ValueError):
        equals(BraidWord(3, (1,)), BraidWord(4, (1,)))


def test_rewrites_preserve_canonical_form():
    rng = random.Random(31337)
    for _ in range(150):
        d = rng.randint(2, 6)
        w = rand_word(rng, d, rng.randint(0, 40))
        v = rewrite_equivalent(rng, w, rng.randint(1, 12))
        assert canonical_form(w) == canonical_form(v), (w, v)
        assert exponent_sum(w) == exponent_sum(v)
        assert permutation_of(w) == permutation_of(v)


def test_normalized_idempotent():
    rng = random.Random(5)
    for _ in range(80):
        d = rng.randint(2, 6)
        w = rand_word(rng, d, rng.randint(0, 30))
        nw = normalized(w)
        assert normalized(nw).letters == nw.letters
        assert equals(nw, w)


def test_full_twist_central():
    for d in range(2, 8):
        delta2 = full_twist(d)
        assert exponent_sum(delta2) == d * (d - 1)
        assert permutation_of(delta2).is_identity()
        for g in range(1, d):
            gen = BraidWord(d, (g,))
            assert equals(compose(gen, delta2), compose(delta2, gen))


def test_half_twist_squares_to_full():
    for d in range(2, 8):
        assert equals(compose(half_twist(d), half_twist(d)), full_twist(d))


def test_positivity():
    assert is_positive(BraidWord(3, (1, 2, 1)))
    assert is_positive(identity_word(3))
    assert not is_positive(BraidWord(3, (-1, 2, 1)))
    assert not is_positive(BraidWord(3, (1, -1, -1)))
    # positive destabilized form found through cancellation
    assert is_positive(BraidWord(3, (1, -1, 2)))
    rng = random.Random(11)
    for _ in range(100):
        d = rng.randint(2, 5)
        w = BraidWord(d, tuple(rng.randint(1, d - 1) for _ in range(rng.randint(0, 12))))
        assert is_positive(w)


def test_permutation_braid_letters_round_trip():
    rng = random.Random(23)
    for _ in range(100):
        d = rng.randint(2, 7)
        images = list(range(1, d + 1))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        letters = permutation_braid_letters(p)
        # the word is one permutation braid: inf 0 with the single factor p,
        # except for the identity (no factors) and the half twist (inf 1)
        cf = canonical_form(BraidWord(d, letters))
        if p.is_identity():
            assert (cf.inf, cf.factors) == (0, ())
        elif p.images == tuple(range(d, 0, -1)):
            assert (cf.inf, cf.factors) == (1, ())
        else:
            assert (cf.inf, [f.images for f in cf.factors]) == (0, [p.images])
        assert len(letters) == sum(
            1 for i in range(d) for j in range(i + 1, d) if images[i] > images[j]
        )


def test_parse_format_words():
    assert parse_word("1 2 -1", 3).letters == (1, 2, -1)
    assert parse_word("", 5).letters == ()
    assert format_word(BraidWord(3, (1, 2, -1))) == "1 2 -1"
    rng = random.Random(77)
    for _ in range(60):
        d = rng.randint(2, 6)
        w = rand_word(rng, d, rng.randint(0, 15))
        assert parse_word(format_word(w), d).letters == w.letters
    with pytest.raises(FormatError):
        parse_word("1 0 2", 3)
    with pytest.raises(FormatError):
        parse_word("3", 3)
    with pytest.raises(FormatError):
        parse_word("1 x", 3)


def test_enumerate_braids_distinct_and_ordered():
    words = enumerate_braids(2, 3)
    assert [w.letters for w in words[:3]] == [(), (-1,), (1,)]
    assert len(words) == 7  # Delta^k for |k| <= 3
    words = enumerate_braids(3, 2)
    keys = {canonical_form(w) for w in words}
    assert len(keys) == len(words) == 17
    lens = [len(w) for w in words]
    assert lens == sorted(lens)  # shortest representative first


def test_conjugacy_basics():
    b3 = lambda *ls: BraidWord(3, ls)
    res = conjugacy_test(b3(1), b3(2), 2000)
    assert res.outcome == "conjugate"
    assert equals(conjugate(b3(1), res.witness), b3(2))

    res = conjugacy_test(b3(1), b3(-1), 2000)
    assert res.outcome == "not_conjugate"
    assert "exponent" in res.reason

    res = conjugacy_test(b3(1, 1, 1), b3(2, 2, 2), 5000)
    assert res.outcome == "conjugate"
    assert equals(conjugate(b3(1, 1, 1), res.witness), b3(2, 2, 2))

    # same exponent sum, different cycle type
    res = conjugacy_test(BraidWord(4, (1, 3)), BraidWord(4, (1, 2)), 2000)
    assert res.outcome == "not_conjugate"


def test_conjugacy_disjoint_summit_sets():
    u = BraidWord(4, (1, -2, 1))
    v = BraidWord(4, (3, -1, 3))
    res = conjugacy_test(u, v, 500000)
    assert res.outcome == "not_conjugate"
    assert "summit" in res.reason
    # the same pair under a starvation budget is inconclusive, not wrong
    res = conjugacy_test(u, v, 1)
    assert res.outcome == "unknown"


def test_conjugacy_random_witnesses_verify():
    rng = random.Random(1009)
    for _ in range(40):
        d = rng.randint(2, 5)
        u = rand_word(rng, d, rng.randint(0, 8))
        z = rand_word(rng, d, rng.randint(0, 4))
        v = normalized(conjugate(u, z))
        res = conjugacy_test(u, v, 200000)
        assert res.outcome == "conjugate", (u, z)
        assert equals(conjugate(u, res.witness), v)


def test_conjugacy_input_checks():
    with pytest.raises(ValueError):
        conjugacy_test(BraidWord(3, (1,)), BraidWord(4, (1,)), 100)
    with pytest.raises(ValueError):
        conjugacy_test(BraidWord(3, (1,)), BraidWord(3, (1,)), 0)
