"""Complement-group presentations, Tietze moves, homs, coset enumeration."""

import itertools
import random

import pytest

from braidfact.braid import BraidWord, full_twist
from braidfact.complement import (
    FinitePresentation,
    FreeWord,
    artin_action,
    enumerate_homs,
    format_homs,
    format_presentation,
    group_order,
    parse_presentation,
    simplify,
    zvk_presentation,
)
from braidfact.errors import FormatError
from braidfact.factorization import (
    CuspidalFactor,
    Factorization,
    hurwitz_move,
    search_factorization,
)


def cuspidal(d, *pairs):
    factors = tuple(CuspidalFactor(BraidWord(d, rho), s) for rho, s in pairs)
    return Factorization(d, factors, full_twist(d))


CONIC = cuspidal(2, ((), 1), ((), 1))
CUBIC = cuspidal(3, ((), 1), ((-2,), 1), ((2,), 1), ((), 3))

TREFOIL = FinitePresentation(2, (FreeWord((1, 2, 1, -2, -1, -2)),))
S3_PRES = FinitePresentation(2, (FreeWord((1, 1)), FreeWord((2, 2)), FreeWord((1, 2) * 3)))
QUATERNION = FinitePresentation(
    2, (FreeWord((1,) * 4), FreeWord((1, 1, -2, -2)), FreeWord((-2, 1, 2, 1)))
)
METACYCLIC_12 = FinitePresentation(
    2, (FreeWord((1, 1, 1)), FreeWord((2, 2, 2, 2)), FreeWord((-2, 1, 2, 1)))
)


def test_free_word_reduction():
    assert FreeWord((1, -1)).letters == ()
    assert FreeWord((1, 2, -2, -1, 3)).letters == (3,)
    assert FreeWord((1, 2, 1)).inverse().letters == (-1, -2, -1)
    assert (FreeWord((1, 2)) * FreeWord((-2, 3))).letters == (1, 3)
    assert FreeWord((-2, 1, 2)).cyclically_reduced().letters == (1,)
    with pytest.raises(ValueError):
        FreeWord((0,))


def test_artin_action_generator_rules():
    x1, x2, x3 = FreeWord((1,)), FreeWord((2,)), FreeWord((3,))
    s1 = BraidWord(3, (1,))
    assert artin_action(s1, x1).letters == (1, 2, -1)
    assert artin_action(s1, x2).letters == (1,)
    assert artin_action(s1, x3).letters == (3,)
    s1inv = BraidWord(3, (-1,))
    assert artin_action(s1inv, x1).letters == (2,)
    assert artin_action(s1inv, x2).letters == (-2, 1, 2)
    # inverse letters of the free word map to inverse images
    assert artin_action(s1, x1.inverse()).letters == (1, -2, -1)


def test_artin_action_is_an_action():
    rng = random.Random(2)
    for _ in range(100):
        d = rng.randint(2, 5)
        u = FreeWord(tuple(rng.choice([1, -1]) * rng.randint(1, d) for _ in range(6)))
        w1 = BraidWord(d, tuple(rng.choice([1, -1]) * rng.randint(1, d - 1) for _ in range(4)))
        w2 = BraidWord(d, tuple(rng.choice([1, -1]) * rng.randint(1, d - 1) for _ in range(4)))
        composite = BraidWord(d, w1.letters + w2.letters)
        assert artin_action(composite, u) == artin_action(w2, artin_action(w1, u))


def test_artin_action_respects_braid_relations():
    for d in (3, 4):
        lhs = BraidWord(d, (1, 2, 1))
        rhs = BraidWord(d, (2, 1, 2))
        for j in range(1, d + 1):
            x = FreeWord((j,))
            assert artin_action(lhs, x) == artin_action(rhs, x)
    far1 = BraidWord(4, (1, 3))
    far2 = BraidWord(4, (3, 1))
    for j in range(1, 5):
        assert artin_action(far1, FreeWord((j,))) == artin_action(far2, FreeWord((j,)))


def test_full_twist_acts_by_one_global_conjugation():
    # the same word c = x_1 x_2 ... x_d conjugates every generator
    for d in range(2, 6):
        c = FreeWord(tuple(range(1, d + 1)))
        for j in range(1, d + 1):
            got = artin_action(full_twist(d), FreeWord((j,)))
            assert got == c * FreeWord((j,)) * c.inverse(), (d, j)


def test_zvk_presentation_shapes():
    P = zvk_presentation(CONIC)
    assert P.ngens == 2
    assert [r.letters for r in P.relators] == [(1, -2), (1, -2), (2, 1)]

    # a trivial-conjugator s=2 factor contributes the plain commutator
    nodal = search_factorization(3, (2, 2, 2), 2)
    P3 = zvk_presentation(nodal)
    assert P3.ngens == 3
    assert P3.relators[0].letters == (1, 2, -1, -2)
    assert P3.relators[-1].letters == (3, 2, 1)

    # CUBIC's last factor is (rho empty, s=3): the plain cusp relator
    Pc = zvk_presentation(CUBIC)
    assert Pc.relators[3].letters == (1, 2, 1, -2, -1, -2)


def test_zvk_requires_validation_and_cuspidal_form():
    with pytest.raises(ValueError):
        zvk_presentation(cuspidal(2, ((), 1)))
    plain = Factorization(2, (BraidWord(2, (1,)), BraidWord(2, (1,))), full_twist(2))
    with pytest.raises(ValueError):
        zvk_presentation(plain)


def test_simplify_conic_to_one_generator():
    P = simplify(zvk_presentation(CONIC))
    assert P.ngens == 1
    assert [r.letters for r in P.relators] == [(1, 1)]


def test_simplify_cubic_witness():
    P = simplify(zvk_presentation(CUBIC))
    assert P.ngens == 1
    assert [r.letters for r in P.relators] == [(1, 1, 1)]


def test_simplify_preserves_hom_counts():
    rng = random.Random(17)
    for _ in range(25):
        ngens = rng.randint(1, 3)
        relators = tuple(
            FreeWord(tuple(rng.choice([1, -1]) * rng.randint(1, ngens) for _ in range(rng.randint(1, 6))))
            for _ in range(rng.randint(0, 3))
        )
        P = FinitePresentation(ngens, relators)
        Q = simplify(P)
        for n in (2, 3):
            assert len(enumerate_homs(P, n, up_to_conjugacy=False)) == len(
                enumerate_homs(Q, n, up_to_conjugacy=False)
            ), (P, Q, n)


def naive_hom_count(P, n):
    perms = list(itertools.permutations(range(1, n + 1)))

    def ev(r, images):
        cur = tuple(range(1, n + 1))
        for k in r.letters:
            p = images[abs(k) - 1]
            if k < 0:
                inv = [0] * n
                for x, y in enumerate(p, start=1):
                    inv[y - 1] = x
                p = tuple(inv)
            cur = tuple(p[c - 1] for c in cur)
        return cur

    count = 0
    for choice in itertools.product(perms, repeat=P.ngens):
        if all(ev(r, choice) == tuple(range(1, n + 1)) for r in P.relators):
            count += 1
    return count


def test_enumerate_homs_matches_naive_product():
    rng = random.Random(3)
    presentations = [
        TREFOIL,
        S3_PRES,
        FinitePresentation(1, (FreeWord((1, 1, 1)),)),
        FinitePresentation(2, ()),
    ]
    for _ in range(10):
        ngens = rng.randint(1, 2)
        rel = tuple(
            FreeWord(tuple(rng.choice([1, -1]) * rng.randint(1, ngens) for _ in range(rng.randint(1, 5))))
            for _ in range(rng.randint(0, 2))
        )
        presentations.append(FinitePresentation(ngens, rel))
    for P in presentations:
        for n in (2, 3, 4):
            got = len(enumerate_homs(P, n, up_to_conjugacy=False))
            assert got == naive_hom_count(P, n), (P, n)


def test_enumerate_homs_conjugacy_classes():
    # trefoil group onto S_3: six epimorphisms forming one class
    epis = enumerate_homs(TREFOIL, 3, up_to_conjugacy=False, epi_only=True)
    assert len(epis) == 6
    classes = enumerate_homs(TREFOIL, 3, up_to_conjugacy=True, epi_only=True)
    assert len(classes) == 1
    assert classes[0].epi
    assert all(sorted(p.images) == [1, 2, 3] for p in classes[0].images)


def test_enumerate_homs_is_deterministic_and_sorted():
    a = enumerate_homs(S3_PRES, 3)
    b = enumerate_homs(S3_PRES, 3)
    assert a == b
    assert a == sorted(a, key=lambda h: tuple(p.images for p in h.images))


def test_enumerate_homs_caps():
    with pytest.raises(ValueError):
        enumerate_homs(TREFOIL, 8)
    with pytest.raises(ValueError):
        enumerate_homs(FinitePresentation(9, ()), 2)


def test_group_order_oracles():
    assert group_order(FinitePresentation(1, (FreeWord((1,)),))) == 1
    assert group_order(FinitePresentation(0, ())) == 1
    assert group_order(FinitePresentation(1, (FreeWord((1, 1, 1)),))) == 3
    assert group_order(S3_PRES) == 6
    assert group_order(QUATERNION) == 8
    assert group_order(METACYCLIC_12) == 12
    for n in range(1, 7):
        assert group_order(FinitePresentation(1, (FreeWord((1,) * n),))) == n


def test_group_order_sandwich_s3():
    # coset count and an S_3 epimorphism pin the group exactly
    assert group_order(S3_PRES) == 6
    assert len(enumerate_homs(S3_PRES, 3, epi_only=True)) >= 1


def test_group_order_infinite_returns_none():
    assert group_order(TREFOIL, budget=3000) is None
    assert group_order(FinitePresentation(1, ())) is None  # the integers
    assert group_order(FinitePresentation(2, (FreeWord((1, 2, -1, -2)),)), budget=2000) is None


def test_group_order_budget_starvation_is_none_not_wrong():
    assert group_order(METACYCLIC_12, budget=3) is None


def test_pipeline_orders():
    assert group_order(zvk_presentation(CONIC)) == 2
    assert group_order(zvk_presentation(CUBIC)) == 3


def test_hom_counts_invariant_under_hurwitz_moves():
    rng = random.Random(41)
    for _ in range(20):
        F = CUBIC
        for _ in range(rng.randint(1, 3)):
            F = hurwitz_move(F, rng.randint(1, F.r - 1), rng.choice(("left", "right")))
        P, Q = zvk_presentation(CUBIC), zvk_presentation(F)
        for n in (2, 3, 4):
            assert len(enumerate_homs(P, n, up_to_conjugacy=False)) == len(
                enumerate_homs(Q, n, up_to_conjugacy=False)
            )


def test_presentation_format_round_trip():
    for P in (TREFOIL, S3_PRES, METACYCLIC_12, zvk_presentation(CUBIC)):
        text = format_presentation(P)
        Q = parse_presentation(text)
        assert Q == P
        assert format_presentation(Q) == text


def test_parse_presentation_rejects_malformed():
    with pytest.raises(FormatError):
        parse_presentation("")
    with pytest.raises(FormatError):
        parse_presentation("x\n1 2\n")
    with pytest.raises(FormatError):
        parse_presentation("2\n1 3\n")  # generator out of range
    with pytest.raises(FormatError):
        parse_presentation("2\n1 0\n")


def test_format_homs_cycle_notation():
    homs = enumerate_homs(S3_PRES, 3, epi_only=True)
    text = format_homs(homs)
    assert "(1 2)" in text
    assert text.endswith("\n")
