import random
from collections import Counter

import pytest

from pmmonoid import braid_pm as bp
from pmmonoid import outer_action as oa
from pmmonoid import serialize as io
from pmmonoid.combinatorics import IntervalPartitionSpec
from pmmonoid.outer_action import Layer, LayeredAut
from pmmonoid.words import parse_letters

from _gen import random_aut, random_braid


def act(text, n):
    return oa.artin_action(bp.evaluate_braid_letters(parse_letters(text), n))


def images(f):
    return [L.images() for L in f.layers]


def test_reduce_and_kill():
    assert oa.reduce((1, -1, 2)) == (2,)
    assert oa.reduce((1, 2, -2, -1, 3)) == (3,)
    assert oa.kill((1, 2, -1), {2}) == ()
    w = (1, 2, -2, 3)
    assert oa.kill(w, set()) == oa.reduce(w)
    assert oa.keep_only((1, 2, -1, 3), {1, 3}) == (3,)


def test_word_text():
    assert oa.parse_word("u1 u2 u1'") == (1, 2, -1)
    assert oa.format_word((1, 2, -1)) == "u1 u2 u1'"
    with pytest.raises(ValueError):
        oa.parse_word("x1")


def test_artin_generators():
    f = act("s1", 2)
    assert images(f) == [{1: (1, 2, -1), 2: (1,)}]
    g = act("s1'", 2)
    assert images(g) == [{1: (2,), 2: (-2, 1, 2)}]
    assert images(oa.compose_layered(f, g)) == images(oa.identity_aut(2))
    assert images(oa.compose_layered(g, f)) == images(oa.identity_aut(2))


def test_artin_of_identity_and_e():
    assert images(oa.artin_action(bp.identity_braid(3))) == images(oa.identity_aut(3))
    f = act("e[1]", 2)
    assert [(L.domain, L.image) for L in f.layers] == [((1,), (1,)), ((2,), (2,))]
    assert images(f) == [{1: (1,)}, {2: (2,)}]


def test_compose_with_identity():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(1, 4)
        g = random_aut(rng, n)
        assert oa.compose_layered(oa.identity_aut(n), g) == g
        assert oa.equivalent(oa.compose_layered(g, oa.identity_aut(n)), g)


def test_layer_kill_by_hand():
    # e[1] then s1: u1 -> u1 u2 u1^-1 loses u1 in the {1} layer, leaving u1 -> u2
    h = oa.compose_layered(act("e[1]", 2), act("s1", 2))
    assert images(h) == [{1: (2,)}, {2: (1,)}]
    assert oa.equivalent(h, act("e[1] s1", 2))


def test_equivalence_examples():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 4)
        f = random_aut(rng, n, conjugate=False)
        assert oa.equivalent(f, f)
        assert all(oa.layer_conjugator(L, L) == () for L in f.layers)
        by_first = [(L.assignment[0][1],) for L in f.layers]
        assert oa.equivalent(f, oa.conjugate_layers(f, by_first))


def test_changed_target_is_not_equivalent():
    f = act("s1 s2", 3)
    L = f.layers[0]
    a = {i: (t, w) for i, t, w in L.assignment}
    i1, i2 = L.domain[0], L.domain[1]
    a[i1], a[i2] = (a[i2][0], a[i1][1]), (a[i1][0], a[i2][1])
    g = LayeredAut(3, (Layer.make({i: (t, oa.keep_only(w, L.image)) for i, (t, w) in a.items()}),))
    assert not oa.equivalent(f, g)


def test_equivalence_is_an_equivalence_relation():
    rng = random.Random(12)
    for _ in range(100):
        n = rng.randint(2, 4)
        f = random_aut(rng, n, conjugate=False)
        cs = lambda: [oa.reduce(rng.choice(L.image) * rng.choice((1, -1)) for _ in range(3)) for L in f.layers]
        g = oa.conjugate_layers(f, cs())
        h = oa.conjugate_layers(g, cs())
        assert oa.equivalent(f, g) and oa.equivalent(g, f)
        assert oa.equivalent(g, h) and oa.equivalent(f, h)


def test_compose_associative_up_to_equivalence():
    rng = random.Random(21)
    for _ in range(200):
        n = rng.randint(1, 4)
        f, g, h = (random_aut(rng, n) for _ in range(3))
        lhs = oa.compose_layered(oa.compose_layered(f, g), h)
        rhs = oa.compose_layered(f, oa.compose_layered(g, h))
        assert oa.equivalent(lhs, rhs)


def test_composition_respects_equivalence():
    rng = random.Random(22)
    for _ in range(100):
        n = rng.randint(2, 4)
        f = random_aut(rng, n, conjugate=False)
        g = random_aut(rng, n, conjugate=False)
        f2 = oa.conjugate_layers(f, [(L.image[-1],) for L in f.layers])
        assert oa.equivalent(oa.compose_layered(f, g), oa.compose_layered(f2, g))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_boundary_word_fixed(n):
    rng = random.Random(n)
    boundary = tuple(range(1, n + 1))
    for _ in range(100):
        letters = [x for x in bp.random_letters(n, rng.randint(0, 8), rng, e_prob=0.0)]
        f = oa.artin_action(bp.evaluate_braid_letters(letters, n))
        assert oa.boundary_word(f) == boundary


def test_abelianization_is_a_permutation():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(2, 5)
        f = oa.artin_action(random_braid(rng, n))
        for L in f.layers:
            sums = []
            for i, w in L.images().items():
                c = Counter()
                for x in w:
                    c[abs(x)] += 1 if x > 0 else -1
                sums.append(tuple(sorted((k, v) for k, v in c.items() if v)))
            targets = [s[0][0] for s in sums]
            assert all(len(s) == 1 and s[0][1] == 1 for s in sums)
            assert sorted(targets) == list(L.image)


def test_homomorphism_on_pure_braids_n2():
    rng = random.Random(0)
    for _ in range(200):
        a = bp.random_letters(2, rng.randint(0, 6), rng, e_prob=0.0)
        b = bp.random_letters(2, rng.randint(0, 6), rng, e_prob=0.0)
        x, y = bp.evaluate_braid_letters(a, 2), bp.evaluate_braid_letters(b, 2)
        assert oa.equivalent(oa.artin_action(x * y),
                             oa.compose_layered(oa.artin_action(x), oa.artin_action(y)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dnb_suite(n):
    rep = oa.verify_dnb_homomorphism(n, samples=150, seed=n)
    assert rep.ok, rep.failures[:5]
    assert rep.checked["homomorphism"] == 150


def _dropped_conjugation(k, letter):
    i = abs(letter)
    pairs = {j: (j, ()) for j in range(1, k + 1)}
    pairs[i], pairs[i + 1] = (i + 1, ()), (i, ())
    return Layer.make(pairs)


def test_corrupted_rule_is_caught():
    rep = oa.verify_dnb_homomorphism(3, samples=200, seed=1, rule=_dropped_conjugation)
    assert not rep.ok
    assert any("relation=boundary" in f for f in rep.failures)


def test_json_round_trip():
    f = act("s1 e[2] s2'", 3)
    assert io.aut_from_json(io.aut_to_json(f)) == f
    with pytest.raises(io.FormatError):
        io.aut_from_json({"rank": 2})


def test_invalid_layers():
    with pytest.raises(ValueError):
        Layer.make({1: (1, (2,))})
    with pytest.raises(ValueError):
        LayeredAut(2, (Layer.make({1: (1, ())}),))
    with pytest.raises(ValueError):
        oa.boundary_word(act("e[1]", 2))
    with pytest.raises(ValueError):
        oa.compose_layered(oa.identity_aut(2), oa.identity_aut(3))
