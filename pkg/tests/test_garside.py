import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmmonoid import garside as gs
from pmmonoid.outer_action import act_word


def artin_images(word, k):
    """The Artin representation is faithful, so this decides braid equality independently."""
    return act_word(word, k).images()


def random_word(rng, k, length):
    return tuple(rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(length))


def scramble(rng, word, k, steps=6):
    """Rewrite ``word`` by random applications of the defining relations."""
    w = list(word)
    for _ in range(steps):
        pos = rng.randint(0, len(w))
        i = rng.randint(1, k - 1)
        choice = rng.random()
        if choice < 0.4:
            w[pos:pos] = [i, -i] if rng.random() < 0.5 else [-i, i]
        elif choice < 0.7 and i < k - 1:
            w[pos:pos] = [i, i + 1, i, -(i + 1), -i, -(i + 1)]
        else:
            j = rng.randint(1, k - 1)
            if abs(i - j) >= 2:
                w[pos:pos] = [i, j, -i, -j]
    return tuple(w)


def test_free_cancellation_is_identity():
    assert gs.normal_form((1, -1), 2).is_identity()
    assert gs.canonical_word((2, -2, 1, -1), 3) == ()


def test_braid_relation():
    assert gs.normal_form((1, 2, 1), 3) == gs.normal_form((2, 1, 2), 3)
    assert gs.normal_form((1, 2, 1), 3).inf == 1


def test_far_commutation():
    assert gs.normal_form((1, 3), 4) == gs.normal_form((3, 1), 4)
    assert gs.normal_form((1, 2), 3) != gs.normal_form((2, 1), 3)


def test_delta_squared_is_central():
    rng = random.Random(1)
    k = 4
    d2 = gs.simple_word(gs._delta(k)) * 2
    for _ in range(50):
        w = random_word(rng, k, rng.randint(0, 8))
        assert gs.normal_form(d2 + w, k) == gs.normal_form(w + d2, k)


def test_inverse_word():
    rng = random.Random(4)
    for _ in range(100):
        k = rng.randint(2, 5)
        w = random_word(rng, k, rng.randint(0, 10))
        assert gs.normal_form(w + gs.inverse_word(w), k).is_identity()


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_relation_scrambles_have_equal_forms(k):
    rng = random.Random(k)
    for _ in range(250):
        w = random_word(rng, k, rng.randint(0, 8))
        v = scramble(rng, w, k)
        assert gs.normal_form(w, k) == gs.normal_form(v, k)
        r = random_word(rng, k, rng.randint(1, 5))
        assert gs.normal_form(w + r + gs.inverse_word(r), k) == gs.normal_form(w, k)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_agrees_with_artin_oracle(k):
    rng = random.Random(100 + k)
    same = differ = 0
    for _ in range(400):
        a = random_word(rng, k, rng.randint(0, 6))
        b = scramble(rng, a, k) if rng.random() < 0.5 else random_word(rng, k, rng.randint(0, 6))
        nf_equal = gs.normal_form(a, k) == gs.normal_form(b, k)
        assert nf_equal == (artin_images(a, k) == artin_images(b, k)), (a, b)
        same += nf_equal
        differ += not nf_equal
    assert same > 50 and differ > 50


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 5), st.lists(st.integers(-4, 4).filter(bool), max_size=12))
def test_canonical_word_is_idempotent(k, raw):
    w = tuple(x for x in raw if abs(x) < k)
    c = gs.canonical_word(w, k)
    assert gs.canonical_word(c, k) == c
    assert gs.normal_form(c, k) == gs.normal_form(w, k)
    assert artin_images(c, k) == artin_images(w, k)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 5), st.lists(st.integers(-4, 4).filter(bool), max_size=12))
def test_permutation_of_normal_form(k, raw):
    w = tuple(x for x in raw if abs(x) < k)
    assert gs.normal_form(w, k).permutation() == gs.braid_permutation(w, k)


def test_simple_word_round_trip():
    for perm in itertools.permutations(range(4)):
        word = gs.simple_word(perm)
        assert gs.braid_permutation(word, 4) == perm
        assert all(x > 0 for x in word)


def test_out_of_range_letter():
    with pytest.raises(ValueError):
        gs.normal_form((3,), 3)
    with pytest.raises(ValueError):
        gs.normal_form((1,), 1)
    assert gs.normal_form((), 1).is_identity()
