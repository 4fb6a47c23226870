import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmmonoid import braid_pm as bp
from pmmonoid import combinatorics as cb
from pmmonoid import garside as gs
from pmmonoid import rmonoid as rm
from pmmonoid.braid_pm import PartialBraid, PMBraid
from pmmonoid.combinatorics import IntervalPartitionSpec
from pmmonoid.words import parse_letters

from _gen import random_braid


def ev(text, n):
    return bp.evaluate_braid_letters(parse_letters(text), n)


def test_delete_strands_examples():
    assert bp.delete_strands((1,), 2, {1}) == ()
    assert bp.delete_strands((1, 1), 3, {1, 3}) == ()
    assert bp.delete_strands((1, 1), 3, {1, 2}) == (1, 1)
    w = (1, -2, 3, 1)
    assert gs.normal_form(bp.delete_strands(w, 4, range(1, 5)), 4) == gs.normal_form(w, 4)
    with pytest.raises(ValueError):
        bp.delete_strands(w, 4, ())


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_deletion_respects_concatenation(seed):
    rng = random.Random(seed)
    k = rng.randint(2, 5)
    a = tuple(rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(rng.randint(0, 6)))
    b = tuple(rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(rng.randint(0, 6)))
    keep = sorted(rng.sample(range(1, k + 1), rng.randint(1, k)))
    perm = gs.braid_permutation(a, k)
    keep_after = sorted(perm[x - 1] + 1 for x in keep)
    whole = bp.delete_strands(a + b, k, keep)
    split = bp.delete_strands(a, k, keep) + bp.delete_strands(b, k, keep_after)
    assert gs.normal_form(whole, len(keep)) == gs.normal_form(split, len(keep))


def test_partial_compose_examples():
    n = 3
    full = PartialBraid.make(n, (1, 2, 3), (1, 2, 3))
    x = PartialBraid.make(n, (1, 3), (2, 3), (-1,))
    assert bp.partial_compose(full, x) == x
    a = PartialBraid.make(n, (1,), (2,))
    b = PartialBraid.make(n, (1,), (1,))
    assert bp.partial_compose(a, b) is None
    s = PartialBraid.make(2, (1, 2), (1, 2), (1,))
    si = PartialBraid.make(2, (1, 2), (1, 2), (-1,))
    assert bp.partial_compose(s, si) == PartialBraid.make(2, (1, 2), (1, 2))


def test_pairing_follows_crossings():
    L = PartialBraid.make(4, (1, 3, 4), (1, 2, 4), (1, 2))
    # strand 1 -> slot 3, strand 2 -> slot 1, strand 3 -> slot 2 of the bottom positions
    assert L.pairing == {1: 4, 3: 1, 4: 2}


def test_identity_and_generators():
    for n in range(1, 5):
        one = bp.identity_braid(n)
        assert bp.braid_generator_e(IntervalPartitionSpec(n)) == one
        x = random_braid(random.Random(n), n)
        assert bp.braids_equal(x * one, x) and bp.braids_equal(one * x, x)
    s = bp.braid_generator_s(1, 2)
    assert bp.braids_equal(s * bp.braid_generator_s(1, 2, -1), bp.identity_braid(2))
    with pytest.raises(ValueError):
        bp.braid_generator_s(2, 2)


def test_e_generators_are_idempotent():
    for n in range(1, 5):
        for spec in cb.enumerate_interval_specs(n):
            e = bp.braid_generator_e(spec)
            assert bp.braids_equal(e * e, e)


def test_e1_times_conjugate():
    n = 2
    e1 = ev("e[1]", n)
    conj = ev("s1 e[1] s1'", n)
    assert [(L.top, L.bottom) for L in conj.layers] == [((2,), (2,)), ((1,), (1,))]
    prod = e1 * conj
    assert [(L.top, L.bottom) for L in prod.layers] == [((2,), (2,)), ((1,), (1,))]
    assert bp.project_to_r(prod) == bp.project_to_r(e1) * bp.project_to_r(conj)


def test_cancel_before_e():
    assert bp.braids_equal(ev("s1 s1' e[1]", 2), ev("e[1]", 2))


def test_literal_re4_condition_is_not_enough():
    # u v = 1 but u does not preserve the blocks of e[1]
    assert not bp.braids_equal(ev("s1 e[1] s1'", 2), ev("e[1]", 2))
    assert not bp._preserves_blocks_trivially((1,), (-1,), IntervalPartitionSpec(2, (1,)))
    # inside a block everything is absorbed
    assert bp._preserves_blocks_trivially((1,), (-1,), IntervalPartitionSpec(3, (2,)))
    assert bp.braids_equal(ev("s1 e[2] s1'", 3), ev("e[2]", 3))


def test_projection_examples():
    assert bp.project_to_r(bp.identity_braid(3)) == rm.identity_element(3)
    assert bp.project_to_r(bp.braid_generator_e(IntervalPartitionSpec(3, (2,)))) == \
        rm.parse_element("([1,2,3], ({1,2},{3}))")
    for n in range(2, 5):
        for i in range(1, n):
            for sign in (1, -1):
                assert bp.project_to_r(bp.braid_generator_s(i, n, sign)) == rm.generator_s(i, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projection_is_multiplicative(n):
    rng = random.Random(40 + n)
    for _ in range(200):
        x, y = random_braid(rng, n), random_braid(rng, n)
        assert bp.project_to_r(x * y) == bp.project_to_r(x) * bp.project_to_r(y)


def test_projection_onto_all_of_r3():
    rng = random.Random(3)
    seen = set()
    for _ in range(3000):
        seen.add(bp.project_to_r(random_braid(rng, 3, max_length=8)))
        if len(seen) == 78:
            break
    assert seen == set(rm.all_elements(3))


def test_braids_equal_examples():
    x = ev("s1 e[1] s2'", 3)
    alt = PMBraid(3, tuple(PartialBraid(3, L.top, L.bottom, L.word + (1, -1)) if L.k > 1 else L
                           for L in x.layers))
    assert bp.braids_equal(x, alt)
    y = ev("e[1]", 3)
    swapped = PMBraid(3, tuple(reversed(y.layers)))
    assert not bp.braids_equal(y, swapped)
    assert bp.braids_equal(ev("s1 s2 s1", 3), ev("s2 s1 s2", 3))
    assert not bp.braids_equal(ev("s1", 3), ev("s1'", 3))


def test_product_associativity():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(1, 4)
        a, b, c = (random_braid(rng, n) for _ in range(3))
        assert bp.braids_equal((a * b) * c, a * (b * c))


def test_invalid_braids():
    with pytest.raises(ValueError):
        PMBraid(2, (PartialBraid.make(2, (1,), (1,)),))
    with pytest.raises(ValueError):
        PartialBraid.make(3, (1, 2), (3,))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_braid_relations(n):
    rep = bp.verify_braid_relations(n, word_bound=3)
    assert rep.ok, rep.failures[:5]
    if n == 3:
        assert rep.checked["re4-"] > 0 and rep.checked["re5-"] > 0
