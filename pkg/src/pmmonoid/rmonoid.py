"""
The monoid R_n = S_n x P_n with the matched-pair product

    (b, s)(c, t) = (b c, phi_c(s) * t),

where ``phi_c`` takes preimages of blocks under c and ``*`` is the ordered
set partition product. The pair (w, p) is a normal form, so the word problem
is solved by evaluation.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import combinatorics as cb
from .combinatorics import (
    IntervalPartitionSpec,
    OrderedSetPartition,
    Permutation,
    SizeMismatchError,
)
from .report import Report
from .words import E, S, Letter, check_letters, format_letters, parse_letters


@dataclass(frozen=True, slots=True)
class RElement:
    w: Permutation
    p: OrderedSetPartition

    def __post_init__(self):
        if self.w.n != self.p.n:
            raise SizeMismatchError(f"permutation on {self.w.n} points with partition of {self.p.n}")

    @property
    def n(self) -> int:
        return self.w.n

    def __mul__(self, other: RElement) -> RElement:
        return r_product(self, other)

    def __str__(self):
        return format_element(self)


@dataclass(frozen=True)
class RWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        check_letters(self.letters, self.n)

    @classmethod
    def parse(cls, n: int, text: str) -> RWord:
        return cls(n, parse_letters(text))

    def __str__(self):
        return format_letters(self.letters)


def identity_element(n: int) -> RElement:
    return RElement(cb.identity(n), cb.one_block(n))


def r_product(a: RElement, b: RElement) -> RElement:
    if a.n != b.n:
        raise SizeMismatchError(f"size mismatch: {a.n} != {b.n}")
    return RElement(cb.compose(a.w, b.w), cb.partition_product(cb.apply_to_partition(b.w, a.p), b.p))


def generator_s(i: int, n: int) -> RElement:
    return RElement(cb.transposition(i, n), cb.one_block(n))


def generator_e(spec: IntervalPartitionSpec) -> RElement:
    return RElement(cb.identity(spec.n), cb.interval_partition(spec))


def letter_element(letter: Letter, n: int) -> RElement:
    # s_i is an involution here, so the sign of a braid letter is forgotten
    if isinstance(letter, S):
        return generator_s(letter.i, n)
    return generator_e(IntervalPartitionSpec(n, letter.cuts))


def evaluate_letters(letters: Iterable[Letter], n: int) -> RElement:
    x = identity_element(n)
    for letter in letters:
        x = r_product(x, letter_element(letter, n))
    return x


def evaluate_word(word: RWord) -> RElement:
    return evaluate_letters(word.letters, word.n)


def ad(sigma: RElement, e: RElement) -> RElement:
    """``Ad(sigma)(e) = sigma^-1 e sigma`` for a unit sigma and an idempotent-shaped e."""
    if len(sigma.p) != 1:
        raise ValueError("ad: sigma must have the one-block partition")
    if not e.w.is_identity():
        raise ValueError("ad: e must have the identity permutation")
    sigma_inv = RElement(cb.inverse(sigma.w), sigma.p)
    return r_product(r_product(sigma_inv, e), sigma)


def perm_word_element(indices: Sequence[int], n: int) -> RElement:
    return evaluate_letters([S(i) for i in indices], n)


# -- text forms -------------------------------------------------------------

def format_element(x: RElement) -> str:
    return f"({cb.format_permutation(x.w)}, {cb.format_partition(x.p)})"


def parse_element(text: str) -> RElement:
    m = re.fullmatch(r"\s*\(\s*(\[[^\]]*\])\s*,\s*(\(.*\))\s*\)\s*", text)
    if not m:
        raise ValueError(f"cannot parse element: {text!r}")
    return RElement(cb.parse_permutation(m.group(1)), cb.parse_partition(m.group(2)))


# -- enumeration --------------------------------------------------------------

def generators(n: int) -> list[RElement]:
    gens = [generator_s(i, n) for i in range(1, n)]
    gens += [generator_e(spec) for spec in cb.enumerate_interval_specs(n)]
    return gens


def enumerate_monoid(n: int, bound: int = cb.DEFAULT_ENUMERATION_BOUND) -> set[RElement]:
    """Closure of the generators under right multiplication."""
    if n > bound:
        raise cb.BoundExceededError(f"n={n} exceeds enumeration bound {bound}")
    gens = generators(n)
    seen = {identity_element(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = r_product(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def all_elements(n: int, bound: int = cb.DEFAULT_ENUMERATION_BOUND) -> list[RElement]:
    """S_n x P_n by direct enumeration, in a fixed order."""
    return [RElement(w, p) for w in cb.enumerate_permutations(n, bound)
            for p in cb.enumerate_partitions(n, bound)]


def cayley_table(elements: Sequence, product: Callable = r_product) -> np.ndarray:
    index = {x: k for k, x in enumerate(elements)}
    size = len(elements)
    table = np.empty((size, size), dtype=np.int64)
    for a, x in enumerate(elements):
        for b, y in enumerate(elements):
            table[a, b] = index[product(x, y)]
    return table


def table_associativity_failures(table: np.ndarray) -> np.ndarray:
    """Index triples (a, b, c) with (ab)c != a(bc), checked over the full cube."""
    left = table[table]                          # left[a, b, c] = T[T[a, b], c]
    right = table[np.arange(len(table))[:, None, None], table[None, :, :]]
    return np.argwhere(left != right)


# -- verification suites ------------------------------------------------------

def _default_left(s, b):
    return b


def _default_right(s, b):
    return cb.apply_to_partition(b, s)


def verify_matched_pair_axioms(
    n: int,
    left: Callable = _default_left,
    right: Callable = _default_right,
) -> Report:
    """
    Instantiate the eight matched-pair axioms for S = P_n, B = S_n.

    ``left(s, b)`` is the action s -> b and ``right(s, b)`` the action s <- b;
    they default to (b, phi_b(s)). Passing other callables lets a test
    corrupt the action and watch the report catch it.
    """
    rep = Report("matched-pair")
    S_ = cb.enumerate_partitions(n)
    B_ = cb.enumerate_permutations(n)
    one_s, one_b = cb.one_block(n), cb.identity(n)
    smul, bmul = cb.partition_product, cb.compose
    fmt = lambda *xs: " ".join(str(x) for x in xs)

    for s, t, b in itertools.product(S_, S_, B_):
        rep.record("1", fmt(s, t, b), left(s, left(t, b)) == left(smul(s, t), b))
        rep.record("2", fmt(s, t, b),
                   right(smul(s, t), b) == smul(right(s, left(t, b)), right(t, b)))
    for s, b, c in itertools.product(S_, B_, B_):
        rep.record("3", fmt(s, b, c), right(right(s, b), c) == right(s, bmul(b, c)))
        rep.record("4", fmt(s, b, c),
                   left(s, bmul(b, c)) == bmul(left(s, b), left(right(s, b), c)))
    for b in B_:
        rep.record("5", fmt(b), left(one_s, b) == b)
        rep.record("8", fmt(b), right(one_s, b) == one_s)
    for s in S_:
        rep.record("6", fmt(s), left(s, one_b) == one_b)
        rep.record("7", fmt(s), right(s, one_b) == s)
    return rep


def _words_upto(letters: Sequence[int], lo: int, hi: int):
    for r in range(lo, hi + 1):
        yield from itertools.product(letters, repeat=r)


def _split_condition(i: int, spec: IntervalPartitionSpec) -> bool:
    """{i, i+1} is not inside any block of the interval partition."""
    return cb.i_star(i, spec) is None


def re5_sides(k: IntervalPartitionSpec, word: Sequence[int], l: IntervalPartitionSpec):
    """
    Both sides of the fifth relation family, as letter sequences.

    Left: e_k s_{i_1} ... s_{i_r} e_l. Right: Ad(s_{j_1}...s_{j_t})(e_q) s_{i_1}...s_{i_r},
    with q = u^{s_j...}(k * phi_{(s_i...)^-1}(l)) and s_j... the reduced word
    of the canonical standardizing permutation.
    """
    n = k.n
    sigma = perm_word_element(word, n).w
    inner = cb.partition_product(cb.interval_partition(k),
                                 cb.apply_to_partition(cb.inverse(sigma), cb.interval_partition(l)))
    tau, q = cb.standardize(inner)
    jword = cb.reduced_word(tau)
    lhs = (E(k.cuts), *(S(i) for i in word), E(l.cuts))
    # Ad(x)(e) = x^-1 e x; s_j are involutions so x^-1 is the reversed word
    rhs = (*(S(j) for j in reversed(jword)), E(q.cuts), *(S(j) for j in jword), *(S(i) for i in word))
    return lhs, rhs, jword


def verify_presentation_relations(n: int, word_bound: int = 4) -> Report:
    """
    Evaluate both sides of every bounded instance of the five relation families.

    The fifth family quantifies over words s_{i_1}...s_{i_r}; r runs over
    1..word_bound. Its side condition is read strictly (every i_t splits the
    blocks of k, relation id ``re5``) and permissively (only i_1 does, extra
    instances recorded under ``re5-permissive``); both must hold in the model.
    """
    rep = Report("relations-r")
    ev = lambda letters: evaluate_letters(letters, n)
    idx = range(1, n)
    specs = cb.enumerate_interval_specs(n)

    for i in idx:
        rep.record("re1", f"s{i} s{i}", ev([S(i), S(i)]) == identity_element(n))
    for i, j in itertools.product(idx, idx):
        if abs(i - j) >= 2:
            rep.record("re2", f"s{i} s{j}", ev([S(i), S(j)]) == ev([S(j), S(i)]))
    for i in range(1, n - 1):
        rep.record("re3", f"s{i} s{i + 1} s{i}",
                   ev([S(i), S(i + 1), S(i)]) == ev([S(i + 1), S(i), S(i + 1)]))
    for i in idx:
        for k in specs:
            if cb.i_star(i, k) is not None:
                rep.record("re4", f"{E(k.cuts)} s{i}", ev([E(k.cuts), S(i)]) == ev([S(i), E(k.cuts)]))

    for k in specs:
        for word in _words_upto(list(idx), 1, word_bound):
            if not _split_condition(word[0], k):
                continue
            strict = all(_split_condition(i, k) for i in word)
            rel = "re5" if strict else "re5-permissive"
            for l in specs:
                lhs, rhs, _ = re5_sides(k, word, l)
                rep.record(rel, format_letters(lhs) + " = " + format_letters(rhs), ev(lhs) == ev(rhs))
    return rep
