"""
Layered partial braids.

A ``PartialBraid`` is a braid on k strands whose strands start at the
positions ``top`` and end at the positions ``bottom`` of {1..n}. A
``PMBraid`` is an ordered sequence of such layers whose tops partition
{1..n}, as do their bottoms.

In a product ``x * y`` the braid x sits above y. Layer (i, j) of the
product is layer i of x stacked on layer j of y with every strand that
fails to run all the way through deleted; layers are listed with i varying
fastest and empty ones dropped.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import combinatorics as cb
from . import rmonoid as rm
from .combinatorics import IntervalPartitionSpec, SizeMismatchError
from .garside import braid_permutation, canonical_word, inverse_word, normal_form
from .report import Report
from .words import E, S, Letter, check_letters, format_letters


def delete_strands(word: Sequence[int], k: int, keep: Iterable[int]) -> tuple[int, ...]:
    """
    The braid induced on the strands starting at the 1-based positions ``keep``.

    Each crossing is tracked by the identities of its two strands; crossings
    touching a deleted strand are dropped and the rest renumbered among the
    surviving strands.

    >>> delete_strands((1, 1), 3, {1, 3}), delete_strands((1, 1), 3, {1, 2})
    ((), (1, 1))
    """
    keep = {x - 1 for x in keep}
    if not keep:
        raise ValueError("keep must be nonempty")
    if not keep <= set(range(k)):
        raise ValueError("keep is out of range")
    at = list(range(k))
    out = []
    for x in word:
        i = abs(x) - 1
        a, b = at[i], at[i + 1]
        if a in keep and b in keep:
            rank = sum(1 for p in range(i) if at[p] in keep)
            out.append((rank + 1) * (1 if x > 0 else -1))
        at[i], at[i + 1] = b, a
    return tuple(out)


@dataclass(frozen=True, slots=True)
class PartialBraid:
    n: int
    top: tuple[int, ...]
    bottom: tuple[int, ...]
    word: tuple[int, ...]

    def __post_init__(self):
        if len(self.top) != len(self.bottom) or not self.top:
            raise ValueError("top and bottom must be nonempty and of equal size")
        for side in (self.top, self.bottom):
            if list(side) != sorted(set(side)) or not all(1 <= x <= self.n for x in side):
                raise ValueError(f"positions must be sorted, distinct and in 1..{self.n}")

    @classmethod
    def make(cls, n: int, top: Iterable[int], bottom: Iterable[int], word: Sequence[int] = ()) -> PartialBraid:
        top, bottom = tuple(sorted(top)), tuple(sorted(bottom))
        return cls(n, top, bottom, canonical_word(tuple(word), len(top)))

    @property
    def k(self) -> int:
        return len(self.top)

    @property
    def pairing(self) -> dict[int, int]:
        """Start position -> end position of every strand."""
        perm = braid_permutation(self.word, self.k)
        return {self.top[j]: self.bottom[perm[j]] for j in range(self.k)}


def partial_compose(a: PartialBraid, b: PartialBraid) -> PartialBraid | None:
    """a stacked above b; None when no strand runs from a's top to b's bottom."""
    if a.n != b.n:
        raise SizeMismatchError(f"size mismatch: {a.n} != {b.n}")
    pa, pb = a.pairing, b.pairing
    btop = set(b.top)
    keep_a = [j + 1 for j, x in enumerate(a.top) if pa[x] in btop]
    if not keep_a:
        return None
    mids = {pa[a.top[j - 1]] for j in keep_a}
    keep_b = [j + 1 for j, x in enumerate(b.top) if x in mids]
    wa = delete_strands(a.word, a.k, keep_a)
    wb = delete_strands(b.word, b.k, keep_b)
    top = [a.top[j - 1] for j in keep_a]
    bottom = [pb[m] for m in mids]
    return PartialBraid.make(a.n, top, bottom, wa + wb)


@dataclass(frozen=True)
class PMBraid:
    n: int
    layers: tuple[PartialBraid, ...]

    def __post_init__(self):
        if not self.layers:
            raise ValueError("a PM-braid needs at least one layer")
        full = list(range(1, self.n + 1))
        for side in ("top", "bottom"):
            pos = sorted(x for layer in self.layers for x in getattr(layer, side))
            if pos != full:
                raise ValueError(f"layer {side}s do not partition 1..{self.n}")
        if any(layer.n != self.n for layer in self.layers):
            raise ValueError("layer ambient size mismatch")

    def __mul__(self, other: PMBraid) -> PMBraid:
        return pm_braid_product(self, other)

    def __str__(self):
        return " | ".join(
            "{" + ",".join(map(str, L.top)) + "}->{" + ",".join(map(str, L.bottom)) + "}:"
            + " ".join(map(str, L.word)) for L in self.layers)


def identity_braid(n: int) -> PMBraid:
    return PMBraid(n, (PartialBraid.make(n, range(1, n + 1), range(1, n + 1)),))


def pm_braid_product(x: PMBraid, y: PMBraid) -> PMBraid:
    if x.n != y.n:
        raise SizeMismatchError(f"size mismatch: {x.n} != {y.n}")
    layers = []
    for ly in y.layers:
        for lx in x.layers:
            c = partial_compose(lx, ly)
            if c is not None:
                layers.append(c)
    return PMBraid(x.n, tuple(layers))


def braid_generator_s(i: int, n: int, sign: int = 1) -> PMBraid:
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} out of range for n={n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    full = range(1, n + 1)
    return PMBraid(n, (PartialBraid.make(n, full, full, (sign * i,)),))


def braid_generator_e(spec: IntervalPartitionSpec) -> PMBraid:
    return PMBraid(spec.n, tuple(PartialBraid.make(spec.n, range(lo, hi + 1), range(lo, hi + 1))
                                 for lo, hi in spec.bounds))


def letter_braid(letter: Letter, n: int) -> PMBraid:
    if isinstance(letter, S):
        return braid_generator_s(letter.i, n, letter.sign)
    return braid_generator_e(IntervalPartitionSpec(n, letter.cuts))


def evaluate_braid_letters(letters: Iterable[Letter], n: int) -> PMBraid:
    letters = tuple(letters)
    check_letters(letters, n)
    x = identity_braid(n)
    for letter in letters:
        x = pm_braid_product(x, letter_braid(letter, n))
    return x


def project_to_r(x: PMBraid) -> rm.RElement:
    """
    Forget the braiding. The permutation sends each bottom position to the
    top position of its strand, and the partition lists the layer bottoms
    in layer order; with x stacked above y this makes the projection
    multiplicative for the matched-pair product.
    """
    images = [0] * x.n
    for layer in x.layers:
        for s, e in layer.pairing.items():
            images[e - 1] = s
    return rm.RElement(cb.Permutation(tuple(images)), cb.blocks_from([L.bottom for L in x.layers]))


def braids_equal(x: PMBraid, y: PMBraid) -> bool:
    if x.n != y.n:
        raise SizeMismatchError(f"size mismatch: {x.n} != {y.n}")
    if len(x.layers) != len(y.layers):
        return False
    for a, b in zip(x.layers, y.layers):
        if (a.top, a.bottom) != (b.top, b.bottom) or a.pairing != b.pairing:
            return False
        if normal_form(a.word, a.k) != normal_form(b.word, b.k):
            return False
    return True


def random_letters(n: int, length: int, rng: random.Random, e_prob: float = 0.25) -> tuple[Letter, ...]:
    specs = cb.enumerate_interval_specs(n)
    out = []
    for _ in range(length):
        if n == 1 or rng.random() < e_prob:
            out.append(E(rng.choice(specs).cuts))
        else:
            out.append(S(rng.randint(1, n - 1), rng.choice((1, -1))))
    return tuple(out)


# -- relation suite ---------------------------------------------------------------

def _signed_words(n: int, lo: int, hi: int):
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    for r in range(lo, hi + 1):
        yield from itertools.product(letters, repeat=r)


def _as_letters(word: Sequence[int]) -> tuple[S, ...]:
    return tuple(S(abs(x), 1 if x > 0 else -1) for x in word)


def _preserves_blocks_trivially(u: Sequence[int], v: Sequence[int], spec: IntervalPartitionSpec) -> bool:
    """u and v each map every block to itself and u.v restricted to each block is the trivial braid."""
    n = spec.n
    pu, pv = braid_permutation(u, n), braid_permutation(v, n)
    uv = tuple(u) + tuple(v)
    for lo, hi in spec.bounds:
        block = set(range(lo - 1, hi))
        if {pu[x] for x in block} != block or {pv[x] for x in block} != block:
            return False
        if hi > lo and not normal_form(delete_strands(uv, n, range(lo, hi + 1)), hi - lo + 1).is_identity():
            return False
    return True


def verify_braid_relations(n: int, word_bound: int = 4) -> Report:
    """
    Both sides of every bounded instance of the braid relation families, compared with ``braids_equal``.

    ``re4-`` runs over pairs of signed words with total length at most
    ``word_bound``; its side condition is read as "u and v preserve every
    block and u.v is trivial on each block". ``re5-`` runs over signed words
    of length 1..word_bound and reads the side condition on every letter
    (``re5-``) and on the first letter only (``re5--permissive``).
    """
    rep = Report("relations-braid")
    ev = lambda letters: evaluate_braid_letters(letters, n)
    one = identity_braid(n)
    idx = range(1, n)
    specs = cb.enumerate_interval_specs(n)

    for i in idx:
        rep.record("re1-", f"s{i} s{i}'", braids_equal(ev([S(i), S(i, -1)]), one))
        rep.record("re1-", f"s{i}' s{i}", braids_equal(ev([S(i, -1), S(i)]), one))
    for i, j in itertools.product(idx, idx):
        if abs(i - j) >= 2:
            rep.record("re2-", f"s{i} s{j}", braids_equal(ev([S(i), S(j)]), ev([S(j), S(i)])))
    for i in range(1, n - 1):
        rep.record("re3-", f"s{i} s{i + 1} s{i}",
                   braids_equal(ev([S(i), S(i + 1), S(i)]), ev([S(i + 1), S(i), S(i + 1)])))

    for k in specs:
        e = E(k.cuts)
        rhs = ev([e])
        for total in range(word_bound + 1):
            for r in range(total + 1):
                for u in _signed_words(n, r, r):
                    for v in _signed_words(n, total - r, total - r):
                        if _preserves_blocks_trivially(u, v, k):
                            lhs = (*_as_letters(u), e, *_as_letters(v))
                            rep.record("re4-", format_letters(lhs), braids_equal(ev(lhs), rhs))

    for k in specs:
        for word in _signed_words(n, 1, word_bound):
            if cb.i_star(abs(word[0]), k) is not None:
                continue
            strict = all(cb.i_star(abs(x), k) is None for x in word)
            rel = "re5-" if strict else "re5--permissive"
            for l in specs:
                _, rhs_r, jword = rm.re5_sides(k, [abs(x) for x in word], l)
                q = rhs_r[len(jword)]
                ws = _as_letters(word)
                lhs = (E(k.cuts), *ws, E(l.cuts))
                conj = tuple(S(j) for j in jword)
                # Ad(c)(e_q) = c^-1 e_q c with c = s_{j_1} ... s_{j_t}
                rhs = (*_as_letters(inverse_word(jword)), q, *conj, *ws)
                rep.record(rel, format_letters(lhs) + " = " + format_letters(rhs),
                           braids_equal(ev(lhs), ev(rhs)))
    return rep
