"""
Left-greedy Garside normal form in the braid group B_k.

A braid is written Delta^d A_1 ... A_r where each A_i is a simple braid
(a positive permutation braid, neither trivial nor Delta) and every pair
(A_i, A_{i+1}) is left-weighted: each generator that can be pulled from the
front of A_{i+1} already ends A_i. Simple braids are stored as permutations
of 0..k-1 in "where the strand goes" form: the strand starting at position p
ends at ``perm[p]``, so the braid a.b (a on top) has permutation b o a.

Words are tuples of nonzero ints, +i for sigma_i and -i for its inverse
(1-based).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

Perm = tuple[int, ...]


def _mul(a: Perm, b: Perm) -> Perm:
    """Permutation of the braid a.b."""
    return tuple(b[x] for x in a)


def _inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _swap(k: int, i: int) -> Perm:
    p = list(range(k))
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def _delta(k: int) -> Perm:
    return tuple(range(k - 1, -1, -1))


def _left_descents(a: Perm) -> set[int]:
    # sigma_i is a prefix of a iff strands at i, i+1 cross in a
    return {i for i in range(len(a) - 1) if a[i] > a[i + 1]}


def _right_descents(a: Perm) -> set[int]:
    ai = _inv(a)
    return {i for i in range(len(a) - 1) if ai[i] > ai[i + 1]}


def _tau(a: Perm) -> Perm:
    """Conjugation by Delta: sigma_i -> sigma_{k-i}."""
    d = _delta(len(a))
    return tuple(d[a[d[p]]] for p in range(len(a)))


def simple_word(a: Perm) -> tuple[int, ...]:
    """A positive word (1-based letters) for the simple braid a."""
    cur = list(a)
    out = []
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                # a = sigma_i . a' with perm(a') = a o s_i
                out.append(i + 1)
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                break
        else:
            return tuple(out)


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Slide prefixes of b onto a until R(a) contains L(b)."""
    k = len(a)
    while True:
        move = _left_descents(b) - _right_descents(a)
        if not move:
            return a, b
        i = min(move)
        s = _swap(k, i)
        a = _mul(a, s)
        b = _mul(s, b)


@dataclass(frozen=True, slots=True)
class NormalForm:
    k: int
    inf: int
    factors: tuple[Perm, ...]

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def permutation(self) -> Perm:
        p = tuple(range(self.k))
        if self.inf % 2:
            p = _delta(self.k)
        for f in self.factors:
            p = _mul(p, f)
        return p

    def word(self) -> tuple[int, ...]:
        """A word for this braid read off the normal form; equal braids give equal words."""
        dw = simple_word(_delta(self.k))
        if self.inf >= 0:
            head = dw * self.inf
        else:
            head = tuple(-x for x in reversed(dw)) * (-self.inf)
        return head + tuple(x for f in self.factors for x in simple_word(f))


@lru_cache(maxsize=1 << 16)
def _normal_form(word: tuple[int, ...], k: int) -> NormalForm:
    if k <= 1:
        if word:
            raise ValueError("a braid on fewer than 2 strands has no generators")
        return NormalForm(max(k, 0), 0, ())
    ident = tuple(range(k))
    delta = _delta(k)
    inf = 0
    factors: list[Perm] = []
    for x in word:
        i = abs(x) - 1
        if not 0 <= i < k - 1:
            raise ValueError(f"letter {x} out of range for {k} strands")
        if x > 0:
            factors.append(_swap(k, i))
        else:
            # F sigma_i^-1 = Delta^-1 tau(F) (Delta sigma_i^-1)
            inf -= 1
            factors = [_tau(f) for f in factors]
            factors.append(_delta_over(k, i))
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            a, b = _left_weight(factors[j], factors[j + 1])
            if (a, b) != (factors[j], factors[j + 1]):
                factors[j], factors[j + 1] = a, b
                changed = True
    while factors and factors[0] == delta:
        factors.pop(0)
        inf += 1
    while factors and factors[-1] == ident:
        factors.pop()
    if ident in factors or delta in factors:
        raise AssertionError("normal form did not converge")
    return NormalForm(k, inf, tuple(factors))


def _delta_over(k: int, i: int) -> Perm:
    """The simple braid X with X.sigma_i = Delta, i.e. Delta sigma_i^-1."""
    # perm(X . sigma_i) = s_i o X = delta  =>  X = s_i o delta
    s = _swap(k, i)
    return tuple(s[d] for d in _delta(k))


def normal_form(word: Sequence[int], k: int) -> NormalForm:
    return _normal_form(tuple(word), k)


def canonical_word(word: Sequence[int], k: int) -> tuple[int, ...]:
    return normal_form(word, k).word()


def braid_permutation(word: Sequence[int], k: int) -> Perm:
    """0-based permutation: the strand starting at p ends at result[p]."""
    pos = list(range(k))      # pos[strand] = current position
    at = list(range(k))       # at[position] = strand
    for x in word:
        i = abs(x) - 1
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        pos[a], pos[b] = i + 1, i
    return tuple(pos)


def inverse_word(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(word))
