"""
Layered automorphisms of marked quotients of the free group F_n = <u_1, ..., u_n>.

A layer sends each generator u_i of its domain to ``w_i^-1 u_{t(i)} w_i``
with t a bijection onto the layer's image and w_i a word on image
generators; every other generator is killed. ``compose_layered(f, g)``
means "f, then g": layer (i, j) keeps the f-layer-i generators whose
targets lie in the domain of g-layer-j, kills letters outside that domain,
substitutes g, and finally kills letters outside the new image.

Words are tuples of nonzero ints, +i for u_i and -i for its inverse.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .braid_pm import PMBraid, evaluate_braid_letters, pm_braid_product, random_letters
from .report import Report
from .words import format_letters

FreeWord = tuple[int, ...]


def reduce(w: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def kill(w: Iterable[int], dead: Iterable[int]) -> FreeWord:
    dead = set(dead)
    return reduce(x for x in w if abs(x) not in dead)


def keep_only(w: Iterable[int], alive: Iterable[int]) -> FreeWord:
    alive = set(alive)
    return reduce(x for x in w if abs(x) in alive)


def invert(w: Sequence[int]) -> FreeWord:
    return tuple(-x for x in reversed(w))


def conjugate(w: Sequence[int], t: int) -> FreeWord:
    """w^-1 u_t w, reduced."""
    return reduce((*invert(w), t, *w))


def format_word(w: Sequence[int]) -> str:
    return " ".join(f"u{abs(x)}" + ("'" if x < 0 else "") for x in w)


def parse_word(text: str) -> FreeWord:
    out = []
    for tok in text.split():
        m = re.fullmatch(r"u(\d+)('?)", tok)
        if not m or int(m.group(1)) < 1:
            raise ValueError(f"bad free-group token {tok!r}")
        out.append(int(m.group(1)) * (-1 if m.group(2) else 1))
    return reduce(out)


def _normalize_conjugator(t: int, w: FreeWord) -> FreeWord:
    """w and u_t^k w give the same image; drop the leading power of u_t."""
    w = reduce(w)
    k = 0
    while k < len(w) and abs(w[k]) == t:
        k += 1
    return w[k:]


@dataclass(frozen=True)
class Layer:
    domain: tuple[int, ...]
    image: tuple[int, ...]
    assignment: tuple[tuple[int, int, FreeWord], ...]   # (i, t(i), w_i), sorted by i

    def __post_init__(self):
        if not self.domain or len(self.domain) != len(self.image):
            raise ValueError("domain and image must be nonempty and of equal size")
        if tuple(i for i, _, _ in self.assignment) != self.domain:
            raise ValueError("assignment must cover the domain in order")
        if sorted(t for _, t, _ in self.assignment) != list(self.image):
            raise ValueError("targets must be a bijection onto the image")
        alive = set(self.image)
        for _, _, w in self.assignment:
            if any(abs(x) not in alive for x in w) or reduce(w) != w:
                raise ValueError("conjugators must be reduced words on image generators")

    @classmethod
    def make(cls, pairs: Mapping[int, tuple[int, Sequence[int]]]) -> Layer:
        items = sorted(pairs.items())
        assignment = tuple((i, t, _normalize_conjugator(t, tuple(w))) for i, (t, w) in items)
        return cls(tuple(i for i, _, _ in assignment), tuple(sorted(t for _, t, _ in assignment)), assignment)

    def images(self) -> dict[int, FreeWord]:
        """i -> the reduced word w_i^-1 u_t w_i."""
        return {i: conjugate(w, t) for i, t, w in self.assignment}

    def apply(self, w: Sequence[int]) -> FreeWord:
        """Substitute this layer into a word on its domain generators."""
        img = self.images()
        out: list[int] = []
        for x in w:
            out.extend(img[x] if x > 0 else invert(img[-x]))
        return reduce(out)


@dataclass(frozen=True)
class LayeredAut:
    rank: int
    layers: tuple[Layer, ...]

    def __post_init__(self):
        full = list(range(1, self.rank + 1))
        if sorted(x for L in self.layers for x in L.domain) != full:
            raise ValueError("layer domains do not partition the generators")
        if sorted(x for L in self.layers for x in L.image) != full:
            raise ValueError("layer images do not partition the generators")

    def __str__(self):
        parts = []
        for L in self.layers:
            parts.append(", ".join(f"u{i}->{format_word(conjugate(w, t))}" for i, t, w in L.assignment))
        return " | ".join("[" + p + "]" for p in parts)


def identity_aut(n: int) -> LayeredAut:
    return LayeredAut(n, (Layer.make({i: (i, ()) for i in range(1, n + 1)}),))


def _compose_layers(f: Layer, g: Layer) -> Layer | None:
    gdom = set(g.domain)
    pairs = {}
    for i, t, w in f.assignment:
        if t not in gdom:
            continue
        _, t2, w2 = next(a for a in g.assignment if a[0] == t)
        # g(w^-1 u_t w) = g(w)^-1 w2^-1 u_t2 w2 g(w), with dead letters of w set to 1
        pairs[i] = (t2, (*w2, *g.apply(keep_only(w, gdom))))
    if not pairs:
        return None
    alive = {t for t, _ in pairs.values()}
    return Layer.make({i: (t, keep_only(w, alive)) for i, (t, w) in pairs.items()})


def compose_layered(f: LayeredAut, g: LayeredAut) -> LayeredAut:
    if f.rank != g.rank:
        raise ValueError(f"rank mismatch: {f.rank} != {g.rank}")
    layers = []
    for lg in g.layers:
        for lf in f.layers:
            c = _compose_layers(lf, lg)
            if c is not None:
                layers.append(c)
    return LayeredAut(f.rank, tuple(layers))


# -- Artin action ------------------------------------------------------------------

def artin_rule(k: int, letter: int) -> Layer:
    """The automorphism of F_k for sigma_i^{+-1}, by where strands end."""
    i = abs(letter)
    pairs = {j: (j, ()) for j in range(1, k + 1)}
    if letter > 0:
        pairs[i] = (i + 1, (-i,))          # u_i -> u_i u_{i+1} u_i^-1
        pairs[i + 1] = (i, ())             # u_{i+1} -> u_i
    else:
        pairs[i] = (i + 1, ())             # u_i -> u_{i+1}
        pairs[i + 1] = (i, (i + 1,))       # u_{i+1} -> u_{i+1}^-1 u_i u_{i+1}
    return Layer.make(pairs)


def act_word(word: Sequence[int], k: int, rule: Callable[[int, int], Layer] = artin_rule) -> Layer:
    """Letters applied left to right: the automorphism of the braid read top to bottom."""
    cur = Layer.make({j: (j, ()) for j in range(1, k + 1)})
    for x in word:
        cur = _compose_layers(cur, rule(k, x))
    return cur


def artin_action(x: PMBraid, rule: Callable[[int, int], Layer] = artin_rule) -> LayeredAut:
    """Per layer: act on the free group of its strands, then relabel to top (domain) and bottom (image) positions."""
    layers = []
    for L in x.layers:
        rel = act_word(L.word, L.k, rule)
        pairs = {}
        for j, t, w in rel.assignment:
            pairs[L.top[j - 1]] = (L.bottom[t - 1], tuple((L.bottom[abs(c) - 1]) * (1 if c > 0 else -1) for c in w))
        layers.append(Layer.make(pairs))
    return LayeredAut(x.n, tuple(layers))


# -- equivalence ---------------------------------------------------------------------

def _conjugator_for(a_prefix: FreeWord, t: int, b_prefix: FreeWord, k: int) -> FreeWord:
    """c = x^-1 u_t^k y, the solutions of c^-1 (x^-1 u_t x) c = y^-1 u_t y."""
    return reduce((*invert(a_prefix), *([t] * k if k >= 0 else [-t] * -k), *b_prefix))


def layer_conjugator(f: Layer, g: Layer) -> FreeWord | None:
    """A word c with g(u) = c^-1 f(u) c for every domain generator u, or None."""
    if (f.domain, f.image) != (g.domain, g.image):
        return None
    fa = {i: (t, w) for i, t, w in f.assignment}
    ga = {i: (t, w) for i, t, w in g.assignment}
    if any(fa[i][0] != ga[i][0] for i in f.domain):
        return None
    first = f.domain[0]
    t, x = fa[first]
    _, y = ga[first]
    fi, gi = f.images(), g.images()
    # the centralizer of u_t is <u_t>; a power beyond the total word length
    # can no longer cancel, so the search below is exhaustive
    bound = sum(len(v) for v in fi.values()) + sum(len(v) for v in gi.values()) + len(x) + len(y) + 1
    for k in sorted(range(-bound, bound + 1), key=abs):
        c = _conjugator_for(x, t, y, k)
        if all(reduce((*invert(c), *fi[i], *c)) == gi[i] for i in f.domain):
            return c
        if len(f.domain) == 1:
            break
    return None


def equivalent(f: LayeredAut, g: LayeredAut) -> bool:
    if f.rank != g.rank or len(f.layers) != len(g.layers):
        return False
    return all(layer_conjugator(a, b) is not None for a, b in zip(f.layers, g.layers))


def conjugate_layers(f: LayeredAut, conjugators: Sequence[Sequence[int]]) -> LayeredAut:
    """Post-conjugate layer l by ``conjugators[l]`` (a word on that layer's image)."""
    layers = []
    for L, c in zip(f.layers, conjugators):
        layers.append(Layer.make({i: (t, (*w, *c)) for i, t, w in L.assignment}))
    return LayeredAut(f.rank, tuple(layers))


def boundary_word(f: LayeredAut) -> FreeWord:
    """f(u_1) f(u_2) ... f(u_n) for a single-layer f."""
    if len(f.layers) != 1:
        raise ValueError("boundary word is defined for single-layer automorphisms")
    img = f.layers[0].images()
    return reduce(x for i in range(1, f.rank + 1) for x in img[i])


def verify_dnb_homomorphism(
    n: int,
    samples: int = 1000,
    seed: int = 0,
    max_length: int = 8,
    rule: Callable[[int, int], Layer] = artin_rule,
) -> Report:
    """
    Random pairs x, y of PM-braid words: artin_action(x y) must be equivalent to
    artin_action(x) then artin_action(y). Single-layer samples must also fix
    the boundary word u_1 ... u_n exactly.
    """
    rep = Report("dnb")
    rng = random.Random(seed)
    for _ in range(samples):
        a = random_letters(n, rng.randint(0, max_length), rng)
        b = random_letters(n, rng.randint(0, max_length), rng)
        x, y = evaluate_braid_letters(a, n), evaluate_braid_letters(b, n)
        fx, fy = artin_action(x, rule), artin_action(y, rule)
        fxy = artin_action(pm_braid_product(x, y), rule)
        inst = f"{format_letters(a)} | {format_letters(b)}"
        rep.record("homomorphism", inst, equivalent(fxy, compose_layered(fx, fy)))
        for z, f, letters in ((x, fx, a), (y, fy, b)):
            if len(z.layers) == 1:
                rep.record("boundary", format_letters(letters),
                           boundary_word(f) == tuple(range(1, n + 1)))
    return rep
