"""
Permutations and ordered set partitions of [n] = {1, ..., n}.

Everything here is 1-based. A permutation is stored in one-line notation,
``images[i - 1] = w(i)``, and composition is ordinary function composition:
``compose(u, v)(i) = u(v(i))``.

An ordered set partition is a tuple of disjoint nonempty frozensets covering
[n]; the order of the blocks matters. Ordered set partitions form a monoid
under the "intersect everything" product, with the one-block partition as
identity, and permutations act on them on the right by taking preimages.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_ENUMERATION_BOUND = 6


class SizeMismatchError(ValueError):
    pass


class BoundExceededError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1 or sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def __str__(self):
        return format_permutation(self)


@dataclass(frozen=True, slots=True)
class OrderedSetPartition:
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.blocks or any(not b for b in self.blocks):
            raise ValueError("blocks must be nonempty and there must be at least one")
        total = sum(len(b) for b in self.blocks)
        union = frozenset().union(*self.blocks)
        if len(union) != total or union != frozenset(range(1, total + 1)):
            raise ValueError(f"blocks do not partition 1..{total}: {self.blocks}")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def block_of(self, x: int) -> int:
        """Index (0-based) of the block containing ``x``."""
        for k, b in enumerate(self.blocks):
            if x in b:
                return k
        raise KeyError(x)

    def __str__(self):
        return format_partition(self)


@dataclass(frozen=True, slots=True)
class IntervalPartitionSpec:
    """Cut positions ``k_1 < ... < k_{m-1}`` describing consecutive interval blocks."""

    n: int
    cuts: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        prev = 0
        for k in self.cuts:
            if not (prev < k < self.n):
                raise ValueError(f"cuts must satisfy 1 <= k_1 < ... < n, got {self.cuts} for n={self.n}")
            prev = k

    @property
    def bounds(self) -> list[tuple[int, int]]:
        """Inclusive (lo, hi) pairs of each interval block."""
        edges = (0, *self.cuts, self.n)
        return [(edges[j] + 1, edges[j + 1]) for j in range(len(edges) - 1)]


def _check_same_size(a, b):
    if a.n != b.n:
        raise SizeMismatchError(f"size mismatch: {a.n} != {b.n}")


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(i: int, n: int) -> Permutation:
    """The adjacent transposition s_i swapping i and i + 1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} out of range for n={n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``(u o v)(i) = u(v(i))``."""
    _check_same_size(u, v)
    ui = u.images
    return Permutation(tuple(ui[x - 1] for x in v.images))


def inverse(w: Permutation) -> Permutation:
    out = [0] * w.n
    for i, x in enumerate(w.images, 1):
        out[x - 1] = i
    return Permutation(tuple(out))


def preimage(w: Permutation, block) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(w.images, 1) if x in block)


def image(w: Permutation, block) -> frozenset[int]:
    return frozenset(w.images[x - 1] for x in block)


def apply_to_partition(w: Permutation, p: OrderedSetPartition) -> OrderedSetPartition:
    """phi_w: replace each block by its preimage under w."""
    _check_same_size(w, p)
    return OrderedSetPartition(tuple(preimage(w, b) for b in p.blocks))


def relabel(w: Permutation, p: OrderedSetPartition) -> OrderedSetPartition:
    """Push every block forward through w (the inverse of ``apply_to_partition``)."""
    _check_same_size(w, p)
    return OrderedSetPartition(tuple(image(w, b) for b in p.blocks))


def one_block(n: int) -> OrderedSetPartition:
    return OrderedSetPartition((frozenset(range(1, n + 1)),))


def partition_product(p: OrderedSetPartition, q: OrderedSetPartition) -> OrderedSetPartition:
    """
    Blocks ``p_i & q_j`` with i varying fastest and j slowest; empty ones dropped.

    >>> p = parse_partition("({1,2},{3})")
    >>> q = parse_partition("({1,3},{2})")
    >>> str(partition_product(p, q))
    '({1},{3},{2})'
    """
    _check_same_size(p, q)
    blocks = []
    for qb in q.blocks:
        for pb in p.blocks:
            c = pb & qb
            if c:
                blocks.append(c)
    return OrderedSetPartition(tuple(blocks))


def interval_partition(spec: IntervalPartitionSpec) -> OrderedSetPartition:
    return OrderedSetPartition(tuple(frozenset(range(lo, hi + 1)) for lo, hi in spec.bounds))


def is_interval(p: OrderedSetPartition) -> bool:
    return standardize(p)[0].is_identity()


def standardize(p: OrderedSetPartition) -> tuple[Permutation, IntervalPartitionSpec]:
    """
    Canonical w with w(p) an interval partition.

    w sends the sorted elements of the first block to 1..k_1 in order, the
    second block's to k_1+1..k_2, and so on.
    """
    images = [0] * p.n
    nxt = 1
    cuts = []
    for b in p.blocks:
        for x in sorted(b):
            images[x - 1] = nxt
            nxt += 1
        cuts.append(nxt - 1)
    return Permutation(tuple(images)), IntervalPartitionSpec(p.n, tuple(cuts[:-1]))


def i_star(i: int, spec: IntervalPartitionSpec) -> int | None:
    """1-based index of the interval block containing both i and i + 1, else None."""
    if not 1 <= i <= spec.n - 1:
        raise ValueError(f"i={i} out of range for n={spec.n}")
    for j, (lo, hi) in enumerate(spec.bounds, 1):
        if lo <= i and i + 1 <= hi:
            return j
    return None


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Indices i_1..i_t with ``s_{i_1} o ... o s_{i_t} == w`` and t = number of inversions."""
    cur = list(w.images)
    out = []
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                # w = (w o s_i) o s_i and w o s_i has one inversion fewer
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                out.append(i + 1)
                break
        else:
            break
    return tuple(reversed(out))


def _guard(n: int, bound: int):
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds enumeration bound {bound}")


def enumerate_permutations(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Permutation]:
    _guard(n, bound)
    return [Permutation(t) for t in itertools.permutations(range(1, n + 1))]


def _ordered_partitions(elements: tuple[int, ...]) -> Iterator[tuple[frozenset[int], ...]]:
    if not elements:
        yield ()
        return
    for size in range(1, len(elements) + 1):
        for first in itertools.combinations(elements, size):
            rest = tuple(x for x in elements if x not in first)
            for tail in _ordered_partitions(rest):
                yield (frozenset(first), *tail)


def enumerate_partitions(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[OrderedSetPartition]:
    _guard(n, bound)
    return [OrderedSetPartition(bs) for bs in _ordered_partitions(tuple(range(1, n + 1)))]


def enumerate_interval_specs(n: int) -> list[IntervalPartitionSpec]:
    out = []
    for m in range(n):
        for cuts in itertools.combinations(range(1, n), m):
            out.append(IntervalPartitionSpec(n, cuts))
    return out


def ordered_bell(n: int) -> int:
    """Fubini number via the first-block recurrence a(n) = sum_k C(n, k) a(n - k)."""
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(math.comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


# -- text forms -----------------------------------------------------------

def format_permutation(w: Permutation) -> str:
    return "[" + ",".join(map(str, w.images)) + "]"


def format_partition(p: OrderedSetPartition) -> str:
    return "(" + ",".join("{" + ",".join(map(str, sorted(b))) + "}" for b in p.blocks) + ")"


def parse_permutation(text: str) -> Permutation:
    m = re.fullmatch(r"\s*\[\s*([0-9,\s]*)\]\s*", text)
    if not m:
        raise ValueError(f"cannot parse permutation: {text!r}")
    return Permutation(tuple(int(x) for x in m.group(1).replace(" ", "").split(",") if x))


_BLOCK = re.compile(r"\{([0-9,\s]*)\}")


def parse_partition(text: str) -> OrderedSetPartition:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"cannot parse partition: {text!r}")
    inner = s[1:-1]
    blocks = []
    pos = 0
    for m in _BLOCK.finditer(inner):
        if inner[pos:m.start()].strip(" ,"):
            raise ValueError(f"cannot parse partition: {text!r}")
        blocks.append(frozenset(int(x) for x in m.group(1).replace(" ", "").split(",") if x))
        pos = m.end()
    if inner[pos:].strip(" ,"):
        raise ValueError(f"cannot parse partition: {text!r}")
    return OrderedSetPartition(tuple(blocks))


def blocks_from(seq: Sequence[Sequence[int]]) -> OrderedSetPartition:
    return OrderedSetPartition(tuple(frozenset(b) for b in seq))
