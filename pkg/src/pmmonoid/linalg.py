"""Exact linear algebra over Q with ``fractions.Fraction`` entries."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, slots=True)
class RationalMatrix:
    nrows: int
    ncols: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise ValueError("inconsistent matrix dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> RationalMatrix:
        rows = tuple(tuple(_q(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> RationalMatrix:
        z = Fraction(0)
        return cls(nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, nrows: int, cols: Sequence[Sequence]) -> RationalMatrix:
        cols = [tuple(_q(x) for x in c) for c in cols]
        return cls(nrows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def T(self) -> RationalMatrix:
        return RationalMatrix(self.ncols, self.nrows, tuple(zip(*self.rows)) if self.nrows else
                              tuple(() for _ in range(self.ncols)))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        rows = tuple(
            tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols)
            for r in self.rows
        )
        return RationalMatrix(self.nrows, other.ncols, rows)

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(self.nrows, self.ncols,
                              tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scaled(self, c) -> RationalMatrix:
        c = _q(c)
        return RationalMatrix(self.nrows, self.ncols, tuple(tuple(c * a for a in r) for r in self.rows))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def entries(self) -> Iterable[Fraction]:
        for r in self.rows:
            yield from r

    def to_float(self):
        import numpy as np
        return np.array([[float(x) for x in r] for r in self.rows], dtype=float).reshape(self.shape)

    def __str__(self):
        return "[" + "; ".join(" ".join(str(x) for x in r) for r in self.rows) + "]"


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m.rows, m.ncols)[1])


@dataclass(frozen=True, slots=True)
class Subspace:
    """
    A subspace of Q^ambient held by its canonical basis: the rows of the
    reduced row echelon form of any spanning set. Equal subspaces compare equal.
    """

    ambient: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Sequence]) -> Subspace:
        vecs = [[_q(x) for x in v] for v in vectors]
        if any(len(v) != ambient for v in vecs):
            raise ValueError("vector length does not match ambient dimension")
        rows, _ = rref(vecs, ambient)
        return cls(ambient, tuple(tuple(r) for r in rows))

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls.span(n, RationalMatrix.identity(n).rows)

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(v) if x != 0) for v in self.basis]

    def basis_matrix(self) -> RationalMatrix:
        """ambient x dim matrix whose columns are the canonical basis."""
        return RationalMatrix.from_columns(self.ambient, self.basis)

    def coordinates_matrix(self) -> RationalMatrix:
        """dim x ambient projection reading off pivot coordinates; left inverse of ``basis_matrix``."""
        piv = self.pivots
        return RationalMatrix.from_rows(
            [[int(j == p) for j in range(self.ambient)] for p in piv], ncols=self.ambient)

    def contains(self, other: Subspace) -> bool:
        if other.ambient != self.ambient:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(self.ambient, self.basis + other.basis).dim == self.dim

    def __le__(self, other: Subspace) -> bool:
        return other.contains(self)


def kernel(m: RationalMatrix) -> Subspace:
    rows, pivots = rref(m.rows, m.ncols)
    free = [c for c in range(m.ncols) if c not in pivots]
    vecs = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for r, p in zip(rows, pivots):
            v[p] = -r[f]
        vecs.append(v)
    return Subspace.span(m.ncols, vecs)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient:
        raise ValueError("ambient dimension mismatch")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient)
    # x = A y = B z  <=>  [A | -B] (y, z) = 0
    A, B = a.basis_matrix(), b.basis_matrix()
    stacked = RationalMatrix.from_rows(
        [list(ra) + [-x for x in rb] for ra, rb in zip(A.rows, B.rows)], ncols=a.dim + b.dim)
    sol = kernel(stacked)
    return Subspace.span(a.ambient, [
        [sum((A.rows[i][k] * v[k] for k in range(a.dim)), Fraction(0)) for i in range(a.ambient)]
        for v in sol.basis
    ])


def restrict(m: RationalMatrix, w: Subspace) -> RationalMatrix:
    """m composed with the inclusion of w given by its canonical basis."""
    if m.ncols != w.ambient:
        raise ValueError("dimension mismatch")
    return m @ w.basis_matrix()


def embed(sub: Subspace, inner: Subspace) -> Subspace:
    """Map a subspace given in the coordinates of ``inner``'s basis back to ambient coordinates."""
    if sub.ambient != inner.dim:
        raise ValueError("dimension mismatch")
    B = inner.basis_matrix()
    return Subspace.span(inner.ambient, [
        [sum((B.rows[i][k] * v[k] for k in range(inner.dim)), Fraction(0)) for i in range(inner.ambient)]
        for v in sub.basis
    ])
