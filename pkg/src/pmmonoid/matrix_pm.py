"""
Matrix sequences of the projective compactification of PGL_n.

Two forms are used. The M form keeps each term on its own domain, the kernel
of the previous term, so ``terms[i] = (V_i, A_i)`` with ``A_i`` written in the
canonical basis of ``V_i``. The tilde form keeps full endomorphisms and only
requires each term to see something new on the common kernel of the earlier
ones. Products are taken in the tilde form; limits come out in the M form.

Arithmetic is exact (``Fraction``) except in ``check_convergence``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .linalg import RationalMatrix, Subspace, embed, kernel, restrict
from .rmonoid import RElement


class InvalidSequenceError(ValueError):
    pass


@dataclass(frozen=True)
class MatrixSequenceM:
    dim: int
    terms: tuple[tuple[Subspace, RationalMatrix], ...]

    def __post_init__(self):
        expected = Subspace.full(self.dim)
        if not self.terms:
            raise InvalidSequenceError("empty sequence")
        for i, (dom, a) in enumerate(self.terms):
            if dom != expected:
                raise InvalidSequenceError(f"term {i}: domain is not the kernel of term {i - 1}")
            if a.shape != (self.dim, dom.dim):
                raise InvalidSequenceError(f"term {i}: map has shape {a.shape}, expected {(self.dim, dom.dim)}")
            if a.is_zero():
                raise InvalidSequenceError(f"term {i} is the zero map")
            expected = embed(kernel(a), dom)
        if expected.dim != 0:
            raise InvalidSequenceError("kernel of the last term is not zero")

    @classmethod
    def from_maps(cls, dim: int, maps: Sequence[RationalMatrix]) -> MatrixSequenceM:
        """Build from the maps alone; each domain is the kernel of the previous map."""
        dom = Subspace.full(dim)
        terms = []
        for a in maps:
            terms.append((dom, a))
            dom = embed(kernel(a), dom)
        return cls(dim, tuple(terms))

    @property
    def domains(self) -> list[Subspace]:
        return [d for d, _ in self.terms]

    @property
    def maps(self) -> list[RationalMatrix]:
        return [a for _, a in self.terms]

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class MatrixSequenceTilde:
    dim: int
    terms: tuple[RationalMatrix, ...]

    def __post_init__(self):
        if not self.terms:
            raise InvalidSequenceError("empty sequence")
        common = Subspace.full(self.dim)
        for i, a in enumerate(self.terms):
            if a.shape != (self.dim, self.dim):
                raise InvalidSequenceError(f"term {i} is not {self.dim}x{self.dim}")
            r = restrict(a, common)
            if r.is_zero():
                raise InvalidSequenceError(f"term {i} vanishes on the common kernel of the earlier terms")
            common = embed(kernel(r), common)
        if common.dim != 0:
            raise InvalidSequenceError("the kernels of all terms intersect nontrivially")

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class PolynomialMatrixFamily:
    """A_eps = sum_i coefficients[i] * eps**i."""

    dim: int
    coefficients: tuple[RationalMatrix, ...]

    def __post_init__(self):
        if not self.coefficients or all(c.is_zero() for c in self.coefficients):
            raise InvalidSequenceError("all coefficients are zero")
        common = Subspace.full(self.dim)
        for c in self.coefficients:
            if c.shape != (self.dim, self.dim):
                raise InvalidSequenceError("coefficients must be square of size dim")
            common = embed(kernel(restrict(c, common)), common)
        if common.dim != 0:
            raise InvalidSequenceError("coefficient kernels intersect nontrivially")

    def at(self, eps) -> RationalMatrix:
        eps = Fraction(eps)
        out = RationalMatrix.zeros(self.dim, self.dim)
        for i, c in enumerate(self.coefficients):
            out = out + c.scaled(eps ** i)
        return out


def limit_of_family(f: PolynomialMatrixFamily) -> MatrixSequenceM:
    """The flag limit: on each successive kernel take the first coefficient that does not vanish there."""
    w = Subspace.full(f.dim)
    terms = []
    while w.dim:
        for c in f.coefficients:
            r = restrict(c, w)
            if not r.is_zero():
                break
        else:
            raise InvalidSequenceError("inconsistent family: every coefficient vanishes on a nonzero subspace")
        terms.append((w, r))
        w = embed(kernel(r), w)
    return MatrixSequenceM(f.dim, tuple(terms))


def to_tilde(s: MatrixSequenceM) -> MatrixSequenceTilde:
    """Extend every term by zero on the coordinate complement of its domain's pivot columns."""
    return MatrixSequenceTilde(s.dim, tuple(a @ dom.coordinates_matrix() for dom, a in s.terms))


def to_M(s: MatrixSequenceTilde) -> MatrixSequenceM:
    common = Subspace.full(s.dim)
    terms = []
    for a in s.terms:
        r = restrict(a, common)
        terms.append((common, r))
        common = embed(kernel(r), common)
    return MatrixSequenceM(s.dim, tuple(terms))


def tilde_product(a: MatrixSequenceTilde, b: MatrixSequenceTilde) -> MatrixSequenceTilde:
    """
    All products A_i B_j (i fastest, j slowest), keeping a product only if it
    does not vanish on the common kernel of the products kept before it.
    """
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} != {b.dim}")
    common = Subspace.full(a.dim)
    kept = []
    for bj in b.terms:
        for ai in a.terms:
            c = ai @ bj
            r = restrict(c, common)
            if r.is_zero():
                continue
            kept.append(c)
            common = embed(kernel(r), common)
    if common.dim != 0:
        raise AssertionError("product left a nonzero common kernel")
    return MatrixSequenceTilde(a.dim, tuple(kept))


def identity_sequence(n: int) -> MatrixSequenceTilde:
    return MatrixSequenceTilde(n, (RationalMatrix.identity(n),))


def _proportional(a: RationalMatrix, b: RationalMatrix) -> bool:
    if a.shape != b.shape:
        return False
    ratio = None
    for x, y in zip(a.entries(), b.entries()):
        if (x == 0) != (y == 0):
            return False
        if x != 0:
            if ratio is None:
                ratio = y / x
            elif y != ratio * x:
                return False
    return ratio is not None


def projective_equal(a, b) -> bool:
    if type(a) is not type(b) or a.dim != b.dim or len(a) != len(b):
        return False
    if isinstance(a, MatrixSequenceM):
        return all(da == db and _proportional(x, y) for (da, x), (db, y) in zip(a.terms, b.terms))
    return all(_proportional(x, y) for x, y in zip(a.terms, b.terms))


def realize_monomial(r: RElement) -> MatrixSequenceTilde:
    """Term l is the 0/1 matrix sending e_j to e_{w(j)} for j in block l, zero elsewhere."""
    n = r.n
    terms = []
    for block in r.p.blocks:
        rows = [[0] * n for _ in range(n)]
        for j in block:
            rows[r.w(j) - 1][j - 1] = 1
        terms.append(RationalMatrix.from_rows(rows))
    return MatrixSequenceTilde(n, tuple(terms))


# -- convergence ---------------------------------------------------------------

def projective_distance(a: np.ndarray, b: np.ndarray) -> float:
    """min over sign of |a/|a| -/+ b/|b|| (Frobenius); both matrices nonzero."""
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    return float(min(np.linalg.norm(a - b), np.linalg.norm(a + b)))


@dataclass
class TermConvergence:
    index: int
    distances: list[tuple[Fraction, float]] = field(default_factory=list)
    matched: list[tuple[Fraction, int]] = field(default_factory=list)
    violations: list[Fraction] = field(default_factory=list)
    final_below_tol: bool = False
    monotone: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations and self.final_below_tol and self.monotone


@dataclass
class ConvergenceReport:
    tol: float
    terms: list[TermConvergence]

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.terms)

    def lines(self) -> list[str]:
        out = []
        for tc in self.terms:
            for t, j in tc.matched:
                d = dict(tc.distances)[t]
                out.append(f"term={tc.index} t={float(t):.3g} sample_term={j} distance={d:.3e}")
            for t in tc.violations:
                out.append(f"FAIL term={tc.index} t={float(t):.3g} neighborhood violation: no sample domain contains V_{tc.index}")
            if not tc.violations:
                status = "PASS" if tc.ok else "FAIL"
                out.append(f"{status} term={tc.index} final_below_tol={tc.final_below_tol} monotone={tc.monotone}")
        out.append(f"{'PASS' if self.ok else 'FAIL'} converge tol={self.tol:g}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def check_convergence(samples: Mapping, candidate: MatrixSequenceM, tol: float) -> ConvergenceReport:
    """
    Certify that sampled sequences enter every neighborhood of ``candidate``.

    ``samples`` maps parameter values t (strictly decreasing toward 0 in
    iteration order) to M-form sequences. For each candidate term i the
    deepest sample domain containing V_i is used, which is the only one on
    which the sample term restricts to a nonzero map.
    """
    items = list(samples.items())
    if not items:
        raise ValueError("no samples")
    ts = [Fraction(t) for t, _ in items]
    if any(not (x > y > 0) for x, y in zip(ts, ts[1:])) or ts[-1] <= 0:
        raise ValueError("sample parameters must be positive and strictly decreasing")
    if not tol > 0:
        raise ValueError("tol must be positive")

    report = ConvergenceReport(tol, [TermConvergence(i) for i in range(len(candidate))])
    for t, seq in zip(ts, (s for _, s in items)):
        if seq.dim != candidate.dim:
            raise ValueError("dimension mismatch between sample and candidate")
        for tc, (dom_a, a) in zip(report.terms, candidate.terms):
            j = max((k for k, d in enumerate(seq.domains) if d.contains(dom_a)), default=None)
            if j is None:
                tc.violations.append(t)
                continue
            dom_b, b = seq.terms[j]
            r = b @ dom_b.coordinates_matrix() @ dom_a.basis_matrix()
            tc.matched.append((t, j))
            tc.distances.append((t, projective_distance(r.to_float(), a.to_float())))
    for tc in report.terms:
        ds = [d for _, d in tc.distances]
        if ds:
            tc.final_below_tol = ds[-1] < tol
            tc.monotone = all(y <= 2 * x + 1e-15 for x, y in zip(ds, ds[1:]))
    return report
