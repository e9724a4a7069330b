"""Exact linear algebra over the rationals.

Everything is dense and built on :class:`fractions.Fraction`; no floating
point value ever enters.  Subspaces are stored by their reduced row echelon
basis, so two subspaces are equal exactly when their stored rows are equal.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]

_SCALAR_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


class DimensionError(ValueError):
    """Operands live in spaces of different dimension."""


def scalar(x) -> Fraction:
    """Coerce ``x`` to an exact rational.

    Accepts ints, Fractions and strings of the form ``"p"`` or ``"p/q"``.
    Floats are refused outright.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError(f"not an exact scalar: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        if not _SCALAR_RE.match(x):
            raise ValueError(f"not a rational literal: {x!r}")
        return Fraction(x.replace(" ", ""))
    raise TypeError(f"not an exact scalar: {x!r}")


def scalar_to_json(q: Fraction) -> str:
    return str(q)


def vector(xs: Iterable) -> Vector:
    return tuple(scalar(x) for x in xs)


def vector_to_json(v: Sequence[Fraction]) -> list[str]:
    return [str(x) for x in v]


def zeros(n: int) -> Vector:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def is_zero(v: Sequence) -> bool:
    return not any(v)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] += c * a
    return tuple(out)


def random_vector(rng: random.Random, n: int, bound: int = 9) -> Vector:
    """Seeded random rational vector with small numerators/denominators."""
    return tuple(
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)
    )


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix, stored row-major."""

    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> Matrix:
        rs = tuple(vector(r) for r in rows)
        if ncols is None:
            if not rs:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rs[0])
        if any(len(r) != ncols for r in rs):
            raise DimensionError("ragged rows")
        return cls(rs, ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> Matrix:
        return cls.from_rows(
            [[c[i] for c in cols] for i in range(nrows)], ncols=len(cols)
        )

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(tuple(unit(n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Matrix:
        return cls(tuple(zeros(ncols) for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionError(f"matrix has {self.ncols} columns, vector {len(v)}")
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionError(f"{self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix(tuple(tuple(dot(r, c) for c in cols) for r in self.rows), other.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionError(f"{self.shape} - {other.shape}")
        return Matrix(tuple(sub(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def transpose(self) -> Matrix:
        return Matrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def to_json(self) -> list[list[str]]:
        return [vector_to_json(r) for r in self.rows]


def as_matrix(m) -> Matrix:
    if isinstance(m, Matrix):
        return m
    return Matrix.from_rows(m)


def _row_reduce(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    # Gauss-Jordan in place; skips zero entries, which dominate constraint systems.
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        nz = [j for j in range(c, ncols) if prow[j]]
        for j in nz:
            prow[j] *= inv
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m) -> tuple[Matrix, int]:
    """Reduced row echelon form of ``m`` and its rank.  Shape is preserved."""
    m = as_matrix(m)
    rows, pivots = _row_reduce([list(r) for r in m.rows], m.ncols)
    return Matrix(tuple(tuple(r) for r in rows), m.ncols), len(pivots)


def rank(m) -> int:
    return rref(m)[1]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n held as its canonical RREF basis."""

    ambient_dim: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def contains_vector(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        return span([*self.basis, v], self.ambient_dim).dim == self.dim

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "basis": [vector_to_json(b) for b in self.basis],
        }


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    rows = []
    for v in vectors:
        v = vector(v)
        if len(v) != ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in Q^{ambient_dim}")
        if any(v):
            rows.append(list(v))
    red, pivots = _row_reduce(rows, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(red[i]) for i in range(len(pivots))))


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, ())


def full_subspace(n: int) -> Subspace:
    return Subspace(n, tuple(unit(n, i) for i in range(n)))


def nullspace(m) -> Subspace:
    """``{v : m v = 0}`` as a canonical subspace."""
    m = as_matrix(m)
    red, pivots = _row_reduce([list(r) for r in m.rows if any(r)], m.ncols)
    pivot_set = set(pivots)
    vecs = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        vecs.append(v)
    return span(vecs, m.ncols)


@dataclass(frozen=True)
class AffineSet:
    """Solution set ``particular + directions``; ``particular is None`` if empty."""

    particular: Vector | None
    directions: Subspace

    @property
    def is_empty(self) -> bool:
        return self.particular is None

    def contains(self, v: Sequence) -> bool:
        if self.particular is None:
            return False
        return self.directions.contains_vector(sub(v, self.particular))

    def sample(self, count: int) -> list[Vector]:
        """The particular point followed by up to ``count`` shifted points.

        Shifts cycle over the direction basis with multipliers 1, -1, 2, 1/2.
        """
        if self.particular is None:
            return []
        out = [self.particular]
        if self.directions.is_zero():
            return out
        mults = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))
        for t in range(count):
            d = self.directions.basis[t % self.directions.dim]
            c = mults[(t // self.directions.dim) % len(mults)]
            out.append(add(self.particular, scale(c, d)))
        return out


def solve_affine(m, b: Sequence) -> AffineSet:
    m = as_matrix(m)
    b = vector(b)
    if len(b) != m.nrows:
        raise DimensionError(f"{m.nrows} equations, right-hand side of length {len(b)}")
    n = m.ncols
    aug = [list(r) + [c] for r, c in zip(m.rows, b)]
    red, pivots = _row_reduce(aug, n + 1)
    directions = nullspace(m)
    if pivots and pivots[-1] == n:
        return AffineSet(None, directions)
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = red[r][n]
    return AffineSet(tuple(x), directions)


def _check_ambient(s: Subspace, t: Subspace) -> None:
    if s.ambient_dim != t.ambient_dim:
        raise DimensionError(f"ambient dimensions {s.ambient_dim} and {t.ambient_dim}")


def subspace_equal(s: Subspace, t: Subspace) -> bool:
    _check_ambient(s, t)
    return s.basis == t.basis


def subspace_contains(s: Subspace, t: Subspace) -> bool:
    """True when ``t`` is a subspace of ``s``."""
    _check_ambient(s, t)
    return span([*s.basis, *t.basis], s.ambient_dim).dim == s.dim


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    return span([*s.basis, *t.basis], s.ambient_dim)


def orthogonal_constraints(s: Subspace) -> Matrix:
    """A matrix ``K`` with ``nullspace(K) == s``."""
    n = s.ambient_dim
    if not s.basis:
        return Matrix.identity(n)
    comp = nullspace(Matrix(s.basis, n))
    return Matrix(comp.basis, n)


def intersect(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    k1, k2 = orthogonal_constraints(s), orthogonal_constraints(t)
    return nullspace(Matrix(k1.rows + k2.rows, s.ambient_dim))


def linear_system(residual, nvars: int) -> Matrix:
    """Coefficient matrix of a linear map ``residual: Q^nvars -> Q^r``.

    The map is probed on the standard basis, so ``residual`` must be
    linear (no constant term).
    """
    cols = [tuple(residual(unit(nvars, j))) for j in range(nvars)]
    nrows = len(cols[0]) if cols else 0
    return Matrix.from_columns(cols, nrows) if nrows else Matrix((), nvars)
