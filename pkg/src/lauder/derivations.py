"""Derivation-type map spaces as nullspaces of linear constraint systems.

An unknown map ``d`` on an ``n``-dimensional space is an ``n x n`` matrix
``D`` whose columns are the images of the basis vectors; it is flattened
row-major into ``n**2`` unknowns (entry ``D[p][q]`` is unknown ``p*n + q``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import Algebra, multiply
from .lau import LauContext, lau_multiply
from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    lincomb,
    nullspace,
    span,
    sub,
    subspace_contains,
    subspace_equal,
    unit,
)


@dataclass(frozen=True)
class LinearMap:
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.nrows != self.matrix.ncols:
            raise DimensionError(f"linear map matrix must be square, got {self.matrix.shape}")

    @property
    def dim(self) -> int:
        return self.matrix.ncols

    @classmethod
    def from_flat(cls, flat: Sequence, n: int) -> LinearMap:
        if len(flat) != n * n:
            raise DimensionError(f"{len(flat)} entries for a {n}x{n} map")
        return cls(Matrix.from_rows([flat[p * n : (p + 1) * n] for p in range(n)], n))

    @classmethod
    def from_images(cls, images: Sequence[Sequence]) -> LinearMap:
        return cls(Matrix.from_columns(images, len(images)))

    @classmethod
    def zero(cls, n: int) -> LinearMap:
        return cls(Matrix.zeros(n, n))

    @classmethod
    def identity(cls, n: int) -> LinearMap:
        return cls(Matrix.identity(n))

    def __call__(self, v: Sequence) -> Vector:
        return self.matrix.apply(v)

    def flat(self) -> Vector:
        return tuple(x for row in self.matrix.rows for x in row)

    def is_zero(self) -> bool:
        return not any(self.flat())

    def to_json(self) -> list[list[str]]:
        return self.matrix.to_json()


@dataclass(frozen=True)
class MapSpace:
    """A space of linear maps on ``Q^n``, canonical via its flattened RREF basis."""

    n: int
    subspace: Subspace

    @classmethod
    def spanned_by(cls, maps: Sequence[LinearMap], n: int) -> MapSpace:
        return cls(n, span([d.flat() for d in maps], n * n))

    @property
    def dim_ambient(self) -> int:
        return self.n * self.n

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def basis(self) -> tuple:
        return tuple(LinearMap.from_flat(v, self.n) for v in self.subspace.basis)

    def __contains__(self, d: LinearMap) -> bool:
        if d.dim != self.n:
            raise DimensionError(f"{d.dim}-dim map against maps on Q^{self.n}")
        return self.subspace.contains_vector(d.flat())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MapSpace):
            return NotImplemented
        return self.n == other.n and subspace_equal(self.subspace, other.subspace)

    def __hash__(self) -> int:
        return hash((self.n, self.subspace.basis))

    def contains_space(self, other: MapSpace) -> bool:
        return subspace_contains(self.subspace, other.subspace)

    def to_json(self) -> dict:
        return {"dim": self.dim, "basis": [d.to_json() for d in self.basis]}


Table = list  # table[i][j] -> product vector of basis i and basis j


def _table(n: int, mul: Callable[[Vector, Vector], Vector]) -> Table:
    e = [unit(n, i) for i in range(n)]
    return [[mul(e[i], e[j]) for j in range(n)] for i in range(n)]


def _leibniz_rows(n: int, i: int, j: int, inner: Table, left: Table, right: Table) -> list[dict]:
    # Coefficients of d(E_i*E_j) - d(E_i) <left> E_j - E_i <right> d(E_j), one dict per coordinate.
    rows = [dict() for _ in range(n)]
    for k in range(n):
        row = rows[k]
        for l, c in enumerate(inner[i][j]):
            if c:
                row[k * n + l] = row.get(k * n + l, 0) + c
    for p in range(n):
        for k, c in enumerate(left[p][j]):
            if c:
                rows[k][p * n + i] = rows[k].get(p * n + i, 0) - c
        for k, c in enumerate(right[i][p]):
            if c:
                rows[k][p * n + j] = rows[k].get(p * n + j, 0) - c
    return rows


def leibniz_system(n: int, inner: Table, left: Table, right: Table, symmetric: bool) -> Matrix:
    """Constraint matrix for ``d(x*y) = d(x) <left> y + x <right> d(y)``.

    With ``symmetric=True`` the identity is taken only on the diagonal
    ``x = y`` and encoded through its polarization on pairs ``i <= j``.
    Rows come out in ``(i, j, coordinate)`` lexicographic order.
    """
    nvars = n * n
    rows = []
    for i in range(n):
        for j in range(i if symmetric else 0, n):
            block = _leibniz_rows(n, i, j, inner, left, right)
            if symmetric:
                for k, extra in enumerate(_leibniz_rows(n, j, i, inner, left, right)):
                    for var, c in extra.items():
                        block[k][var] = block[k].get(var, 0) + c
            for row in block:
                if any(row.values()):
                    dense = [Fraction(0)] * nvars
                    for var, c in row.items():
                        dense[var] = Fraction(c)
                    rows.append(tuple(dense))
    return Matrix(tuple(rows), nvars)


def _solve(n: int, system: Matrix) -> MapSpace:
    return MapSpace(n, nullspace(system))


def algebra_table(alg: Algebra) -> Table:
    return _table(alg.dim, lambda x, y: multiply(alg, x, y))


def derivation_space(alg: Algebra) -> MapSpace:
    t = algebra_table(alg)
    return _solve(alg.dim, leibniz_system(alg.dim, t, t, t, symmetric=False))


def jordan_derivation_space(alg: Algebra) -> MapSpace:
    t = algebra_table(alg)
    return _solve(alg.dim, leibniz_system(alg.dim, t, t, t, symmetric=True))


def _lau_tables(ctx: LauContext) -> tuple[Table, Table, Table]:
    n = ctx.dim
    inner = algebra_table(ctx.product)
    left = _table(n, lambda x, y: lau_multiply(ctx, "phi", x, y))
    right = _table(n, lambda x, y: lau_multiply(ctx, "gamma", x, y))
    return inner, left, right


def generalized_jordan_space(ctx: LauContext) -> MapSpace:
    """Maps with ``d(X._theta X) = d(X)._phi X + X._gamma d(X)`` for all X."""
    return _solve(ctx.dim, leibniz_system(ctx.dim, *_lau_tables(ctx), symmetric=True))


def generalized_derivation_space(ctx: LauContext) -> MapSpace:
    """Maps with ``d(X._theta Y) = d(X)._phi Y + X._gamma d(Y)`` for all X, Y."""
    return _solve(ctx.dim, leibniz_system(ctx.dim, *_lau_tables(ctx), symmetric=False))


def inner_derivation(alg: Algebra, a: Sequence) -> LinearMap:
    """``x -> a x - x a``."""
    return LinearMap(alg.left_matrix(a) - alg.right_matrix(a))


def quadratic_defect(ctx: LauContext, d: LinearMap, X: Sequence) -> Vector:
    """``d(X._theta X) - d(X)._phi X - X._gamma d(X)``."""
    if d.dim != ctx.dim:
        raise DimensionError(f"{d.dim}-dim map on a {ctx.dim}-dim product")
    dX = d(X)
    lhs = d(lau_multiply(ctx, "theta", X, X))
    return sub(sub(lhs, lau_multiply(ctx, "phi", dX, X)), lau_multiply(ctx, "gamma", X, dX))


def bilinear_defect(ctx: LauContext, d: LinearMap, X: Sequence, Y: Sequence) -> Vector:
    """``d(X._theta Y) - d(X)._phi Y - X._gamma d(Y)``."""
    lhs = d(lau_multiply(ctx, "theta", X, Y))
    return sub(sub(lhs, lau_multiply(ctx, "phi", d(X), Y)), lau_multiply(ctx, "gamma", X, d(Y)))


def restrict(space: MapSpace, residual: Callable[[LinearMap], Sequence]) -> MapSpace:
    """Subspace of ``space`` on which the linear ``residual`` vanishes."""
    basis = space.basis
    if not basis:
        return space
    cols = [tuple(residual(d)) for d in basis]
    nrows = len(cols[0])
    if nrows == 0:
        return space
    coeffs = nullspace(Matrix.from_columns(cols, nrows))
    flats = [d.flat() for d in basis]
    return MapSpace(
        space.n,
        span([lincomb(c, flats, space.n * space.n) for c in coeffs.basis], space.n * space.n),
    )
