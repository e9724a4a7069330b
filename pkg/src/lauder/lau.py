"""theta-Lau products ``A x_theta B``.

The product lives on ``A (+) B`` with basis "A-basis then B-basis" and law

    (a, b) . (x, y) = (a x + theta(y) a + theta(b) x,  b y).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .algebra import Algebra, Character, ValidationError, check_associativity, multiply, verify_character
from .linalg import DimensionError, Vector, add, scale, zeros


class LauError(ValueError):
    pass


@dataclass(frozen=True)
class LauContext:
    A: Algebra
    B: Algebra
    theta: Character
    phi: Character
    gamma: Character
    product: Algebra
    direct: bool = False

    @property
    def m(self) -> int:
        return self.A.dim

    @property
    def k(self) -> int:
        return self.B.dim

    @property
    def dim(self) -> int:
        return self.A.dim + self.B.dim

    def embed_A(self, a: Sequence) -> Vector:
        return tuple(a) + zeros(self.k)

    def embed_B(self, b: Sequence) -> Vector:
        return zeros(self.m) + tuple(b)

    def proj_A(self, X: Sequence) -> Vector:
        return tuple(X[: self.m])

    def proj_B(self, X: Sequence) -> Vector:
        return tuple(X[self.m :])

    def characters_equal(self) -> bool:
        return self.theta == self.phi == self.gamma


Functional = Union[str, Character]


def _direct_zero(k: int) -> Character:
    return Character(zeros(k))


def lau(
    A: Algebra,
    B: Algebra,
    theta: Character,
    phi: Character | None = None,
    gamma: Character | None = None,
    *,
    direct: bool = False,
) -> LauContext:
    """Build ``A x_theta B``; ``phi`` defaults to ``theta``, ``gamma`` to ``phi``.

    ``direct=True`` ignores ``theta`` in the product and builds the plain
    direct product ``A x B``; it exists only for cross-checks.
    """
    if phi is None:
        if direct and theta.is_zero():
            raise LauError("the direct product needs an explicit phi character")
        phi = theta
    if gamma is None:
        gamma = phi
    for name, chi in (("theta", theta), ("phi", phi), ("gamma", gamma)):
        if chi.algebra_dim != B.dim:
            raise LauError(f"{name} has length {chi.algebra_dim}, B has dimension {B.dim}")
    if theta.is_zero() and not direct:
        raise LauError("theta must be nonzero (theta = 0 gives the direct product; use direct=True)")
    for name, chi in (("theta", theta), ("phi", phi), ("gamma", gamma)):
        if name == "theta" and direct:
            continue
        bad = verify_character(B, chi)
        if bad:
            raise ValidationError(f"{name} is not a nonzero multiplicative functional on B", bad)

    cross = _direct_zero(B.dim) if direct else theta
    m, k = A.dim, B.dim
    n = m + k
    sc = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(m):
        for j in range(m):
            sc[i][j][:m] = A.sc[i][j]
    for i in range(m):
        for j in range(k):
            # (e_i, 0)(0, f_j) = (theta(f_j) e_i, 0) and symmetrically.
            sc[i][m + j][i] += cross.values[j]
            sc[m + j][i][i] += cross.values[j]
    for i in range(k):
        for j in range(k):
            sc[m + i][m + j][m:] = B.sc[i][j]
    labels = [f"A.{x}" for x in A.labels] + [f"B.{x}" for x in B.labels]
    product = Algebra.from_tensor(labels, sc)
    bad = check_associativity(product)
    if bad:
        raise AssertionError(f"Lau product failed associativity at {bad[0].where}")
    return LauContext(A, B, theta, phi, gamma, product, direct)


def resolve_functional(ctx: LauContext, which: Functional) -> Character:
    if isinstance(which, Character):
        return which
    try:
        return {"theta": ctx.theta, "phi": ctx.phi, "gamma": ctx.gamma}[which]
    except KeyError:
        raise LauError(f"unknown functional {which!r}") from None


def lau_multiply(ctx: LauContext, which: Functional, X: Sequence, Y: Sequence) -> Vector:
    """``X ._w Y`` for the chosen functional ``w``, evaluated directly."""
    w = resolve_functional(ctx, which)
    if len(X) != ctx.dim or len(Y) != ctx.dim:
        raise DimensionError(f"elements of length {len(X)}, {len(Y)} in a {ctx.dim}-dim product")
    a, b = ctx.proj_A(X), ctx.proj_B(X)
    x, y = ctx.proj_A(Y), ctx.proj_B(Y)
    head = add(add(multiply(ctx.A, a, x), scale(w(y), a)), scale(w(b), x))
    return head + multiply(ctx.B, b, y)
