"""Finite-dimensional associative algebras given by structure constants."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .linalg import (
    AffineSet,
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    dot,
    intersect,
    nullspace,
    scalar,
    solve_affine,
    span,
    unit,
    vector,
    vector_to_json,
    zeros,
)


class ParseError(ValueError):
    """Input could not be read as algebra or character data."""


@dataclass(frozen=True)
class Violation:
    where: tuple
    lhs: object
    rhs: object
    message: str = ""

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, tuple):
                return vector_to_json(x)
            return str(x)

        return {
            "where": list(self.where),
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "message": self.message,
        }


class ValidationError(ValueError):
    """Structured load failure; ``violations`` lists every broken identity."""

    def __init__(self, message: str, violations: Sequence[Violation] = ()):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True)
class Algebra:
    """``e_i e_j = sum_k sc[i][j][k] e_k`` over a labeled basis."""

    dim: int
    labels: tuple
    sc: tuple = field(repr=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValidationError("algebra dimension must be at least 1")
        if len(self.labels) != self.dim:
            raise ValidationError(f"{len(self.labels)} labels for dimension {self.dim}")
        if len(self.sc) != self.dim or any(
            len(row) != self.dim or any(len(v) != self.dim for v in row) for row in self.sc
        ):
            raise ValidationError(f"structure tensor is not {self.dim}x{self.dim}x{self.dim}")

    @classmethod
    def from_tensor(cls, labels: Sequence[str], sc) -> Algebra:
        n = len(labels)
        return cls(n, tuple(labels), tuple(tuple(vector(v) for v in row) for row in sc))

    @classmethod
    def from_table(cls, labels: Sequence[str], table: dict) -> Algebra:
        """Build from sparse products ``{(i, j): {k: coeff}}``; absent pairs are 0."""
        n = len(labels)
        sc = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (i, j), terms in table.items():
            for k, c in terms.items():
                sc[i][j][k] = scalar(c)
        return cls.from_tensor(labels, sc)

    @cached_property
    def _terms(self) -> tuple:
        return tuple(
            (i, j, k, c)
            for i, row in enumerate(self.sc)
            for j, v in enumerate(row)
            for k, c in enumerate(v)
            if c
        )

    def basis(self, i: int) -> Vector:
        return unit(self.dim, i)

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        return multiply(self, x, y)

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of ``v -> x v``."""
        return Matrix.from_columns([self.mul(x, self.basis(j)) for j in range(self.dim)], self.dim)

    def right_matrix(self, x: Sequence) -> Matrix:
        """Matrix of ``v -> v x``."""
        return Matrix.from_columns([self.mul(self.basis(j), x) for j in range(self.dim)], self.dim)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "sc": [[vector_to_json(v) for v in row] for row in self.sc],
        }


@dataclass(frozen=True)
class Character:
    """A linear functional stored by its values on the basis."""

    values: tuple

    @classmethod
    def of(cls, values: Sequence) -> Character:
        return cls(vector(values))

    @property
    def algebra_dim(self) -> int:
        return len(self.values)

    def __call__(self, x: Sequence) -> Fraction:
        return dot(self.values, x)

    def is_zero(self) -> bool:
        return not any(self.values)

    def to_json(self) -> dict:
        return {"values": vector_to_json(self.values)}


def multiply(alg: Algebra, x: Sequence, y: Sequence) -> Vector:
    if len(x) != alg.dim or len(y) != alg.dim:
        raise DimensionError(f"elements of length {len(x)}, {len(y)} in a {alg.dim}-dim algebra")
    out = [Fraction(0)] * alg.dim
    for i, j, k, c in alg._terms:
        if x[i] and y[j]:
            out[k] += x[i] * y[j] * c
    return tuple(out)


def check_associativity(alg: Algebra) -> list[Violation]:
    out = []
    e = [alg.basis(i) for i in range(alg.dim)]
    for i, j, k in itertools.product(range(alg.dim), repeat=3):
        lhs = multiply(alg, multiply(alg, e[i], e[j]), e[k])
        rhs = multiply(alg, e[i], multiply(alg, e[j], e[k]))
        if lhs != rhs:
            out.append(Violation((i, j, k), lhs, rhs, "(e_i e_j) e_k != e_i (e_j e_k)"))
    return out


def _stacked(alg: Algebra, coeff) -> Matrix:
    # Row (i, k), column j: coeff(i, j, k).  Used for conditions "for all basis e_i".
    n = alg.dim
    return Matrix(
        tuple(
            tuple(coeff(i, j, k) for j in range(n))
            for i in range(n)
            for k in range(n)
        ),
        n,
    )


def right_identities(alg: Algebra) -> AffineSet:
    n = alg.dim
    m = _stacked(alg, lambda i, j, k: alg.sc[i][j][k])
    rhs = [Fraction(int(i == k)) for i in range(n) for k in range(n)]
    return solve_affine(m, rhs)


def two_sided_identity(alg: Algebra) -> Vector | None:
    n = alg.dim
    left = _stacked(alg, lambda i, j, k: alg.sc[i][j][k])
    right = _stacked(alg, lambda i, j, k: alg.sc[j][i][k])
    rhs = [Fraction(int(i == k)) for i in range(n) for k in range(n)]
    sol = solve_affine(Matrix(left.rows + right.rows, n), rhs + rhs)
    return sol.particular


def is_unital(alg: Algebra) -> bool:
    return two_sided_identity(alg) is not None


def is_right_identity(alg: Algebra, u: Sequence) -> bool:
    return all(multiply(alg, alg.basis(i), u) == alg.basis(i) for i in range(alg.dim))


def right_annihilator(alg: Algebra) -> Subspace:
    return nullspace(_stacked(alg, lambda i, j, k: alg.sc[i][j][k]))


def center(alg: Algebra) -> Subspace:
    return nullspace(_stacked(alg, lambda i, j, k: alg.sc[i][j][k] - alg.sc[j][i][k]))


def is_commutative(alg: Algebra) -> bool:
    return center(alg).dim == alg.dim


def unitization(alg: Algebra) -> Algebra:
    """Adjoin a two-sided unit as the last basis vector."""
    n = alg.dim
    sc = [[[Fraction(0)] * (n + 1) for _ in range(n + 1)] for _ in range(n + 1)]
    for i, j in itertools.product(range(n), repeat=2):
        sc[i][j][:n] = alg.sc[i][j]
    for i in range(n + 1):
        sc[i][n][i] += 1
        if i < n:
            sc[n][i][i] += 1
    label = "1"
    while label in alg.labels:
        label = "_" + label
    return Algebra.from_tensor([*alg.labels, label], sc)


def radical(alg: Algebra) -> Subspace:
    """Jacobson radical via the trace form ``tr(L_x L_a)`` on the unitization."""
    u = unitization(alg)
    n1 = u.dim
    lefts = [u.left_matrix(u.basis(i)) for i in range(n1)]
    gram = Matrix(
        tuple(tuple((lefts[a] @ lefts[j]).trace() for j in range(n1)) for a in range(n1)),
        n1,
    )
    rad_u = nullspace(gram)
    # Restrict to the original algebra: last coordinate zero.
    inside = span([unit(n1, i) for i in range(alg.dim)], n1)
    both = intersect(rad_u, inside)
    return span([b[: alg.dim] for b in both.basis], alg.dim)


def is_semisimple(alg: Algebra) -> bool:
    return radical(alg).is_zero()


def verify_character(alg: Algebra, chi: Character) -> list[Violation]:
    if chi.algebra_dim != alg.dim:
        raise DimensionError(f"character of length {chi.algebra_dim} on a {alg.dim}-dim algebra")
    out = []
    if chi.is_zero():
        out.append(Violation((), chi.values, zeros(alg.dim), "nonzero required"))
    for i, j in itertools.product(range(alg.dim), repeat=2):
        lhs = chi(multiply(alg, alg.basis(i), alg.basis(j)))
        rhs = chi.values[i] * chi.values[j]
        if lhs != rhs:
            out.append(Violation((i, j), lhs, rhs, "chi(e_i e_j) != chi(e_i) chi(e_j)"))
    return out


# --- JSON -------------------------------------------------------------------

def _parse_scalar(x, where: str) -> Fraction:
    try:
        return scalar(x)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from None


def algebra_from_json(obj, validate: bool = True) -> Algebra:
    if not isinstance(obj, dict) or "sc" not in obj or "dim" not in obj:
        raise ParseError("algebra JSON needs 'dim' and 'sc'")
    n = obj["dim"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError("'dim' must be an integer")
    if n < 1:
        raise ValidationError("algebra dimension must be at least 1")
    labels = obj.get("labels") or [f"e{i + 1}" for i in range(n)]
    sc = obj["sc"]
    try:
        tensor = [
            [[_parse_scalar(c, f"sc[{i}][{j}][{k}]") for k, c in enumerate(v)] for j, v in enumerate(row)]
            for i, row in enumerate(sc)
        ]
    except TypeError:
        raise ParseError("'sc' must be a nested list") from None
    if len(labels) != n:
        raise ValidationError(f"{len(labels)} labels for dimension {n}")
    alg = Algebra.from_tensor([str(x) for x in labels], tensor)
    if validate:
        bad = check_associativity(alg)
        if bad:
            raise ValidationError("structure constants are not associative", bad)
    return alg


def character_from_json(obj, alg: Algebra | None = None, require_nonzero: bool = True) -> Character:
    if not isinstance(obj, dict) or not isinstance(obj.get("values"), list):
        raise ParseError("character JSON needs a 'values' list")
    chi = Character(tuple(_parse_scalar(c, f"values[{i}]") for i, c in enumerate(obj["values"])))
    if alg is not None:
        if chi.algebra_dim != alg.dim:
            raise ValidationError(f"character of length {chi.algebra_dim} on a {alg.dim}-dim algebra")
        bad = verify_character(alg, chi)
        if bad:
            raise ValidationError("not a nonzero multiplicative functional", bad)
    elif require_nonzero and chi.is_zero():
        raise ValidationError("character must be nonzero", [Violation((), chi.values, (), "nonzero required")])
    return chi


def load_json(path) -> object:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
