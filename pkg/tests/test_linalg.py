from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lauder.linalg import (
    DimensionError,
    Matrix,
    intersect,
    nullspace,
    orthogonal_constraints,
    rank,
    rref,
    scalar,
    scalar_to_json,
    solve_affine,
    span,
    subspace_contains,
    subspace_equal,
)

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r))
    # Sprinkle exact dependencies so low-rank cases are common.
    if r > 1 and draw(st.booleans()):
        k = draw(rationals)
        rows[-1] = [k * x for x in rows[0]]
    return Matrix.from_rows(rows)


def test_scalar_json_roundtrip():
    for q in (F(0), F(3), F(-1, 2), F(7, 3)):
        assert scalar(scalar_to_json(q)) == q
    assert scalar_to_json(F(-1, 2)) == "-1/2"
    assert scalar_to_json(F(4, 2)) == "2"


def test_scalar_rejects_floats():
    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(ValueError):
        scalar("1e3")


def test_rref_examples():
    assert rref(Matrix.identity(2)) == (Matrix.identity(2), 2)
    assert rref(Matrix.zeros(3, 3)) == (Matrix.zeros(3, 3), 0)
    red, r = rref([[2, 4], [1, 2]])
    assert red == Matrix.from_rows([[1, 2], [0, 0]]) and r == 1
    assert rref(red)[0] == red


def test_nullspace_examples():
    assert nullspace(Matrix.identity(3)).dim == 0
    assert nullspace(Matrix.zeros(2, 3)).dim == 3
    ns = nullspace([[1, 1, 0]])
    assert ns.dim == 2
    for v in ns.basis:
        assert v[0] + v[1] == 0


def test_solve_affine_examples():
    sol = solve_affine(Matrix.identity(2), [F(3), F(-1, 2)])
    assert sol.particular == (F(3), F(-1, 2)) and sol.directions.dim == 0
    assert solve_affine(Matrix.zeros(1, 2), [1]).is_empty
    sol = solve_affine([[1, 0]], [1])
    assert sol.particular == (1, 0)
    assert subspace_equal(sol.directions, span([(0, 1)], 2))


def test_subspace_examples():
    s = span([(1, 0)], 2)
    assert subspace_equal(s, s)
    assert subspace_equal(span([(1, 0)], 2), span([(2, 0)], 2))
    assert subspace_contains(span([(1, 0), (0, 1)], 2), span([(1, 1)], 2))
    assert not subspace_contains(span([(1, 0)], 2), span([(1, 1)], 2))
    with pytest.raises(DimensionError):
        subspace_equal(span([(1, 0)], 2), span([(1, 0, 0)], 3))


@given(matrices())
def test_rref_idempotent(m):
    red, _ = rref(m)
    assert rref(red)[0] == red


@given(matrices())
def test_rank_nullity_and_exact_kernel(m):
    ns = nullspace(m)
    assert ns.dim + rank(m) == m.ncols
    for v in ns.basis:
        assert not any(m.apply(v))


@given(matrices(), st.lists(st.sampled_from([F(2), F(-1), F(1, 3)]), min_size=5, max_size=5))
def test_subspace_equal_scaling_invariant(m, scales):
    s = span(m.rows, m.ncols)
    scaled = span([tuple(c * x for x in r) for c, r in zip(scales, m.rows)], m.ncols)
    assert subspace_equal(s, scaled)


@settings(max_examples=50)
@given(matrices(max_cols=4), matrices(max_cols=4))
def test_intersection_and_constraints(m1, m2):
    if m1.ncols != m2.ncols:
        return
    s, t = span(m1.rows, m1.ncols), span(m2.rows, m2.ncols)
    assert subspace_equal(nullspace(orthogonal_constraints(s)), s)
    both = intersect(s, t)
    assert subspace_contains(s, both) and subspace_contains(t, both)
    assert both.dim == s.dim + t.dim - span([*s.basis, *t.basis], s.ambient_dim).dim


@given(matrices(), st.data())
def test_solve_affine_particular(m, data):
    x = data.draw(st.lists(rationals, min_size=m.ncols, max_size=m.ncols))
    b = m.apply(x)
    sol = solve_affine(m, b)
    assert sol.particular is not None
    assert m.apply(sol.particular) == b
    assert sol.contains(x)
