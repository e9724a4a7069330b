import random
from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

import oracles
from lauder.algebra import (
    Algebra,
    Character,
    ParseError,
    ValidationError,
    algebra_from_json,
    center,
    character_from_json,
    check_associativity,
    is_semisimple,
    is_unital,
    multiply,
    radical,
    right_annihilator,
    right_identities,
    unitization,
    verify_character,
)
from lauder.linalg import random_vector, span, subspace_equal, zeros
from lauder.zoo import zoo_get, zoo_list

M2 = zoo_get("M2").algebra
COL = zoo_get("colalg2").algebra
T2 = zoo_get("T2").algebra
ZERO1 = zoo_get("zero1").algebra


def _vec(*xs):
    return tuple(F(x) for x in xs)


def test_multiply_examples():
    assert multiply(M2, _vec(1, 2, 3, 4), zeros(4)) == zeros(4)
    assert multiply(M2, M2.basis(0), M2.basis(1)) == M2.basis(1)
    assert multiply(COL, COL.basis(1), COL.basis(0)) == COL.basis(1)


def test_colalg2_matches_matrix_model():
    # Oracle: the matrix model [[a, 0], [b, 0]] multiplied directly.
    assert COL.sc == tuple(tuple(tuple(F(int(c)) for c in v) for v in row) for row in oracles.model_sc("colalg2"))
    rng = random.Random(3)
    for _ in range(20):
        x, y = random_vector(rng, 2), random_vector(rng, 2)
        mx = sp.Matrix([[x[0], 0], [x[1], 0]])
        my = sp.Matrix([[y[0], 0], [y[1], 0]])
        prod = mx * my
        assert multiply(COL, x, y) == (F(str(prod[0, 0])), F(str(prod[1, 0])))


def test_check_associativity():
    assert check_associativity(M2) == []
    assert check_associativity(COL) == []
    # e*e = f, f*e = e: (ee)e = e but e(ee) = 0.
    broken = Algebra.from_tensor(["e", "f"], [[[0, 1], [0, 0]], [[1, 0], [0, 0]]])
    v = check_associativity(broken)
    assert v and v[0].where == (0, 0, 0)
    assert v[0].lhs != v[0].rhs


def test_right_identities():
    m2 = right_identities(M2)
    assert m2.particular == _vec(1, 0, 0, 1) and m2.directions.dim == 0
    col = right_identities(COL)
    assert col.particular == _vec(1, 0)
    assert subspace_equal(col.directions, span([(0, 1)], 2))
    assert right_identities(ZERO1).is_empty


def test_right_annihilator():
    assert right_annihilator(M2).dim == 0
    assert subspace_equal(right_annihilator(COL), span([(0, 1)], 2))
    zero2 = Algebra.from_table(["a", "b"], {})
    assert right_annihilator(zero2).dim == 2


def test_center():
    assert center(zoo_get("Q3").algebra).dim == 3
    assert subspace_equal(center(M2), span([(1, 0, 0, 1)], 4))
    assert center(COL).dim == 0


def test_unitization():
    u = unitization(ZERO1)
    assert u.dim == 2 and check_associativity(u) == []
    # Q[t]/(t^2) with t = z: t*t = 0, 1 is the unit.
    assert multiply(u, u.basis(0), u.basis(0)) == zeros(2)
    assert is_unital(u)
    um2 = unitization(M2)
    assert right_identities(um2).particular == _vec(0, 0, 0, 0, 1)
    ucol = unitization(COL)
    sol = right_identities(ucol)
    assert sol.particular == _vec(0, 0, 1) and sol.directions.dim == 0


def test_radical_examples():
    assert radical(M2).dim == 0 and is_semisimple(M2)
    qd = zoo_get("Qdual").algebra
    assert subspace_equal(radical(qd), span([(0, 1)], 2))
    assert subspace_equal(radical(T2), span([(0, 1, 0)], 3))
    assert not is_semisimple(T2)
    assert subspace_equal(radical(COL), span([(0, 1)], 2))
    assert radical(ZERO1).dim == 1


def _extra_algebras():
    t3 = Algebra.from_table(["1", "t", "t2"], {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (0, 2): {2: 1}, (2, 0): {2: 1}, (1, 1): {2: 1},
    })
    return {"Q[t]/(t^3)": t3, "unit(colalg2)": unitization(COL), "unit(zero1)": unitization(ZERO1)}


@pytest.mark.parametrize("name", [*zoo_list(), *_extra_algebras()])
def test_radical_matches_nilpotent_ideal_oracle(name):
    alg = _extra_algebras().get(name) or zoo_get(name).algebra
    if alg.dim > 4:
        pytest.skip("oracle limited to dim <= 4")
    sc = [[[sp.Rational(c.numerator, c.denominator) for c in v] for v in row] for row in alg.sc]
    rad = oracles.nilpotent_ideal_radical(sc)
    expected = span([[F(int(x.p), int(x.q)) for x in v] for v in rad], alg.dim)
    assert subspace_equal(radical(alg), expected)
    assert is_semisimple(alg) == (len(rad) == 0)


def test_verify_character():
    q2 = zoo_get("Q2").algebra
    assert verify_character(q2, Character.of([1, 0])) == []
    bad = verify_character(T2, Character.of([1, 0, 1]))
    assert any(v.where == (0, 2) and v.lhs == 0 and v.rhs == 1 for v in bad)
    zero = verify_character(q2, Character.of([0, 0]))
    assert any(v.message == "nonzero required" for v in zero)


def test_q2_characters_among_01_vectors():
    q2 = zoo_get("Q2").algebra
    valid = [c for c in ([0, 0], [1, 0], [0, 1], [1, 1]) if not verify_character(q2, Character.of(c))]
    assert valid == [[1, 0], [0, 1]]


def test_json_roundtrip_and_errors():
    assert algebra_from_json(M2.to_json()) == M2
    broken = {"dim": 2, "labels": ["e", "f"], "sc": [[["0", "1"], ["0", "0"]], [["1", "0"], ["0", "0"]]]}
    with pytest.raises(ValidationError) as exc:
        algebra_from_json(broken)
    assert exc.value.violations
    with pytest.raises(ParseError):
        algebra_from_json({"dim": 1, "sc": [[[0.5]]]})
    with pytest.raises(ValidationError):
        algebra_from_json({"dim": 0, "sc": []})
    with pytest.raises(ValidationError):
        character_from_json({"values": ["1", "1", "0"]}, T2)
    assert character_from_json({"values": ["1", "0", "0"]}, T2) == Character.of([1, 0, 0])


# --- properties ---------------------------------------------------------------

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
ALGS = [zoo_get(n).algebra for n in zoo_list()]


@st.composite
def alg_and_vectors(draw, count):
    alg = draw(st.sampled_from(ALGS))
    vs = [tuple(draw(st.lists(rationals, min_size=alg.dim, max_size=alg.dim))) for _ in range(count)]
    return alg, vs


@given(alg_and_vectors(3), rationals)
def test_multiply_bilinear(data, alpha):
    alg, (x, x2, y) = data
    lhs = multiply(alg, tuple(alpha * a + b for a, b in zip(x, x2)), y)
    rhs = tuple(alpha * p + q for p, q in zip(multiply(alg, x, y), multiply(alg, x2, y)))
    assert lhs == rhs


@pytest.mark.parametrize("name", zoo_list())
def test_annihilator_and_right_identity_samples(name):
    alg = zoo_get(name).algebra
    rng = random.Random(name)
    xs = [random_vector(rng, alg.dim) for _ in range(100)]
    for z in right_annihilator(alg).basis:
        assert all(not any(multiply(alg, x, z)) for x in xs)
    for u in right_identities(alg).sample(4):
        assert all(multiply(alg, x, u) == x for x in xs)


@pytest.mark.parametrize("name", zoo_list())
def test_characters_multiplicative_on_random_pairs(name):
    entry = zoo_get(name)
    rng = random.Random(name)
    for _, chi in entry.characters:
        assert verify_character(entry.algebra, chi) == []
        for _ in range(100):
            x, y = random_vector(rng, entry.algebra.dim), random_vector(rng, entry.algebra.dim)
            assert chi(multiply(entry.algebra, x, y)) == chi(x) * chi(y)
