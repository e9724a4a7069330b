"""Acceptance criteria 1-10; each test records one pass/fail summary line."""

import contextlib
import random
import time

import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from lauder.algebra import is_semisimple, right_identities, two_sided_identity, unitization
from lauder.cli import main
from lauder.derivations import (
    derivation_space,
    generalized_derivation_space,
    generalized_jordan_space,
    jordan_derivation_space,
    quadratic_defect,
)
from lauder.linalg import random_vector, zeros
from lauder.theorems import (
    PASS,
    _ran,
    centralizing_subspace,
    check_corollary_2_3,
    check_corollary_2_5,
    check_lemma_2_1,
    check_theorem_2_2,
    check_theorem_2_2_converse,
    check_theorem_2_4,
    check_theorem_2_4_tightness,
    clear_caches,
    decompose,
    der,
    der_j,
    reconstruct,
    right_identity_samples,
    theorem_2_4_subspace,
)
from lauder.zoo import CONTEXT_SPECS, zoo_contexts, zoo_get


@contextlib.contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        line = f"[FAIL] {number:2d}. {title}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"[PASS] {number:2d}. {title} ({time.perf_counter() - start:.2f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)


def _with_u(ctxs):
    return [(n, c) for n, c in ctxs if not right_identities(c.A).is_empty]


@pytest.fixture(scope="module")
def ctxs():
    clear_caches()
    return zoo_contexts()


def test_01_closure(ctxs):
    with criterion(1, "closure of generalized Jordan spaces at 200 random points, < 10 s"):
        start = time.perf_counter()
        assert len(ctxs) >= 10
        checked = 0
        for name, ctx in ctxs:
            rng = random.Random(f"closure:{name}")
            xs = [random_vector(rng, ctx.dim) for _ in range(200)]
            for d in generalized_jordan_space(ctx).basis:
                for X in xs:
                    assert quadratic_defect(ctx, d, X) == zeros(ctx.dim), (name, X)
                checked += 1
        assert checked > 0
        assert time.perf_counter() - start < 10


def test_02_lemma(ctxs):
    with criterion(2, "lemma on every Der_J basis map for canonical u and 4 alternatives"):
        for name, ctx in _with_u(ctxs):
            us = right_identity_samples(ctx.A, 4)
            assert us[0] == right_identities(ctx.A).particular
            if right_identities(ctx.A).directions.dim:
                assert len(us) == 5
            for u in us:
                for d in der_j(ctx).basis:
                    r = check_lemma_2_1(ctx, d, u)
                    assert r.status == PASS, (name, u, r.to_json())


def test_03_reconstruction(ctxs):
    with criterion(3, "reconstruction formula, pair conditions, pair-space dimension"):
        for name, ctx in _with_u(ctxs):
            for u in right_identity_samples(ctx.A, 4):
                for d in der_j(ctx).basis:
                    dec = decompose(ctx, d, u, strict=True)
                    assert reconstruct(ctx, dec.d_A, dec.d_B, u) == d, name
                    r = check_theorem_2_2(ctx, d, u)
                    assert r.status == PASS, (name, r.to_json())
                    assert r.part("Thm2.2.ii").status == PASS
                    assert r.part("Thm2.2.iii").status == PASS
                conv = check_theorem_2_2_converse(ctx, u)
                assert conv.status == PASS, (name, conv.to_json())


def test_04_dichotomy(ctxs):
    with criterion(4, "A-block images land in ran(A) x {0}; zero for unital or semisimple A"):
        seen = 0
        for name, ctx in _with_u(ctxs):
            if ctx.characters_equal():
                continue
            ran = _ran(ctx.A)
            vanish = two_sided_identity(ctx.A) is not None or is_semisimple(ctx.A)
            for d in der_j(ctx).basis:
                for i in range(ctx.m):
                    img = d(ctx.embed_A(ctx.A.basis(i)))
                    assert ctx.proj_B(img) == zeros(ctx.k), name
                    assert ran.contains_vector(ctx.proj_A(img)), name
                    if vanish:
                        assert img == zeros(ctx.dim), name
            assert check_corollary_2_3(ctx).status == PASS
            seen += 1
        assert seen >= 5


def test_05_derivation_characterization(ctxs):
    with criterion(5, "Der equals {d in Der_J : (i)-(iv)}; no-identity formula on colalg2"):
        for name, ctx in _with_u(ctxs):
            u = right_identities(ctx.A).particular
            assert theorem_2_4_subspace(ctx, u) == der(ctx), name
            assert check_theorem_2_4_tightness(ctx).status == PASS
        colalg = [(n, c) for n, c in ctxs if CONTEXT_SPECS[n][0] == "colalg2"]
        assert colalg
        for name, ctx in colalg:
            for d in der(ctx).basis:
                part = check_theorem_2_4(ctx, d).part("Thm2.4.no-identity")
                assert part.status == PASS, (name, part.to_json())


def test_06_cor25(ctxs):
    with criterion(6, "Der_J = Der bijecting onto Der(B) = 0 on cor25 contexts"):
        by_name = dict(ctxs)
        for name, b in (("cor25-M2-Q2", "Q2"), ("cor25-M2-Q3", "Q3")):
            ctx = by_name[name]
            assert der_j(ctx) == der(ctx)
            assert check_corollary_2_5(ctx).status == PASS
            assert oracles.derivation_dim(oracles.model_sc(b)) == 0
            assert derivation_space(zoo_get(b).algebra).dim == 0
            assert der_j(ctx).dim == 0


def test_07_centralizing(ctxs):
    with criterion(7, "centralizing maps vanish when B is semisimple and theta != phi"):
        seen = 0
        for name, ctx in _with_u(ctxs):
            if not is_semisimple(ctx.B) or ctx.theta == ctx.phi:
                continue
            chars = [c for _, c in zoo_get(CONTEXT_SPECS[name][1]).characters]
            for e1 in chars:
                for e2 in chars:
                    assert centralizing_subspace(ctx, der_j(ctx), e1, e2).dim == 0, name
            seen += 1
        assert seen >= 5


def test_08_unitization(ctxs):
    with criterion(8, "B = Q, theta = id recovers the unitization's classic spaces"):
        by_name = dict(ctxs)
        for a in ("M2", "T2", "colalg2"):
            ctx = by_name[f"unitization-{a}"]
            U = unitization(zoo_get(a).algebra)
            # Same basis order: A first, then the adjoined unit.
            assert ctx.product.sc == U.sc
            assert generalized_jordan_space(ctx) == jordan_derivation_space(U)
            assert generalized_derivation_space(ctx) == derivation_space(U)
            usc = oracles.unitization_sc(oracles.model_sc(a))
            assert generalized_derivation_space(ctx).dim == oracles.derivation_dim(usc)
            assert generalized_jordan_space(ctx).dim == oracles.derivation_dim(usc, jordan=True)


GOLDEN = {"M2": 3, "Q2": 0, "Qdual": 1, "T2": 2}


def test_09_oracle_dims():
    with criterion(9, "golden oracle dimensions"):
        for name, dim in GOLDEN.items():
            assert derivation_space(zoo_get(name).algebra).dim == dim, name
            assert oracles.derivation_dim(oracles.model_sc(name)) == dim, name
        m2 = zoo_get("M2").algebra
        assert jordan_derivation_space(m2) == derivation_space(m2)


def test_10_determinism(tmp_path, capsys):
    with criterion(10, "byte-identical verify reports on every context, < 60 s"):
        start = time.perf_counter()
        for name in CONTEXT_SPECS:
            blobs = []
            for run in range(2):
                clear_caches()
                out = tmp_path / f"{name}.{run}.json"
                code = main(["verify", "--ctx", name, "--allow-vacuous", "--out", str(out)])
                assert code == 0, name
                blobs.append(out.read_bytes())
            assert blobs[0] == blobs[1], name
        capsys.readouterr()
        assert time.perf_counter() - start < 60
