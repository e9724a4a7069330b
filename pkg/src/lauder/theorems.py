"""Mechanical checks of the structure theory of Jordan derivations on Lau products.

Every claim is checked exactly.  Identities quantified over all of A or B
are (bi)linear in the quantified variables and are checked on basis
vectors; identities quadratic in ``b`` are checked on symmetric basis
pairs through their polarization, which is exhaustive in characteristic 0.

Claim identifiers:

    Closure  every Der_J basis map has zero quadratic defect at random points
    Lem2.1   d maps A into A and d(u, 0) lies in ran(A)
    Thm2.2   decomposition formula and conditions (ii), (iii); converse
    Cor2.3   theta = phi = gamma, or d maps A into ran(A) (zero if A unital
             or semisimple)
    Thm2.4   d is a (theta, phi, gamma)-derivation iff conditions (i)-(iv)
    Cor2.5   Der_J = Der, bijective with Der(B) via d -> d_B
    Thm2.6   the only (eta1, eta2)-centralizing map in Der_J is zero
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import (
    Algebra,
    Character,
    center,
    is_right_identity,
    is_semisimple,
    multiply,
    right_annihilator,
    right_identities,
    two_sided_identity,
    verify_character,
)
from .derivations import (
    LinearMap,
    MapSpace,
    derivation_space,
    generalized_derivation_space,
    generalized_jordan_space,
    jordan_derivation_space,
    quadratic_defect,
    restrict,
)
from .lau import LauContext, lau_multiply
from .linalg import (
    Matrix,
    Vector,
    add,
    is_zero,
    linear_system,
    nullspace,
    orthogonal_constraints,
    random_vector,
    scale,
    span,
    sub,
    unit,
    vector_to_json,
    zeros,
)

PASS = "pass"
FAIL = "fail"
NOT_MET = "hypothesis-not-met"

CLAIMS = ("Closure", "Lem2.1", "Thm2.2", "Cor2.3", "Thm2.4", "Cor2.5", "Thm2.6")

HALF = Fraction(1, 2)


class NotRightIdentityError(ValueError):
    pass


class NotJordanError(ValueError):
    pass


def _enc(x):
    if isinstance(x, tuple):
        return vector_to_json(x)
    if isinstance(x, Fraction):
        return str(x)
    return x


@dataclass(frozen=True)
class Witness:
    input: str
    lhs: object
    rhs: object

    def to_json(self) -> dict:
        return {"input": self.input, "lhs": _enc(self.lhs), "rhs": _enc(self.rhs)}


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    status: str
    witnesses: tuple = ()
    notes: tuple = ()
    parts: tuple = ()

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def part(self, claim_id: str) -> VerificationReport:
        for p in self.parts:
            if p.claim_id == claim_id:
                return p
        raise KeyError(claim_id)

    def tagged(self, tag: str) -> VerificationReport:
        """Copy with ``tag`` appended to every witness input."""
        return replace(
            self,
            witnesses=tuple(replace(w, input=f"{w.input} [{tag}]") for w in self.witnesses),
            parts=tuple(p.tagged(tag) for p in self.parts),
        )

    def to_json(self) -> dict:
        out = {
            "claim_id": self.claim_id,
            "status": self.status,
            "witnesses": [w.to_json() for w in self.witnesses],
            "notes": list(self.notes),
        }
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out


def _status(statuses: Iterable[str]) -> str:
    statuses = list(statuses)
    if FAIL in statuses:
        return FAIL
    if PASS in statuses or not statuses:
        return PASS
    return NOT_MET


def _dedupe(items: Iterable) -> tuple:
    return tuple(dict.fromkeys(items))


def combine(claim_id: str, parts: Sequence[VerificationReport], notes: Sequence[str] = ()) -> VerificationReport:
    return VerificationReport(
        claim_id,
        _status(p.status for p in parts),
        tuple(w for p in parts for w in p.witnesses),
        tuple(notes),
        tuple(parts),
    )


def merge(claim_id: str, reports: Sequence[VerificationReport]) -> VerificationReport:
    """Fold reports of the same claim (e.g. one per map) into one."""
    by_id: dict[str, list] = {}
    for r in reports:
        for p in r.parts:
            by_id.setdefault(p.claim_id, []).append(p)
    return VerificationReport(
        claim_id,
        _status(r.status for r in reports),
        tuple(w for r in reports for w in r.witnesses),
        _dedupe(n for r in reports for n in r.notes),
        tuple(merge(pid, ps) for pid, ps in by_id.items()),
    )


def not_met(claim_id: str, *notes: str) -> VerificationReport:
    return VerificationReport(claim_id, NOT_MET, (), notes)


def judge(claim_id: str, terms: Iterable, notes: Sequence[str] = ()) -> VerificationReport:
    """Pass iff ``lhs == rhs`` for every ``(label, lhs, rhs)`` term."""
    witnesses = tuple(Witness(label, lhs, rhs) for label, lhs, rhs in terms if lhs != rhs)
    return VerificationReport(claim_id, FAIL if witnesses else PASS, witnesses, tuple(notes))


def residual(terms: Iterable) -> list:
    out = []
    for _, lhs, rhs in terms:
        if isinstance(lhs, tuple):
            out.extend(sub(lhs, rhs))
        else:
            out.append(lhs - rhs)
    return out


# --- cached spaces -----------------------------------------------------------

@lru_cache(maxsize=None)
def der_j(ctx: LauContext) -> MapSpace:
    return generalized_jordan_space(ctx)


@lru_cache(maxsize=None)
def der(ctx: LauContext) -> MapSpace:
    return generalized_derivation_space(ctx)


@lru_cache(maxsize=None)
def _alg_der(alg: Algebra) -> MapSpace:
    return derivation_space(alg)


@lru_cache(maxsize=None)
def _alg_jder(alg: Algebra) -> MapSpace:
    return jordan_derivation_space(alg)


@lru_cache(maxsize=None)
def _ran(alg: Algebra):
    return right_annihilator(alg)


def clear_caches() -> None:
    for fn in (der_j, der, _alg_der, _alg_jder, _ran):
        fn.cache_clear()


# --- helpers ------------------------------------------------------------------

def _combo(ctx: LauContext, t=0, p=0, g=0) -> Character:
    """The functional ``t*theta + p*phi + g*gamma``."""
    return Character(
        tuple(t * a + p * b + g * c for a, b, c in zip(ctx.theta.values, ctx.phi.values, ctx.gamma.values))
    )


def canonical_right_identity(A: Algebra) -> Vector | None:
    return right_identities(A).particular


def right_identity_samples(A: Algebra, count: int = 4) -> list[Vector]:
    """The canonical right identity followed by up to ``count`` alternatives."""
    return right_identities(A).sample(count)


def _resolve_u(ctx: LauContext, u) -> Vector | None:
    if u is None:
        return canonical_right_identity(ctx.A)
    u = tuple(u)
    if not is_right_identity(ctx.A, u):
        raise NotRightIdentityError(f"{list(map(str, u))} is not a right identity of A")
    return u


def _maps_or_zero(ctx: LauContext, space: MapSpace) -> list[tuple[str, LinearMap]]:
    if space.dim == 0:
        return [("d=0", LinearMap.zero(ctx.dim))]
    return [(f"d[{s}]", d) for s, d in enumerate(space.basis)]


def _a_basis(ctx):
    return [ctx.A.basis(i) for i in range(ctx.m)]


def _b_basis(ctx):
    return [ctx.B.basis(j) for j in range(ctx.k)]


# --- decomposition -------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    d_A: LinearMap
    d_B: LinearMap
    u: Vector


def decompose(ctx: LauContext, d: LinearMap, u: Sequence, strict: bool = False) -> Decomposition:
    """``d_A(a) = pi_A d(a, 0)`` and ``d_B(b) = pi_B d(0, b)``."""
    u = tuple(u)
    if not is_right_identity(ctx.A, u):
        raise NotRightIdentityError(f"{list(map(str, u))} is not a right identity of A")
    if d.dim != ctx.dim:
        raise ValueError(f"{d.dim}-dim map on a {ctx.dim}-dim product")
    if strict:
        if d not in der_j(ctx):
            raise NotJordanError("map does not satisfy the generalized Jordan identity")
        leak = [i for i, e in enumerate(_a_basis(ctx)) if not is_zero(ctx.proj_B(d(ctx.embed_A(e))))]
        if leak:
            raise AssertionError(f"Jordan map leaks A-basis {leak} into B")
    d_A = LinearMap.from_images([ctx.proj_A(d(ctx.embed_A(e))) for e in _a_basis(ctx)])
    d_B = LinearMap.from_images([ctx.proj_B(d(ctx.embed_B(f))) for f in _b_basis(ctx)])
    return Decomposition(d_A, d_B, u)


def reconstruct(ctx: LauContext, d_A: LinearMap, d_B: LinearMap, u: Sequence) -> LinearMap:
    """The map ``(a, b) -> (d_A(a) + (2t-p-g)(b) d_A(u) - (p+g)(d_B(b))/2 u, d_B(b))``."""
    c1 = _combo(ctx, 2, -1, -1)
    s = _combo(ctx, 0, 1, 1)
    dAu = d_A(u)
    images = [ctx.embed_A(d_A(e)) for e in _a_basis(ctx)]
    for f in _b_basis(ctx):
        dBf = d_B(f)
        head = sub(scale(c1(f), dAu), scale(HALF * s(dBf), u))
        images.append(head + dBf)
    return LinearMap.from_images(images)


# --- Lemma 2.1 ----------------------------------------------------------------

def check_lemma_2_1(ctx: LauContext, d: LinearMap, u=None) -> VerificationReport:
    u = _resolve_u(ctx, u)
    if u is None:
        return not_met("Lem2.1", "A has no right identity")
    terms = [
        (f"pi_B d({ctx.A.labels[i]}, 0)", ctx.proj_B(d(ctx.embed_A(e))), zeros(ctx.k))
        for i, e in enumerate(_a_basis(ctx))
    ]
    du = d(ctx.embed_A(u))
    terms.append(("pi_B d(u, 0)", ctx.proj_B(du), zeros(ctx.k)))
    z = ctx.proj_A(du)
    terms += [
        (f"{ctx.A.labels[i]} * pi_A d(u, 0)", multiply(ctx.A, e, z), zeros(ctx.m))
        for i, e in enumerate(_a_basis(ctx))
    ]
    return judge("Lem2.1", terms)


# --- Theorem 2.2 --------------------------------------------------------------

def thm22_ii_terms(ctx, dA, dB, u):
    c1 = _combo(ctx, 2, -1, -1)
    s = _combo(ctx, 0, 1, 1)
    dAu = dA(u)
    for (i, e), (j, f) in itertools.product(enumerate(_a_basis(ctx)), enumerate(_b_basis(ctx))):
        lhs = scale(c1(f), sub(dA(e), multiply(ctx.A, dAu, e)))
        rhs = scale(HALF * s(dB(f)), sub(e, multiply(ctx.A, u, e)))
        yield (f"(ii) a={ctx.A.labels[i]}, b={ctx.B.labels[j]}", lhs, rhs)


def thm22_iii_terms(ctx, dA, dB, u):
    tp = _combo(ctx, 1, -1, 0)
    tg = _combo(ctx, 1, 0, -1)
    gp = _combo(ctx, 0, -1, 1)
    dAu = dA(u)
    fs = _b_basis(ctx)
    for i, j in itertools.combinations_with_replacement(range(ctx.k), 2):
        fi, fj = fs[i], fs[j]
        pair = f"b~({ctx.B.labels[i]},{ctx.B.labels[j]})"
        c = tp(fi) * tg(fj) + tp(fj) * tg(fi)
        yield (f"(iii.1) {pair}", scale(c, dAu), zeros(ctx.m))
        c = gp(fi) * gp(dB(fj)) + gp(fj) * gp(dB(fi))
        yield (f"(iii.2) {pair}", scale(c, u), zeros(ctx.m))


def check_theorem_2_2(ctx: LauContext, d: LinearMap, u=None) -> VerificationReport:
    u = _resolve_u(ctx, u)
    if u is None:
        return not_met("Thm2.2", "A has no right identity")
    dec = decompose(ctx, d, u)
    dA, dB = dec.d_A, dec.d_B
    rec = reconstruct(ctx, dA, dB, u)
    labels = ctx.product.labels
    n = ctx.dim
    part_i = judge(
        "Thm2.2.i",
        ((f"d({labels[c]})", d(unit(n, c)), rec(unit(n, c))) for c in range(n)),
    )
    part_ii = judge("Thm2.2.ii", thm22_ii_terms(ctx, dA, dB, u))
    part_iii = judge(
        "Thm2.2.iii",
        thm22_iii_terms(ctx, dA, dB, u),
        ["quadratic in b: checked on polarized basis pairs"],
    )
    uniq = [
        ("d_A in Der_J(A)", dA in _alg_jder(ctx.A), True),
        ("d_B in Der_J(B)", dB in _alg_jder(ctx.B), True),
    ]
    uniq += [
        (f"pi_B d({ctx.A.labels[i]}, 0)", ctx.proj_B(d(ctx.embed_A(e))), zeros(ctx.k))
        for i, e in enumerate(_a_basis(ctx))
    ]
    part_u = judge(
        "Thm2.2.uniqueness",
        uniq,
        ["(i) at b=0 forces d_A = pi_A d(., 0); at a=0 forces d_B = pi_B d(0, .)"],
    )
    return combine("Thm2.2", [part_i, part_ii, part_iii, part_u])


def theorem_2_2_pair_space(ctx: LauContext, u: Sequence):
    """Pairs ``(d_A, d_B)`` of Jordan derivations satisfying (ii) and (iii).

    Returned as a subspace of ``Q^(m^2 + k^2)`` (flattened d_A then d_B).
    """
    m2, k2 = ctx.m ** 2, ctx.k ** 2
    KA = orthogonal_constraints(_alg_jder(ctx.A).subspace)
    KB = orthogonal_constraints(_alg_jder(ctx.B).subspace)

    def res(v):
        dA = LinearMap.from_flat(v[:m2], ctx.m)
        dB = LinearMap.from_flat(v[m2:], ctx.k)
        out = list(KA.apply(v[:m2])) + list(KB.apply(v[m2:]))
        out += residual(thm22_ii_terms(ctx, dA, dB, u))
        out += residual(thm22_iii_terms(ctx, dA, dB, u))
        return out

    return nullspace(linear_system(res, m2 + k2))


def check_theorem_2_2_converse(ctx: LauContext, u=None) -> VerificationReport:
    """Formula (i) is a bijection from the pair space onto Der_J."""
    u = _resolve_u(ctx, u)
    if u is None:
        return not_met("Thm2.2.converse", "A has no right identity")
    pairs = theorem_2_2_pair_space(ctx, u)
    space = der_j(ctx)
    m2 = ctx.m ** 2
    images = [
        reconstruct(ctx, LinearMap.from_flat(v[:m2], ctx.m), LinearMap.from_flat(v[m2:], ctx.k), u)
        for v in pairs.basis
    ]
    terms = [("dim pair space vs dim Der_J", pairs.dim, space.dim)]
    terms += [(f"formula(pair[{s}]) in Der_J", d in space, True) for s, d in enumerate(images)]
    terms.append(("rank of formula images", span([d.flat() for d in images], ctx.dim ** 2).dim, pairs.dim))
    return judge("Thm2.2.converse", terms)


# --- Corollary 2.3 -----------------------------------------------------------

def check_corollary_2_3(ctx: LauContext, space: MapSpace | None = None, u=None) -> VerificationReport:
    u = _resolve_u(ctx, u)
    if u is None:
        return not_met("Cor2.3", "A has no right identity")
    if space is None:
        space = der_j(ctx)
    if ctx.characters_equal():
        return VerificationReport("Cor2.3", PASS, (), ("dichotomy left branch: theta = phi = gamma",))
    ran = _ran(ctx.A)
    terms_i, terms_ii = [], []
    for tag, d in _maps_or_zero(ctx, space):
        for i, e in enumerate(_a_basis(ctx)):
            img = d(ctx.embed_A(e))
            where = f"{tag}({ctx.A.labels[i]}, 0)"
            terms_i.append((f"pi_B {where}", ctx.proj_B(img), zeros(ctx.k)))
            terms_i.append((f"pi_A {where} in ran(A)", ran.contains_vector(ctx.proj_A(img)), True))
            terms_ii.append((where, img, zeros(ctx.dim)))
    part_i = judge("Cor2.3.i", terms_i, ["characters differ: right branch"])
    unital = two_sided_identity(ctx.A) is not None
    if unital or is_semisimple(ctx.A):
        part_ii = judge("Cor2.3.ii", terms_ii, ["A unital" if unital else "A semisimple"])
    else:
        part_ii = not_met("Cor2.3.ii", "A neither unital nor semisimple")
    return combine("Cor2.3", [part_i, part_ii])


# --- Theorem 2.4 -------------------------------------------------------------

def thm24_terms(ctx: LauContext, dA: LinearMap, dB: LinearMap, u: Sequence) -> dict:
    A, B = ctx.A, ctx.B
    es, fs = _a_basis(ctx), _b_basis(ctx)
    tp, tg, pg = _combo(ctx, 1, -1, 0), _combo(ctx, 1, 0, -1), _combo(ctx, 0, 1, -1)
    phi, gamma = ctx.phi, ctx.gamma
    dAu = dA(u)
    out = {"i": [], "ii": [], "iii": [], "iv": []}
    for alg, dd, basis, tag in ((A, dA, es, "d_A"), (B, dB, fs, "d_B")):
        for (i, x), (j, y) in itertools.product(enumerate(basis), repeat=2):
            out["i"].append((
                f"{tag}({alg.labels[i]}{alg.labels[j]})",
                dd(multiply(alg, x, y)),
                add(multiply(alg, dd(x), y), multiply(alg, x, dd(y))),
            ))
    for (i, e), (j, f) in itertools.product(enumerate(es), enumerate(fs)):
        where = f"a={A.labels[i]}, b={B.labels[j]}"
        out["ii"].append((f"(theta-phi)(b) d_A(a), {where}", scale(tp(f), dA(e)), zeros(ctx.m)))
        out["ii"].append((
            f"(theta-gamma)(b)(d_A(a) - d_A(u)a), {where}",
            scale(tg(f), sub(dA(e), multiply(A, dAu, e))),
            zeros(ctx.m),
        ))
    for (i, f), (j, y) in itertools.product(enumerate(fs), repeat=2):
        out["iii"].append((
            f"phi(d_B(b))(phi-gamma)(y)u, b={B.labels[i]}, y={B.labels[j]}",
            scale(phi(dB(f)) * pg(y), u),
            zeros(ctx.m),
        ))
    for (i, f), (j, e) in itertools.product(enumerate(fs), enumerate(es)):
        out["iii"].append((
            f"phi(d_B(b))(a-ua), b={B.labels[i]}, a={A.labels[j]}",
            scale(phi(dB(f)), sub(e, multiply(A, u, e))),
            zeros(ctx.m),
        ))
    for i, f in enumerate(fs):
        out["iv"].append((f"gamma d_B({B.labels[i]}) vs phi d_B", gamma(dB(f)), phi(dB(f))))
    return out


def _no_identity_terms(ctx, d, dA, dB, u):
    tg = _combo(ctx, 1, 0, -1)
    dAu = dA(u)
    for i, e in enumerate(_a_basis(ctx)):
        yield (f"d({ctx.A.labels[i]}, 0)", d(ctx.embed_A(e)), ctx.embed_A(dA(e)))
    for j, f in enumerate(_b_basis(ctx)):
        yield (f"d(0, {ctx.B.labels[j]})", d(ctx.embed_B(f)), scale(tg(f), dAu) + dB(f))


def _derivation_witnesses(ctx, d):
    n = ctx.dim
    labels = ctx.product.labels
    for i, j in itertools.product(range(n), repeat=2):
        X, Y = unit(n, i), unit(n, j)
        yield (
            f"d({labels[i]} ._theta {labels[j]})",
            d(lau_multiply(ctx, "theta", X, Y)),
            add(lau_multiply(ctx, "phi", d(X), Y), lau_multiply(ctx, "gamma", X, d(Y))),
        )


_REDUNDANCY_NOTE = "(iii) checked as displayed, including phi(d_B(b))(phi-gamma)(y)u = 0 alongside (iv)"


def check_theorem_2_4(ctx: LauContext, d: LinearMap, u=None) -> VerificationReport:
    u = _resolve_u(ctx, u)
    if u is None:
        return not_met("Thm2.4", "A has no right identity")
    if d not in der_j(ctx):
        return not_met("Thm2.4", "d is not in Der_J")
    dec = decompose(ctx, d, u)
    conds = thm24_terms(ctx, dec.d_A, dec.d_B, u)
    failing = [k for k, ts in conds.items() if any(l != r for _, l, r in ts)]
    in_der = d in der(ctx)
    notes = [
        "conditions (i)-(iv) hold" if not failing else f"conditions failing: {', '.join(failing)}",
        _REDUNDANCY_NOTE,
    ]
    if in_der:
        forward = combine(
            "Thm2.4.forward",
            [judge(f"Thm2.4.{k}", ts) for k, ts in conds.items()],
        )
    else:
        forward = not_met("Thm2.4.forward", "d is not a (theta, phi, gamma)-derivation")
    if not failing:
        backward = judge("Thm2.4.backward", _derivation_witnesses(ctx, d))
    else:
        backward = not_met("Thm2.4.backward", "conditions (i)-(iv) do not all hold")
    if two_sided_identity(ctx.A) is not None:
        formula = not_met("Thm2.4.no-identity", "A has an identity")
    elif not in_der:
        formula = not_met("Thm2.4.no-identity", "d is not a (theta, phi, gamma)-derivation")
    else:
        formula = judge("Thm2.4.no-identity", _no_identity_terms(ctx, d, dec.d_A, dec.d_B, u))
    return combine("Thm2.4", [forward, backward, formula], notes)


def theorem_2_4_subspace(ctx: LauContext, u: Sequence) -> MapSpace:
    """``{d in Der_J : (i)-(iv) hold}``; the conditions are linear in d."""

    def res(d):
        dec = decompose(ctx, d, u)
        return [x for ts in thm24_terms(ctx, dec.d_A, dec.d_B, u).values() for x in residual(ts)]

    return restrict(der_j(ctx), res)


def check_theorem_2_4_tightness(ctx: LauContext, u=None) -> VerificationReport:
    u = _resolve_u(ctx, u)
    if u is None:
        return not_met("Thm2.4.tightness", "A has no right identity")
    cond = theorem_2_4_subspace(ctx, u)
    target = der(ctx)
    return judge(
        "Thm2.4.tightness",
        [
            ("dim {d in Der_J : (i)-(iv)} vs dim Der", cond.dim, target.dim),
            ("{d in Der_J : (i)-(iv)} == Der", cond == target, True),
        ],
    )


# --- Corollary 2.5 -----------------------------------------------------------

def corollary_2_5_hypotheses(ctx: LauContext) -> list[str]:
    missing = []
    if two_sided_identity(ctx.A) is None:
        missing.append("A has no identity")
    if not is_semisimple(ctx.B):
        missing.append("B is not semisimple")
    if ctx.theta == ctx.phi:
        missing.append("theta = phi")
    if ctx.gamma != ctx.phi:
        missing.append("gamma != phi")
    return missing


def check_corollary_2_5(ctx: LauContext) -> VerificationReport:
    missing = corollary_2_5_hypotheses(ctx)
    if missing:
        return not_met("Cor2.5", *missing)
    jd, dd = der_j(ctx), der(ctx)
    der_b = _alg_der(ctx.B)
    equal = judge(
        "Cor2.5.equal",
        [("dim Der_J vs dim Der", jd.dim, dd.dim), ("Der_J == Der", jd == dd, True)],
    )
    u = canonical_right_identity(ctx.A)
    d_bs = [decompose(ctx, d, u).d_B for d in jd.basis]
    terms = [(f"d_B of Der_J basis [{s}] in Der(B)", dB in der_b, True) for s, dB in enumerate(d_bs)]
    terms.append(("rank of d -> d_B images", MapSpace.spanned_by(d_bs, ctx.k).dim, jd.dim))
    terms.append(("dim Der_J vs dim Der(B)", jd.dim, der_b.dim))
    bij = judge("Cor2.5.bijection", terms, ["'= Der(B)' read as the linear bijection d -> d_B"])
    return combine("Cor2.5", [equal, bij])


# --- centralizing maps, Theorem 2.6 ------------------------------------------

def _center_constraints(ctx: LauContext) -> Matrix:
    KA = orthogonal_constraints(center(ctx.A))
    KB = orthogonal_constraints(center(ctx.B))
    rows = [r + zeros(ctx.k) for r in KA.rows] + [zeros(ctx.m) + r for r in KB.rows]
    return Matrix(tuple(rows), ctx.dim)


def centralizing_subspace(ctx: LauContext, space: MapSpace, eta1: Character, eta2: Character) -> MapSpace:
    """Maps in ``space`` whose (eta1, eta2)-bracket with X lies in Z(A) x Z(B)."""
    K = _center_constraints(ctx)
    n = ctx.dim
    es = [unit(n, i) for i in range(n)]

    def res(d):
        out = []
        dd = [d(e) for e in es]
        for i, j in itertools.combinations_with_replacement(range(n), 2):
            X, Y, dX, dY = es[i], es[j], dd[i], dd[j]
            br = add(lau_multiply(ctx, eta1, dX, Y), lau_multiply(ctx, eta1, dY, X))
            br = sub(br, add(lau_multiply(ctx, eta2, X, dY), lau_multiply(ctx, eta2, Y, dX)))
            out.extend(K.apply(br))
        return out

    return restrict(space, res)


def theorem_2_6_hypotheses(ctx: LauContext) -> list[str]:
    missing = []
    if not is_semisimple(ctx.B):
        missing.append("B is not semisimple")
    if ctx.theta == ctx.phi:
        missing.append("theta = phi")
    if right_identities(ctx.A).is_empty:
        missing.append("A has no right identity")
    return missing


def check_theorem_2_6(ctx: LauContext, eta1: Character, eta2: Character) -> VerificationReport:
    for name, eta in (("eta1", eta1), ("eta2", eta2)):
        if verify_character(ctx.B, eta):
            raise ValueError(f"{name} is not a nonzero multiplicative functional on B")
    missing = theorem_2_6_hypotheses(ctx)
    if missing:
        return not_met("Thm2.6", *missing)
    cz = centralizing_subspace(ctx, der_j(ctx), eta1, eta2)
    terms = [("dim centralizing subspace", cz.dim, 0)]
    terms += [(f"centralizing map [{s}] is zero", d.is_zero(), True) for s, d in enumerate(cz.basis)]
    return judge("Thm2.6", terms)


# --- closure ---------------------------------------------------------------

def check_closure(ctx: LauContext, space: MapSpace | None = None, seed: int = 0, points: int = 200) -> VerificationReport:
    if space is None:
        space = der_j(ctx)
    rng = random.Random(seed)
    xs = [random_vector(rng, ctx.dim) for _ in range(points)]
    terms = (
        (f"{tag} at X[{t}]", quadratic_defect(ctx, d, X), zeros(ctx.dim))
        for tag, d in _maps_or_zero(ctx, space)
        for t, X in enumerate(xs)
    )
    return judge("Closure", terms, [f"{points} random points, seed {seed}"])


# --- whole-context runs -----------------------------------------------------

def context_digest(ctx: LauContext) -> str:
    payload = {
        "A": ctx.A.to_json(),
        "B": ctx.B.to_json(),
        "theta": ctx.theta.to_json(),
        "phi": ctx.phi.to_json(),
        "gamma": ctx.gamma.to_json(),
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _u_tag(u: Vector) -> str:
    return "u=(" + ",".join(map(str, u)) + ")"


def run_claim(
    ctx: LauContext,
    claim: str,
    *,
    seed: int = 0,
    etas: Sequence[tuple[str, Character]] | None = None,
    u_samples: int = 4,
) -> VerificationReport:
    if claim not in CLAIMS:
        raise KeyError(f"unknown claim {claim!r}; known: {', '.join(CLAIMS)}")
    if claim == "Closure":
        return check_closure(ctx, seed=seed)
    if claim == "Cor2.5":
        return check_corollary_2_5(ctx)
    if claim == "Thm2.6":
        if etas is None:
            etas = [(f"chi{i}", c) for i, c in enumerate(_dedupe((ctx.theta, ctx.phi, ctx.gamma)))]
        reports = [
            check_theorem_2_6(ctx, e1, e2).tagged(f"eta1={n1}, eta2={n2}")
            for (n1, e1), (n2, e2) in itertools.product(etas, repeat=2)
        ]
        return merge("Thm2.6", reports)
    us = right_identity_samples(ctx.A, u_samples)
    if not us:
        return not_met(claim, "A has no right identity")
    maps = _maps_or_zero(ctx, der_j(ctx))
    if claim == "Cor2.3":
        return check_corollary_2_3(ctx, der_j(ctx), us[0])
    if claim == "Lem2.1":
        return merge("Lem2.1", [
            check_lemma_2_1(ctx, d, u).tagged(f"{tag}, {_u_tag(u)}") for u in us for tag, d in maps
        ])
    if claim == "Thm2.2":
        reports = [check_theorem_2_2(ctx, d, u).tagged(f"{tag}, {_u_tag(u)}") for u in us for tag, d in maps]
        conv = [check_theorem_2_2_converse(ctx, u).tagged(_u_tag(u)) for u in us]
        return merge("Thm2.2", [*reports, combine("Thm2.2", conv)])
    # Thm2.4
    u = us[0]
    reports = [check_theorem_2_4(ctx, d, u).tagged(tag) for tag, d in maps]
    tight = check_theorem_2_4_tightness(ctx, u)
    return merge("Thm2.4", [*reports, combine("Thm2.4", [tight])])


def verify_context(
    ctx: LauContext,
    claims: Sequence[str] | None = None,
    *,
    seed: int = 0,
    etas: Sequence[tuple[str, Character]] | None = None,
) -> dict:
    claims = list(CLAIMS) if claims is None else list(claims)
    for c in claims:
        if c not in CLAIMS:
            raise KeyError(f"unknown claim {c!r}; known: {', '.join(CLAIMS)}")
    ordered = [c for c in CLAIMS if c in claims]
    return {
        "claims": [run_claim(ctx, c, seed=seed, etas=etas).to_json() for c in ordered],
        "context_digest": context_digest(ctx),
    }
