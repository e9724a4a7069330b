"""``lauder`` command line.

Exit codes: 0 pass, 1 claim failure, 2 input/spec error, 3 parse error,
4 hypothesis-not-met without ``--allow-vacuous``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra import (
    Algebra,
    Character,
    ParseError,
    ValidationError,
    algebra_from_json,
    character_from_json,
    load_json,
)
from .derivations import (
    derivation_space,
    generalized_derivation_space,
    generalized_jordan_space,
    jordan_derivation_space,
)
from .lau import LauContext, LauError, lau
from .theorems import CLAIMS, FAIL, NOT_MET, verify_context
from .zoo import CONTEXT_SPECS, context_spec, zoo_get, zoo_list

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PARSE, EXIT_VACUOUS = 0, 1, 2, 3, 4
DEFAULT_SEED = 20240601


class SpecError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(obj, out: str | None) -> None:
    text = dumps(obj)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: Path):
    if not path.is_file():
        raise SpecError(f"no such file: {path}")
    return load_json(path)


def load_algebra(src: str, base: Path = Path(".")) -> tuple[Algebra, dict]:
    """Zoo name or JSON path -> (algebra, {character name: Character})."""
    try:
        entry = zoo_get(src)
    except KeyError:
        alg = algebra_from_json(_read(base / src))
        return alg, {}
    return entry.algebra, dict(entry.characters)


def load_character(src, B: Algebra, named: dict, base: Path = Path(".")) -> Character:
    if isinstance(src, dict):
        return character_from_json(src, require_nonzero=False)
    if src in named:
        return named[src]
    return character_from_json(_read(base / src), require_nonzero=False)


def build_context(a, b, theta, phi=None, gamma=None, base: Path = Path(".")) -> tuple[LauContext, dict]:
    if theta is None:
        raise SpecError("theta is required")
    A, _ = load_algebra(a, base)
    B, named = load_algebra(b, base)
    th = load_character(theta, B, named, base)
    if th.is_zero():
        raise SpecError("theta must be nonzero (the theta = 0 case is the plain direct product)")
    ph = load_character(phi, B, named, base) if phi is not None else th
    ga = load_character(gamma, B, named, base) if gamma is not None else ph
    return lau(A, B, th, ph, ga), named


def load_context_spec(ref: str) -> tuple[LauContext, dict, dict]:
    """Zoo context name or ctx-spec JSON path -> (ctx, B's named characters, spec)."""
    if ref in CONTEXT_SPECS:
        spec, base = context_spec(ref), Path(".")
    else:
        path = Path(ref)
        spec, base = _read(path), path.parent
        if not isinstance(spec, dict) or "a" not in spec or "b" not in spec:
            raise ParseError("context spec needs 'a', 'b' and 'theta'")
    ctx, named = build_context(
        spec["a"], spec["b"], spec.get("theta"), spec.get("phi"), spec.get("gamma"), base
    )
    return ctx, named, spec


def lau_payload(ctx: LauContext) -> dict:
    return {
        "algebra": ctx.product.to_json(),
        "blocks": {
            "A": {"offset": 0, "dim": ctx.m, "labels": list(ctx.A.labels)},
            "B": {"offset": ctx.m, "dim": ctx.k, "labels": list(ctx.B.labels)},
        },
        "theta": ctx.theta.to_json()["values"],
        "phi": ctx.phi.to_json()["values"],
        "gamma": ctx.gamma.to_json()["values"],
    }


# --- commands -------------------------------------------------------------

def cmd_check(args) -> int:
    obj = _read(Path(args.path))
    if isinstance(obj, dict) and "sc" in obj:
        alg = algebra_from_json(obj)
        print(f"ok: {alg.dim}-dim associative algebra")
    elif isinstance(obj, dict) and "values" in obj:
        alg = load_algebra(args.algebra)[0] if args.algebra else None
        chi = character_from_json(obj, alg)
        print(f"ok: character of length {chi.algebra_dim}")
    else:
        raise ParseError("neither algebra JSON ('sc') nor character JSON ('values')")
    return EXIT_OK


def cmd_lau(args) -> int:
    ctx, _ = build_context(args.a, args.b, args.theta, args.phi, args.gamma)
    _emit(lau_payload(ctx), args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    if args.kind in ("der", "jder"):
        if not args.algebra:
            raise SpecError(f"--kind {args.kind} needs --algebra")
        alg, _ = load_algebra(args.algebra)
        space = (derivation_space if args.kind == "der" else jordan_derivation_space)(alg)
    else:
        if args.ctx:
            ctx = load_context_spec(args.ctx)[0]
        else:
            if not (args.a and args.b):
                raise SpecError(f"--kind {args.kind} needs --ctx or --a/--b/--theta")
            ctx, _ = build_context(args.a, args.b, args.theta, args.phi, args.gamma)
        fn = generalized_derivation_space if args.kind == "lau-der" else generalized_jordan_space
        space = fn(ctx)
    _emit(space.to_json(), args.out)
    return EXIT_OK


def _seed() -> int:
    raw = os.environ.get("LAUDER_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise SpecError(f"LAUDER_SEED must be an integer, got {raw!r}") from None


def cmd_verify(args) -> int:
    claims = None
    if args.claims:
        claims = [c.strip() for c in args.claims.split(",") if c.strip()]
        unknown = [c for c in claims if c not in CLAIMS]
        if unknown:
            raise SpecError(f"unknown claim(s) {', '.join(unknown)}; known: {', '.join(CLAIMS)}")
    ctx, named, spec = load_context_spec(args.ctx)
    etas = None
    if spec.get("etas"):
        etas = [(str(e), load_character(e, ctx.B, named)) for e in spec["etas"]]
    elif named:
        etas = sorted(named.items())
    report = verify_context(ctx, claims, seed=_seed(), etas=etas)
    _emit(report, args.out)
    statuses = [c["status"] for c in report["claims"]]
    for c in report["claims"]:
        print(f"{c['claim_id']:8s} {c['status']}", file=sys.stderr)
    if FAIL in statuses:
        return EXIT_FAIL
    if NOT_MET in statuses and not args.allow_vacuous:
        return EXIT_VACUOUS
    return EXIT_OK


def cmd_zoo(args) -> int:
    if args.zoo_cmd == "list":
        for name in zoo_list():
            entry = zoo_get(name)
            print(f"{name:8s} dim={entry.algebra.dim} tags={','.join(sorted(entry.tags))}")
        for name in CONTEXT_SPECS:
            print(f"context {name}")
        return EXIT_OK
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.name in CONTEXT_SPECS:
        spec = context_spec(args.name)
        for key in ("a", "b"):
            (out / f"{spec[key]}.json").write_text(dumps(zoo_get(spec[key]).algebra.to_json()))
        B = zoo_get(spec["b"])
        files = {}
        for key in ("theta", "phi", "gamma"):
            fname = f"{spec['b']}.{spec[key]}.json"
            (out / fname).write_text(dumps(B.character(spec[key]).to_json()))
            files[key] = fname
        ctx_spec = {"a": f"{spec['a']}.json", "b": f"{spec['b']}.json", **files}
        (out / f"{args.name}.ctx.json").write_text(dumps(ctx_spec))
        return EXIT_OK
    try:
        entry = zoo_get(args.name)
    except KeyError as exc:
        raise SpecError(str(exc.args[0])) from None
    (out / f"{entry.name}.json").write_text(dumps(entry.algebra.to_json()))
    for key, chi in entry.characters:
        (out / f"{entry.name}.{key}.json").write_text(dumps(chi.to_json()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lauder",
        description="Derivations and Jordan derivations on theta-Lau products.",
        epilog="Sources may be zoo names or JSON paths. phi defaults to theta and gamma to phi. "
        "LAUDER_SEED fixes the random points used by the Closure check.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("check", help="validate an algebra or character JSON file")
    c.add_argument("path")
    c.add_argument("--algebra", help="algebra to check a character against")
    c.set_defaults(func=cmd_check)

    def ctx_flags(q, required):
        q.add_argument("--a", required=required)
        q.add_argument("--b", required=required)
        q.add_argument("--theta", required=required)
        q.add_argument("--phi")
        q.add_argument("--gamma")

    c = sub.add_parser("lau", help="build the theta-Lau product")
    ctx_flags(c, True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_lau)

    c = sub.add_parser("solve", help="compute a derivation-type space")
    c.add_argument("--kind", required=True, choices=["der", "jder", "lau-der", "lau-jder"])
    c.add_argument("--algebra")
    c.add_argument("--ctx")
    ctx_flags(c, False)
    c.add_argument("--out")
    c.set_defaults(func=cmd_solve)

    c = sub.add_parser("verify", help="check the theorems on one context")
    c.add_argument("--ctx", required=True, help="zoo context name or ctx-spec JSON")
    c.add_argument("--claims", help=f"comma list from {','.join(CLAIMS)}")
    c.add_argument("--out")
    c.add_argument("--allow-vacuous", action="store_true")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("zoo", help="list or export zoo entries")
    zsub = c.add_subparsers(dest="zoo_cmd", required=True)
    zsub.add_parser("list")
    e = zsub.add_parser("export")
    e.add_argument("name")
    e.add_argument("--out", required=True)
    c.set_defaults(func=cmd_zoo)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        for v in exc.violations:
            print(json.dumps(v.to_json(), sort_keys=True), file=sys.stderr)
        return EXIT_INPUT
    except (SpecError, LauError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
