"""Small validated algebras, their characters, and named Lau contexts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    Algebra,
    Character,
    ValidationError,
    check_associativity,
    is_commutative,
    is_semisimple,
    is_unital,
    right_identities,
    verify_character,
)
from .lau import LauContext, lau


@dataclass(frozen=True)
class ZooEntry:
    name: str
    algebra: Algebra
    characters: tuple  # ((name, Character), ...)
    tags: frozenset

    def character(self, name: str) -> Character:
        for key, chi in self.characters:
            if key == name:
                return chi
        raise KeyError(f"{self.name} has no character {name!r}")

    @property
    def character_names(self) -> tuple:
        return tuple(key for key, _ in self.characters)


def derive_tags(alg: Algebra) -> frozenset:
    tags = set()
    if is_unital(alg):
        tags.add("unital")
    elif not right_identities(alg).is_empty:
        tags.add("right-identity-only")
    else:
        tags.add("no-right-identity")
    if is_semisimple(alg):
        tags.add("semisimple")
    if is_commutative(alg):
        tags.add("commutative")
    return frozenset(tags)


def _pointwise(n: int) -> Algebra:
    return Algebra.from_table([f"p{i + 1}" for i in range(n)], {(i, i): {i: 1} for i in range(n)})


def _coordinates(n: int) -> tuple:
    return tuple((f"chi{i + 1}", Character.of([int(j == i) for j in range(n)])) for i in range(n))


def _raw_entries() -> dict:
    return {
        "Q": (Algebra.from_table(["1"], {(0, 0): {0: 1}}), (("id", Character.of([1])),)),
        "Q2": (_pointwise(2), _coordinates(2)),
        "Q3": (_pointwise(3), _coordinates(3)),
        "Qdual": (
            Algebra.from_table(["1", "t"], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}),
            (("eps", Character.of([1, 0])),),
        ),
        "T2": (
            Algebra.from_table(
                ["E11", "E12", "E22"],
                {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}},
            ),
            (("tau1", Character.of([1, 0, 0])), ("tau2", Character.of([0, 0, 1]))),
        ),
        "M2": (
            Algebra.from_table(
                ["E11", "E12", "E21", "E22"],
                {
                    (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {0: 1}, (1, 3): {1: 1},
                    (2, 0): {2: 1}, (2, 1): {3: 1}, (3, 2): {2: 1}, (3, 3): {3: 1},
                },
            ),
            (),
        ),
        # Matrices [[a, 0], [b, 0]]: e1 e1 = e1, e2 e1 = e2.
        "colalg2": (Algebra.from_table(["e1", "e2"], {(0, 0): {0: 1}, (1, 0): {1: 1}}), ()),
        "zero1": (Algebra.from_table(["z"], {}), ()),
    }


def _validate(name: str, alg: Algebra, chars: tuple) -> ZooEntry:
    bad = check_associativity(alg)
    if bad:
        raise ValidationError(f"zoo algebra {name} is not associative", bad)
    for key, chi in chars:
        bad = verify_character(alg, chi)
        if bad:
            raise ValidationError(f"zoo character {name}/{key} is invalid", bad)
    return ZooEntry(name, alg, chars, derive_tags(alg))


@lru_cache(maxsize=None)
def _registry() -> dict:
    return {name: _validate(name, alg, chars) for name, (alg, chars) in _raw_entries().items()}


def zoo_list() -> list[str]:
    return list(_registry())


def zoo_get(name: str) -> ZooEntry:
    try:
        return _registry()[name]
    except KeyError:
        raise KeyError(f"unknown zoo entry {name!r}") from None


# name -> (A, B, theta, phi, gamma); character names refer to B's entry.
CONTEXT_SPECS = {
    "unitization-M2": ("M2", "Q", "id", "id", "id"),
    "unitization-T2": ("T2", "Q", "id", "id", "id"),
    "unitization-colalg2": ("colalg2", "Q", "id", "id", "id"),
    "cor25-M2-Q2": ("M2", "Q2", "chi1", "chi2", "chi2"),
    "cor25-M2-Q3": ("M2", "Q3", "chi1", "chi2", "chi2"),
    "M2-Q3-distinct": ("M2", "Q3", "chi1", "chi2", "chi3"),
    "M2-T2-equal": ("M2", "T2", "tau1", "tau1", "tau1"),
    "M2-T2-split": ("M2", "T2", "tau1", "tau2", "tau2"),
    "T2-Q2-gamma": ("T2", "Q2", "chi1", "chi1", "chi2"),
    "T2-Qdual-equal": ("T2", "Qdual", "eps", "eps", "eps"),
    "nonss-colalg2-Qdual": ("colalg2", "Qdual", "eps", "eps", "eps"),
    "colalg2-Q2-split": ("colalg2", "Q2", "chi1", "chi2", "chi2"),
    "colalg2-Q2-mixed": ("colalg2", "Q2", "chi1", "chi2", "chi1"),
    "colalg2-Q3-distinct": ("colalg2", "Q3", "chi1", "chi2", "chi3"),
    "colalg2-T2-split": ("colalg2", "T2", "tau1", "tau2", "tau2"),
    "colalg2-T2-mixed": ("colalg2", "T2", "tau1", "tau2", "tau1"),
    "colalg2-T2-equal": ("colalg2", "T2", "tau2", "tau2", "tau2"),
    "zero1-Q": ("zero1", "Q", "id", "id", "id"),
}


def zoo_context(name: str) -> LauContext:
    try:
        a, b, th, ph, ga = CONTEXT_SPECS[name]
    except KeyError:
        raise KeyError(f"unknown zoo context {name!r}") from None
    B = zoo_get(b)
    return lau(zoo_get(a).algebra, B.algebra, B.character(th), B.character(ph), B.character(ga))


def zoo_contexts() -> list[tuple[str, LauContext]]:
    return [(name, zoo_context(name)) for name in CONTEXT_SPECS]


def context_spec(name: str) -> dict:
    a, b, th, ph, ga = CONTEXT_SPECS[name]
    return {"a": a, "b": b, "theta": th, "phi": ph, "gamma": ga}
