"""The relation catalogue.

Every relation is a record with a builder for both sides and a seeded sampler
of bindings satisfying its guards.  ``check_relation`` compares the two sides
after projecting to the symplectic group.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..relative import GuardViolated
from ..symplectic import SympMatrix
from . import relfam, steinberg, xy, zfam
from .base import (
    Context,
    Relation,
    decode_bindings,
    encode_bindings,
    phi_of,
    rng_for,
)

FAMILIES = ("S", "K", "X", "Y", "KL", "T", "Z")

CATALOGUE: dict[str, Relation] = {}
for _rel in steinberg.RELATIONS + xy.RELATIONS + relfam.RELATIONS + zfam.RELATIONS:
    CATALOGUE[_rel.id] = _rel

# rewrites usable in derivation traces but not sampled as properties
PRIMITIVES: dict[str, Relation] = {r.id: r for r in steinberg.PRIMITIVES}


def relation_ids(families=None) -> list[str]:
    fams = set(FAMILIES if families is None else families)
    unknown = fams - set(FAMILIES)
    if unknown:
        raise KeyError(f"unknown families: {sorted(unknown)}")
    return [rid for rid, r in CATALOGUE.items() if r.family in fams]


def get_relation(rel_id: str) -> Relation:
    if rel_id in CATALOGUE:
        return CATALOGUE[rel_id]
    if rel_id in PRIMITIVES:
        return PRIMITIVES[rel_id]
    raise KeyError(f"unknown relation {rel_id!r}")


@dataclass
class CheckResult:
    relation_id: str
    bindings: dict
    passed: bool
    phi_lhs: SympMatrix
    phi_rhs: SympMatrix
    seed: object = None

    def to_json(self):
        return {
            "relation_id": self.relation_id,
            "seed": self.seed,
            "bindings": encode_bindings(self.bindings),
            "phi_lhs": self.phi_lhs.to_json(),
            "phi_rhs": self.phi_rhs.to_json(),
            "pass": self.passed,
        }


def check_relation(rel_id: str, ctx: Context, bindings: dict, seed=None) -> CheckResult:
    """Build both sides and compare them in Sp_2n exactly.  Raises GuardViolated."""
    rel = get_relation(rel_id)
    if bindings and isinstance(next(iter(bindings.values())), dict) and _is_encoded(bindings):
        bindings = decode_bindings(bindings)
    lhs, rhs = rel.build(ctx, bindings)
    pl, pr = phi_of(lhs), phi_of(rhs)
    return CheckResult(rel_id, bindings, pl == pr, pl, pr, seed)


def _is_encoded(b: dict) -> bool:
    return any(isinstance(v, dict) and "ring" in v for v in b.values())


def sample_bindings(rel_id: str, ctx: Context, rng, max_tries: int = 50) -> dict:
    """Bindings that pass the relation's guards (resampling on GuardViolated)."""
    rel = get_relation(rel_id)
    last = None
    for _ in range(max_tries):
        b = rel.sample(ctx, rng)
        try:
            rel.build(ctx, b)
        except GuardViolated as e:
            last = e
            continue
        return b
    raise GuardViolated(f"{rel_id}: no admissible sample in {max_tries} tries ({last})")


def sample_checks(rel_id: str, ctx: Context, seed, samples: int):
    """Yield CheckResults for `samples` guarded random instances."""
    rel = get_relation(rel_id)
    rng = rng_for(seed, rel_id)
    done = 0
    tries = 0
    while done < samples:
        tries += 1
        if tries > 50 * samples + 50:
            raise GuardViolated(f"{rel_id}: sampler keeps violating the guards")
        b = rel.sample(ctx, rng)
        try:
            res = check_relation(rel_id, ctx, b, seed)
        except GuardViolated:
            continue
        done += 1
        yield res


__all__ = [
    "CATALOGUE",
    "PRIMITIVES",
    "FAMILIES",
    "CheckResult",
    "Context",
    "Relation",
    "check_relation",
    "get_relation",
    "relation_ids",
    "sample_bindings",
    "sample_checks",
]
