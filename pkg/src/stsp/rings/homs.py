"""Ring homomorphisms between nodes of the tower, substitution and lifting."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .base import DescriptorMismatch, IntegerRing, IntModRing, Ring, RingValue
from .localized import LocalizedRing
from .mixed import MixedBRing
from .poly import PolyRing


@dataclass(frozen=True)
class RingHom:
    name: str
    source: Ring
    target: Ring
    fn: Callable

    def __call__(self, x):
        if isinstance(x, RingValue):
            if x.ring != self.source:
                raise DescriptorMismatch(f"{self.name} expects {self.source.spec}, got {x.ring.spec}")
            return RingValue(self.target, self.fn(x.payload))
        return self.fn(x)


def coerce(x, source: Ring, target: Ring):
    """Image of payload x under the canonical map source -> target."""
    if source == target:
        return x
    if isinstance(source, IntegerRing) and isinstance(target, IntModRing):
        return target.from_int(x)
    if isinstance(target, PolyRing):
        if isinstance(source, PolyRing) and set(source.vars) <= set(target.vars):
            idx = [target.vars.index(v) for v in source.vars]
            d = {}
            for e, c in x:
                full = [0] * target.nvars
                for k, ek in zip(idx, e):
                    full[k] = ek
                d[tuple(full)] = coerce(c, source.base, target.base)
            return target._from_dict(d)
        return target.const(coerce(x, source, target.base))
    if isinstance(target, LocalizedRing):
        if isinstance(source, LocalizedRing) and isinstance(target.base, PolyRing):
            # R_a -> R[t]_a  (coefficient-wise); requires the same a
            p, k = x
            num = coerce(p, source.base, target.base)
            if coerce(source.a, source.base, target.base) != target.a:
                raise DescriptorMismatch(f"no canonical map {source.spec} -> {target.spec}")
            return target.canon(num, k)
        return target.localize(coerce(x, source, target.base))
    if isinstance(target, MixedBRing):
        return (coerce(x, source, target.base), target.loc.zero())
    raise DescriptorMismatch(f"no canonical map {source.spec} -> {target.spec}")


def canonical_hom(source: Ring, target: Ring) -> RingHom:
    coerce(source.one(), source, target)  # fail early
    return RingHom(f"can:{source.spec}->{target.spec}", source, target,
                   lambda x: coerce(x, source, target))


def identity_hom(ring: Ring) -> RingHom:
    return RingHom(f"id:{ring.spec}", ring, ring, lambda x: x)


def localization_hom(ring: Ring, a) -> RingHom:
    """λ_a : R -> R_a."""
    target = LocalizedRing(ring, a)
    return RingHom(f"lambda:{ring.spec}->{target.spec}", ring, target, target.localize)


def quotient_ring_by_var(ring: PolyRing, var: str = "t") -> Ring:
    rest = tuple(v for v in ring.vars if v != var)
    return PolyRing(ring.base, rest) if rest else ring.base


def rho_hom(ring: PolyRing, var: str = "t") -> RingHom:
    """Projection ρ = ev_0 : R[t] -> R (mod t), keeping other variables."""
    k = ring.vars.index(var)
    target = quotient_ring_by_var(ring, var)

    def fn(x):
        if isinstance(target, PolyRing):
            d = {}
            for e, c in x:
                if e[k] == 0:
                    d[e[:k] + e[k + 1:]] = c
            return target._from_dict(d)
        return ring.constant_term(x)

    return RingHom(f"rho:{ring.spec}->{target.spec}", ring, target, fn)


def sigma_hom(ring: PolyRing, var: str = "t") -> RingHom:
    """Splitting σ : R -> R[t] (constants)."""
    source = quotient_ring_by_var(ring, var)
    return RingHom(f"sigma:{source.spec}->{ring.spec}", source, ring,
                   lambda x: coerce(x, source, ring))


# -- substitution ---------------------------------------------------------

def _poly_subst(P: PolyRing, x, var: str, value, target: Ring, coeff_map):
    """Σ coeff_map(c·rest) · value^e  computed in target."""
    k = P.vars.index(var)
    by_power = {}
    for e, c in x:
        rest = e[:k] + (0,) + e[k + 1:]
        by_power.setdefault(e[k], {})[rest] = c
    out = target.zero()
    for power in sorted(by_power, reverse=True):
        # Horner would need consecutive powers; plain powers are fine here
        coeff = coeff_map(P._from_dict(by_power[power]))
        out = target.add(out, target.mul(coeff, target.pow(value, power)))
    return out


def substitute(ring: Ring, x, var: str, value):
    """Substitute var ↦ value (value in the same ring) inside x."""
    if isinstance(ring, PolyRing):
        return _poly_subst(ring, x, var, value, ring, lambda p: p)
    if isinstance(ring, LocalizedRing) and isinstance(ring.base, PolyRing):
        p, k = x
        num = _poly_subst(ring.base, p, var, value, ring, ring.localize)
        return ring.mul(num, ring.canon(ring.base.one(), k))
    if isinstance(ring, MixedBRing):
        if var != ring.var:
            raise DescriptorMismatch(f"{ring.spec} has no variable {var}")
        L = ring.loc
        y = substitute(L, ring.embed(x), var, ring.embed(value))
        out = ring.from_loc(y)
        if out is None:
            raise DescriptorMismatch("substitution left the ring B")
        return out
    raise DescriptorMismatch(f"cannot substitute {var} in {ring.spec}")


def eval_poly(p: RingValue, x: RingValue, hom: RingHom | None = None, var: str = "t") -> RingValue:
    """ev_x: substitute var ↦ x coefficient-wise through hom (identity when omitted)."""
    P = p.ring
    if not isinstance(P, PolyRing):
        raise DescriptorMismatch(f"eval_poly needs a polynomial ring, got {P.spec}")
    S = x.ring
    if hom is None:
        if S == P:
            return RingValue(P, substitute(P, p.payload, var, x.payload))
        hom = canonical_hom(P.base, S)
    if hom.target != S:
        raise DescriptorMismatch(f"{hom.name} does not land in {S.spec}")
    if var not in P.vars:
        raise DescriptorMismatch(f"{P.spec} has no variable {var}")
    gens = S.gens()
    out = S.zero()
    for e, c in p.payload:
        term = hom.fn(c) if hom.source == P.base else hom.fn(P.const(c))
        for name, ek in zip(P.vars, e):
            if name == var:
                term = S.mul(term, S.pow(x.payload, ek))
            elif ek:
                if name not in gens:
                    raise DescriptorMismatch(f"{S.spec} has no variable {name}")
                term = S.mul(term, S.pow(gens[name], ek))
        out = S.add(out, term)
    return RingValue(S, out)


def localize(x: RingValue, a) -> RingValue:
    """λ_a(x) ∈ Loc(R, a)."""
    R = x.ring
    a_payload = a.payload if isinstance(a, RingValue) else R(a).payload
    L = LocalizedRing(R, a_payload)
    return RingValue(L, L.localize(x.payload))


def lift_clearing_denominators(x: RingValue):
    """Return (y, N) with y ∈ R and localize(y) == x·a^N, N minimal for the canonical form."""
    L = x.ring
    if not isinstance(L, LocalizedRing):
        raise DescriptorMismatch(f"{L.spec} is not a localization")
    p, k = x.payload
    return RingValue(L.base, p), k
