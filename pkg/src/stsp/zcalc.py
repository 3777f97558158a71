"""Z-elements: products of X(u, v_k, 0) glued along a Suslin decomposition.

    Z(u; v_1..v_N) = X(u,v_1,0) ... X(u,v_N,0) · X(u, 0, -Σ_{i<j} <v_i,v_j>)
    Z^A(u, v)      = Z(u; {v_ij^w · A}_{i<j})          with A = <w, u>
    Z(u, v, b)     = Z^{a^N}(u, v · b / a^{2N})         with <w, u> = a^N
    Z(u, v, b, c)  = Z(u, v, b) · X(u, 0, c)

The Suslin parts are v_ij = (e_i u_{-j} sign j - e_j u_{-i} sign i)(v_i w_j - v_j w_i);
they are orthogonal to u, supported on {i, j} and sum to v·<w,u>.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .elements import x_element
from .rings import DivisibilityFailure, MixedBRing, Ring, RingValue
from .symplectic import (
    IndexedVector,
    NotIsotropicPair,
    SympMatrix,
    _payload,
    esd_matrix,
    indices,
    pos,
    sign,
    vec_form,
)
from .words import OrbitVector, SteinbergWord


class NoColumnWitness(ValueError):
    """No w with <w, u> = a^N was found."""


def _vec(u) -> IndexedVector:
    return u.vector if isinstance(u, OrbitVector) else u


def _scaled(u, r):
    """u·r as a plain vector (a scaled orbit vector is usually not an orbit vector)."""
    return _vec(u).scale(r)


# -- Suslin decomposition ----------------------------------------------------

def suslin_direction(u: IndexedVector, i: int, j: int) -> IndexedVector:
    """u_ij = e_i u_{-j} sign j - e_j u_{-i} sign i (orthogonal to u)."""
    R, n = u.ring, u.n
    out = [R.zero()] * (2 * n)
    ci = u.coord(-j) if j > 0 else R.neg(u.coord(-j))
    cj = R.neg(u.coord(-i)) if i > 0 else u.coord(-i)
    out[pos(n, i)] = R.add(out[pos(n, i)], ci)
    out[pos(n, j)] = R.add(out[pos(n, j)], cj)
    return IndexedVector(R, n, out)


@dataclass(frozen=True)
class SuslinDecomposition:
    u: IndexedVector
    v: IndexedVector
    w: IndexedVector
    A: RingValue
    parts: dict = field(hash=False)

    def total(self) -> IndexedVector:
        out = IndexedVector.zero(self.u.ring, self.u.n)
        for p in self.parts.values():
            out = out + p
        return out

    def part(self, i: int, j: int) -> IndexedVector:
        """v_ij for any distinct i, j (v_ji = v_ij)."""
        return self.parts[(i, j) if i < j else (j, i)]

    def to_json(self):
        return {
            "u": self.u.to_json(),
            "v": self.v.to_json(),
            "w": self.w.to_json(),
            "A": str(self.A),
            "parts": {f"{i},{j}": p.to_json() for (i, j), p in self.parts.items()
                      if not p.is_zero()},
        }


def suslin_part(u: IndexedVector, v: IndexedVector, w: IndexedVector, i: int, j: int):
    R = u.ring
    c = R.sub(R.mul(v.coord(i), w.coord(j)), R.mul(v.coord(j), w.coord(i)))
    return suslin_direction(u, i, j).scale(RingValue(R, c))


def suslin_decompose(u: IndexedVector, v: IndexedVector, w: IndexedVector) -> SuslinDecomposition:
    u, v, w = _vec(u), _vec(v), _vec(w)
    if not symp_zero(u, v):
        raise NotIsotropicPair("<u, v> must vanish")
    idx = indices(u.n)
    parts = {}
    for a_, i in enumerate(idx):
        for j in idx[a_ + 1:]:
            parts[(i, j)] = suslin_part(u, v, w, i, j)
    return SuslinDecomposition(u, v, w, w.form(u), parts)


def symp_zero(x: IndexedVector, y: IndexedVector) -> bool:
    return x.ring.is_zero(vec_form(x.ring, x.n, x.entries, y.entries))


# -- Z elements --------------------------------------------------------------

@dataclass
class ZElement:
    tag: str
    ingredients: dict
    word: SteinbergWord
    target: SympMatrix | None = None

    def phi(self) -> SympMatrix:
        return self.word.phi()

    def to_json(self):
        out = {"tag": self.tag, "length": len(self.word)}
        out.update({k: _jsonish(x) for k, x in self.ingredients.items()})
        return out


def _jsonish(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [_jsonish(y) for y in x]
    return str(x) if not isinstance(x, (int, str, type(None))) else x


def _check_orth(u, vs):
    uu = _vec(u)
    for v in vs:
        if not symp_zero(uu, v):
            raise NotIsotropicPair("every part must be orthogonal to u")


def z_list_word(u, parts) -> SteinbergWord:
    u_vec = _vec(u)
    R, n = u_vec.ring, u_vec.n
    parts = list(parts)
    _check_orth(u, parts)
    out = SteinbergWord.empty(R, n)
    corr = R.zero()
    for k, p in enumerate(parts):
        if not p.is_zero():
            out = out * x_element(u, p, 0)
        for q in parts[k + 1:]:
            corr = R.add(corr, vec_form(R, n, p.entries, q.entries))
    if not R.is_zero(corr):
        out = out * x_element(u, None, RingValue(R, R.neg(corr)))
    return out


def z_list(u, parts) -> ZElement:
    """Z(u; v_1, ..., v_N)."""
    parts = list(parts)
    u_vec = _vec(u)
    R, n = u_vec.ring, u_vec.n
    word = z_list_word(u, parts)
    target = SympMatrix.identity(R, n)
    corr = R.zero()
    zero = IndexedVector.zero(R, n)
    for k, p in enumerate(parts):
        target = target * esd_matrix(u_vec, p, 0)
        for q in parts[k + 1:]:
            corr = R.add(corr, vec_form(R, n, p.entries, q.entries))
    target = target * esd_matrix(u_vec, zero, RingValue(R, R.neg(corr)))
    return ZElement("ZList", {"u": u_vec, "parts": parts}, word, target)


def z_upper_A(u, v: IndexedVector, w: IndexedVector) -> ZElement:
    """Z^A(u, v) with A = <w, u>."""
    dec = suslin_decompose(_vec(u), v, w)
    A = dec.A
    parts = [p.scale(A) for p in dec.parts.values() if not p.is_zero()]
    word = z_list_word(u, parts)
    target = esd_matrix(_vec(u), v.scale(A * A), 0)
    return ZElement("ZA", {"u": _vec(u), "v": v, "w": w, "A": A}, word, target)


# -- column witnesses and divisibility -----------------------------------------

def column_witness(u, a, max_exp: int = 8):
    """(w, N) with <w, u> = a^N.

    For an orbit vector u = M e_1 the canonical w = -M e_{-1} (N = 0) is used;
    otherwise a scaled basis vector w = e_{-q}·c is searched for.
    """
    if isinstance(u, OrbitVector):
        return u.column_partner(), 0
    R, n = u.ring, u.n
    a = _payload(R, a)
    for N in range(max_exp + 1):
        aN = R.pow(a, N)
        for q in indices(n):
            uq = u.coord(q)
            if R.is_zero(uq):
                continue
            c = R.divide_exact(aN, uq)
            if c is None:
                continue
            # <e_{-q} c s, u> = sign(-q) s c u_q ; pick s = sign(-q)
            s = -sign(q)
            w = IndexedVector.basis(R, n, -q, RingValue(R, R.mul(c, R.from_int(s))))
            return w, N
    raise NoColumnWitness(f"no w with <w,u> = a^N, N <= {max_exp}")


def divide_by_power(R: Ring, x, a, k: int):
    """x / a^k, exact; raises DivisibilityFailure."""
    x, a = _payload(R, x), _payload(R, a)
    if k == 0:
        return RingValue(R, x)
    q = R.divide_exact(x, R.pow(a, k))
    if q is None:
        raise DivisibilityFailure(f"{R.format(x)} is not divisible by ({R.format(a)})^{k}")
    return RingValue(R, q)


def _power_witness(u, a, N, w):
    R = _vec(u).ring
    a = _payload(R, a)
    if w is None:
        w0, N0 = column_witness(u, a)
        if N is None:
            N = N0
        if N < N0:
            raise NoColumnWitness(f"witness needs N >= {N0}")
        w = w0.scale(RingValue(R, R.pow(a, N - N0)))
    else:
        A = w.form(_vec(u))
        if N is None:
            for k in range(0, 33):
                if A.payload == R.pow(a, k):
                    N = k
                    break
            else:
                raise NoColumnWitness("<w, u> is not a power of a")
        elif A.payload != R.pow(a, N):
            raise NoColumnWitness("<w, u> != a^N")
    return w, N


def z_scalar(u, v: IndexedVector, b, a, N: int | None = None, w=None) -> ZElement:
    """Z(u, v, b) = Z^{a^N}(u, v·b/a^{2N}); φ is T(u, v b, 0)."""
    u_vec = _vec(u)
    R = u_vec.ring
    w, N = _power_witness(u, a, N, w)
    bb = divide_by_power(R, b, a, 2 * N)
    inner = z_upper_A(u, v.scale(bb), w)
    target = esd_matrix(u_vec, v.scale(RingValue(R, _payload(R, b))), 0)
    return ZElement("Zb", {"u": u_vec, "v": v, "b": RingValue(R, _payload(R, b)), "N": N, "w": w},
                    inner.word, target)


def z_full(u, v: IndexedVector, b, c, a, N: int | None = None, w=None) -> ZElement:
    """Z(u, v, b, c) = Z(u, v, b) · X(u, 0, c)."""
    z = z_scalar(u, v, b, a, N, w)
    R, n = z.word.ring, z.word.n
    cc = RingValue(R, _payload(R, c))
    word = z.word * x_element(u, None, cc)
    target = z.target * esd_matrix(_vec(u), IndexedVector.zero(R, n), cc)
    ing = dict(z.ingredients)
    ing["c"] = cc
    return ZElement("Zbc", ing, word, target)


# -- ideals with unique division by a --------------------------------------------

class DivisibleIdeal:
    """An ideal I of a ring with a fixed element a such that x ↦ x·a is bijective on I.

    * B = R ⋉ tR_a[t]: I = tR_a[t] (pairs (0, f)), a ∈ R.
    * other rings: a is a unit and I is the whole ring.
    """

    def __init__(self, ring: Ring, a, whole: bool):
        self.ring = ring
        self.a = _payload(ring, a)
        self.whole = whole

    @classmethod
    def for_ring(cls, ring: Ring, a=None) -> "DivisibleIdeal":
        if isinstance(ring, MixedBRing):
            a = (ring.a, ring.loc.zero()) if a is None else _payload(ring, a)
            return cls(ring, a, whole=False)
        if a is None:
            a = default_unit(ring)
        a = _payload(ring, a)
        if not ring.is_unit(a):
            raise ValueError(f"{ring.format(a)} must be a unit for the whole-ring ideal")
        return cls(ring, a, whole=True)

    def contains(self, x) -> bool:
        x = _payload(self.ring, x)
        if self.whole:
            return True
        return self.ring.base.is_zero(x[0])

    def random(self, rng: Random, size: int = 2):
        R = self.ring
        if self.whole:
            return R.random(rng, size)
        x = R.random(rng, size)
        return (R.base.zero(), x[1])

    def to_json(self):
        return {"a": self.ring.format(self.a), "ideal": "whole" if self.whole else "tR_a[t]"}


def default_unit(ring: Ring):
    """A unit different from 1 when there is a small one (2, 3, ... or -1), else 1."""
    for k in (2, 3, -1):
        x = ring.from_int(k)
        if not ring.is_one(x) and ring.is_unit(x):
            return x
    return ring.one()


def check_z_property(rel_id: str, ctx, bindings):
    """Build and compare both sides of a Z-calculus property (see stsp.relations)."""
    from .relations import check_relation

    return check_relation(rel_id, ctx, bindings)
