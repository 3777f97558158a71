"""Explicit words for the ESD elements X(u,v,a) and Y_(i)(u,v,a).

Every constructor returns a SteinbergWord whose projection is the ESD
transformation T(u,v,a).  The building block is the expansion of
X(e_i, v, c) into elementary generators:

    X(e_i, v, c) = X_{i,-i}(c') · Π_{k ≠ ±i} X_{i,-k}(v_k · sign k)
    c' = c + 2 v_i + Σ_{j>0, j≠|i|} v_j v_{-j}

(the product taken over increasing k; v_{-i} must vanish).  All other
elements are assembled from it:

* orbit vectors u = φ(M)e_1:   X(u,v,a) = M · X(e_1, φ(M)⁻¹v, a) · M⁻¹
* Y_(i)(u,v,a) with u_{±i}=0:  [Y(e_i,u,0), Y(e_{-i},v' sign i, a')] · Y(e_{-i}, u a' sign(-i), 0)
                                · Y(e_i, u v_i, 0) · Y(e_{-i}, u v_{-i}, 0)
  where v' = v with the ±i coordinates removed and a' = a - v_i v_{-i} sign i.
* arbitrary isotropic pairs: split X(u,v,a) = X(u,v,0)X(u,0,a), then use Y
  whenever u (or v, by the symmetry X(u,v,0)=X(v,u,0)) has a zero pair,
  X(u,v,0) = X(v,0,-1)X(u,0,-1)X(u+v,0,1) otherwise, and
  X(u'+u'',0,c) = X(u',0,c)X(u'',0,c)Y_(k)(u',u''c,0) to split a vector
  without zero pairs along the k-th hyperbolic plane.
"""
from __future__ import annotations

from .rings import RingValue
from .symplectic import (
    IndexedVector,
    NotIsotropicPair,
    _payload,
    pos,
    sign,
    vec_add,
    vec_form,
    vec_scale,
)
from .words import Letter, OrbitVector, SteinbergWord


class PreconditionViolated(ValueError):
    pass


# -- payload-level builders (append letters to `out`) ------------------------

def _basis_expand(R, n, i, v, c, out):
    """Letters of X(e_i, v, c); requires v_{-i} = 0."""
    if not R.is_zero(v[pos(n, -i)]):
        raise NotIsotropicPair(f"<e_{i}, v> = ±v_{-i} must vanish")
    isz, mul, add = R.is_zero, R.mul, R.add
    corr = add(c, add(v[pos(n, i)], v[pos(n, i)]))
    for j in range(1, n + 1):
        if j == abs(i):
            continue
        a, b = v[pos(n, j)], v[pos(n, -j)]
        if not isz(a) and not isz(b):
            corr = add(corr, mul(a, b))
    if not isz(corr):
        out.append(Letter(i, -i, corr))
    for k in range(-n, n + 1):
        if k == 0 or k == i or k == -i:
            continue
        vk = v[pos(n, k)]
        if not isz(vk):
            out.append(Letter(i, -k, vk if k > 0 else R.neg(vk)))


def _single_support(R, v):
    """(position, value) if v has exactly one nonzero coordinate, else None."""
    found = None
    for p, c in enumerate(v):
        if not R.is_zero(c):
            if found is not None:
                return None
            found = (p, c)
    return found


def _index_of(n, p):
    return p - n if p < n else p - n + 1


def _zero_pair(R, n, v):
    isz = R.is_zero
    for k in range(1, n + 1):
        if isz(v[pos(n, k)]) and isz(v[pos(n, -k)]):
            return k
    return None


def _invert_letters(letters):
    return [L.inverse() for L in reversed(letters)]


def _y_letters(R, n, i, u, v, a, out):
    """Letters of Y_(i)(u, v, a); requires u_{±i} = 0 and <u,v> = 0."""
    isz = R.is_zero
    pi, mi = pos(n, i), pos(n, -i)
    if not (isz(u[pi]) and isz(u[mi])):
        raise PreconditionViolated(f"u must vanish at ±{abs(i)}")
    vi, vmi = v[pi], v[mi]
    vp = list(v)
    vp[pi] = vp[mi] = R.zero()
    si = R.one() if i > 0 else R.neg(R.one())
    a1 = R.sub(a, R.mul(R.mul(vi, vmi), si))
    A: list = []
    _basis_expand(R, n, i, u, R.zero(), A)
    B: list = []
    _basis_expand(R, n, -i, vec_scale(R, vp, si), a1, B)
    if A and B:
        out.extend(A)
        out.extend(B)
        out.extend(_invert_letters(A))
        out.extend(_invert_letters(B))
    # tail factors (each is an X(e_{±i}, ·, 0) word); the commutator leaves a
    # factor along e_{-i}, so the correction sits on e_{-i}
    _basis_expand(R, n, -i, vec_scale(R, u, R.neg(R.mul(a1, si))), R.zero(), out)
    _basis_expand(R, n, i, vec_scale(R, u, vi), R.zero(), out)
    _basis_expand(R, n, -i, vec_scale(R, u, vmi), R.zero(), out)


def _x_u0c(R, n, u, c, out):
    """Letters of X(u, 0, c) for an arbitrary vector u."""
    if R.is_zero(c):
        return
    single = _single_support(R, u)
    if single is None:
        if all(R.is_zero(x) for x in u):
            return
    else:
        p, val = single
        i = _index_of(n, p)
        # X(e_i r, 0, c) = X(e_i, 0, r²c)
        out.append(Letter(i, -i, R.mul(R.mul(val, val), c)))
        return
    k = _zero_pair(R, n, u)
    if k is not None:
        _y_letters(R, n, k, u, (R.zero(),) * (2 * n), c, out)
        return
    # split along the last hyperbolic plane: u = u1 + u2, u2 = e_n u_n + e_{-n} u_{-n}
    u1 = list(u)
    u2 = [R.zero()] * (2 * n)
    for q in (pos(n, n), pos(n, -n)):
        u2[q] = u[q]
        u1[q] = R.zero()
    _x_u0c(R, n, u1, c, out)
    _x_u0c(R, n, u2, c, out)
    _y_letters(R, n, n, u1, vec_scale(R, u2, c), R.zero(), out)


def _x_uv0(R, n, u, v, out):
    """Letters of X(u, v, 0) for an isotropic pair of arbitrary vectors."""
    isz = R.is_zero
    if all(isz(x) for x in u) or all(isz(x) for x in v):
        return
    single = _single_support(R, u)
    if single is not None:
        p, val = single
        i = _index_of(n, p)
        # X(e_i r, v, 0) = X(e_i, v r, 0)
        _basis_expand(R, n, i, vec_scale(R, v, val), R.zero(), out)
        return
    k = _zero_pair(R, n, u)
    if k is not None:
        _y_letters(R, n, k, u, v, R.zero(), out)
        return
    single = _single_support(R, v)
    if single is not None:
        p, val = single
        i = _index_of(n, p)
        _basis_expand(R, n, i, vec_scale(R, u, val), R.zero(), out)
        return
    k = _zero_pair(R, n, v)
    if k is not None:
        _y_letters(R, n, k, v, u, R.zero(), out)
        return
    minus_one = R.neg(R.one())
    _x_u0c(R, n, v, minus_one, out)
    _x_u0c(R, n, u, minus_one, out)
    _x_u0c(R, n, vec_add(R, u, v), R.one(), out)


def _x_general(R, n, u, v, a, out):
    if not R.is_zero(vec_form(R, n, u, v)):
        raise NotIsotropicPair("<u, v> must vanish")
    _x_uv0(R, n, u, v, out)
    _x_u0c(R, n, u, a, out)


# -- public constructors -----------------------------------------------------

def _vec_entries(R, n, v):
    if v is None:
        return (R.zero(),) * (2 * n)
    if isinstance(v, IndexedVector):
        return v.entries
    return tuple(v)


def basis_x(ring, n, i, v=None, a=0) -> SteinbergWord:
    """X(e_i, v, a) expanded into generators X_{i,k}, X_{i,-i}."""
    out: list = []
    _basis_expand(ring, n, i, _vec_entries(ring, n, v), _payload(ring, a), out)
    return SteinbergWord(ring, n, out, _checked=True)


def x_element(u, v=None, a=0) -> SteinbergWord:
    """X(u, v, a).

    For an OrbitVector u with witness M the word is M · X(e_1, φ(M)⁻¹v, a) · M⁻¹.
    For a plain IndexedVector u the general route of this module is used.
    """
    if isinstance(u, OrbitVector):
        R, n = u.ring, u.n
        ve = _vec_entries(R, n, v)
        ap = _payload(R, a)
        if not R.is_zero(vec_form(R, n, u.vector.entries, ve)):
            raise NotIsotropicPair("<u, v> must vanish")
        M = u.witness
        v0 = M.inverse().apply_to(ve).entries
        core: list = []
        _basis_expand(R, n, 1, v0, ap, core)
        if not core:
            return SteinbergWord.empty(R, n)
        return SteinbergWord(R, n, M.letters + tuple(core) + M.inverse().letters, _checked=True)
    if isinstance(u, IndexedVector):
        return x_general(u, v, a)
    raise TypeError("x_element expects an OrbitVector or IndexedVector")


def x_general(u: IndexedVector, v=None, a=0) -> SteinbergWord:
    """X(u, v, a) for any isotropic pair, without an orbit witness."""
    R, n = u.ring, u.n
    out: list = []
    _x_general(R, n, u.entries, _vec_entries(R, n, v), _payload(R, a), out)
    return SteinbergWord(R, n, out, _checked=True)


def y_element(i: int, u: IndexedVector, v=None, a=0) -> SteinbergWord:
    """Y_(i)(u, v, a) for u with u_i = u_{-i} = 0 and <u, v> = 0."""
    R, n = u.ring, u.n
    ve = _vec_entries(R, n, v)
    if not R.is_zero(vec_form(R, n, u.entries, ve)):
        raise PreconditionViolated("<u, v> must vanish")
    out: list = []
    _y_letters(R, n, i, u.entries, ve, _payload(R, a), out)
    return SteinbergWord(R, n, out, _checked=True)


def another_gen(u, v=None, a=0) -> SteinbergWord:
    """The generator [u, v, a] of the second presentation, realized as X(u, v, a)."""
    return x_element(u, v, a)


def scalar(ring, c) -> RingValue:
    return RingValue(ring, _payload(ring, c))
