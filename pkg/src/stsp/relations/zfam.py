"""Properties of the Z-elements: Z0–Z7 for Z(u, v, b) and the auxiliary
identities for Z(u; v_1..v_N) and Z^A(u, v) they are built from.

Scalars b, c are drawn from the divisible ideal of the context (a, I).
Several identities need auxiliary hyperbolic pairs; those are taken from the
columns of a random elementary word M:  u = Me_1·s, w = -Me_{-1}·t (so
<w, u> = st), the second pair from e_{±2} and the third from e_{±3}.
"""
from __future__ import annotations

from ..elements import x_element, x_general
from ..rings import RingValue
from ..symplectic import IndexedVector, _payload, esd_matrix, indices
from ..words import Letter, OrbitVector, SteinbergWord
from ..zcalc import (
    suslin_decompose,
    suslin_direction,
    z_list_word,
    z_scalar,
    z_upper_A,
)
from . import sampling as smp
from .base import Relation, require, scalar_of


def _S(ctx, b, key) -> RingValue:
    return scalar_of(ctx.ring, b[key])


def _I(ctx, rng) -> RingValue:
    """A random element of the ideal, nonzero when a few draws allow it."""
    R = ctx.ring
    x = ctx.ideal.random(rng, ctx.size)
    for _ in range(4):
        if not R.is_zero(x):
            break
        x = ctx.ideal.random(rng, ctx.size)
    return RingValue(R, x)


def _in_I(ctx, *xs):
    for x in xs:
        require(ctx.ideal.contains(x), "parameter must lie in the ideal")


def _s(ctx, rng):
    return smp.scalar(ctx.ring, rng, ctx.size)


def _nz(ctx, rng):
    return smp.nonzero(ctx.ring, rng, ctx.size)


def _iso(u, v, what="<u, v> = 0"):
    require(u.form(v).is_zero(), what)


def _vec(u):
    return u.vector if isinstance(u, OrbitVector) else u


def _Z(ctx, u, v, b, N):
    _in_I(ctx, b)
    return z_scalar(u, v, b, ctx.a, N).word


def _X(u, v=None, a=0):
    return x_element(u, v, a)


def _an(ctx, N) -> RingValue:
    return RingValue(ctx.ring, ctx.ring.pow(ctx.a, N))


def _frame(M: SteinbergWord, k: int, scale=None) -> IndexedVector:
    return smp.frame_vector(M, k, scale)


def _pairs_orthogonal(pairs):
    """Every vector of one pair is orthogonal to both vectors of every other pair."""
    for p, P in enumerate(pairs):
        for Q in pairs[p + 1:]:
            for x in P:
                for y in Q:
                    _iso(x, y, "pairs must be mutually orthogonal")


def _N(rng):
    return rng.randint(0, 2)


# -- Z0 .. Z7 -------------------------------------------------------------------

def _base_sample(ctx, rng):
    u = smp.orbit(ctx.ring, ctx.n, rng, length=ctx.word_length)
    return {"u": u, "v": smp.orth(u.vector, rng, size=ctx.size), "b": _I(ctx, rng), "N": _N(rng)}


def _z0_build(ctx, b):
    u, v, c, N = b["u"], b["v"], _S(ctx, b, "b"), b["N"]
    _iso(u.vector, v)
    return _Z(ctx, u, v, c, N), esd_matrix(u.vector, v.scale(c), 0)


def _z1_build(ctx, b):
    u, v, c, r, N = b["u"], b["v"], _S(ctx, b, "b"), _S(ctx, b, "r"), b["N"]
    _iso(u.vector, v)
    return _Z(ctx, u, v.scale(r), c, N), _Z(ctx, u, v, r * c, N)


def _z1_sample(ctx, rng):
    out = _base_sample(ctx, rng)
    out["r"] = _s(ctx, rng)
    return out


def _z2_build(ctx, b):
    u, v, v2, c, N = b["u"], b["v"], b["v2"], _S(ctx, b, "b"), b["N"]
    _iso(u.vector, v)
    _iso(u.vector, v2)
    return (_Z(ctx, u, v, c, N) * _Z(ctx, u, v2, c, N),
            _Z(ctx, u, v + v2, c, N) * _X(u, None, c * c * v.form(v2)))


def _z2_sample(ctx, rng):
    out = _base_sample(ctx, rng)
    out["v2"] = smp.orth(out["u"].vector, rng, size=ctx.size)
    return out


def _z3_build(ctx, b):
    u, v, c, d, N = b["u"], b["v"], _S(ctx, b, "b"), _S(ctx, b, "c"), b["N"]
    _iso(u.vector, v)
    return _Z(ctx, u, v, c, N) * _Z(ctx, u, v, d, N), _Z(ctx, u, v, c + d, N)


def _z3_sample(ctx, rng):
    out = _base_sample(ctx, rng)
    out["c"] = _I(ctx, rng)
    return out


def _z4_build(ctx, b):
    u, v, c, g, N = b["u"], b["v"], _S(ctx, b, "b"), b["g"], b["N"]
    _iso(u.vector, v)
    return _Z(ctx, u, v, c, N).conj(g), _Z(ctx, u.moved_by(g), g.apply_to(v), c, N)


def _z4_sample(ctx, rng):
    out = _base_sample(ctx, rng)
    out["g"] = smp.word(ctx.ring, ctx.n, rng, rng.randint(1, 3))
    return out


def _frame_pairs(ctx, M, N, count):
    """[(w, u), (z, v), (x, y)][:count] with <w,u> = <z,v> = <x,y> = a^N."""
    aN = _an(ctx, N)
    return [(_frame(M, -k, -aN), _frame(M, k)) for k in (1, 2, 3)[:count]]


def _z5_build(ctx, b):
    M, c, N = b["M"], _S(ctx, b, "b"), b["N"]
    pairs = _frame_pairs(ctx, M, N, 2)
    _pairs_orthogonal(pairs)
    u = OrbitVector(M)
    return _Z(ctx, u, u.vector, c, N), _X(u, None, c * 2)


def _frame_sample(ctx, rng):
    return {"M": smp.frame(ctx.ring, ctx.n, rng, ctx.word_length), "b": _I(ctx, rng),
            "N": _N(rng)}


def _z6_build(ctx, b):
    M, c, N = b["M"], _S(ctx, b, "b"), b["N"]
    pairs = _frame_pairs(ctx, M, N, 3)
    _pairs_orthogonal(pairs)
    u, v = OrbitVector(M), smp.frame_orbit(M, 2)
    return _Z(ctx, u, v.vector, c, N), _Z(ctx, v, u.vector, c, N)


def _z7_build(ctx, b):
    M, c, r, N = b["M"], _S(ctx, b, "b"), _S(ctx, b, "r"), b["N"]
    pairs = _frame_pairs(ctx, M, N, 3)
    _pairs_orthogonal(pairs)
    u, v = OrbitVector(M), smp.frame_orbit(M, 2)
    uvr = OrbitVector(M * SteinbergWord(ctx.ring, ctx.n, (Letter(2, 1, r.payload),), _checked=True))
    require(uvr.vector == u.vector + v.vector.scale(r), "u + v r")
    _in_I(ctx, c)
    return (_X(uvr, None, c),
            _X(u, None, c) * _X(v, None, c * r * r) * _Z(ctx, u, v.vector, c * r, N))


def _z7_sample(ctx, rng):
    out = _frame_sample(ctx, rng)
    out["r"] = _s(ctx, rng)
    return out


# -- auxiliary identities ---------------------------------------------------------

def _comm_build(ctx, b):
    u, v, w = b["u"], b["v"], b["w"]
    _iso(u, v)
    _iso(u, w)
    require(bool(w.zero_pairs()), "w needs a symmetric pair of zeros")
    x, y = x_general(u, v, 0), x_general(u, w, 0)
    return x * y * x.inverse() * y.inverse(), x_general(u, None, v.form(w) * 2)


def _comm_sample(ctx, rng):
    u = smp.vector(ctx.ring, ctx.n, rng, size=ctx.size)
    v = smp.orth(u, rng, size=ctx.size)
    # prefer <v, w> != 0 so that the commutator is not trivially 1
    for _ in range(5):
        w = smp.zero_pair_orth(u, rng, ctx.size)
        if not v.form(w).is_zero():
            break
    return {"u": u, "v": v, "w": w}


def _parts_ok(u, parts):
    for p in parts:
        _iso(u, p)
        require(bool(p.zero_pairs()), "every part needs a symmetric pair of zeros")


def _perm_build(ctx, b):
    u, parts, perm = b["u"], b["parts"], b["perm"]
    _parts_ok(u, parts)
    require(sorted(perm) == list(range(len(parts))), "perm must be a permutation")
    return z_list_word(u, parts), z_list_word(u, [parts[k] for k in perm])


def _parts_sample(ctx, rng):
    u = smp.vector(ctx.ring, ctx.n, rng, size=ctx.size)
    parts = [smp.zero_pair_orth(u, rng, ctx.size) for _ in range(rng.randint(2, 3))]
    perm = list(range(len(parts)))
    rng.shuffle(perm)
    return {"u": u, "parts": parts, "perm": perm, "r": _s(ctx, rng)}


def _forgotten_build(ctx, b):
    u, parts, r = b["u"], b["parts"], _S(ctx, b, "r")
    _parts_ok(u, parts)
    return z_list_word(u.scale(r), parts), z_list_word(u, [p.scale(r) for p in parts])


def _orth_build(ctx, b):
    u, v, w, i = b["u"], b["v"], b["w"], b["i"]
    _iso(u, v)
    _iso(u, w)
    _iso(v, w, "<v, w> = 0")
    require(w.has_zero_pair(i), "w must vanish at ±i")
    return x_general(u, v + w, 0), x_general(u, v, 0) * x_general(u, w, 0)


def _orth_sample(ctx, rng):
    R, n = ctx.ring, ctx.n
    u = smp.vector(R, n, rng, size=ctx.size)
    i = rng.randint(1, n)
    k, l = smp.distinct_pair(n, rng, [x for x in indices(n) if abs(x) != i])
    w = suslin_direction(u, k, l).scale(_s(ctx, rng))
    allowed = [x for x in indices(n) if x not in (-k, -l)]
    k2, l2 = smp.distinct_pair(n, rng, allowed)
    v = (w.scale(_s(ctx, rng)) + u.scale(_s(ctx, rng))
         + suslin_direction(u, k2, l2).scale(_s(ctx, rng)))
    return {"u": u, "v": v, "w": w, "i": i}


def _nonzero_parts(dec, scale=None):
    parts = [p for p in dec.parts.values() if not p.is_zero()]
    return parts if scale is None else [p.scale(scale) for p in parts]


def _xz_build(ctx, b):
    u, v, w = b["u"], b["v"], b["w"]
    _iso(u, v)
    require(bool(v.zero_pairs()), "v needs a symmetric pair of zeros")
    dec = suslin_decompose(u, v, w)
    # the parts are taken over i < j
    return x_general(u, v.scale(dec.A), 0), z_list_word(u, _nonzero_parts(dec))


def _xz_sample(ctx, rng):
    u = smp.vector(ctx.ring, ctx.n, rng, size=ctx.size)
    return {"u": u, "v": smp.zero_pair_orth(u, rng, ctx.size),
            "w": smp.vector(ctx.ring, ctx.n, rng, size=ctx.size)}


def _decomp_build(ctx, b):
    u, v, w, xs = b["u"], b["v"], b["w"], b["x"]
    _iso(u, v)
    A = w.form(u)
    _parts_ok(u, xs)
    total = IndexedVector.zero(ctx.ring, ctx.n)
    for x in xs:
        total = total + x
    require(total == v.scale(A), "the x^k must sum to v A")
    dec = suslin_decompose(u, v, w)
    return z_list_word(u, [x.scale(A) for x in xs]), z_list_word(u, _nonzero_parts(dec, A))


def _decomp_sample(ctx, rng):
    R, n = ctx.ring, ctx.n
    u = smp.vector(R, n, rng, size=ctx.size)
    v = smp.orth(u, rng, size=ctx.size)
    w = smp.vector(R, n, rng, size=ctx.size)
    # another w' with the same A gives another family of summands of vA
    w2 = w + u.scale(_s(ctx, rng)) + smp.orth(u, rng, size=ctx.size)
    if w2.form(u) != w.form(u):
        w2 = w + u.scale(_s(ctx, rng))
    xs = _nonzero_parts(suslin_decompose(u, v, w2))
    rng.shuffle(xs)
    return {"u": u, "v": v, "w": w, "x": xs}


def _conj_build(ctx, b):
    u, v, w, g = b["u"], b["v"], b["w"], b["g"]
    _iso(u, v)
    return (z_upper_A(u, v, w).word.conj(g),
            z_upper_A(g.apply_to(u), g.apply_to(v), g.apply_to(w)).word)


def _conj_sample(ctx, rng):
    out = _xz_sample(ctx, rng)
    out["v"] = smp.orth(out["u"], rng, size=ctx.size)
    out["g"] = smp.word(ctx.ring, ctx.n, rng, rng.randint(1, 3))
    return out


def _add_build(ctx, b):
    u, v, v2, w = b["u"], b["v"], b["v2"], b["w"]
    _iso(u, v)
    _iso(u, v2)
    A = w.form(u)
    return (z_upper_A(u, v, w).word * z_upper_A(u, v2, w).word,
            z_upper_A(u, v + v2, w).word * x_general(u, None, v.form(v2) * A ** 4))


def _add_sample(ctx, rng):
    out = _conj_sample(ctx, rng)
    del out["g"]
    out["v2"] = smp.orth(out["u"], rng, size=ctx.size)
    return out


def _scaled_frame(ctx, b):
    """u = Me_1 s, w = -Me_{-1} t, v = Me_2 s, z = -Me_{-2} t, x = -Me_{-3} A, y = Me_3."""
    M, s, t = b["M"], _S(ctx, b, "s"), _S(ctx, b, "t")
    A = s * t
    u, w = _frame(M, 1, s), _frame(M, -1, -t)
    v, z = _frame(M, 2, s), _frame(M, -2, -t)
    x, y = _frame(M, -3, -A), _frame(M, 3)
    require(w.form(u) == A and z.form(v) == A and x.form(y) == A, "pairs must pair to A")
    _pairs_orthogonal([(w, u), (z, v), (x, y)])
    return A, u, w, v, z, x, y


def _scaled_frame_sample(ctx, rng):
    return {"M": smp.frame(ctx.ring, ctx.n, rng, ctx.word_length), "s": _nz(ctx, rng),
            "t": _nz(ctx, rng), "b": _s(ctx, rng), "c": _s(ctx, rng)}


def _symm_build(ctx, b):
    A, u, w, v, z, p, q = _scaled_frame(ctx, b)
    c = _S(ctx, b, "b")
    A3 = A ** 3
    return z_upper_A(u, v.scale(c * A3), w).word, z_upper_A(v, u.scale(c * A3), z).word


def _double_build(ctx, b):
    A, u, w, v, z, _, _ = _scaled_frame(ctx, b)
    c = _S(ctx, b, "b")
    return z_upper_A(u, u.scale(c * A ** 3), w).word, x_general(u, None, c * A ** 5 * 2)


def _five_six_build(ctx, b):
    A, u, w, v, z, _, _ = _scaled_frame(ctx, b)
    c, d = _S(ctx, b, "b"), _S(ctx, b, "c")
    dA11 = d * A ** 11
    return (x_general(u + v.scale(c), None, dA11),
            x_general(u, None, dA11) * x_general(v, None, c * c * dA11)
            * z_upper_A(u, v.scale(c * d * A ** 9), w).word)


def _onemore_build(ctx, b):
    u, v, c, N, Mexp = b["u"], b["v"], _S(ctx, b, "b"), b["N"], b["M"]
    _iso(u.vector, v)
    _in_I(ctx, c)
    aM = _an(ctx, Mexp)
    w = u.column_partner().scale(_an(ctx, N))
    lhs = z_scalar(u.vector.scale(aM), v, c, ctx.a, N + Mexp, w).word
    return lhs, z_scalar(u, v, aM * c, ctx.a, N, w).word


def _onemore_sample(ctx, rng):
    out = _base_sample(ctx, rng)
    out["M"] = rng.randint(0, 2)
    return out


RELATIONS = [
    Relation("Z0", "Z", "φ(Z(u,v,b)) = T(u,vb,0)", _z0_build, _base_sample),
    Relation("Z1", "Z", "Z(u,vr,b) = Z(u,v,rb)", _z1_build, _z1_sample),
    Relation("Z2", "Z", "Z(u,v,b)Z(u,v',b) = Z(u,v+v',b)X(u,0,b²<v,v'>)", _z2_build, _z2_sample),
    Relation("Z3", "Z", "Z(u,v,b)Z(u,v,c) = Z(u,v,b+c)", _z3_build, _z3_sample),
    Relation("Z4", "Z", "g Z(u,v,b) g⁻¹ = Z(φ(g)u,φ(g)v,b)", _z4_build, _z4_sample),
    Relation("Z5", "Z", "Z(u,u,b) = X(u,0,2b)", _z5_build, _frame_sample),
    Relation("Z6", "Z", "Z(u,v,b) = Z(v,u,b)", _z6_build, _frame_sample),
    Relation("Z7", "Z", "X(u+vr,0,b) = X(u,0,b)X(v,0,br²)Z(u,v,br)", _z7_build, _z7_sample),
    Relation("comm", "Z", "[X(u,v,0), X(u,w,0)] = X(u,0,2<v,w>)", _comm_build, _comm_sample),
    Relation("perm", "Z", "Z(u;v_1..v_N) = Z(u;v_σ(1)..v_σ(N))", _perm_build, _parts_sample),
    Relation("forgotten", "Z", "Z(ur;{v_k}) = Z(u;{rv_k})", _forgotten_build, _parts_sample),
    Relation("orth", "Z", "X(u,v+w,0) = X(u,v,0)X(u,w,0)", _orth_build, _orth_sample),
    Relation("x=z", "Z", "X(u,vA,0) = Z(u;{v_ij}_{i<j})", _xz_build, _xz_sample),
    Relation("decomposition", "Z", "Z(u;{x^k A}) = Z(u;{v_ij A})", _decomp_build, _decomp_sample),
    Relation("conj", "Z", "g Z^A(u,v) g⁻¹ = Z^A(φ(g)u,φ(g)v)", _conj_build, _conj_sample),
    Relation("add", "Z", "Z^A(u,v)Z^A(u,w) = Z^A(u,v+w)X(u,0,<v,w>A⁴)", _add_build, _add_sample),
    Relation("symm", "Z", "Z^A(u,vbA³) = Z^A(v,ubA³)", _symm_build, _scaled_frame_sample),
    Relation("double", "Z", "Z^A(u,ubA³) = X(u,0,2bA⁵)", _double_build, _scaled_frame_sample),
    Relation("5+6", "Z", "X(u+vb,0,cA¹¹) = X(u,0,cA¹¹)X(v,0,b²cA¹¹)Z^A(u,vbcA⁹)",
             _five_six_build, _scaled_frame_sample),
    Relation("onemore", "Z", "Z(ua^M,v,b) = Z(u,v,a^M b)", _onemore_build, _onemore_sample),
]
