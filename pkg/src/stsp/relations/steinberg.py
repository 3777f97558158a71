"""Steinberg relations S0–S5, the relations K1–K7 of the ESD presentation, and
primitive rewrites (cancellation, S1 corollaries).

S3–S5 are used in the commuted form x y = z · y x, which is [x, y] = z with
[x, y] = x y x⁻¹ y⁻¹.
"""
from __future__ import annotations

from ..elements import x_element, x_general
from ..rings import RingValue
from ..symplectic import IndexedVector, sign
from ..words import Letter, OrbitVector, PatternMismatch, SteinbergWord, basis_move
from . import sampling as smp
from .base import Relation, require, scalar_of


def _w(ctx, *letters):
    R = ctx.ring
    return SteinbergWord(R, ctx.n, tuple(Letter(i, j, scalar_of(R, a).payload) for i, j, a in letters),
                         _checked=True)


def _letter_at(word, pos):
    if pos < 0 or pos >= len(word):
        raise PatternMismatch(f"no letter at position {pos}")
    return word.letters[pos]


def _plain(L, what):
    if L.inv:
        raise PatternMismatch(f"{what}: inverse letter (rewrite it with S1-inv first)")
    return L


# -- S0 .. S5 --------------------------------------------------------------------

def _s0_build(ctx, b):
    i, j, a = b["i"], b["j"], scalar_of(ctx.ring, b["a"])
    require(i != j, "i != j")
    return _w(ctx, (i, j, a)), _w(ctx, (-j, -i, -a * (sign(i) * sign(j))))


def _s0_sample(ctx, rng):
    i, j = smp.distinct_pair(ctx.n, rng)
    return {"i": i, "j": j, "a": smp.scalar(ctx.ring, rng, ctx.size)}


def _s0_infer(word, pos):
    L = _plain(_letter_at(word, pos), "S0")
    return {"i": L.i, "j": L.j, "a": RingValue(word.ring, L.a)}


def _s1_build(ctx, b):
    i, j = b["i"], b["j"]
    a, c = scalar_of(ctx.ring, b["a"]), scalar_of(ctx.ring, b["b"])
    require(i != j, "i != j")
    return _w(ctx, (i, j, a), (i, j, c)), _w(ctx, (i, j, a + c))


def _s1_sample(ctx, rng):
    i, j = smp.distinct_pair(ctx.n, rng)
    return {"i": i, "j": j, "a": smp.scalar(ctx.ring, rng, ctx.size),
            "b": smp.scalar(ctx.ring, rng, ctx.size)}


def _s1_infer(word, pos):
    L1 = _plain(_letter_at(word, pos), "S1")
    L2 = _plain(_letter_at(word, pos + 1), "S1")
    if (L1.i, L1.j) != (L2.i, L2.j):
        raise PatternMismatch("S1 needs two letters with the same root")
    R = word.ring
    return {"i": L1.i, "j": L1.j, "a": RingValue(R, L1.a), "b": RingValue(R, L2.a)}


def _s2_ok(i, j, h, k):
    return h not in (j, -i) and k not in (i, -j) and i != j and h != k


def _s2_build(ctx, b):
    i, j, h, k = b["i"], b["j"], b["h"], b["k"]
    require(_s2_ok(i, j, h, k), "S2 needs h ∉ {j,-i}, k ∉ {i,-j}")
    x = (i, j, scalar_of(ctx.ring, b["a"]))
    y = (h, k, scalar_of(ctx.ring, b["b"]))
    return _w(ctx, x, y), _w(ctx, y, x)


def _s2_sample(ctx, rng):
    while True:
        i, j = smp.distinct_pair(ctx.n, rng)
        h, k = smp.distinct_pair(ctx.n, rng)
        if _s2_ok(i, j, h, k):
            return {"i": i, "j": j, "h": h, "k": k, "a": smp.scalar(ctx.ring, rng, ctx.size),
                    "b": smp.scalar(ctx.ring, rng, ctx.size)}


def _pair_infer(word, pos, names=("i", "j", "h", "k")):
    L1 = _plain(_letter_at(word, pos), "rewrite")
    L2 = _plain(_letter_at(word, pos + 1), "rewrite")
    R = word.ring
    return {names[0]: L1.i, names[1]: L1.j, names[2]: L2.i, names[3]: L2.j,
            "a": RingValue(R, L1.a), "b": RingValue(R, L2.a)}


def _s2_infer(word, pos):
    return _pair_infer(word, pos)


def _s3_ok(i, j, k):
    return len({i, j, k}) == 3 and i not in (-j, -k) and j != -k


def _s3_build(ctx, b):
    i, j, k = b["i"], b["j"], b["k"]
    require(_s3_ok(i, j, k), "S3 needs i ∉ {-j,-k}, j != -k")
    a, c = scalar_of(ctx.ring, b["a"]), scalar_of(ctx.ring, b["b"])
    return _w(ctx, (i, j, a), (j, k, c)), _w(ctx, (i, k, a * c), (j, k, c), (i, j, a))


def _s3_sample(ctx, rng):
    while True:
        i, j, k = (smp.idx(ctx.n, rng) for _ in range(3))
        if _s3_ok(i, j, k):
            return {"i": i, "j": j, "k": k, "a": smp.scalar(ctx.ring, rng, ctx.size),
                    "b": smp.scalar(ctx.ring, rng, ctx.size)}


def _s3_infer(word, pos):
    b = _pair_infer(word, pos, ("i", "j", "j2", "k"))
    if b.pop("j2") != b["j"]:
        raise PatternMismatch("S3 needs X_ij X_jk")
    return b


def _s4_build(ctx, b):
    i, j = b["i"], b["j"]
    require(j not in (i, -i), "S4 needs j != ±i")
    a, c = scalar_of(ctx.ring, b["a"]), scalar_of(ctx.ring, b["b"])
    return (_w(ctx, (i, -i, a), (-i, j, c)),
            _w(ctx, (i, j, a * c * sign(i)), (-j, j, -a * c * c), (-i, j, c), (i, -i, a)))


def _s4_sample(ctx, rng):
    i, j = smp.short_pair(ctx.n, rng)
    return {"i": i, "j": j, "a": smp.scalar(ctx.ring, rng, ctx.size),
            "b": smp.scalar(ctx.ring, rng, ctx.size)}


def _s4_infer(word, pos):
    b = _pair_infer(word, pos, ("i", "mi", "mi2", "j"))
    if b["mi"] != -b["i"] or b["mi2"] != -b["i"]:
        raise PatternMismatch("S4 needs X_{i,-i} X_{-i,j}")
    del b["mi"], b["mi2"]
    return b


def _s5_build(ctx, b):
    i, j = b["i"], b["j"]
    require(j not in (i, -i), "S5 needs j != ±i")
    a, c = scalar_of(ctx.ring, b["a"]), scalar_of(ctx.ring, b["b"])
    return (_w(ctx, (i, j, a), (j, -i, c)),
            _w(ctx, (i, -i, a * c * (2 * sign(i))), (j, -i, c), (i, j, a)))


def _s5_infer(word, pos):
    b = _pair_infer(word, pos, ("i", "j", "j2", "mi"))
    if b["j2"] != b["j"] or b["mi"] != -b["i"]:
        raise PatternMismatch("S5 needs X_ij X_{j,-i}")
    del b["j2"], b["mi"]
    return b


# -- primitive rewrites ----------------------------------------------------------

def _letter_binding(L, ring):
    return {"i": L.i, "j": L.j, "a": RingValue(ring, L.a), "inv": bool(L.inv)}


def _letter_from(ctx, b):
    return Letter(b["i"], b["j"], scalar_of(ctx.ring, b["a"]).payload, bool(b.get("inv", False)))


def _cancel_build(ctx, b):
    L = _letter_from(ctx, b)
    return (SteinbergWord(ctx.ring, ctx.n, (L, L.inverse()), _checked=True),
            SteinbergWord.empty(ctx.ring, ctx.n))


def _cancel_infer(word, pos):
    L1, L2 = _letter_at(word, pos), _letter_at(word, pos + 1)
    if L2 != L1.inverse():
        raise PatternMismatch("free-cancel needs a letter followed by its inverse")
    return _letter_binding(L1, word.ring)


def _insert_build(ctx, b):
    lhs, rhs = _cancel_build(ctx, b)
    return rhs, lhs


def _letter_sample(ctx, rng):
    i, j = smp.distinct_pair(ctx.n, rng)
    return {"i": i, "j": j, "a": smp.scalar(ctx.ring, rng, ctx.size), "inv": rng.random() < 0.5}


def _s1inv_build(ctx, b):
    i, j, a = b["i"], b["j"], scalar_of(ctx.ring, b["a"])
    return (SteinbergWord(ctx.ring, ctx.n, (Letter(i, j, a.payload, True),), _checked=True),
            _w(ctx, (i, j, -a)))


def _s1inv_infer(word, pos):
    L = _letter_at(word, pos)
    if not L.inv:
        raise PatternMismatch("S1-inv needs an inverse letter")
    return {"i": L.i, "j": L.j, "a": RingValue(word.ring, L.a)}


def _s1zero_build(ctx, b):
    return _w(ctx, (b["i"], b["j"], 0)), SteinbergWord.empty(ctx.ring, ctx.n)


def _s1zero_infer(word, pos):
    L = _letter_at(word, pos)
    if not word.ring.is_zero(L.a):
        raise PatternMismatch("S1-zero needs X_ij(0)")
    return {"i": L.i, "j": L.j}


def _s1zero_sample(ctx, rng):
    i, j = smp.distinct_pair(ctx.n, rng)
    return {"i": i, "j": j}


# -- K1 .. K7 (generators [u, v, a] realized as X(u, v, a), u witnessed) --------------

def _orbit(b, key):
    u = b[key]
    require(isinstance(u, OrbitVector), f"{key} must be a witnessed orbit vector")
    return u


def _orth(u_vec, v, what="<u, v> = 0"):
    require(u_vec.form(v).is_zero(), what)


def _k1_build(ctx, b):
    u = _orbit(b, "u")
    R = ctx.ring
    v1, v2 = b["v1"], b["v2"]
    a1, a2 = scalar_of(R, b["a1"]), scalar_of(R, b["a2"])
    _orth(u.vector, v1)
    _orth(u.vector, v2)
    return (x_element(u, v1, a1) * x_element(u, v2, a2),
            x_element(u, v1 + v2, a1 + a2 + v1.form(v2)))


def _k1_sample(ctx, rng):
    R, n = ctx.ring, ctx.n
    u = smp.orbit(R, n, rng, length=ctx.word_length)
    return {"u": u, "v1": smp.orth(u.vector, rng), "v2": smp.orth(u.vector, rng),
            "a1": smp.scalar(R, rng, ctx.size), "a2": smp.scalar(R, rng, ctx.size)}


def _k2_build(ctx, b):
    u1, u2 = _orbit(b, "u1"), _orbit(b, "u2")
    c = scalar_of(ctx.ring, b["b"])
    _orth(u1.vector, u2.vector, "<u1, u2> = 0")
    return x_element(u1, u2.vector.scale(c), 0), x_element(u2, u1.vector.scale(c), 0)


def _pair_sample(ctx, rng):
    M = smp.frame(ctx.ring, ctx.n, rng, ctx.word_length)
    return M, smp.frame_orbit(M, 1), smp.frame_orbit(M, 2)


def _k2_sample(ctx, rng):
    M, u1, u2 = _pair_sample(ctx, rng)
    if rng.random() < 0.25:
        u2 = smp.frame_orbit(M, smp.idx(ctx.n, rng, exclude=(-1,)))
    return {"u1": u1, "u2": u2, "b": smp.scalar(ctx.ring, rng, ctx.size)}


def _k3_build(ctx, b):
    u1, u = _orbit(b, "u1"), _orbit(b, "u")
    R = ctx.ring
    v1, v = b["v1"], b["v"]
    a1, a = scalar_of(R, b["a1"]), scalar_of(R, b["a"])
    _orth(u1.vector, v1)
    _orth(u.vector, v)
    g = x_element(u1, v1, a1)
    # the right side is built without reusing g as a witness
    return x_element(u, v, a).conj(g), x_general(g.apply_to(u.vector), g.apply_to(v), a)


def _k3_sample(ctx, rng):
    R, n = ctx.ring, ctx.n
    u1 = smp.orbit(R, n, rng, length=1)
    u = smp.orbit(R, n, rng, length=1)
    return {"u1": u1, "v1": smp.orth(u1.vector, rng, terms=1), "a1": smp.scalar(R, rng, 1),
            "u": u, "v": smp.orth(u.vector, rng, terms=1), "a": smp.scalar(R, rng, 1)}


def _k4_build(ctx, b):
    u = _orbit(b, "u")
    a = scalar_of(ctx.ring, b["a"])
    return x_element(u, u.vector.scale(a), 0), x_element(u, None, a * 2)


def _u_a_sample(ctx, rng):
    return {"u": smp.orbit(ctx.ring, ctx.n, rng, length=ctx.word_length),
            "a": smp.scalar(ctx.ring, rng, ctx.size)}


def _k5_build(ctx, b):
    u = _orbit(b, "u")
    R = ctx.ring
    a, c = scalar_of(R, b["a"]), scalar_of(R, b["b"])
    require(R.is_unit(c.payload), "b must be a unit for ub to stay in the orbit")
    ub = OrbitVector(u.witness * smp.scale_witness(R, ctx.n, c))
    require(ub.vector == u.vector.scale(c), "scaled witness")
    return x_element(ub, None, a), x_element(u, None, a * c * c)


def _k5_sample(ctx, rng):
    b = _u_a_sample(ctx, rng)
    b["b"] = smp.unit(ctx.ring, rng, ctx.size)
    return b


def _k6_build(ctx, b):
    u, v = _orbit(b, "u"), _orbit(b, "v")
    a = scalar_of(ctx.ring, b["a"])
    uv = _orbit(b, "u_plus_v")
    _orth(u.vector, v.vector, "<u, v> = 0")
    require(uv.vector == u.vector + v.vector, "u_plus_v must equal u + v")
    return (x_element(uv, None, a),
            x_element(u, None, a) * x_element(v, None, a) * x_element(v, u.vector.scale(a), 0))


def _k6_sample(ctx, rng):
    M, u, v = _pair_sample(ctx, rng)
    one = ctx.ring.one()
    uv = OrbitVector(M * SteinbergWord(ctx.ring, ctx.n, (Letter(2, 1, one),), _checked=True))
    return {"u": u, "v": v, "u_plus_v": uv, "a": smp.scalar(ctx.ring, rng, ctx.size)}


def _k7_build(ctx, b):
    u, w = _orbit(b, "u"), _orbit(b, "w")
    R = ctx.ring
    a, r = scalar_of(R, b["a"]), scalar_of(R, b["r"])
    uwr = _orbit(b, "u_plus_wr")
    # (u, w) must be the first two columns of one elementary matrix
    require(w.vector == u.witness.apply_to(IndexedVector.basis(R, ctx.n, 2)), "(u, w) pair")
    require(uwr.vector == u.vector + w.vector.scale(r), "u_plus_wr must equal u + w r")
    return (x_element(uwr, None, a),
            x_element(u, None, a) * x_element(w, None, a * r * r)
            * x_element(u, w.vector.scale(a * r), 0))


def _k7_sample(ctx, rng):
    M, u, w = _pair_sample(ctx, rng)
    r = smp.scalar(ctx.ring, rng, ctx.size)
    uwr = OrbitVector(M * SteinbergWord(ctx.ring, ctx.n, (Letter(2, 1, r.payload),), _checked=True))
    return {"u": u, "w": w, "u_plus_wr": uwr, "r": r, "a": smp.scalar(ctx.ring, rng, ctx.size)}


RELATIONS = [
    Relation("S0", "S", "X_ij(a) = X_{-j,-i}(-a sign i sign j)", _s0_build, _s0_sample, _s0_infer),
    Relation("S1", "S", "X_ij(a) X_ij(b) = X_ij(a+b)", _s1_build, _s1_sample, _s1_infer),
    Relation("S2", "S", "[X_ij(a), X_hk(b)] = 1 for h ∉ {j,-i}, k ∉ {i,-j}",
             _s2_build, _s2_sample, _s2_infer),
    Relation("S3", "S", "[X_ij(a), X_jk(b)] = X_ik(ab)", _s3_build, _s3_sample, _s3_infer),
    Relation("S4", "S", "[X_{i,-i}(a), X_{-i,j}(b)] = X_ij(ab sign i) X_{-j,j}(-ab²)",
             _s4_build, _s4_sample, _s4_infer),
    Relation("S5", "S", "[X_ij(a), X_{j,-i}(b)] = X_{i,-i}(2ab sign i)",
             _s5_build, _s4_sample, _s5_infer),
    Relation("K1", "K", "[u,v1,a1][u,v2,a2] = [u, v1+v2, a1+a2+<v1,v2>]", _k1_build, _k1_sample),
    Relation("K2", "K", "[u1, u2 b, 0] = [u2, u1 b, 0]", _k2_build, _k2_sample),
    Relation("K3", "K", "[u',v',a'][u,v,a][u',v',a']⁻¹ = [Tu, Tv, a]", _k3_build, _k3_sample),
    Relation("K4", "K", "[u, u a, 0] = [u, 0, 2a]", _k4_build, _u_a_sample),
    Relation("K5", "K", "[u b, 0, a] = [u, 0, a b²]", _k5_build, _k5_sample),
    Relation("K6", "K", "[u+v, 0, a] = [u,0,a][v,0,a][v, u a, 0]", _k6_build, _k6_sample),
    Relation("K7", "K", "[u+wr, 0, a] = [u,0,a][w,0,a r²][u, w a r, 0]", _k7_build, _k7_sample),
]

PRIMITIVES = [
    Relation("free-cancel", "P", "x x⁻¹ = 1", _cancel_build, _letter_sample, _cancel_infer),
    Relation("insert-cancel-pair", "P", "1 = x x⁻¹", _insert_build, _letter_sample),
    Relation("S1-inv", "P", "X_ij(a)⁻¹ = X_ij(-a)", _s1inv_build, _s0_sample, _s1inv_infer),
    Relation("S1-zero", "P", "X_ij(0) = 1", _s1zero_build, _s1zero_sample, _s1zero_infer),
]
