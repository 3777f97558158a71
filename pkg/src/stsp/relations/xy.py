"""Properties X0–X10 of the elements X(u, v, a) and Y0–Y13 of Y_(i)(u, v, a).

Here u, v are arbitrary vectors (not necessarily in the orbit of e_1); the
words come from ``elements.x_general`` and ``elements.y_element``.
"""
from __future__ import annotations

from ..elements import basis_x, x_general, y_element
from ..symplectic import IndexedVector, esd_matrix, sign
from . import sampling as smp
from .base import Relation, require, scalar_of


def _iso(u, v):
    require(u.form(v).is_zero(), "<u, v> = 0")


def _zp(u, i):
    require(u.has_zero_pair(abs(i)), f"u must vanish at ±{abs(i)}")


def _pair_support(v, i):
    """e_i v_i + e_{-i} v_{-i}"""
    return IndexedVector.from_dict(v.ring, v.n, {i: v[i], -i: v[-i]})


def _e(ctx, i):
    return IndexedVector.basis(ctx.ring, ctx.n, i)


def _S(ctx, b, key):
    return scalar_of(ctx.ring, b[key])


def _uv(ctx, rng, avoid=()):
    u = smp.vector(ctx.ring, ctx.n, rng, avoid=avoid, size=ctx.size)
    return u, smp.orth(u, rng, size=ctx.size)


def _s(ctx, rng):
    return smp.scalar(ctx.ring, rng, ctx.size)


# -- X0 .. X10 -----------------------------------------------------------------

def _x0_build(ctx, b):
    u, v, a = b["u"], b["v"], _S(ctx, b, "a")
    _iso(u, v)
    return x_general(u, v, a), esd_matrix(u, v, a)


def _uva_sample(ctx, rng):
    u, v = _uv(ctx, rng)
    return {"u": u, "v": v, "a": _s(ctx, rng)}


def _x1_build(ctx, b):
    u, v, a, g = b["u"], b["v"], _S(ctx, b, "a"), b["g"]
    _iso(u, v)
    return x_general(u, v, a).conj(g), x_general(g.apply_to(u), g.apply_to(v), a)


def _x1_sample(ctx, rng):
    out = _uva_sample(ctx, rng)
    out["g"] = smp.word(ctx.ring, ctx.n, rng, rng.randint(1, 3))
    return out


def _x2_build(ctx, b):
    u, a, c = b["u"], _S(ctx, b, "a"), _S(ctx, b, "b")
    return x_general(u.scale(c), None, a), x_general(u, None, c * c * a)


def _uab_sample(ctx, rng):
    return {"u": smp.vector(ctx.ring, ctx.n, rng, size=ctx.size), "a": _s(ctx, rng),
            "b": _s(ctx, rng)}


def _x3_build(ctx, b):
    u, a, c = b["u"], _S(ctx, b, "a"), _S(ctx, b, "b")
    return x_general(u, None, a) * x_general(u, None, c), x_general(u, None, a + c)


def _x4_build(ctx, b):
    u, v = b["u"], b["v"]
    _iso(u, v)
    return x_general(u, v, 0), x_general(v, u, 0)


def _uv_sample(ctx, rng):
    u, v = _uv(ctx, rng)
    return {"u": u, "v": v}


def _x5_build(ctx, b):
    u, a, c = b["u"], _S(ctx, b, "a"), _S(ctx, b, "b")
    return x_general(u.scale(a), u.scale(c), 0), x_general(u, None, a * c * 2)


def _x6_build(ctx, b):
    u, v = b["u"], b["v"]
    _iso(u, v)
    return (x_general(u + v, None, 1),
            x_general(u, None, 1) * x_general(v, None, 1) * x_general(u, v, 0))


def _x7_build(ctx, b):
    u, v, a = b["u"], b["v"], _S(ctx, b, "a")
    _iso(u, v)
    return x_general(u, v, a), x_general(u, v, 0) * x_general(u, None, a)


def _x8_guard(b):
    """<u,v> = <u,w> = 0 and either u_{±i} = 0 or v_{±i} = w_{±i} = 0."""
    u, v, i = b["u"], b["v"], b["i"]
    w = b.get("w", v)
    _iso(u, v)
    _iso(u, w)
    require(u.has_zero_pair(i) or (v.has_zero_pair(i) and w.has_zero_pair(i)),
            "either u or both v, w must vanish at ±i")


def _x8_sample(ctx, rng, with_w=False):
    i = rng.randint(1, ctx.n)
    if rng.random() < 0.5:
        u = smp.vector(ctx.ring, ctx.n, rng, avoid=(i,), size=ctx.size)
        v = smp.orth(u, rng, size=ctx.size)
        w = smp.orth(u, rng, size=ctx.size)
    else:
        u = smp.vector(ctx.ring, ctx.n, rng, size=ctx.size)
        v = smp.orth(u, rng, avoid=(i,), size=ctx.size)
        w = smp.orth(u, rng, avoid=(i,), size=ctx.size)
    out = {"i": i, "u": u, "v": v, "a": _s(ctx, rng), "b": _s(ctx, rng)}
    if with_w:
        out["w"] = w
    return out


def _x8_build(ctx, b):
    _x8_guard(b)
    u, v, a, r = b["u"], b["v"], _S(ctx, b, "a"), _S(ctx, b, "b")
    return (x_general(u + v.scale(r), None, a),
            x_general(u, None, a) * x_general(v, None, r * r * a) * x_general(u, v.scale(r * a), 0))


def _x9_build(ctx, b):
    _x8_guard(b)
    u, v, a = b["u"], b["v"], _S(ctx, b, "a")
    return x_general(u, v.scale(a), 0), x_general(v, u.scale(a), 0)


def _x10_build(ctx, b):
    _x8_guard(b)
    u, v, w = b["u"], b["v"], b["w"]
    a, c = _S(ctx, b, "a"), _S(ctx, b, "b")
    return (x_general(u, v, a) * x_general(u, w, c),
            x_general(u, v + w, a + c + v.form(w)))


# -- Y0 .. Y13 ----------------------------------------------------------------

def _yi_sample(ctx, rng, extra_zero=False):
    """A signed index i and u with u_{±i} = 0 (and a second zero pair j if asked)."""
    n = ctx.n
    i = smp.idx(n, rng)
    avoid = [abs(i)]
    j = None
    if extra_zero:
        j = smp.idx(n, rng, exclude=(i, -i))
        avoid.append(abs(j))
    u = smp.vector(ctx.ring, n, rng, avoid=tuple(avoid), size=ctx.size)
    return i, j, u


def _y0_build(ctx, b):
    i, u, v, a = b["i"], b["u"], b["v"], _S(ctx, b, "a")
    _zp(u, i)
    _iso(u, v)
    return y_element(i, u, v, a), esd_matrix(u, v, a)


def _y_uva_sample(ctx, rng):
    i, _, u = _yi_sample(ctx, rng)
    return {"i": i, "u": u, "v": smp.orth(u, rng, size=ctx.size), "a": _s(ctx, rng)}


def _y1_build(ctx, b):
    i, j, u, v, a = b["i"], b["j"], b["u"], b["v"], _S(ctx, b, "a")
    _zp(u, i)
    _zp(u, j)
    _iso(u, v)
    return y_element(i, u, v, a), y_element(j, u, v, a)


def _y1_sample(ctx, rng):
    i, j, u = _yi_sample(ctx, rng, extra_zero=True)
    return {"i": i, "j": j, "u": u, "v": smp.orth(u, rng, size=ctx.size), "a": _s(ctx, rng)}


def _ybasis(ctx, i, w, a, other):
    """Y(e_i, w, a), computed through a zero pair `other` of e_i."""
    require(other not in (i, -i), "index of the zero pair")
    return y_element(other, _e(ctx, i), w, a)


def _y2_build(ctx, b):
    i, j = b["i"], b["j"]
    w, w2 = b["w"], b["w2"]
    a, a2 = _S(ctx, b, "a"), _S(ctx, b, "b")
    e = _e(ctx, i)
    _iso(e, w)
    _iso(e, w2)
    return (_ybasis(ctx, i, w, a, j) * _ybasis(ctx, i, w2, a2, j),
            _ybasis(ctx, i, w + w2, a + a2 + w.form(w2), j))


def _ei_orth(ctx, rng, i):
    """A vector w with <w, e_i> = 0, i.e. w_{-i} = 0."""
    w = smp.vector(ctx.ring, ctx.n, rng, size=ctx.size)
    return w - IndexedVector.basis(ctx.ring, ctx.n, -i, w[-i])


def _y2_sample(ctx, rng):
    i, j = smp.short_pair(ctx.n, rng)
    return {"i": i, "j": j, "w": _ei_orth(ctx, rng, i), "w2": _ei_orth(ctx, rng, i),
            "a": _s(ctx, rng), "b": _s(ctx, rng)}


def _y3_build(ctx, b):
    i, j, w, a = b["i"], b["j"], b["w"], _S(ctx, b, "a")
    _iso(_e(ctx, i), w)
    return _ybasis(ctx, i, w, a, j), basis_x(ctx.ring, ctx.n, i, w, a)


def _y3_sample(ctx, rng):
    i, j = smp.short_pair(ctx.n, rng)
    return {"i": i, "j": j, "w": _ei_orth(ctx, rng, i), "a": _s(ctx, rng)}


def _y4_build(ctx, b):
    i, u, v, a = b["i"], b["u"], b["v"], _S(ctx, b, "a")
    _zp(u, i)
    require(v.has_zero_pair(abs(i)), "v' must vanish at ±i")
    _iso(u, v)
    R, n = ctx.ring, ctx.n
    s = sign(i)
    x = basis_x(R, n, i, u, 0)
    y = basis_x(R, n, -i, v.scale(s), a)
    tail = basis_x(R, n, -i, u.scale(a * (-s)), 0)
    return y_element(i, u, v, a), x * y * x.inverse() * y.inverse() * tail


def _y4_sample(ctx, rng):
    i, _, u = _yi_sample(ctx, rng)
    return {"i": i, "u": u, "v": smp.orth(u, rng, avoid=(abs(i),), size=ctx.size),
            "a": _s(ctx, rng)}


def _y5_build(ctx, b):
    i, u, v, a = b["i"], b["u"], b["v"], _S(ctx, b, "a")
    _zp(u, i)
    _iso(u, v)
    R, n = ctx.ring, ctx.n
    vi, vmi = v[i], v[-i]
    rest = v - _pair_support(v, i)
    return (y_element(i, u, v, a),
            y_element(i, u, rest, a - vi * vmi * sign(i))
            * basis_x(R, n, i, u.scale(vi), 0) * basis_x(R, n, -i, u.scale(vmi), 0))


def _y6_build(ctx, b):
    i, q, qp, a = b["i"], b["q"], b["qp"], _S(ctx, b, "a")
    _zp(q, i)
    require(qp == _pair_support(qp, i), "q' must be supported on ±i")
    j = b["j"]
    return (x_general(q + qp, None, a),
            y_element(i, q, None, a) * y_element(j, qp, None, a) * y_element(j, qp, q.scale(a), 0))


def _y6_sample(ctx, rng):
    i, j = smp.short_pair(ctx.n, rng)
    q = smp.vector(ctx.ring, ctx.n, rng, avoid=(abs(i),), size=ctx.size)
    return {"i": i, "j": j, "q": q, "qp": smp.pair_part(ctx.ring, ctx.n, rng, i, ctx.size),
            "a": _s(ctx, rng)}


def _y7_build(ctx, b):
    i, j, r, rp, s = b["i"], b["j"], b["r"], b["rp"], b["s"]
    _zp(r, i)
    _zp(r, j)
    require(rp == _pair_support(rp, j) and s == _pair_support(s, i), "r', s supports")
    return y_element(i, r, s, 0) * y_element(i, rp, s, 0), y_element(i, r + rp, s, 0)


def _y7_sample(ctx, rng):
    i, j = smp.short_pair(ctx.n, rng)
    R, n = ctx.ring, ctx.n
    return {"i": i, "j": j,
            "r": smp.vector(R, n, rng, avoid=(abs(i), abs(j)), size=ctx.size),
            "rp": smp.pair_part(R, n, rng, j, ctx.size),
            "s": smp.pair_part(R, n, rng, i, ctx.size)}


def _y8_build(ctx, b):
    i, u, v = b["i"], b["u"], b["v"]
    a, c = _S(ctx, b, "a"), _S(ctx, b, "b")
    _zp(u, i)
    _iso(u, v)
    return y_element(i, u, v, a + c), y_element(i, u, v, a) * y_element(i, u, None, c)


def _y_uvab_sample(ctx, rng):
    out = _y_uva_sample(ctx, rng)
    out["b"] = _s(ctx, rng)
    return out


def _y9_build(ctx, b):
    i, u, v, a = b["i"], b["u"], b["v"], _S(ctx, b, "a")
    _zp(u, i)
    _iso(u, v)
    vp = _pair_support(v, i)
    return y_element(i, u, v, a), y_element(i, u, v - vp, a) * y_element(i, u, vp, 0)


def _y10_build(ctx, b):
    i, u, v, a = b["i"], b["u"], b["v"], _S(ctx, b, "a")
    _zp(u, i)
    _iso(u, v)
    return (x_general(u + v, None, a),
            x_general(u, None, a) * x_general(v, None, a) * y_element(i, u, v.scale(a), 0))


def _y11_build(ctx, b):
    i, u, v, a = b["i"], b["u"], b["v"], _S(ctx, b, "a")
    _zp(u, i)
    _zp(v, i)
    _iso(u, v)
    return y_element(i, u, v.scale(a), 0), y_element(i, v, u.scale(a), 0)


def _y11_sample(ctx, rng):
    i, _, u = _yi_sample(ctx, rng)
    return {"i": i, "u": u, "v": smp.orth(u, rng, avoid=(abs(i),), size=ctx.size),
            "a": _s(ctx, rng)}


def _y12_build(ctx, b):
    i, u, v, a = b["i"], b["u"], b["v"], _S(ctx, b, "a")
    _zp(u, i)
    _iso(u, v)
    # the right side avoids the zero pair at i when another one exists
    return y_element(i, u, v, a), x_general(u, v, a)


def _y13_build(ctx, b):
    i, u, v, w = b["i"], b["u"], b["v"], b["w"]
    _zp(u, i)
    _iso(u, v)
    _iso(u, w)
    return (y_element(i, u, v, 0) * y_element(i, u, w, 0),
            y_element(i, u, v + w, v.form(w)))


def _y13_sample(ctx, rng):
    i, _, u = _yi_sample(ctx, rng)
    return {"i": i, "u": u, "v": smp.orth(u, rng, size=ctx.size),
            "w": smp.orth(u, rng, size=ctx.size)}


RELATIONS = [
    Relation("X0", "X", "φ(X(u,v,a)) = T(u,v,a)", _x0_build, _uva_sample),
    Relation("X1", "X", "g X(u,v,a) g⁻¹ = X(φ(g)u, φ(g)v, a)", _x1_build, _x1_sample),
    Relation("X2", "X", "X(ub,0,a) = X(u,0,b²a)", _x2_build, _uab_sample),
    Relation("X3", "X", "X(u,0,a)X(u,0,b) = X(u,0,a+b)", _x3_build, _uab_sample),
    Relation("X4", "X", "X(u,v,0) = X(v,u,0)", _x4_build, _uv_sample),
    Relation("X5", "X", "X(ua,ub,0) = X(u,0,2ab)", _x5_build, _uab_sample),
    Relation("X6", "X", "X(u+v,0,1) = X(u,0,1)X(v,0,1)X(u,v,0)", _x6_build, _uv_sample),
    Relation("X7", "X", "X(u,v,a) = X(u,v,0)X(u,0,a)", _x7_build, _uva_sample),
    Relation("X8", "X", "X(u+vr,0,a) = X(u,0,a)X(v,0,r²a)X(u,vra,0)", _x8_build, _x8_sample),
    Relation("X9", "X", "X(u,va,0) = X(v,ua,0)", _x9_build, _x8_sample),
    Relation("X10", "X", "X(u,v,a)X(u,w,b) = X(u,v+w,a+b+<v,w>)", _x10_build,
             lambda ctx, rng: _x8_sample(ctx, rng, with_w=True)),
    Relation("Y0", "Y", "φ(Y_(i)(u,v,a)) = T(u,v,a)", _y0_build, _y_uva_sample),
    Relation("Y1", "Y", "Y_(i)(u,v,a) = Y_(j)(u,v,a)", _y1_build, _y1_sample),
    Relation("Y2", "Y", "Y(e_i,w,a)Y(e_i,w',a') = Y(e_i,w+w',a+a'+<w,w'>)", _y2_build, _y2_sample),
    Relation("Y3", "Y", "Y(e_i,w,a) = X(e_i,w,a)", _y3_build, _y3_sample),
    Relation("Y4", "Y", "Y_(i)(u,v',a) = [Y(e_i,u,0), Y(e_{-i},v' sign i,a)] Y(e_{-i},ua sign(-i),0)",
             _y4_build, _y4_sample),
    Relation("Y5", "Y", "Y_(i)(u,v,a) = Y_(i)(u,v-v_i e_i-v_{-i} e_{-i},a-v_i v_{-i} sign i)"
             " Y(e_i,uv_i,0)Y(e_{-i},uv_{-i},0)", _y5_build, _y_uva_sample),
    Relation("Y6", "Y", "X(q+q',0,a) = Y_(i)(q,0,a)Y(q',0,a)Y(q',qa,0)", _y6_build, _y6_sample),
    Relation("Y7", "Y", "Y(r,s,0)Y(r',s,0) = Y_(i)(r+r',s,0)", _y7_build, _y7_sample),
    Relation("Y8", "Y", "Y_(i)(u,v,a+b) = Y_(i)(u,v,a)Y_(i)(u,0,b)", _y8_build, _y_uvab_sample),
    Relation("Y9", "Y", "Y_(i)(u,v,a) = Y_(i)(u,v-v',a)Y_(i)(u,v',0)", _y9_build, _y_uva_sample),
    Relation("Y10", "Y", "X(u+v,0,a) = X(u,0,a)X(v,0,a)Y_(i)(u,va,0)", _y10_build, _y_uva_sample),
    Relation("Y11", "Y", "Y_(i)(u,va,0) = Y_(i)(v,ua,0)", _y11_build, _y11_sample),
    Relation("Y12", "Y", "Y_(i)(u,v,a) = X(u,v,a)", _y12_build, _y_uva_sample),
    Relation("Y13", "Y", "Y_(i)(u,v,0)Y_(i)(u,w,0) = Y_(i)(u,v+w,<v,w>)", _y13_build, _y13_sample),
]
