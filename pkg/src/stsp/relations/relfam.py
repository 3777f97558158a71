"""Relative relations: the Keune–Loday relations KL0–KL7 and the Tulenbaev
relations T0–T6, for the splitting ideal I = tR'[t] of ``ctx.split``.

KL words are compared through ι, Tulenbaev words through κ.  KL relations
are checked together with an optional actor g acting on both sides (the
relations are imposed equivariantly).
"""
from __future__ import annotations

from ..elements import x_general
from ..relative import (
    iota,
    kappa,
    kl_act,
    kl_inverse,
    kl_root,
    tgen,
)
from ..rings import RingValue
from ..symplectic import _payload, sign
from ..words import Letter, OrbitVector, SteinbergWord
from . import sampling as smp
from .base import Relation, require


def _R(ctx):
    return ctx.split.ring


def _in_ideal(ctx, *xs):
    for x in xs:
        require(ctx.split.contains(x), "parameter must lie in the ideal")


def _val(ctx, x) -> RingValue:
    R = _R(ctx)
    return RingValue(R, _payload(R, x))


def _X(ctx, i, j, r) -> SteinbergWord:
    R = _R(ctx)
    return SteinbergWord(R, ctx.n, (Letter(i, j, _payload(R, r)),), _checked=True)


def _Y(ctx, i, j, a, inv=False):
    return kl_root(_R(ctx), ctx.n, i, j, a, inv)


def _act(g: SteinbergWord, word):
    return kl_act(g, word)


def _kl_sides(ctx, b, lhs, rhs):
    g = b.get("g")
    if g is not None and len(g):
        lhs, rhs = _act(g, lhs), _act(g, rhs)
    R, n = _R(ctx), ctx.n
    return iota(lhs, R, n), iota(rhs, R, n)


def _bracket_left(ctx, g: SteinbergWord, h) -> tuple:
    """⟦g, h] = ^g h · h⁻¹"""
    return _act(g, h) + kl_inverse(h)


def _bracket_right(ctx, h, g: SteinbergWord) -> tuple:
    """[h, g⟧ = h · ^g(h⁻¹)"""
    return h + _act(g, kl_inverse(h))


def _ideal(ctx, rng):
    R = _R(ctx)
    x = ctx.split.random_element(rng, ctx.size)
    for _ in range(4):
        if not R.is_zero(x):
            break
        x = ctx.split.random_element(rng, ctx.size)
    return _val(ctx, x)


def _scalar(ctx, rng):
    return smp.scalar(_R(ctx), rng, ctx.size)


def _actor(ctx, rng):
    return smp.word(_R(ctx), ctx.n, rng, rng.randint(0, 2))


def _with_actor(fn):
    def sample(ctx, rng):
        out = fn(ctx, rng)
        out["g"] = _actor(ctx, rng)
        return out
    return sample


# -- KL0 .. KL7 ---------------------------------------------------------------

def _kl0_build(ctx, b):
    i, j, a = b["i"], b["j"], _val(ctx, b["a"])
    _in_ideal(ctx, a)
    return _kl_sides(ctx, b, _Y(ctx, i, j, a), _Y(ctx, -j, -i, -a * (sign(i) * sign(j))))


def _kl0_sample(ctx, rng):
    i, j = smp.distinct_pair(ctx.n, rng)
    return {"i": i, "j": j, "a": _ideal(ctx, rng)}


def _kl1_build(ctx, b):
    i, j, a, c = b["i"], b["j"], _val(ctx, b["a"]), _val(ctx, b["b"])
    _in_ideal(ctx, a, c)
    return _kl_sides(ctx, b, _Y(ctx, i, j, a) + _Y(ctx, i, j, c), _Y(ctx, i, j, a + c))


def _kl1_sample(ctx, rng):
    out = _kl0_sample(ctx, rng)
    out["b"] = _ideal(ctx, rng)
    return out


def _s2_ok(i, j, h, k):
    return i != j and h != k and h not in (j, -i) and k not in (i, -j)


def _kl2_build(ctx, b):
    i, j, h, k = b["i"], b["j"], b["h"], b["k"]
    require(_s2_ok(i, j, h, k), "h ∉ {j,-i}, k ∉ {i,-j}")
    r, a = _val(ctx, b["r"]), _val(ctx, b["a"])
    _in_ideal(ctx, a)
    return _kl_sides(ctx, b, _bracket_left(ctx, _X(ctx, i, j, r), _Y(ctx, h, k, a)), ())


def _kl2_sample(ctx, rng):
    while True:
        i, j = smp.distinct_pair(ctx.n, rng)
        h, k = smp.distinct_pair(ctx.n, rng)
        if _s2_ok(i, j, h, k):
            return {"i": i, "j": j, "h": h, "k": k, "r": _scalar(ctx, rng), "a": _ideal(ctx, rng)}


def _kl3_build(ctx, b):
    i, j, k = b["i"], b["j"], b["k"]
    require(len({i, j, k}) == 3 and i not in (-j, -k) and j != -k, "i ∉ {-j,-k}, j != -k")
    r, a = _val(ctx, b["r"]), _val(ctx, b["a"])
    _in_ideal(ctx, a)
    return _kl_sides(ctx, b, _bracket_left(ctx, _X(ctx, i, j, r), _Y(ctx, j, k, a)),
                     _Y(ctx, i, k, r * a))


def _kl3_sample(ctx, rng):
    while True:
        i, j, k = (smp.idx(ctx.n, rng) for _ in range(3))
        if len({i, j, k}) == 3 and i not in (-j, -k) and j != -k:
            return {"i": i, "j": j, "k": k, "r": _scalar(ctx, rng), "a": _ideal(ctx, rng)}


def _short_sample(ctx, rng):
    i, j = smp.short_pair(ctx.n, rng)
    return {"i": i, "j": j, "r": _scalar(ctx, rng), "a": _ideal(ctx, rng)}


def _kl4_build(ctx, b):
    i, j, r, a = b["i"], b["j"], _val(ctx, b["r"]), _val(ctx, b["a"])
    require(j not in (i, -i), "j != ±i")
    _in_ideal(ctx, a)
    return _kl_sides(ctx, b, _bracket_left(ctx, _X(ctx, i, -i, r), _Y(ctx, -i, j, a)),
                     _Y(ctx, i, j, r * a * sign(i)) + _Y(ctx, -j, j, -r * a * a))


def _kl5_build(ctx, b):
    i, j, r, a = b["i"], b["j"], _val(ctx, b["r"]), _val(ctx, b["a"])
    require(j not in (i, -i), "j != ±i")
    _in_ideal(ctx, a)
    return _kl_sides(ctx, b, _bracket_right(ctx, _Y(ctx, i, -i, a), _X(ctx, -i, j, r)),
                     _Y(ctx, i, j, a * r * sign(i)) + _Y(ctx, -j, j, -a * r * r))


def _kl6_build(ctx, b):
    i, j, r, a = b["i"], b["j"], _val(ctx, b["r"]), _val(ctx, b["a"])
    require(j not in (i, -i), "j != ±i")
    _in_ideal(ctx, a)
    # the right side is a relative generator Y_{i,-i}
    return _kl_sides(ctx, b, _bracket_left(ctx, _X(ctx, i, j, r), _Y(ctx, j, -i, a)),
                     _Y(ctx, i, -i, r * a * (2 * sign(i))))


def _kl7_build(ctx, b):
    i, j, h, k, s, t = b["i"], b["j"], b["h"], b["k"], b["s"], b["t"]
    a, r, c = _val(ctx, b["a"]), _val(ctx, b["r"]), _val(ctx, b["b"])
    _in_ideal(ctx, a, c)
    inner = _act(_X(ctx, h, k, r), _Y(ctx, s, t, c))
    y = _Y(ctx, i, j, a)
    # the KL-group acts on itself by conjugation
    return _kl_sides(ctx, b, _act(_X(ctx, i, j, a), inner), y + inner + kl_inverse(y))


def _kl7_sample(ctx, rng):
    n = ctx.n
    (i, j), (h, k), (s, t) = (smp.distinct_pair(n, rng) for _ in range(3))
    return {"i": i, "j": j, "h": h, "k": k, "s": s, "t": t, "a": _ideal(ctx, rng),
            "r": _scalar(ctx, rng), "b": _ideal(ctx, rng)}


# -- T0 .. T6 -----------------------------------------------------------------

def _orbit(ctx, rng):
    return smp.orbit(_R(ctx), ctx.n, rng, length=ctx.word_length)


def _tg(ctx, u, v=None, a=0, b=0):
    _in_ideal(ctx, a, b)
    require(isinstance(u, OrbitVector), "u must be a witnessed orbit vector")
    if v is not None:
        require(u.vector.form(v).is_zero(), "<u, v> = 0")
    return tgen(u, v, a, b)


def _t_base(ctx, rng):
    u = _orbit(ctx, rng)
    return {"u": u, "v": smp.orth(u.vector, rng, size=ctx.size), "a": _ideal(ctx, rng),
            "b": _ideal(ctx, rng)}


def _t0_build(ctx, b):
    u, v, a, c, r = b["u"], b["v"], _val(ctx, b["a"]), _val(ctx, b["b"]), _val(ctx, b["r"])
    return kappa([_tg(ctx, u, v.scale(r), a, c)]), kappa([_tg(ctx, u, v, r * a, c)])


def _t0_sample(ctx, rng):
    out = _t_base(ctx, rng)
    out["r"] = _scalar(ctx, rng)
    return out


def _t1_build(ctx, b):
    u, v, w = b["u"], b["v"], b["w"]
    a, c, d = _val(ctx, b["a"]), _val(ctx, b["b"]), _val(ctx, b["c"])
    return (kappa([_tg(ctx, u, v, a, c), _tg(ctx, u, w, a, d)]),
            kappa([_tg(ctx, u, v + w, a, c + d + a * a * v.form(w))]))


def _t1_sample(ctx, rng):
    out = _t_base(ctx, rng)
    out["w"] = smp.orth(out["u"].vector, rng, size=ctx.size)
    out["c"] = _ideal(ctx, rng)
    return out


def _t2_build(ctx, b):
    u, v, a, c = b["u"], b["v"], _val(ctx, b["a"]), _val(ctx, b["b"])
    return (kappa([_tg(ctx, u, v, a, 0), _tg(ctx, u, v, c, 0)]),
            kappa([_tg(ctx, u, v, a + c, 0)]))


def _t3_build(ctx, b):
    u, a = b["u"], _val(ctx, b["a"])
    return kappa([_tg(ctx, u, u.vector, a, 0)]), kappa([_tg(ctx, u, None, 0, a * 2)])


def _frame_pair(ctx, b):
    u, v = b["u"], b["v"]
    require(isinstance(u, OrbitVector) and isinstance(v, OrbitVector), "witnessed pair")
    e2 = smp.frame_vector(SteinbergWord.empty(u.ring, u.n), 2)
    require(v.vector == u.witness.apply_to(e2),
            "(u, v) must be the first two columns of one elementary matrix")
    return u, v


def _t4_build(ctx, b):
    u, v = _frame_pair(ctx, b)
    a = _val(ctx, b["a"])
    return kappa([_tg(ctx, u, v.vector, a, 0)]), kappa([_tg(ctx, v, u.vector, a, 0)])


def _pair_sample(ctx, rng):
    M = smp.frame(_R(ctx), ctx.n, rng, ctx.word_length)
    return M, smp.frame_orbit(M, 1), smp.frame_orbit(M, 2)


def _t4_sample(ctx, rng):
    _, u, v = _pair_sample(ctx, rng)
    return {"u": u, "v": v, "a": _ideal(ctx, rng)}


def _t5_build(ctx, b):
    u, v = _frame_pair(ctx, b)
    a, r = _val(ctx, b["a"]), _val(ctx, b["r"])
    uvr = b["u_plus_vr"]
    require(isinstance(uvr, OrbitVector) and uvr.vector == u.vector + v.vector.scale(r),
            "u_plus_vr must equal u + v r")
    return (kappa([_tg(ctx, uvr, None, 0, a)]),
            kappa([_tg(ctx, u, None, 0, a), _tg(ctx, v, None, 0, a * r * r),
                   _tg(ctx, u, v.vector, a * r, 0)]))


def _t5_sample(ctx, rng):
    M, u, v = _pair_sample(ctx, rng)
    R = _R(ctx)
    r = _scalar(ctx, rng)
    uvr = OrbitVector(M * SteinbergWord(R, ctx.n, (Letter(2, 1, r.payload),), _checked=True))
    return {"u": u, "v": v, "u_plus_vr": uvr, "r": r, "a": _ideal(ctx, rng)}


def _t6_build(ctx, b):
    x1 = _tg(ctx, b["u1"], b["v1"], _val(ctx, b["a1"]), _val(ctx, b["b1"]))
    x = _tg(ctx, b["u"], b["v"], _val(ctx, b["a"]), _val(ctx, b["b"]))
    g = kappa([x1])
    # right side realized without the orbit witness of the conjugated generator
    rhs = x_general(g.apply_to(x.u.vector), g.apply_to(x.v).scale(x.a), x.b)
    return g * kappa([x]) * g.inverse(), rhs


def _t6_sample(ctx, rng):
    first = _t_base(ctx, rng)
    second = _t_base(ctx, rng)
    return {"u1": first["u"], "v1": first["v"], "a1": first["a"], "b1": first["b"],
            "u": second["u"], "v": second["v"], "a": second["a"], "b": second["b"]}


RELATIONS = [
    Relation("KL0", "KL", "Y_ij(a) = Y_{-j,-i}(-a sign i sign j)", _kl0_build, _with_actor(_kl0_sample)),
    Relation("KL1", "KL", "Y_ij(a)Y_ij(b) = Y_ij(a+b)", _kl1_build, _with_actor(_kl1_sample)),
    Relation("KL2", "KL", "⟦X_ij(r), Y_hk(a)] = 1", _kl2_build, _with_actor(_kl2_sample)),
    Relation("KL3", "KL", "⟦X_ij(r), Y_jk(a)] = Y_ik(ra)", _kl3_build, _with_actor(_kl3_sample)),
    Relation("KL4", "KL", "⟦X_{i,-i}(r), Y_{-i,j}(a)] = Y_ij(ra sign i)Y_{-j,j}(-ra²)",
             _kl4_build, _with_actor(_short_sample)),
    Relation("KL5", "KL", "[Y_{i,-i}(a), X_{-i,j}(r)⟧ = Y_ij(ar sign i)Y_{-j,j}(-ar²)",
             _kl5_build, _with_actor(_short_sample)),
    Relation("KL6", "KL", "⟦X_ij(r), Y_{j,-i}(a)] = Y_{i,-i}(2ra sign i)",
             _kl6_build, _with_actor(_short_sample)),
    Relation("KL7", "KL", "^{X_ij(a)}(^{X_hk(r)}Y_st(b)) = ^{Y_ij(a)}(^{X_hk(r)}Y_st(b))",
             _kl7_build, _with_actor(_kl7_sample)),
    Relation("T0", "T", "[u,vr,a,b] = [u,v,ra,b]", _t0_build, _t0_sample),
    Relation("T1", "T", "[u,v,a,b][u,w,a,c] = [u,v+w,a,b+c+a²<v,w>]", _t1_build, _t1_sample),
    Relation("T2", "T", "[u,v,a,0][u,v,b,0] = [u,v,a+b,0]", _t2_build, _t_base),
    Relation("T3", "T", "[u,u,a,0] = [u,0,0,2a]", _t3_build, _t_base),
    Relation("T4", "T", "[u,v,a,0] = [v,u,a,0]", _t4_build, _t4_sample),
    Relation("T5", "T", "[u+vr,0,0,a] = [u,0,0,a][v,0,0,ar²][u,v,ar,0]", _t5_build, _t5_sample),
    Relation("T6", "T", "x' [u,v,a,b] x'⁻¹ = [Tu, Tv, a, b] with T = φ(κ x')", _t6_build, _t6_sample),
]
