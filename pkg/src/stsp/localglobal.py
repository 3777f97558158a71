"""Local–global machinery over R[t]: evaluation of words, the direct system
t ↦ a^{j-i}t with its maps into B = R ⋉ tR_a[t], the Tulenbaev map
St^T(B_a, I) -> St(B) on generators, the dilation search and the comaximal
gluing check.

Triviality of Steinberg words is only ever certified by a derivation trace;
everything else here is checked on the symplectic matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .relations import Context
from .relative import GuardViolated, TulenbaevGenerator, kappa
from .rings import (
    LocalizedRing,
    MixedBRing,
    PolyRing,
    Ring,
    RingValue,
    coerce,
    substitute,
)
from .symplectic import IndexedVector, SympMatrix, _payload, symp_form
from .trace import DerivationTrace, ReplayError, TraceStep
from .words import Letter, PatternMismatch, SteinbergWord
from .zcalc import ZElement, divide_by_power, z_full

DEFAULT_N_MAX = 16


class HypothesisViolated(ValueError):
    """φ(λ_a*(g)) is not the identity."""


class LiftFailure(ValueError):
    """No power of a clears the denominators of a generator."""


class NotComaximal(ValueError):
    """The supplied Bézout witnesses do not give s·a + r·b = 1."""


# -- rings of the tower ------------------------------------------------------

def _poly_and_var(ring: Ring, var: str):
    """The polynomial ring carrying `var` inside ring (R[t] or R[t]_a)."""
    P = ring.base if isinstance(ring, LocalizedRing) else ring
    if not isinstance(P, PolyRing) or var not in P.vars:
        raise ValueError(f"{ring.spec} has no polynomial variable {var}")
    return P


def localized_poly(ring: PolyRing, a) -> LocalizedRing:
    """R[t]_a, i.e. R_a[t] with a taken from R."""
    return LocalizedRing(ring, coerce(_payload(ring.base, a), ring.base, ring))


# -- evaluation ----------------------------------------------------------------

def evaluate_word(g: SteinbergWord, x, var: str = "t") -> SteinbergWord:
    """g(x): substitute var ↦ x in every letter parameter (x in the ring of g)."""
    R = g.ring
    _poly_and_var(R, var)
    xp = _payload(R, x)
    return g.map_params(lambda c: substitute(R, c, var, xp))


def evaluate_matrix(m: SympMatrix, x, var: str = "t") -> SympMatrix:
    R = m.ring
    xp = _payload(R, x)
    return m.map_entries(lambda c: substitute(R, c, var, xp), R)


def dilate(g: SteinbergWord, a, N: int, var: str = "t") -> SteinbergWord:
    """g(a^N t)."""
    R = g.ring
    P = _poly_and_var(R, var)
    ap = coerce(_payload(P.base, a), P.base, P)
    t = P.mul(P.pow(ap, N), P.var(var))
    if isinstance(R, LocalizedRing):
        t = R.localize(t)
    return evaluate_word(g, RingValue(R, t), var)


def localize_word(g: SteinbergWord, a) -> SteinbergWord:
    """λ_a*(g) for g over R[t]; words over R[t]_a are returned unchanged."""
    R = g.ring
    if isinstance(R, LocalizedRing):
        return g
    L = localized_poly(R, a)
    return g.map_params(L.localize, L)


def lift_word(g: SteinbergWord):
    """The word over R[t] mapping to g over R[t]_a, or None if some parameter
    has a denominator."""
    L = g.ring
    if not isinstance(L, LocalizedRing):
        return g
    letters = []
    for Lt in g.letters:
        p, k = Lt.a
        if k:
            return None
        letters.append(Letter(Lt.i, Lt.j, p, Lt.inv))
    return SteinbergWord(L.base, g.n, letters, _checked=True)


# -- direct system and the maps φ_i ---------------------------------------------

@dataclass(frozen=True)
class DirectSystemMap:
    """ψ_ij : R[t] -> R[t], t ↦ a^{j-i} t."""

    ring: PolyRing
    a: object
    i: int
    j: int
    var: str = "t"

    def __post_init__(self):
        if not 0 <= self.i <= self.j:
            raise ValueError("need 0 <= i <= j")

    def __call__(self, p):
        P = self.ring
        x = p.payload if isinstance(p, RingValue) else p
        ap = coerce(_payload(P.base, self.a), P.base, P)
        t = P.mul(P.pow(ap, self.j - self.i), P.var(self.var))
        out = substitute(P, x, self.var, t)
        return RingValue(P, out) if isinstance(p, RingValue) else out

    def then(self, other: "DirectSystemMap") -> "DirectSystemMap":
        if other.i != self.j:
            raise ValueError("maps do not compose")
        return DirectSystemMap(self.ring, self.a, self.i, other.j, self.var)

    def on_word(self, g: SteinbergWord) -> SteinbergWord:
        return g.map_params(self)


@dataclass(frozen=True)
class PhiIMap:
    """φ_i : R[t] -> B,  p ↦ (p(0), λ(p)(a^{-i}t) − λ(p)(0))."""

    target: MixedBRing
    i: int

    @property
    def source(self) -> PolyRing:
        return self.target.poly

    def __call__(self, p):
        B = self.target
        P, L = B.poly, B.loc
        x = p.payload if isinstance(p, RingValue) else p
        c0 = P.constant_term(x)
        shifted = substitute(L, L.localize(x), B.var, L.canon(P.var(B.var), self.i))
        f = L.sub(shifted, L.localize(P.const(c0)))
        out = (c0, f)
        return RingValue(B, out) if isinstance(p, RingValue) else out

    def on_word(self, g: SteinbergWord) -> SteinbergWord:
        return g.map_params(self, self.target)


def phi_i_push(g: SteinbergWord, i: int, B: MixedBRing) -> SteinbergWord:
    """Coefficient-wise image of g under φ_i."""
    if g.ring != B.poly:
        raise ValueError(f"expected a word over {B.poly.spec}, got {g.ring.spec}")
    return PhiIMap(B, i).on_word(g)


# -- Tulenbaev map ------------------------------------------------------------

@dataclass
class TulenbaevImage:
    source: TulenbaevGenerator
    N: int
    M: int
    u: IndexedVector  # lift of u a^N
    v: IndexedVector  # lift of v a^N
    w: IndexedVector  # lift of w a^N
    z: ZElement

    @property
    def word(self) -> SteinbergWord:
        return self.z.word

    def to_json(self):
        return {"N": self.N, "M": self.M, "u": self.u.to_json(), "v": self.v.to_json(),
                "w": self.w.to_json(), "length": len(self.word)}


def localization_of(B: Ring) -> LocalizedRing:
    """B_a for the mixed ring B (a taken from R)."""
    if not isinstance(B, MixedBRing):
        raise TypeError("the Tulenbaev map is defined for B = R ⋉ tR_a[t]")
    return LocalizedRing(B, (B.a, B.loc.zero()))


def _lift_vector(Ba: LocalizedRing, vec: IndexedVector, N: int) -> IndexedVector:
    B = Ba.base
    out = []
    for x, k in vec.entries:
        if k > N:
            raise LiftFailure(f"entry needs a^{k}, only a^{N} available")
        out.append(B.mul(x, Ba.apow(N - k)))
    return IndexedVector(B, vec.n, out)


def _lift_ideal(Ba: LocalizedRing, c, ideal_check) -> object:
    """The unique y ∈ I with λ_a(y) = c (I_a ≅ I)."""
    B = Ba.base
    x, k = _payload(Ba, c)
    if not ideal_check(x):
        raise GuardViolated("scalar is not in the ideal tR_a[t]")
    return divide_by_power(B, x, Ba.a, k).payload


def _denominator(vec: IndexedVector) -> int:
    return max((k for _, k in vec.entries), default=0)


def tulenbaev_T(x: TulenbaevGenerator, max_m: int = 8) -> TulenbaevImage:
    """T[u, v, b, c] = Z(ũ, ṽa^M, b/a^{2N+M}, c/a^{2N}) over B.

    x lives over B_a (see localization_of); u carries its witness, b and c lie
    in the ideal I_a = tR_a[t].
    """
    Ba = x.u.ring
    if not isinstance(Ba, LocalizedRing) or not isinstance(Ba.base, MixedBRing):
        raise TypeError("generator must live over B_a")
    B = Ba.base
    n = x.u.n
    in_ideal = lambda y: B.base.is_zero(y[0])  # noqa: E731
    u = x.u.vector
    w = x.u.column_partner()
    v = x.v
    N = max(_denominator(u), _denominator(v), _denominator(w))
    uu, vv, ww = (_lift_vector(Ba, t, N) for t in (u, v, w))
    a = Ba.a
    a2N = B.pow(a, 2 * N)
    for M in range(max_m + 1):
        aM = B.pow(a, M)
        if B.is_zero(B.mul(symp_form(uu, vv).payload, aM)) and \
                B.mul(symp_form(ww, uu).payload, aM) == B.mul(a2N, aM):
            break
    else:
        raise LiftFailure(f"no M <= {max_m} makes the lifted pair isotropic")
    b = _lift_ideal(Ba, x.a, in_ideal)
    c = _lift_ideal(Ba, x.b, in_ideal)
    K = 2 * N + M
    bK = divide_by_power(B, b, a, K)
    c2N = divide_by_power(B, c, a, 2 * N)
    aM = RingValue(B, B.pow(a, M))
    z = z_full(uu, vv.scale(aM), bK, c2N, a, N=K, w=ww.scale(aM))
    if x.inv:
        z = ZElement(z.tag + "^-1", z.ingredients, z.word.inverse())
    return TulenbaevImage(x, N, M, uu, vv, ww, z)


def localize_matrix(m: SympMatrix, Ba: LocalizedRing) -> SympMatrix:
    return m.map_entries(Ba.localize, Ba)


def tulenbaev_diagram(x: TulenbaevGenerator) -> dict:
    """Both paths around the square: λ_a*(φ(T(x))) and φ(κ(x))."""
    img = tulenbaev_T(x)
    Ba = x.u.ring
    down = localize_matrix(img.word.phi(), Ba)
    across = kappa(x).phi()
    return {"commutes": down == across, "image": img, "phi_T": img.word.phi(),
            "phi_kappa": across}


# -- dilation search -------------------------------------------------------------

@dataclass
class DilationResult:
    N: int | None
    word: SteinbergWord | None = None  # g(a^N t) over R[t]
    tried: list = field(default_factory=list)


def dilation_search(g: SteinbergWord, a, N_max: int = DEFAULT_N_MAX,
                    var: str = "t") -> DilationResult:
    """Smallest N ≤ N_max such that g(a^N t) is a word over R[t] whose
    projection is the identity.

    g is given over R[t] or R[t]_a; raises HypothesisViolated unless
    φ(λ_a*(g)) = 1.
    """
    gl = localize_word(g, a)
    if not gl.phi().is_identity():
        raise HypothesisViolated("φ(λ_a*(g)) is not the identity")
    res = DilationResult(None)
    for N in range(N_max + 1):
        res.tried.append(N)
        lifted = lift_word(dilate(gl, a, N, var))
        if lifted is not None and lifted.phi().is_identity():
            res.N, res.word = N, lifted
            return res
    return res


def replay_on(trace: DerivationTrace, word: SteinbergWord) -> SteinbergWord:
    """Replay the steps of a trace on another word, re-reading the bindings of
    every step from the word (used after dilation, where the parameters change)."""
    ctx = Context(word.ring, word.n)
    steps = [TraceStep(s.relation, s.position, {}, s.direction) for s in trace.steps]
    return DerivationTrace(word, steps, ctx.to_json()).replay()


def certify_dilation(trace: DerivationTrace, dilated: SteinbergWord) -> bool:
    """True when the trace proves λ_a*(g) = 1 and its steps also reduce g(a^N t)
    to the empty word over R[t]."""
    try:
        if len(trace.replay()):
            return False
        return len(replay_on(trace, dilated)) == 0
    except (ReplayError, PatternMismatch):
        return False


# -- comaximal gluing ----------------------------------------------------------------

def comaximal_glue_check(g: SteinbergWord, a, b, s, r) -> dict:
    """Matrix-level instance of: λ_a*(g) = λ_b*(g) = 1 with Ra + Rb = R gives g = 1."""
    P = g.ring
    R = P.base
    ap, bp, sp, rp = (_payload(R, t) for t in (a, b, s, r))
    if not R.is_one(R.add(R.mul(sp, ap), R.mul(rp, bp))):
        raise NotComaximal(f"{R.format(sp)}·{R.format(ap)} + {R.format(rp)}·{R.format(bp)} != 1")
    hyp_a = localize_word(g, ap).phi().is_identity()
    hyp_b = localize_word(g, bp).phi().is_identity()
    applicable = hyp_a and hyp_b
    conclusion = g.phi().is_identity()
    return {
        "hypothesis_a": hyp_a,
        "hypothesis_b": hyp_b,
        "applicable": applicable,
        "conclusion": conclusion,
        "pass": (not applicable) or conclusion,
    }


def random_generator(Ba: LocalizedRing, n: int, rng, length: int = 3, size: int = 2,
                     avoid: int | None = None) -> TulenbaevGenerator:
    """A random [u, v, b, c] over B_a with b, c ∈ I_a nonzero.

    The witness of u starts with a letter moving e_1; with `avoid = k` every
    letter and v stay away from the indices ±k.
    """
    B = Ba.base
    idx = [i for i in range(-n, n + 1) if i and (avoid is None or abs(i) != abs(avoid))]

    def scalar():
        x = Ba.random(rng, size)
        return x if not Ba.is_zero(x) else Ba.one()

    def ideal():
        while True:
            f = B.random(rng, size)[1]
            if not B.loc.is_zero(f):
                return Ba.localize((B.base.zero(), f))

    letters = [(rng.choice([i for i in idx if i not in (1, -1)] + [-1]), 1, scalar(), False)]
    while len(letters) < length:
        i, j = rng.sample(idx, 2)
        letters.append((i, j, scalar(), rng.random() < 0.3))
    M = SteinbergWord(Ba, n, list(reversed(letters)))
    v0 = {k: scalar() for k in idx if k != -1 and rng.random() < 0.5}
    v = M.apply_to(IndexedVector.from_dict(Ba, n, v0))
    from .words import OrbitVector
    return TulenbaevGenerator(OrbitVector(M), v, RingValue(Ba, ideal()), RingValue(Ba, ideal()),
                              rng.random() < 0.2)


# -- curated scenarios ----------------------------------------------------------------

SCENARIOS = ("trace-trivial", "nontrivial-phi", "dilation-needed")


@dataclass
class Scenario:
    name: str
    word: SteinbergWord
    a: int
    trace: DerivationTrace | None
    glue_b: int = 3
    glue_s: int = -1  # s·a + r·b = 1
    glue_r: int = 1


def scenario(name: str, n: int = 3) -> Scenario:
    from .rings import parse_ring
    from .trace import derive
    from .words import parse_word

    if name == "trace-trivial":
        P = parse_ring("Z[t]")
        g = parse_word(P, n, "X(1,2;t)*X(1,2;2*t)*X(1,2;-3*t)")
        tr = derive(g, [("S1", 0), ("S1", 0), ("S1-zero", 0)], name=name)
        return Scenario(name, g, 2, tr)
    if name == "nontrivial-phi":
        P = parse_ring("Z[t]")
        return Scenario(name, parse_word(P, n, "X(1,2;t)"), 2, None)
    if name == "dilation-needed":
        L = parse_ring("Loc(Z[t],2)")
        g = parse_word(L, n, "X(1,2;t/2)*X(2,3;t/4)*X(1,2;t/2)^-1*X(2,3;t/4)^-1*X(1,3;t^2/8)^-1")
        steps = [("S3", 0), ("free-cancel", 2), ("free-cancel", 1), ("free-cancel", 0)]
        return Scenario(name, g, 2, derive(g, steps, name=name))
    raise KeyError(f"unknown scenario {name!r}; choose from {', '.join(SCENARIOS)}")


def random_conjugates(g: SteinbergWord, rng, count: int, length: int = 3):
    """h g h⁻¹ for random short words h over the ring of g."""
    from .relations import sampling as smp

    for _ in range(count):
        h = smp.word(g.ring, g.n, rng, length, size=1)
        yield g.conj(h)
