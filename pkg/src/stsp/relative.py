"""Relative Steinberg groups for a splitting ideal I ⊴ R'.

Three descriptions are modelled:

* words in the absolute group whose image modulo I is trivial;
* Keune–Loday words: letters ^g Y_ij(a) with an absolute actor g and a ∈ I,
  mapped to the absolute group by ι(^g Y_ij(a)) = g X_ij(a) g⁻¹;
* Tulenbaev words: letters [u, v, a, b] with u an orbit vector, a, b ∈ I,
  mapped to the absolute group by κ[u, v, a, b] = X(u, v a, b).

θ sends Y_ij(a) to [e_i, e_{-j}, a sign(-j), 0] (Y_{i,-i}(a) to [e_i, 0, 0, a]),
and ψ splits an absolute word over R' into a relative part and a word over R'/I.
"""
from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .elements import x_element
from .rings import PolyRing, Ring, RingValue
from .rings.homs import RingHom, rho_hom, sigma_hom
from .symplectic import IndexedVector, SympMatrix, _payload, sign, symp_form
from .words import Letter, OrbitVector, SteinbergWord


class GuardViolated(ValueError):
    """Bindings do not satisfy the hypotheses of a relation."""


class SplittingIdealData:
    """I = var·R'[var] inside a polynomial ring R', with ρ = ev_0 and σ = constants."""

    def __init__(self, ring: PolyRing, var: str | None = None):
        if not isinstance(ring, PolyRing):
            raise TypeError("splitting ideal data needs a polynomial ring")
        self.ring = ring
        self.var = var or ring.vars[-1]
        self.rho: RingHom = rho_hom(ring, self.var)
        self.sigma: RingHom = sigma_hom(ring, self.var)
        self.quotient: Ring = self.rho.target

    @classmethod
    def for_ring(cls, ring: Ring) -> "SplittingIdealData":
        """tR[t] for a polynomial ring; otherwise adjoin a fresh variable."""
        if isinstance(ring, PolyRing):
            return cls(ring)
        for var in ("t", "s", "y", "z"):
            try:
                return cls(PolyRing(ring, (var,)), var)
            except ValueError:
                continue
        raise ValueError(f"no fresh variable for {ring.spec}")

    def sigma_rho(self, x):
        return self.sigma.fn(self.rho.fn(_payload(self.ring, x)))

    def contains(self, x) -> bool:
        return self.quotient.is_zero(self.rho.fn(_payload(self.ring, x)))

    def random_element(self, rng: Random, size: int = 2):
        R = self.ring
        x = R.random(rng, size)
        return R.sub(x, self.sigma_rho(x))

    def lift_word(self, w: SteinbergWord) -> SteinbergWord:
        """σ*: words over R'/I to words over R'."""
        return w.map_params(self.sigma.fn, self.ring)

    def to_json(self):
        return {"ring": self.ring.spec, "ideal": f"{self.var}*{self.ring.spec}"}


# -- Keune–Loday words ---------------------------------------------------------

@dataclass(frozen=True)
class KLGenerator:
    actor: SteinbergWord
    i: int
    j: int
    a: object  # payload, element of I
    inv: bool = False

    def inverse(self) -> "KLGenerator":
        return KLGenerator(self.actor, self.i, self.j, self.a, not self.inv)

    def acted(self, g: SteinbergWord) -> "KLGenerator":
        """^g (^h Y) = ^{gh} Y"""
        return KLGenerator(g * self.actor, self.i, self.j, self.a, self.inv)

    def format(self) -> str:
        R = self.actor.ring
        root = f"Y({self.i},{self.j};{R.format(self.a)})" + ("^-1" if self.inv else "")
        if not len(self.actor):
            return root
        return f"[{self.actor.format()}]{root}"


def kl_root(ring: Ring, n: int, i: int, j: int, a, inv: bool = False) -> tuple:
    return (KLGenerator(SteinbergWord.empty(ring, n), i, j, _payload(ring, a), inv),)


def kl_act(g: SteinbergWord, word) -> tuple:
    return tuple(x.acted(g) for x in word)


def kl_inverse(word) -> tuple:
    return tuple(x.inverse() for x in reversed(word))


def kl_format(word) -> str:
    return "*".join(x.format() for x in word) or "1"


def iota(word, ring: Ring | None = None, n: int | None = None) -> SteinbergWord:
    """ι(^g Y_ij(a)) = g X_ij(a) g⁻¹."""
    word = tuple(word)
    if not word:
        if ring is None:
            raise ValueError("empty KL word needs ring and n")
        return SteinbergWord.empty(ring, n)
    R, n = word[0].actor.ring, word[0].actor.n
    out = SteinbergWord.empty(R, n)
    for x in word:
        core = SteinbergWord(R, n, (Letter(x.i, x.j, x.a, x.inv),), _checked=True)
        out = out * core.conj(x.actor) if len(x.actor) else out * core
    return out


# -- Tulenbaev words -----------------------------------------------------------

@dataclass(frozen=True)
class TulenbaevGenerator:
    u: OrbitVector
    v: IndexedVector
    a: RingValue
    b: RingValue
    inv: bool = False

    def __post_init__(self):
        if not self.u.ring.is_zero(symp_form(self.u.vector, self.v).payload):
            raise GuardViolated("<u, v> must vanish")

    def inverse(self) -> "TulenbaevGenerator":
        return TulenbaevGenerator(self.u, self.v, self.a, self.b, not self.inv)

    def check_ideal(self, ideal: SplittingIdealData):
        if not (ideal.contains(self.a) and ideal.contains(self.b)):
            raise GuardViolated("a and b must lie in the ideal")

    def to_json(self):
        return {"u": self.u.to_json(), "v": self.v.to_json(), "a": str(self.a),
                "b": str(self.b), "inverse": self.inv}

    def format(self) -> str:
        return (f"[{self.u.witness.format()}e1, {self.v}, {self.a}, {self.b}]"
                + ("^-1" if self.inv else ""))


def tgen(u: OrbitVector, v=None, a=0, b=0, inv=False) -> TulenbaevGenerator:
    R, n = u.ring, u.n
    v = IndexedVector.zero(R, n) if v is None else v
    return TulenbaevGenerator(u, v, RingValue(R, _payload(R, a)), RingValue(R, _payload(R, b)), inv)


def kappa_letter(x: TulenbaevGenerator) -> SteinbergWord:
    w = x_element(x.u, x.v.scale(x.a), x.b)
    return w.inverse() if x.inv else w


def kappa(word) -> SteinbergWord:
    """κ[u, v, a, b] = X(u, v a, b), letter by letter."""
    word = list(word) if not isinstance(word, TulenbaevGenerator) else [word]
    if not word:
        raise ValueError("empty Tulenbaev word has no ring")
    out = SteinbergWord.empty(word[0].u.ring, word[0].u.n)
    for x in word:
        out = out * kappa_letter(x)
    return out


def act_on_tulenbaev(g: SteinbergWord, x: TulenbaevGenerator) -> TulenbaevGenerator:
    """[u, v, a, b] ↦ [φ(g)u, φ(g)v, a, b]; the witness of u is extended by g."""
    return TulenbaevGenerator(x.u.moved_by(g), g.apply_to(x.v), x.a, x.b, x.inv)


def theta_letter(x: KLGenerator) -> TulenbaevGenerator:
    R, n = x.actor.ring, x.actor.n
    i, j = x.i, x.j
    zero = RingValue(R, R.zero())
    a = RingValue(R, x.a)
    ei = OrbitVector.basis(R, n, i)
    if j == -i:
        gen = TulenbaevGenerator(ei, IndexedVector.zero(R, n), zero, a, x.inv)
    else:
        gen = TulenbaevGenerator(ei, IndexedVector.basis(R, n, -j),
                                 a * sign(-j), zero, x.inv)
    return act_on_tulenbaev(x.actor, gen) if len(x.actor) else gen


def theta(word) -> list:
    """θ: Keune–Loday word ↦ Tulenbaev word."""
    return [theta_letter(x) for x in word]


# -- the splitting ψ -----------------------------------------------------------

def psi_split(w: SteinbergWord, data: SplittingIdealData):
    """ψ(X_ij(r)) = (Y_ij(r - σρ(r)), X_ij(ρ(r))), multiplied in the semidirect product.

    Returns (relative KL word, quotient word over R'/I).  The relative letter
    coming from position k is acted on by σ* of the quotient letters before it.
    """
    R, n = w.ring, w.n
    if R != data.ring:
        raise ValueError(f"word over {R.spec}, splitting data over {data.ring.spec}")
    Q = data.quotient
    rel = []
    quot = []
    for L in w.letters:
        r = R.neg(L.a) if L.inv else L.a
        rr = data.rho.fn(r)
        rel_part = R.sub(r, data.sigma.fn(rr))
        if not R.is_zero(rel_part):
            actor = SteinbergWord(Q, n, tuple(quot), _checked=True)
            rel.append(KLGenerator(data.lift_word(actor), L.i, L.j, rel_part))
        if not Q.is_zero(rr):
            quot.append(Letter(L.i, L.j, rr))
    return tuple(rel), SteinbergWord(Q, n, tuple(quot), _checked=True)


def psi_check(w: SteinbergWord, data: SplittingIdealData) -> bool:
    """φ(w) = φ(ι(relative)) · φ(σ*(quotient))."""
    rel, quot = psi_split(w, data)
    lhs = w.phi()
    rhs = iota(rel, w.ring, w.n).phi() * data.lift_word(quot).phi()
    return lhs == rhs


def reduce_mod_ideal(w: SteinbergWord, data: SplittingIdealData) -> SympMatrix:
    """φ(ρ*(w)) over R'/I."""
    return w.map_params(data.rho.fn, data.quotient).phi()


def check_tulenbaev_relation(rel_id: str, ctx, bindings):
    from .relations import check_relation

    if not rel_id.startswith("T"):
        raise ValueError(f"{rel_id} is not a Tulenbaev relation")
    return check_relation(rel_id, ctx, bindings)
