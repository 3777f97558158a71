"""The mixed ring B = R ⋉ t·R_a[t].

Elements are pairs (r, f) with r in R and f in R_a[t] having zero constant
term; multiplication is (r,f)(s,g) = (rs, λ(r)g + fλ(s) + fg).  Through
(r, f) ↦ λ(r) + f the ring B is the subring of R_a[t] of polynomials whose
constant term comes from R.
"""
from __future__ import annotations

from .base import NotNonZeroDivisor, Ring
from .localized import LocalizedRing
from .poly import PolyRing


class MixedBRing(Ring):
    def __init__(self, base: Ring, a, var: str = "t"):
        if base.is_zero(a) or base.is_nilpotent(a):
            raise NotNonZeroDivisor(f"B needs a non-nilpotent element, got {base.format(a)}")
        if not base.is_nzd(a):
            raise NotNonZeroDivisor(
                f"{base.format(a)} is not a certified non-zero-divisor of {base.spec}"
            )
        self.base = base
        self.a = a
        self.var = var
        self.poly = PolyRing(base, (var,))
        self.loc = LocalizedRing(self.poly, self.poly.const(a))
        suffix = "" if var == "t" else f",{var}"
        self.spec = f"B({base.spec},{base.format(a)}{suffix})"
        self.is_domain = base.is_domain
        self._zero = (base.zero(), self.loc.zero())
        self._one = (base.one(), self.loc.zero())

    # -- embedding into R_a[t] ---------------------------------------------
    def lam(self, r):
        """λ_a(r) as an element of R_a[t]."""
        return (self.poly.const(r), 0)

    def embed(self, x):
        r, f = x
        return self.loc.add(self.lam(r), f)

    def from_loc(self, y):
        """Inverse of embed; None when the constant term is not in R."""
        p, k = y
        c0 = self.poly.constant_term(p)
        r = self.base.divide_exact(c0, self.loc.base.constant_term(self.loc.apow(k)))
        if r is None:
            return None
        rest = self.poly.sub(p, self.poly.const(c0))
        return (r, self.loc.canon(rest, k))

    def make(self, r, f):
        """Build (r, f) from r ∈ R and f ∈ R_a[t] payloads; f must have zero constant term."""
        if not self.poly.is_zero(f[0]) and not self.base.is_zero(self.poly.constant_term(f[0])):
            raise ValueError("second component of a B element must have zero constant term")
        return (r, f)

    # -- ring protocol -----------------------------------------------------
    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def from_int(self, k):
        return (self.base.from_int(k), self.loc.zero())

    def is_zero(self, x):
        return self.base.is_zero(x[0]) and self.loc.is_zero(x[1])

    def add(self, x, y):
        return (self.base.add(x[0], y[0]), self.loc.add(x[1], y[1]))

    def neg(self, x):
        return (self.base.neg(x[0]), self.loc.neg(x[1]))

    def sub(self, x, y):
        return (self.base.sub(x[0], y[0]), self.loc.sub(x[1], y[1]))

    def mul(self, x, y):
        (r, f), (s, g) = x, y
        L = self.loc
        fz, gz = L.is_zero(f), L.is_zero(g)
        rs = self.base.mul(r, s)
        if fz and gz:
            return (rs, L.zero())
        second = L.zero()
        if not gz:
            second = L.mul(self.lam(r), g)
        if not fz:
            second = L.add(second, L.mul(f, self.lam(s)))
            if not gz:
                second = L.add(second, L.mul(f, g))
        return (rs, second)

    def divide_exact(self, x, d):
        s, g = d
        if self.loc.is_zero(g):
            r = self.base.divide_exact(x[0], s)
            if r is None:
                return None
            if self.loc.is_zero(x[1]):
                return (r, self.loc.zero())
            f = self.loc.divide_exact(x[1], self.lam(s))
            return None if f is None else (r, f)
        q = self.loc.divide_exact(self.embed(x), self.embed(d))
        if q is None:
            return None
        return self.from_loc(q)

    def is_nzd(self, x):
        if self.is_zero(x):
            return False
        if self.is_domain:
            return True
        return self.loc.is_zero(x[1]) and self.base.is_nzd(x[0])

    def is_nilpotent(self, x):
        return self.base.is_nilpotent(x[0]) and self.loc.is_nilpotent(x[1])

    def gens(self):
        g = {k: (v, self.loc.zero()) for k, v in self.base.gens().items()}
        g[self.var] = (self.base.zero(), self.loc.localize(self.poly.var(self.var)))
        return g

    def random(self, rng, size=3, degree=2, max_k=2):
        r = self.base.random(rng, size)
        f = self.loc.zero()
        for d in range(1, degree + 1):
            if rng.random() < 0.6:
                c = self.base.random(rng, size)
                mono = self.poly.monomial((d,), c)
                f = self.loc.add(f, self.loc.canon(mono, rng.randint(0, max_k)))
        return (r, f)

    def format(self, x):
        r, f = x
        parts = []
        if not self.base.is_zero(r) or self.loc.is_zero(f):
            parts.append(self.base.format(r))
        if not self.loc.is_zero(f):
            parts.append(self.loc.format(f))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out
