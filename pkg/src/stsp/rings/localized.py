"""Principal localization R_a at a certified non-zero-divisor a.

Payload: ``(x, k)`` meaning x / a^k, with k minimal: a canonical form is
reached by dividing x by a while the division is exact (at most k times).
"""
from __future__ import annotations

from .base import NotNonZeroDivisor, Ring
from .poly import _atomic


class LocalizedRing(Ring):
    def __init__(self, base: Ring, a):
        if base.is_zero(a) or base.is_nilpotent(a):
            raise NotNonZeroDivisor(f"cannot localize {base.spec} at nilpotent {base.format(a)}")
        if not base.is_nzd(a):
            raise NotNonZeroDivisor(
                f"{base.format(a)} is not a certified non-zero-divisor of {base.spec}"
            )
        self.base = base
        self.a = a
        self.spec = f"Loc({base.spec},{base.format(a)})"
        self.is_domain = base.is_domain
        self._apows = [base.one(), a]
        self._zero = (base.zero(), 0)
        self._one = (base.one(), 0)

    def apow(self, k: int):
        pows = self._apows
        while len(pows) <= k:
            pows.append(self.base.mul(pows[-1], self.a))
        return pows[k]

    def canon(self, x, k: int):
        base = self.base
        if base.is_zero(x):
            return self._zero
        a = self.a
        while k > 0:
            q = base.divide_exact(x, a)
            if q is None:
                break
            x, k = q, k - 1
        return (x, k)

    def localize(self, x):
        return (x, 0)

    def lift(self, x):
        """(y, N) with localize(y) == x * a^N, N the stored (minimal) exponent."""
        return x

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def from_int(self, k):
        return self.canon(self.base.from_int(k), 0)

    def is_zero(self, x):
        return x[1] == 0 and self.base.is_zero(x[0])

    def add(self, x, y):
        (p, k), (q, l) = x, y
        base = self.base
        if k == l:
            return self.canon(base.add(p, q), k)
        if k < l:
            return self.canon(base.add(base.mul(p, self.apow(l - k)), q), l)
        return self.canon(base.add(p, base.mul(q, self.apow(k - l))), k)

    def neg(self, x):
        return (self.base.neg(x[0]), x[1])

    def mul(self, x, y):
        (p, k), (q, l) = x, y
        if k == 0 and l == 0:
            return (self.base.mul(p, q), 0)
        return self.canon(self.base.mul(p, q), k + l)

    def divide_exact(self, x, d):
        (p, k), (q, l) = x, d
        base = self.base
        if base.is_zero(q):
            return None
        for m in range(0, 65):
            y = base.divide_exact(base.mul(p, self.apow(m)), q)
            if y is not None:
                return self.canon(base.mul(y, self.apow(l)), k + m)
        return None

    def is_nzd(self, x):
        return not self.is_zero(x) and (self.is_domain or self.base.is_nzd(x[0]))

    def is_nilpotent(self, x):
        return self.base.is_nilpotent(x[0])

    def gens(self):
        return {k: (v, 0) for k, v in self.base.gens().items()}

    def random(self, rng, size=3, max_k=2, **kw):
        x = self.base.random(rng, size, **kw) if kw else self.base.random(rng, size)
        return self.canon(x, rng.randint(0, max_k))

    def format(self, x):
        p, k = x
        s = self.base.format(p)
        if k == 0:
            return s
        den = self.base.format(self.apow(k))
        if not den.isdigit():
            den = f"({den})"
        if _atomic(s):
            return f"{s}/{den}"
        return f"({s})/{den}"
