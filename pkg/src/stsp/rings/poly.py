"""Sparse multivariate polynomials over any ring of the tower.

Payload: a tuple of ``(exponents, coeff)`` pairs sorted by exponent vector
(lexicographic, ascending), coefficients non-zero.  That makes the payload
canonical, so ring equality is tuple equality.
"""
from __future__ import annotations

from .base import Ring


class PolyRing(Ring):
    def __init__(self, base: Ring, variables):
        variables = tuple(variables)
        if not variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate polynomial variable")
        clash = set(variables) & set(base.gens())
        if clash:
            raise ValueError(f"variable(s) {sorted(clash)} already used by {base.spec}")
        self.base = base
        self.vars = variables
        self.nvars = len(variables)
        self.spec = f"{base.spec}[{','.join(variables)}]"
        self.is_domain = base.is_domain
        self._zero_exp = (0,) * self.nvars
        self._one = ((self._zero_exp, base.one()),)

    # -- construction helpers ----------------------------------------------
    def _from_dict(self, d):
        bz = self.base.is_zero
        return tuple(sorted((e, c) for e, c in d.items() if not bz(c)))

    def const(self, c):
        if self.base.is_zero(c):
            return ()
        return ((self._zero_exp, c),)

    def monomial(self, exps, c):
        if self.base.is_zero(c):
            return ()
        return ((tuple(exps), c),)

    def var(self, name):
        k = self.vars.index(name)
        e = [0] * self.nvars
        e[k] = 1
        return ((tuple(e), self.base.one()),)

    def to_dict(self, x):
        return dict(x)

    def constant_term(self, x):
        if x and x[0][0] == self._zero_exp:
            return x[0][1]
        return self.base.zero()

    def degree(self, x, var=None) -> int:
        if not x:
            return -1
        if var is None:
            return max(sum(e) for e, _ in x)
        k = self.vars.index(var)
        return max(e[k] for e, _ in x)

    def map_coeffs(self, x, fn, target: "PolyRing"):
        d = {}
        for e, c in x:
            d[e] = fn(c)
        return target._from_dict(d)

    # -- ring protocol -----------------------------------------------------
    def zero(self):
        return ()

    def one(self):
        return self._one

    def from_int(self, k):
        return self.const(self.base.from_int(k))

    def is_zero(self, x):
        return not x

    def add(self, x, y):
        if not x:
            return y
        if not y:
            return x
        d = dict(x)
        badd = self.base.add
        for e, c in y:
            if e in d:
                d[e] = badd(d[e], c)
            else:
                d[e] = c
        return self._from_dict(d)

    def neg(self, x):
        bneg = self.base.neg
        return tuple((e, bneg(c)) for e, c in x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if not x or not y:
            return ()
        badd, bmul = self.base.add, self.base.mul
        d = {}
        if self.nvars == 1:
            for (e1,), c1 in x:
                for (e2,), c2 in y:
                    key = (e1 + e2,)
                    p = bmul(c1, c2)
                    d[key] = badd(d[key], p) if key in d else p
        else:
            for e1, c1 in x:
                for e2, c2 in y:
                    key = tuple(a + b for a, b in zip(e1, e2))
                    p = bmul(c1, c2)
                    d[key] = badd(d[key], p) if key in d else p
        return self._from_dict(d)

    def scale(self, x, c):
        """Multiply by a base-ring scalar."""
        bmul = self.base.mul
        return self._from_dict({e: bmul(k, c) for e, k in x})

    def divide_exact(self, x, d):
        # Division by leading terms (lex order).  Exact and unique when d is
        # a non-zero-divisor whose leading coefficient divides exactly.
        if not d:
            return None
        if not x:
            return ()
        if len(d) == 1:  # monomial divisor: termwise
            (de, dc), = d
            bdiv = self.base.divide_exact
            out = []
            for e, c in x:
                qe = tuple(a - b for a, b in zip(e, de))
                if any(k < 0 for k in qe):
                    return None
                q = bdiv(c, dc)
                if q is None:
                    return None
                out.append((qe, q))
            return tuple(out)
        lt_e, lt_c = d[-1]
        rem = dict(x)
        quot = {}
        base = self.base
        while rem:
            e = max(rem)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, lt_e))
            if any(k < 0 for k in qe):
                return None
            qc = base.divide_exact(c, lt_c)
            if qc is None:
                return None
            quot[qe] = qc
            for de, dc in d:
                key = tuple(a + b for a, b in zip(qe, de))
                val = base.sub(rem.get(key, base.zero()), base.mul(qc, dc))
                if base.is_zero(val):
                    rem.pop(key, None)
                else:
                    rem[key] = val
            if e in rem:  # leading term failed to cancel: not exact
                return None
        return self._from_dict(quot)

    def is_nzd(self, x):
        if not x:
            return False
        if self.base.is_domain:
            return True
        # McCoy: a polynomial is a zero-divisor iff some nonzero c kills it;
        # a unit (or nzd) constant / leading coefficient is a safe sufficient test.
        return len(x) == 1 and self.base.is_nzd(x[0][1])

    def is_nilpotent(self, x):
        return all(self.base.is_nilpotent(c) for _, c in x)

    def gens(self):
        g = {k: self.const(v) for k, v in self.base.gens().items()}
        for name in self.vars:
            g[name] = self.var(name)
        return g

    def random(self, rng, size=3, degree=2, terms=None):
        if terms is None:
            terms = rng.randint(0, degree + 1)
        d = {}
        for _ in range(terms):
            e = tuple(rng.randint(0, degree) for _ in range(self.nvars))
            if sum(e) > degree:
                continue
            d[e] = self.base.random(rng, size)
        return self._from_dict(d)

    def format(self, x):
        if not x:
            return "0"
        parts = []
        simple = self.base.__class__.__name__ in ("IntegerRing", "IntModRing")
        for e, c in reversed(x):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            cs = self.base.format(c)
            if not mono:
                term = cs if simple or _atomic(cs) else f"({cs})"
            elif self.base.is_one(c):
                term = mono
            elif simple:
                term = "-" + mono if cs == "-1" else f"{cs}*{mono}"
            else:
                term = f"{cs}*{mono}" if _atomic(cs) else f"({cs})*{mono}"
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _atomic(s: str) -> bool:
    """True if s can be used as a factor without parentheses."""
    body = s[1:] if s.startswith("-") else s
    return all(ch.isalnum() or ch in "_^" for ch in body)
