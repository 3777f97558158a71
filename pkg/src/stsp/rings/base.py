"""Core ring abstractions plus the integer rings Z and Z/m.

Every ring works on *payloads*: immutable, canonical Python values (ints,
tuples).  Equality of ring elements is equality of payloads.  ``RingValue``
wraps a payload together with its ring for a friendlier operator API.
"""
from __future__ import annotations

import math
from random import Random


class RingError(ValueError):
    pass


class DescriptorMismatch(RingError):
    """Two operands (or an operand and a ring) live in different rings."""


class NotNonZeroDivisor(RingError):
    """Localization was requested at an element that is not a certified non-zero-divisor."""


class DivisibilityFailure(RingError):
    """An exact division was requested that has no solution."""


class Ring:
    """Base class.  Subclasses define payload-level arithmetic."""

    spec: str = "?"
    is_domain: bool = False

    # -- payload arithmetic -------------------------------------------------
    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def is_zero(self, x) -> bool:
        return x == self.zero()

    def is_one(self, x) -> bool:
        return x == self.one()

    def pow(self, x, e: int):
        if e < 0:
            inv = self.inverse(x)
            if inv is None:
                raise DivisibilityFailure(f"{self.format(x)} is not a unit in {self.spec}")
            x, e = inv, -e
        result = self.one()
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def divide_exact(self, x, d):
        """Return the unique y with y*d == x, or None when there is none.

        Only meaningful (unique) for non-zero-divisors d.
        """
        raise NotImplementedError

    def inverse(self, x):
        return self.divide_exact(self.one(), x)

    def is_unit(self, x) -> bool:
        return self.inverse(x) is not None

    def is_nzd(self, x) -> bool:
        """Certified non-zero-divisor test (may be conservative)."""
        raise NotImplementedError

    def is_nilpotent(self, x) -> bool:
        return self.is_zero(x)

    def gens(self) -> dict:
        """Named generators (polynomial variables), payload valued."""
        return {}

    def random(self, rng: Random, size: int = 3):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        from .parse import parse_value

        return parse_value(self, text).payload

    # -- convenience --------------------------------------------------------
    def __call__(self, obj) -> "RingValue":
        if isinstance(obj, RingValue):
            if obj.ring != self:
                raise DescriptorMismatch(f"{obj.ring.spec} value used in {self.spec}")
            return obj
        if isinstance(obj, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(obj, int):
            return RingValue(self, self.from_int(obj))
        if isinstance(obj, str):
            from .parse import parse_value

            return parse_value(self, obj)
        raise TypeError(f"cannot convert {obj!r} into {self.spec}")

    def wrap(self, payload) -> "RingValue":
        return RingValue(self, payload)

    def sum(self, items):
        acc = self.zero()
        for x in items:
            acc = self.add(acc, x)
        return acc

    def __eq__(self, other):
        return isinstance(other, Ring) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"Ring({self.spec!r})"

    def __reduce__(self):
        from .parse import parse_ring

        return (parse_ring, (self.spec,))


class RingValue:
    """An immutable ring element: (ring, canonical payload)."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("RingValue is immutable")

    def __reduce__(self):
        return (RingValue, (self.ring, self.payload))

    def _coerce(self, other):
        if isinstance(other, RingValue):
            if other.ring != self.ring:
                raise DescriptorMismatch(f"{self.ring.spec} vs {other.ring.spec}")
            return other.payload
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        return RingValue(self.ring, self.ring.add(self.payload, p))

    __radd__ = __add__

    def __sub__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        return RingValue(self.ring, self.ring.sub(self.payload, p))

    def __rsub__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        return RingValue(self.ring, self.ring.sub(p, self.payload))

    def __mul__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        return RingValue(self.ring, self.ring.mul(self.payload, p))

    __rmul__ = __mul__

    def __neg__(self):
        return RingValue(self.ring, self.ring.neg(self.payload))

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        return RingValue(self.ring, self.ring.pow(self.payload, e))

    def __truediv__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        q = self.ring.divide_exact(self.payload, p)
        if q is None:
            raise DivisibilityFailure(
                f"{self} is not divisible by {self.ring.format(p)} in {self.ring.spec}"
            )
        return RingValue(self.ring, q)

    def __eq__(self, other):
        if isinstance(other, RingValue):
            return self.ring == other.ring and self.payload == other.payload
        if isinstance(other, int) and not isinstance(other, bool):
            return self.payload == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.spec, self.payload))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.payload)

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return self.ring.format(self.payload)

    def __repr__(self):
        return f"RingValue({self.ring.spec}, {self.ring.format(self.payload)})"


def check_same_ring(*values) -> Ring:
    """Return the common ring of RingValue-like objects, raising DescriptorMismatch otherwise."""
    ring = None
    for v in values:
        r = v.ring
        if ring is None:
            ring = r
        elif r != ring:
            raise DescriptorMismatch(f"{ring.spec} vs {r.spec}")
    return ring


class IntegerRing(Ring):
    spec = "Z"
    is_domain = True

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return int(k)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def is_zero(self, x):
        return x == 0

    def divide_exact(self, x, d):
        if d == 0:
            return None
        q, r = divmod(x, d)
        return q if r == 0 else None

    def is_nzd(self, x):
        return x != 0

    def random(self, rng, size=3):
        bound = {1: 2, 2: 5, 3: 20}.get(size, 20 if size > 3 else 1)
        return rng.randint(-bound, bound)

    def format(self, x):
        return str(x)


class IntModRing(Ring):
    is_domain = False

    def __init__(self, m: int):
        if m < 2:
            raise RingError("Z/m needs m >= 2")
        self.m = m
        self.spec = f"Z/{m}"
        self.is_domain = all(m % p for p in range(2, math.isqrt(m) + 1))

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return int(k) % self.m

    def add(self, x, y):
        return (x + y) % self.m

    def sub(self, x, y):
        return (x - y) % self.m

    def neg(self, x):
        return -x % self.m

    def mul(self, x, y):
        return x * y % self.m

    def is_zero(self, x):
        return x == 0

    def divide_exact(self, x, d):
        # unique solutions only for units; that is all we ever need
        g = math.gcd(d, self.m)
        if g != 1:
            if d % self.m == 0:
                return 0 if x == 0 else None
            return None
        return x * pow(d, -1, self.m) % self.m

    def is_nzd(self, x):
        return math.gcd(x, self.m) == 1

    def is_nilpotent(self, x):
        return pow(x, self.m.bit_length() + 1, self.m) == 0

    def random(self, rng, size=3):
        return rng.randrange(self.m)

    def format(self, x):
        return str(x)


ZZ = IntegerRing()
