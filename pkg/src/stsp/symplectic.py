"""Vectors of R^{2n}, the standard symplectic form, transvections and ESD maps.

Indices run over -n..-1, 1..n.  Index i lives at array position i+n for
i<0 and i+n-1 for i>0.  The form is <e_i, e_{-i}> = 1 for i>0, i.e.

    <x, y> = Σ_{k>0} (x_k y_{-k} - x_{-k} y_k) = Σ_k sign(k) x_k y_{-k}.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .rings import DescriptorMismatch, IntegerRing, IntModRing, Ring, RingValue


class NotIsotropicPair(ValueError):
    """<u, v> != 0 where an isotropic pair was required."""


class InvalidIndex(ValueError):
    pass


def check_n(n: int) -> int:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"rank n must be an integer >= 3, got {n!r}")
    return n


def sign(i: int) -> int:
    return 1 if i > 0 else -1


def pos(n: int, i: int) -> int:
    if i == 0 or abs(i) > n:
        raise InvalidIndex(f"index {i} out of range for n={n}")
    return i + n if i < 0 else i + n - 1


def indices(n: int) -> list[int]:
    return list(range(-n, 0)) + list(range(1, n + 1))


def _payload(ring: Ring, c):
    if isinstance(c, RingValue):
        if c.ring != ring:
            raise DescriptorMismatch(f"{c.ring.spec} scalar used with {ring.spec}")
        return c.payload
    if isinstance(c, int) and not isinstance(c, bool):
        return ring.from_int(c)
    if isinstance(c, str):
        return ring(c).payload
    return c


# -- payload-level helpers (tuples of payloads, length 2n) -------------------

def vec_form(ring: Ring, n: int, x, y):
    """<x, y> on payload tuples."""
    add, sub, mul, isz = ring.add, ring.sub, ring.mul, ring.is_zero
    acc = ring.zero()
    for k in range(n):
        # positive index k+1 sits at n+k, its partner -(k+1) at n-1-k
        p, m = n + k, n - 1 - k
        xp, xm, yp, ym = x[p], x[m], y[p], y[m]
        if not isz(xp) and not isz(ym):
            acc = add(acc, mul(xp, ym))
        if not isz(xm) and not isz(yp):
            acc = sub(acc, mul(xm, yp))
    return acc


def vec_add(ring, x, y):
    add = ring.add
    return tuple(add(a, b) for a, b in zip(x, y))


def vec_sub(ring, x, y):
    sub = ring.sub
    return tuple(sub(a, b) for a, b in zip(x, y))


def vec_scale(ring, x, c):
    mul, isz = ring.mul, ring.is_zero
    z = ring.zero()
    if isz(c):
        return tuple(z for _ in x)
    return tuple(z if isz(a) else mul(a, c) for a in x)


def vec_is_zero(ring, x) -> bool:
    isz = ring.is_zero
    return all(isz(a) for a in x)


def vec_basis(ring, n, i, c=None):
    z = ring.zero()
    out = [z] * (2 * n)
    out[pos(n, i)] = ring.one() if c is None else c
    return tuple(out)


def letter_ops(ring: Ring, n: int, i: int, j: int, c):
    """Column operations for right multiplication by T_ij(c)."""
    if j == -i:
        return [(pos(n, -i), pos(n, i), c if i > 0 else ring.neg(c))]
    if i == j or i == 0 or j == 0:
        raise InvalidIndex(f"no generator X_{{{i},{j}}}")
    s = sign(i) * sign(j)
    return [(pos(n, j), pos(n, i), c), (pos(n, -i), pos(n, -j), ring.neg(c) if s > 0 else c)]


def apply_letter_to_vec(ring: Ring, n: int, i: int, j: int, c, v: list):
    """In place: v <- T_ij(c) v."""
    add, mul, isz = ring.add, ring.mul, ring.is_zero
    if j == -i:
        q = v[pos(n, -i)]
        if not isz(q):
            p = pos(n, i)
            v[p] = add(v[p], mul(c if i > 0 else ring.neg(c), q))
        return
    s = sign(i) * sign(j)
    q1 = v[pos(n, j)]
    q2 = v[pos(n, -i)]
    if not isz(q1):
        p = pos(n, i)
        v[p] = add(v[p], mul(c, q1))
    if not isz(q2):
        p = pos(n, -j)
        v[p] = add(v[p], mul(ring.neg(c) if s > 0 else c, q2))


def apply_col_ops(ring: Ring, d: int, flat: list, ops) -> list:
    """Flat column-major matrix times the elementary matrices described by ops."""
    if isinstance(ring, IntModRing):
        return kernels.col_ops_mod(flat, d, ops, ring.m)
    if isinstance(ring, IntegerRing):
        return kernels.col_ops_int(flat, d, ops)
    add, mul, isz = ring.add, ring.mul, ring.is_zero
    cols = [flat[q * d:(q + 1) * d] for q in range(d)]
    for dst, src, c in ops:
        if isz(c):
            continue
        cs = cols[src]
        cd = list(cols[dst])
        for r in range(d):
            y = cs[r]
            if not isz(y):
                cd[r] = add(cd[r], mul(y, c))
        cols[dst] = cd
    return [x for col in cols for x in col]


def identity_flat(ring: Ring, d: int) -> list:
    z, o = ring.zero(), ring.one()
    out = [z] * (d * d)
    for k in range(d):
        out[k * d + k] = o
    return out


# -- public value types ------------------------------------------------------

class IndexedVector:
    """Element of R^{2n}; entries stored densely in index order."""

    __slots__ = ("ring", "n", "entries", "_hash")

    def __init__(self, ring: Ring, n: int, entries):
        check_n(n)
        entries = tuple(entries)
        if len(entries) != 2 * n:
            raise ValueError("wrong number of entries")
        self.ring = ring
        self.n = n
        self.entries = entries
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, ring, n):
        return cls(ring, n, (ring.zero(),) * (2 * n))

    @classmethod
    def basis(cls, ring, n, i, scale=None):
        c = None if scale is None else _payload(ring, scale)
        return cls(ring, n, vec_basis(ring, n, i, c))

    @classmethod
    def from_dict(cls, ring, n, mapping):
        out = [ring.zero()] * (2 * n)
        for i, c in mapping.items():
            out[pos(n, int(i))] = _payload(ring, c)
        return cls(ring, n, out)

    @classmethod
    def from_values(cls, ring, n, values):
        return cls(ring, n, [_payload(ring, c) for c in values])

    # access
    def coord(self, i):
        return self.entries[pos(self.n, i)]

    def __getitem__(self, i) -> RingValue:
        return RingValue(self.ring, self.coord(i))

    def items(self):
        isz = self.ring.is_zero
        return [(i, RingValue(self.ring, c)) for i, c in zip(indices(self.n), self.entries)
                if not isz(c)]

    def support(self):
        return [i for i, _ in self.items()]

    def is_zero(self) -> bool:
        return vec_is_zero(self.ring, self.entries)

    def has_zero_pair(self, k: int) -> bool:
        isz = self.ring.is_zero
        return isz(self.coord(k)) and isz(self.coord(-k))

    def zero_pairs(self):
        return [k for k in range(1, self.n + 1) if self.has_zero_pair(k)]

    def _check(self, other):
        if not isinstance(other, IndexedVector):
            raise TypeError("expected IndexedVector")
        if other.ring != self.ring or other.n != self.n:
            raise DescriptorMismatch(
                f"vectors over {self.ring.spec}/n={self.n} and {other.ring.spec}/n={other.n}"
            )

    # arithmetic
    def __add__(self, other):
        self._check(other)
        return IndexedVector(self.ring, self.n, vec_add(self.ring, self.entries, other.entries))

    def __sub__(self, other):
        self._check(other)
        return IndexedVector(self.ring, self.n, vec_sub(self.ring, self.entries, other.entries))

    def __neg__(self):
        neg = self.ring.neg
        return IndexedVector(self.ring, self.n, tuple(neg(a) for a in self.entries))

    def scale(self, c):
        return IndexedVector(self.ring, self.n,
                             vec_scale(self.ring, self.entries, _payload(self.ring, c)))

    def __mul__(self, c):
        if isinstance(c, (RingValue, int)) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def form(self, other) -> RingValue:
        return symp_form(self, other)

    def __eq__(self, other):
        return (isinstance(other, IndexedVector) and self.ring == other.ring
                and self.n == other.n and self.entries == other.entries)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.spec, self.n, self.entries))
        return self._hash

    def __reduce__(self):
        return (IndexedVector, (self.ring, self.n, self.entries))

    def to_json(self):
        fmt = self.ring.format
        return {str(i): fmt(c) for i, c in zip(indices(self.n), self.entries)
                if not self.ring.is_zero(c)}

    @classmethod
    def from_json(cls, ring, n, data):
        return cls.from_dict(ring, n, {int(k): ring(v) for k, v in data.items()})

    def __str__(self):
        parts = []
        for i, c in self.items():
            parts.append(f"e{i}*({c})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"IndexedVector({self.ring.spec}, n={self.n}, {self.to_json()})"


def symp_form(u: IndexedVector, v: IndexedVector) -> RingValue:
    u._check(v)
    return RingValue(u.ring, vec_form(u.ring, u.n, u.entries, v.entries))


class SympMatrix:
    """Dense 2n x 2n matrix, stored column-major as a flat tuple."""

    __slots__ = ("ring", "n", "flat")

    def __init__(self, ring: Ring, n: int, flat):
        check_n(n)
        self.ring = ring
        self.n = n
        self.flat = tuple(flat)
        if len(self.flat) != 4 * n * n:
            raise ValueError("wrong number of matrix entries")

    @property
    def d(self):
        return 2 * self.n

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, n, identity_flat(ring, 2 * n))

    @classmethod
    def from_rows(cls, ring, n, rows):
        d = 2 * n
        flat = [None] * (d * d)
        for r, row in enumerate(rows):
            for q, c in enumerate(row):
                flat[q * d + r] = _payload(ring, c)
        return cls(ring, n, flat)

    def entry(self, i, j) -> RingValue:
        """Entry in row i, column j (symplectic indices)."""
        d = self.d
        return RingValue(self.ring, self.flat[pos(self.n, j) * d + pos(self.n, i)])

    def column(self, j) -> IndexedVector:
        d = self.d
        q = pos(self.n, j)
        return IndexedVector(self.ring, self.n, self.flat[q * d:(q + 1) * d])

    def rows(self):
        d = self.d
        return [[self.flat[q * d + r] for q in range(d)] for r in range(d)]

    def with_ops(self, ops) -> "SympMatrix":
        return SympMatrix(self.ring, self.n, apply_col_ops(self.ring, self.d, list(self.flat), ops))

    def _check(self, other):
        if other.ring != self.ring or other.n != self.n:
            raise DescriptorMismatch("matrix shapes or rings differ")

    def __matmul__(self, other):
        return self * other

    def __mul__(self, other):
        if isinstance(other, IndexedVector):
            self._check(other)
            return IndexedVector(self.ring, self.n, self._apply(other.entries))
        if not isinstance(other, SympMatrix):
            return NotImplemented
        self._check(other)
        d, R = self.d, self.ring
        if isinstance(R, IntModRing):
            return SympMatrix(R, self.n, kernels.matmul_mod(list(self.flat), list(other.flat), d, R.m))
        if isinstance(R, IntegerRing):
            return SympMatrix(R, self.n, kernels.matmul_int(list(self.flat), list(other.flat), d))
        out = []
        for q in range(d):
            out.extend(self._apply(other.flat[q * d:(q + 1) * d]))
        return SympMatrix(R, self.n, out)

    def _apply(self, vec):
        R, d = self.ring, self.d
        add, mul, isz = R.add, R.mul, R.is_zero
        acc = [R.zero()] * d
        for k, c in enumerate(vec):
            if isz(c):
                continue
            col = self.flat[k * d:(k + 1) * d]
            for r in range(d):
                y = col[r]
                if not isz(y):
                    acc[r] = add(acc[r], mul(y, c))
        return tuple(acc)

    def inverse(self) -> "SympMatrix":
        """Inverse of a symplectic matrix: J^{-1} M^T J."""
        n, d, R = self.n, self.d, self.ring
        out = [None] * (d * d)
        # (M^{-1})_{r,q} = sign(-r) sign(q) M_{-q,-r}
        for qi in indices(n):
            for ri in indices(n):
                val = self.flat[pos(n, -ri) * d + pos(n, -qi)]
                if sign(ri) * sign(qi) < 0:
                    val = R.neg(val)
                out[pos(n, qi) * d + pos(n, ri)] = val
        return SympMatrix(R, n, out)

    def is_identity(self) -> bool:
        return self.flat == tuple(identity_flat(self.ring, self.d))

    def block_trivial(self, k: int) -> bool:
        """Rows and columns ±k coincide with those of the identity."""
        n, d = self.n, self.d
        ident = identity_flat(self.ring, d)
        for idx in (k, -k):
            p = pos(n, idx)
            for r in range(d):
                if self.flat[p * d + r] != ident[p * d + r]:
                    return False
                if self.flat[r * d + p] != ident[r * d + p]:
                    return False
        return True

    def map_entries(self, fn, ring: Ring) -> "SympMatrix":
        return SympMatrix(ring, self.n, [fn(x) for x in self.flat])

    def __eq__(self, other):
        return (isinstance(other, SympMatrix) and self.ring == other.ring
                and self.n == other.n and self.flat == other.flat)

    def __hash__(self):
        return hash((self.ring.spec, self.n, self.flat))

    def __reduce__(self):
        return (SympMatrix, (self.ring, self.n, self.flat))

    def to_json(self):
        fmt = self.ring.format
        order = [pos(self.n, i) for i in indices(self.n)]
        d = self.d
        return [[fmt(self.flat[q * d + r]) for q in order] for r in order]

    @classmethod
    def from_json(cls, ring, n, rows):
        return cls.from_rows(ring, n, [[ring(c) for c in row] for row in rows])

    def __repr__(self):
        return f"SympMatrix({self.ring.spec}, n={self.n}, {self.to_json()})"


@dataclass(frozen=True)
class TransvectionSpec:
    """T_ij(a) for j != ±i (short root) or T_{i,-i}(a) (long root)."""

    i: int
    j: int
    a: RingValue
    inverse: bool = False

    @property
    def kind(self) -> str:
        return "long" if self.j == -self.i else "short"

    def validate(self, n: int):
        pos(n, self.i)
        pos(n, self.j)
        if self.i == self.j:
            raise InvalidIndex(f"no transvection T_{{{self.i},{self.j}}}")


def transvection_matrix(t: TransvectionSpec, n: int) -> SympMatrix:
    t.validate(n)
    R = t.a.ring
    c = R.neg(t.a.payload) if t.inverse else t.a.payload
    return SympMatrix.identity(R, n).with_ops(letter_ops(R, n, t.i, t.j, c))


def esd_matrix(u: IndexedVector, v: IndexedVector, a) -> SympMatrix:
    """Matrix of w ↦ w + u(<v,w> + a<u,w>) + v<u,w>."""
    u._check(v)
    R, n = u.ring, u.n
    a = _payload(R, a)
    if not R.is_zero(vec_form(R, n, u.entries, v.entries)):
        raise NotIsotropicPair("<u, v> must vanish")
    return SympMatrix(R, n, esd_flat(R, n, u.entries, v.entries, a))


def esd_flat(R: Ring, n: int, u, v, a):
    d = 2 * n
    add, mul, isz = R.add, R.mul, R.is_zero
    flat = identity_flat(R, d)
    for qi in indices(n):
        q = pos(n, qi)
        # <x, e_q> = -sign(q) x_{-q}
        sq = sign(qi)
        mq = pos(n, -qi)
        u_e = u[mq] if sq < 0 else R.neg(u[mq])
        v_e = v[mq] if sq < 0 else R.neg(v[mq])
        cu = add(v_e, mul(a, u_e))
        for r in range(d):
            val = flat[q * d + r]
            if not isz(cu) and not isz(u[r]):
                val = add(val, mul(u[r], cu))
            if not isz(u_e) and not isz(v[r]):
                val = add(val, mul(v[r], u_e))
            flat[q * d + r] = val
    return flat


def is_symplectic(M: SympMatrix) -> bool:
    R, n, d = M.ring, M.n, M.d
    cols = [M.flat[q * d:(q + 1) * d] for q in range(d)]
    idx = indices(n)
    for a, ia in enumerate(idx):
        for b, ib in enumerate(idx):
            expected = R.zero()
            if ib == -ia:
                expected = R.one() if ia > 0 else R.neg(R.one())
            if vec_form(R, n, cols[pos(n, ia)], cols[pos(n, ib)]) != expected:
                return False
    return True
