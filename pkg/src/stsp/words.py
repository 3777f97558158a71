"""Steinberg words, the projection φ, free reduction and orbit vectors.

A word is a sequence of letters X_ij(a)^{±1}.  Its projection φ is the
product of transvection matrices read left to right.
"""
from __future__ import annotations

import re
from typing import NamedTuple

from .rings import DescriptorMismatch, Ring, RingValue
from .symplectic import (
    IndexedVector,
    InvalidIndex,
    SympMatrix,
    _payload,
    apply_col_ops,
    apply_letter_to_vec,
    check_n,
    identity_flat,
    letter_ops,
    pos,
    sign,
    vec_basis,
)


class PatternMismatch(ValueError):
    """A rewrite step does not apply at the requested position."""


class WordParseError(ValueError):
    pass


class Letter(NamedTuple):
    i: int
    j: int
    a: object  # ring payload
    inv: bool = False

    def inverse(self) -> "Letter":
        return Letter(self.i, self.j, self.a, not self.inv)


def _check_letter(n: int, i: int, j: int):
    pos(n, i)
    pos(n, j)
    if i == j:
        raise InvalidIndex(f"no generator X_{{{i},{j}}}")


class SteinbergWord:
    __slots__ = ("ring", "n", "letters", "_phi")

    def __init__(self, ring: Ring, n: int, letters=(), _checked=False):
        check_n(n)
        self.ring = ring
        self.n = n
        letters = tuple(letters)
        if not _checked:
            fixed = []
            for L in letters:
                if not isinstance(L, Letter):
                    L = Letter(*L)
                _check_letter(n, L.i, L.j)
                fixed.append(Letter(L.i, L.j, _payload(ring, L.a), bool(L.inv)))
            letters = tuple(fixed)
        self.letters = letters
        self._phi = None

    # construction ------------------------------------------------------------
    @classmethod
    def empty(cls, ring, n):
        return cls(ring, n, (), _checked=True)

    @classmethod
    def gen(cls, ring, n, i, j, a, inv=False):
        _check_letter(n, i, j)
        return cls(ring, n, (Letter(i, j, _payload(ring, a), inv),), _checked=True)

    def _new(self, letters):
        return SteinbergWord(self.ring, self.n, letters, _checked=True)

    def _check(self, other):
        if not isinstance(other, SteinbergWord):
            raise TypeError("expected SteinbergWord")
        if other.ring != self.ring or other.n != self.n:
            raise DescriptorMismatch(
                f"words over {self.ring.spec}/n={self.n} and {other.ring.spec}/n={other.n}"
            )

    # group-ish operations -------------------------------------------------
    def __mul__(self, other):
        if not isinstance(other, SteinbergWord):
            return NotImplemented
        self._check(other)
        return self._new(self.letters + other.letters)

    def inverse(self) -> "SteinbergWord":
        return self._new(tuple(L.inverse() for L in reversed(self.letters)))

    __invert__ = inverse

    def conj(self, g: "SteinbergWord") -> "SteinbergWord":
        """g · self · g⁻¹"""
        return g * self * g.inverse()

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return self._new(self.letters[k])
        return self.letters[k]

    def __eq__(self, other):
        return (isinstance(other, SteinbergWord) and self.ring == other.ring
                and self.n == other.n and self.letters == other.letters)

    def __hash__(self):
        return hash((self.ring.spec, self.n, self.letters))

    def __reduce__(self):
        return (SteinbergWord, (self.ring, self.n, self.letters, True))

    # projection -----------------------------------------------------------
    def ops(self):
        R, n = self.ring, self.n
        out = []
        for L in self.letters:
            c = R.neg(L.a) if L.inv else L.a
            if R.is_zero(c):
                continue
            out.extend(letter_ops(R, n, L.i, L.j, c))
        return out

    def phi(self) -> SympMatrix:
        if self._phi is None:
            d = 2 * self.n
            flat = apply_col_ops(self.ring, d, identity_flat(self.ring, d), self.ops())
            self._phi = SympMatrix(self.ring, self.n, flat)
        return self._phi

    def apply_to(self, v) -> IndexedVector:
        """φ(self)·v, computed letter by letter (right-most letter first)."""
        R, n = self.ring, self.n
        vec = list(v.entries if isinstance(v, IndexedVector) else v)
        for L in reversed(self.letters):
            c = R.neg(L.a) if L.inv else L.a
            if not R.is_zero(c):
                apply_letter_to_vec(R, n, L.i, L.j, c, vec)
        return IndexedVector(R, n, vec)

    # text -----------------------------------------------------------------
    def format(self) -> str:
        if not self.letters:
            return "1"
        fmt = self.ring.format
        return "*".join(
            f"X({L.i},{L.j};{fmt(L.a)})" + ("^-1" if L.inv else "") for L in self.letters
        )

    __str__ = format

    def __repr__(self):
        return f"SteinbergWord({self.ring.spec}, n={self.n}, {self.format()!r})"

    def map_params(self, fn, ring: Ring | None = None) -> "SteinbergWord":
        ring = ring or self.ring
        return SteinbergWord(ring, self.n,
                             tuple(Letter(L.i, L.j, fn(L.a), L.inv) for L in self.letters),
                             _checked=True)

    def to_json(self):
        return self.format()


def phi(w: SteinbergWord) -> SympMatrix:
    return w.phi()


def word(ring: Ring, n: int, *letters) -> SteinbergWord:
    """word(R, n, (1, 2, a), (2, -1, b, True), ...)"""
    return SteinbergWord(ring, n, letters)


_LETTER_HEAD = re.compile(r"\s*X\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*;")


def parse_word(ring: Ring, n: int, text: str) -> SteinbergWord:
    """Parse e.g. "X(1,2;a)*X(2,-1;b)^-1"; "1" or "" is the empty word."""
    s = text.strip()
    if s in ("", "1"):
        return SteinbergWord.empty(ring, n)
    letters = []
    k = 0
    while True:
        m = _LETTER_HEAD.match(s, k)
        if not m:
            raise WordParseError(f"expected X(i,j;a) at offset {k} in {text!r}")
        i, j = int(m.group(1)), int(m.group(2))
        depth = 0
        q = m.end()
        while q < len(s):
            ch = s[q]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    break
                depth -= 1
            q += 1
        else:
            raise WordParseError(f"unterminated letter in {text!r}")
        try:
            a = ring(s[m.end():q]).payload
        except ValueError as exc:
            raise WordParseError(str(exc)) from None
        k = q + 1
        inv = False
        m2 = re.compile(r"\s*\^\s*-\s*1").match(s, k)
        if m2:
            inv = True
            k = m2.end()
        try:
            _check_letter(n, i, j)
        except InvalidIndex as exc:
            raise WordParseError(str(exc)) from None
        letters.append(Letter(i, j, a, inv))
        m3 = re.compile(r"\s*\*").match(s, k)
        if m3:
            k = m3.end()
            continue
        if s[k:].strip():
            raise WordParseError(f"trailing text {s[k:]!r} in {text!r}")
        break
    return SteinbergWord(ring, n, letters, _checked=True)


def free_reduce(w: SteinbergWord, merge: bool = True) -> SteinbergWord:
    """Cancel adjacent inverse pairs; with merge on, also fuse X_ij(a)X_ij(b) = X_ij(a+b)
    and drop X_ij(0)."""
    R = w.ring
    stack: list[Letter] = []
    for L in w.letters:
        if merge:
            c = R.neg(L.a) if L.inv else L.a
            if R.is_zero(c):
                continue
            if stack and (stack[-1].i, stack[-1].j) == (L.i, L.j):
                top = stack.pop()
                tc = R.neg(top.a) if top.inv else top.a
                s = R.add(tc, c)
                if not R.is_zero(s):
                    stack.append(Letter(L.i, L.j, s, False))
                continue
            stack.append(L)
        else:
            if stack and stack[-1] == L.inverse():
                stack.pop()
            else:
                stack.append(L)
    return w._new(tuple(stack))


# -- orbit vectors -----------------------------------------------------------

def basis_witness(ring: Ring, n: int, i: int) -> SteinbergWord:
    """A word M with φ(M)·e_1 = e_i."""
    return basis_move(ring, n, 1, i)


def basis_move(ring: Ring, n: int, p: int, q: int) -> SteinbergWord:
    """A word M with φ(M)·e_p = e_q."""
    one = ring.one()
    if q == p:
        return SteinbergWord.empty(ring, n)
    if q == -p:
        return SteinbergWord(ring, n, (
            Letter(p, -p, ring.from_int(-sign(p))),
            Letter(-p, p, ring.from_int(sign(-p))),
        ), _checked=True)
    return SteinbergWord(ring, n, (Letter(p, q, ring.neg(one)), Letter(q, p, one)), _checked=True)


class OrbitVector:
    """u = φ(M)·e_1 carried together with its witness M."""

    __slots__ = ("witness", "vector")

    def __init__(self, witness: SteinbergWord, vector: IndexedVector | None = None):
        self.witness = witness
        computed = witness.apply_to(vec_basis(witness.ring, witness.n, 1))
        if vector is not None and vector != computed:
            raise ValueError("orbit witness does not reproduce the stated vector")
        self.vector = computed

    @classmethod
    def e1(cls, ring, n):
        return cls(SteinbergWord.empty(ring, n))

    @classmethod
    def basis(cls, ring, n, i):
        return cls(basis_witness(ring, n, i))

    @property
    def ring(self):
        return self.witness.ring

    @property
    def n(self):
        return self.witness.n

    def moved_by(self, g: SteinbergWord) -> "OrbitVector":
        """φ(g)·u with witness g·M."""
        return OrbitVector(g * self.witness)

    def column_partner(self) -> IndexedVector:
        """w = -φ(M)e_{-1}, so that <w, u> = 1."""
        return -self.witness.apply_to(vec_basis(self.ring, self.n, -1))

    def __eq__(self, other):
        return isinstance(other, OrbitVector) and self.witness == other.witness

    def __hash__(self):
        return hash(self.witness)

    def __reduce__(self):
        return (OrbitVector, (self.witness,))

    def __repr__(self):
        return f"OrbitVector({self.vector.to_json()}, witness={self.witness.format()!r})"

    def to_json(self):
        return {"witness": self.witness.format(), "vector": self.vector.to_json()}


class OrbitPair:
    """(u, w) = (φ(M)e_1, φ(M)e_2) with witness M."""

    __slots__ = ("witness", "u", "w")

    def __init__(self, witness: SteinbergWord):
        self.witness = witness
        R, n = witness.ring, witness.n
        self.u = witness.apply_to(vec_basis(R, n, 1))
        self.w = witness.apply_to(vec_basis(R, n, 2))

    def first(self) -> OrbitVector:
        return OrbitVector(self.witness)

    def second(self) -> OrbitVector:
        return OrbitVector(self.witness * basis_move(self.witness.ring, self.witness.n, 1, 2))

    def frame(self, k: int) -> IndexedVector:
        """φ(M)·e_k"""
        return self.witness.apply_to(vec_basis(self.witness.ring, self.witness.n, k))

    def __eq__(self, other):
        return isinstance(other, OrbitPair) and self.witness == other.witness

    def __hash__(self):
        return hash(("pair", self.witness))

    def __reduce__(self):
        return (OrbitPair, (self.witness,))

    def to_json(self):
        return {"witness": self.witness.format()}
