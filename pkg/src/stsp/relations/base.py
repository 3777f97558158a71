"""Relation records, the sampling context and the bindings codec."""
from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Callable

from ..relative import GuardViolated, SplittingIdealData
from ..rings import Ring, RingValue, parse_ring
from ..symplectic import IndexedVector, SympMatrix, _payload, check_n
from ..words import OrbitVector, SteinbergWord, parse_word
from ..zcalc import DivisibleIdeal


class Context:
    """Ring, rank and the auxiliary data some relation families need.

    * ``ideal``: a divisible ideal (element a, ideal I) for the Z-calculus;
    * ``split``: a splitting ideal tR'[t] for the relative families; for a ring
      without polynomial variable R' = R[t].
    """

    def __init__(self, ring: Ring, n: int, a=None, size: int = 2, word_length: int = 2):
        check_n(n)
        self.ring = ring
        self.n = n
        self.ideal = DivisibleIdeal.for_ring(ring, a)
        self.a = self.ideal.a
        self.size = size
        self.word_length = word_length
        self._split = None

    @property
    def split(self) -> SplittingIdealData:
        if self._split is None:
            self._split = SplittingIdealData.for_ring(self.ring)
        return self._split

    def to_json(self):
        return {"ring": self.ring.spec, "n": self.n, "a": self.ring.format(self.a)}

    @classmethod
    def from_json(cls, data) -> "Context":
        ring = parse_ring(data["ring"])
        a = data.get("a")
        return cls(ring, int(data["n"]), None if a is None else ring(a).payload)


@dataclass(frozen=True)
class Relation:
    id: str
    family: str
    statement: str
    build: Callable  # (ctx, bindings) -> (lhs word, rhs word or SympMatrix)
    sample: Callable  # (ctx, rng) -> bindings
    infer: Callable | None = None  # (word, pos) -> bindings, for pattern rewrites

    def sides(self, ctx: Context, bindings: dict):
        return self.build(ctx, bindings)


def phi_of(side) -> SympMatrix:
    return side if isinstance(side, SympMatrix) else side.phi()


def require(cond: bool, message: str):
    if not cond:
        raise GuardViolated(message)


# -- bindings codec ------------------------------------------------------------

def encode_value(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, RingValue):
        return {"scalar": str(x), "ring": x.ring.spec}
    if isinstance(x, IndexedVector):
        return {"vector": x.to_json(), "ring": x.ring.spec, "n": x.n}
    if isinstance(x, OrbitVector):
        return {"orbit": x.witness.format(), "ring": x.ring.spec, "n": x.n}
    if isinstance(x, SteinbergWord):
        return {"word": x.format(), "ring": x.ring.spec, "n": x.n}
    if isinstance(x, (list, tuple)):
        return [encode_value(y) for y in x]
    raise TypeError(f"cannot encode {type(x).__name__}")


def decode_value(data):
    if isinstance(data, list):
        return [decode_value(y) for y in data]
    if not isinstance(data, dict):
        return data
    ring = parse_ring(data["ring"])
    if "scalar" in data:
        return ring(data["scalar"])
    n = int(data["n"])
    if "vector" in data:
        return IndexedVector.from_json(ring, n, data["vector"])
    if "orbit" in data:
        return OrbitVector(parse_word(ring, n, data["orbit"]))
    if "word" in data:
        return parse_word(ring, n, data["word"])
    raise ValueError(f"unknown binding {data!r}")


def encode_bindings(b: dict) -> dict:
    return {k: encode_value(v) for k, v in b.items()}


def decode_bindings(b: dict) -> dict:
    return {k: decode_value(v) for k, v in b.items()}


def scalar_of(ring: Ring, x) -> RingValue:
    return RingValue(ring, _payload(ring, x))


def rng_for(seed, rel_id: str) -> Random:
    """Per-relation generator; independent of execution order."""
    return Random(f"{seed}:{rel_id}")
