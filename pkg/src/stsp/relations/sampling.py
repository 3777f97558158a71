"""Random ingredients for relation instances.

Everything is drawn from a caller-supplied ``random.Random`` so that a
(seed, relation id) pair determines the instance.
"""
from __future__ import annotations

from random import Random

from ..rings import Ring, RingValue
from ..symplectic import IndexedVector, indices
from ..words import Letter, OrbitVector, SteinbergWord, basis_move
from ..zcalc import suslin_direction


def idx(n: int, rng: Random, exclude=()) -> int:
    pool = [i for i in indices(n) if i not in exclude]
    return rng.choice(pool)


def distinct_pair(n: int, rng: Random, allowed=None):
    allowed = list(allowed or indices(n))
    i = rng.choice(allowed)
    j = rng.choice([k for k in allowed if k != i])
    return i, j


def short_pair(n: int, rng: Random):
    """(i, j) with j ≠ ±i."""
    i = idx(n, rng)
    return i, idx(n, rng, exclude=(i, -i))


def scalar(ring: Ring, rng: Random, size: int = 2) -> RingValue:
    return RingValue(ring, ring.random(rng, size))


def nonzero(ring: Ring, rng: Random, size: int = 2) -> RingValue:
    for _ in range(50):
        x = ring.random(rng, size)
        if not ring.is_zero(x):
            return RingValue(ring, x)
    return RingValue(ring, ring.one())


def unit(ring: Ring, rng: Random, size: int = 2) -> RingValue:
    for _ in range(30):
        x = ring.random(rng, size)
        if ring.is_unit(x):
            return RingValue(ring, x)
    return RingValue(ring, ring.from_int(rng.choice((1, -1))))


def letters(ring: Ring, n: int, rng: Random, length: int, allowed=None, size: int = 1):
    allowed = list(allowed or indices(n))
    out = []
    for _ in range(length):
        i, j = distinct_pair(n, rng, allowed)
        out.append(Letter(i, j, ring.random(rng, size), rng.random() < 0.3))
    return out


def word(ring: Ring, n: int, rng: Random, length: int, allowed=None, size: int = 1):
    return SteinbergWord(ring, n, letters(ring, n, rng, length, allowed, size), _checked=True)


def orbit(ring: Ring, n: int, rng: Random, avoid=(), length: int = 2, size: int = 1) -> OrbitVector:
    """A witnessed orbit vector with zero coordinates at ±k for k in avoid."""
    allowed = [i for i in indices(n) if abs(i) not in avoid]
    start = rng.choice(allowed)
    M = word(ring, n, rng, rng.randint(0, length), allowed, size)
    return OrbitVector(M * basis_move(ring, n, 1, start))


def frame(ring: Ring, n: int, rng: Random, length: int = 2, size: int = 1) -> SteinbergWord:
    """A random elementary word M; its columns φ(M)e_k form a symplectic frame."""
    return word(ring, n, rng, rng.randint(0, length), None, size)


def frame_orbit(M: SteinbergWord, k: int) -> OrbitVector:
    """φ(M)e_k as a witnessed orbit vector."""
    return OrbitVector(M * basis_move(M.ring, M.n, 1, k))


def frame_vector(M: SteinbergWord, k: int, scale=None) -> IndexedVector:
    v = M.apply_to(IndexedVector.basis(M.ring, M.n, k))
    return v if scale is None else v.scale(scale)


def vector(ring: Ring, n: int, rng: Random, avoid=(), density: float = 0.6, size: int = 1):
    out = [ring.zero()] * (2 * n)
    for p, i in enumerate(indices(n)):
        if abs(i) not in avoid and rng.random() < density:
            out[p] = ring.random(rng, size)
    return IndexedVector(ring, n, out)


def orth(u: IndexedVector, rng: Random, avoid=(), terms: int | None = None, size: int = 1,
         with_u: bool = True) -> IndexedVector:
    """A vector v with <u, v> = 0 and v_{±k} = 0 for k in avoid.

    Built from the directions u_kl = e_k u_{-l} sign l - e_l u_{-k} sign k,
    which are orthogonal to u, plus a multiple of u when u itself vanishes on avoid.
    """
    R, n = u.ring, u.n
    allowed = [i for i in indices(n) if abs(i) not in avoid]
    terms = rng.randint(1, 3) if terms is None else terms
    v = IndexedVector.zero(R, n)
    for _ in range(terms):
        k, l = distinct_pair(n, rng, allowed)
        v = v + suslin_direction(u, k, l).scale(RingValue(R, R.random(rng, size)))
    if with_u and all(u.has_zero_pair(k) for k in avoid) and rng.random() < 0.5:
        v = v + u.scale(RingValue(R, R.random(rng, size)))
    return v


def zero_pair_orth(u: IndexedVector, rng: Random, size: int = 1) -> IndexedVector:
    """A vector orthogonal to u with at least one symmetric pair of zeros."""
    k = rng.randint(1, u.n)
    return orth(u, rng, avoid=(k,), size=size, with_u=False)


def pair_part(ring: Ring, n: int, rng: Random, k: int, size: int = 1) -> IndexedVector:
    """A vector supported on {k, -k}."""
    return IndexedVector.from_dict(ring, n, {k: RingValue(ring, ring.random(rng, size)),
                                             -k: RingValue(ring, ring.random(rng, size))})


def scale_witness(ring: Ring, n: int, b) -> SteinbergWord:
    """A word h with φ(h)e_1 = e_1·b for a unit b (a diagonal element of the long root)."""
    bp = b.payload if isinstance(b, RingValue) else b
    bi = ring.inverse(bp)
    if bi is None:
        raise ValueError(f"{ring.format(bp)} is not a unit")
    one, m1 = ring.one(), ring.neg(ring.one())
    return SteinbergWord(ring, n, (
        Letter(1, -1, bp), Letter(-1, 1, bi), Letter(1, -1, bp),
        Letter(1, -1, m1), Letter(-1, 1, m1), Letter(1, -1, m1),
    ), _checked=True)
