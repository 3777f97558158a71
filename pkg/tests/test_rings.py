from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import poly_mul_mod
from stsp.rings import (
    DescriptorMismatch,
    MixedBRing,
    NotNonZeroDivisor,
    RingSpecError,
    RingValue,
    eval_poly,
    lift_clearing_denominators,
    localize,
    parse_ring,
    substitute,
)
from stsp.rings.localized import LocalizedRing

SPECS = ["Z", "Z/4", "Z/5", "Z/5[t]", "Z[x,y]", "Loc(Z,2)", "Loc(Z[t],2)", "B(Z,2)",
         "B(Z/5,2)", "B(Z[x],2)"]


def triples(spec, count, seed=0):
    R = parse_ring(spec)
    rng = Random(f"{seed}:{spec}")
    for _ in range(count):
        yield tuple(RingValue(R, R.random(rng, 3)) for _ in range(3))


def test_intmod_add():
    R = parse_ring("Z/5")
    assert R(3) + R(4) == R(2)


def test_localized_add_is_canonical():
    L = parse_ring("Loc(Z,2)")
    s = L("1/2") + L("1/4")
    assert s.payload == (3, 2)


def test_mixed_add_componentwise():
    B = parse_ring("B(Z,2)")
    assert B("1 + t") + B("2 + 3*t") == B("3 + 4*t")


def test_mixed_mul_formula():
    # (2, t)(3, t) = (6, 2t + 3t + t^2)
    B = parse_ring("B(Z,2)")
    prod = B("2 + t") * B("3 + t")
    assert prod.payload[0] == 6
    assert prod == B("6 + 5*t + t^2")


def test_unit_law():
    for spec in SPECS:
        for x, _, _ in triples(spec, 20):
            assert x * 1 == x


def test_poly_mul_mod5_against_schoolbook():
    P = parse_ring("Z/5[t]")
    got = P("t + 1") * P("t + 4")
    assert poly_mul_mod([1, 1], [4, 1], 5) == [4, 0, 1]
    assert got == P("t^2 + 4")


def test_localize_examples():
    Z = parse_ring("Z")
    L = parse_ring("Loc(Z,2)")
    assert localize(Z(6), 2).payload == (6, 0)
    assert localize(Z(4), 2) * L("1/4") == L(1)
    Zt = parse_ring("Z[t]")
    x = localize(Zt("t"), 2)
    assert x.payload == (Zt("t").payload, 0)


def test_lift_clearing_denominators():
    L = parse_ring("Loc(Z,2)")
    y, N = lift_clearing_denominators(RingValue(L, (3, 2)))
    assert (y.payload, N) == (3, 2)
    y, N = lift_clearing_denominators(RingValue(L, L.canon(6, 1)))
    assert (y.payload, N) == (3, 0)
    y, N = lift_clearing_denominators(RingValue(L, L.canon(0, 5)))
    assert (y.payload, N) == (0, 0)


def test_eval_poly_examples():
    Zt = parse_ring("Z[t]")
    assert eval_poly(Zt("1 + 3*t"), Zt("2*t")) == Zt("1 + 6*t")
    assert eval_poly(Zt("t^2"), Zt(0)) == Zt(0)
    Lt = parse_ring("Loc(Z[t],2)")
    assert eval_poly(Zt("1 + 3*t"), Lt("t/2")) == Lt("1 + 3*t/2")


def test_descriptor_mismatch():
    with pytest.raises(DescriptorMismatch):
        parse_ring("Z/5")(1) + parse_ring("Z/7")(1)


def test_rejects_zero_divisor_and_nilpotent():
    with pytest.raises(NotNonZeroDivisor):
        LocalizedRing(parse_ring("Z/4"), 2)
    with pytest.raises(NotNonZeroDivisor):
        MixedBRing(parse_ring("Z"), 0)
    with pytest.raises(RingSpecError):
        parse_ring("Q[")


@pytest.mark.parametrize("spec", SPECS)
def test_ring_axioms(spec):
    R = parse_ring(spec)
    one, zero = R(1), R(0)
    for x, y, z in triples(spec, 500 if "B(Z[x]" not in spec else 150):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        assert x + zero == x and x * one == x and x - x == zero


@pytest.mark.parametrize("spec", ["B(Z,2)", "B(Z/5,2)", "B(Z[x],2)"])
def test_mixed_mul_matches_embedding(spec):
    B = parse_ring(spec)
    for x, y, _ in triples(spec, 500 if "[x]" not in spec else 150, seed=1):
        emb = B.loc.mul(B.embed(x.payload), B.embed(y.payload))
        assert B.embed((x * y).payload) == emb


def test_localize_injective_and_lift_roundtrip():
    Z = parse_ring("Z")
    L = parse_ring("Loc(Z,2)")
    rng = Random(3)
    for _ in range(500):
        x, y = rng.randint(-50, 50), rng.randint(-50, 50)
        lx, ly = localize(Z(x), 2), localize(Z(y), 2)
        assert (lx == ly) == (x == y)
        k = rng.randint(0, 4)
        q = RingValue(L, L.canon(x, k))
        z, N = lift_clearing_denominators(q)
        assert Fraction(z.payload, 2 ** N) == Fraction(x, 2 ** k)


@settings(max_examples=200)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=4), st.integers(-3, 3))
def test_evaluation_composes(coeffs, a):
    # ev_{at} ∘ ev_{at} = ev_{a^2 t}
    P = parse_ring("Z[t]")
    p = P(" + ".join(f"({c})*t^{k}" for k, c in enumerate(coeffs)))
    at = P(f"({a})*t")
    twice = RingValue(P, substitute(P, substitute(P, p.payload, "t", at.payload), "t", at.payload))
    once = RingValue(P, substitute(P, p.payload, "t", P(f"({a * a})*t").payload))
    assert twice == once
