from random import Random

import pytest

from stsp.elements import x_element
from stsp.relations import Context, check_relation, sample_checks
from stsp.relations import sampling as smp
from stsp.rings import RingValue, parse_ring
from stsp.symplectic import IndexedVector, NotIsotropicPair, esd_matrix
from stsp.words import OrbitVector
from stsp.zcalc import (
    DivisibleIdeal,
    NoColumnWitness,
    column_witness,
    default_unit,
    suslin_decompose,
    suslin_direction,
    symp_zero,
    z_full,
    z_list,
    z_scalar,
    z_upper_A,
)

Z = parse_ring("Z")
B = parse_ring("B(Z,2)")


def e(i, R=Z, n=3, c=1):
    return IndexedVector.basis(R, n, i, c)


def test_suslin_direction_example():
    u = e(1) + e(2, c=3)
    d = suslin_direction(u, 1, -2)
    # e_1 u_2 sign(-2) - e_{-2} u_{-1} sign(1)
    assert d == e(1, c=-3)
    assert symp_zero(u, d)


@pytest.mark.parametrize("spec", ["Z", "Z/6", "Z[t]"])
def test_suslin_decomposition_invariants(spec):
    R = parse_ring(spec)
    rng = Random(4)
    for _ in range(30):
        u = smp.orbit(R, 3, rng, size=2).vector
        v = smp.orth(u, rng)
        w = smp.vector(R, 3, rng, size=2)
        dec = suslin_decompose(u, v, w)
        assert dec.A == w.form(u)
        assert dec.total() == v.scale(dec.A)
        parts = list(dec.parts.values())
        assert all(symp_zero(u, p) for p in parts)
        assert dec.part(2, -1) == dec.part(-1, 2)


def test_suslin_needs_isotropic_pair():
    with pytest.raises(NotIsotropicPair):
        suslin_decompose(e(1), e(-1), e(2))


def test_z_list_projection():
    rng = Random(5)
    for _ in range(20):
        u = smp.orbit(Z, 3, rng)
        parts = [smp.orth(u.vector, rng) for _ in range(3)]
        z = z_list(u, parts)
        assert z.phi() == z.target
    u = OrbitVector.e1(Z, 3)
    # one part: Z(u; v) = X(u, v, 0)
    assert z_list(u, [e(-2, c=4)]).phi() == x_element(u, e(-2, c=4), 0).phi()


def test_z_upper_a_projects_to_a_squared():
    rng = Random(6)
    for _ in range(30):
        u = smp.orbit(Z, 3, rng)
        v = smp.orth(u.vector, rng)
        w = smp.vector(Z, 3, rng, size=2)
        z = z_upper_A(u, v, w)
        A = w.form(u.vector)
        assert z.phi() == esd_matrix(u.vector, v.scale(A * A), 0)


def test_column_witness():
    u = OrbitVector.e1(Z, 3)
    w, N = column_witness(u, 2)
    assert N == 0 and w.form(u.vector) == Z(1)
    v = e(2, c=4)
    w, N = column_witness(v, 2)
    assert N == 2 and w.form(v) == Z(4)
    with pytest.raises(NoColumnWitness):
        column_witness(e(2, c=3), 2)


def test_divisible_ideal():
    I = DivisibleIdeal.for_ring(B)
    rng = Random(0)
    x = I.random(rng)
    assert I.contains(x)
    assert not I.contains(B.one())
    J = DivisibleIdeal.for_ring(parse_ring("Z/5"))
    assert J.whole and J.a == 2
    assert default_unit(Z) == -1
    with pytest.raises(ValueError):
        DivisibleIdeal.for_ring(Z, 2)


def test_z_scalar_over_mixed_ring():
    I = DivisibleIdeal.for_ring(B)
    rng = Random(7)
    for _ in range(15):
        u = smp.orbit(B, 3, rng)
        v = smp.orth(u.vector, rng)
        b = RingValue(B, I.random(rng))
        c = RingValue(B, I.random(rng))
        for N in (0, 1, 2):
            z = z_scalar(u, v, b, I.a, N)
            assert z.phi() == esd_matrix(u.vector, v.scale(b), 0)
            zf = z_full(u, v, b, c, I.a, N)
            assert zf.phi() == zf.target
            assert zf.phi() == esd_matrix(u.vector, v.scale(b), 0) * esd_matrix(
                u.vector, IndexedVector.zero(B, 3), c)


def test_z_scalar_zero_is_identity():
    u = OrbitVector.e1(B, 3)
    z = z_scalar(u, IndexedVector.zero(B, 3), B.zero(), DivisibleIdeal.for_ring(B).a, 1)
    assert z.phi().is_identity()


@pytest.mark.parametrize("rel_id", ["Z4", "Z5", "onemore", "forgotten", "x=z", "decomposition"])
@pytest.mark.parametrize("spec", ["Z", "Z/5", "B(Z,2)"])
def test_named_z_properties(rel_id, spec):
    ctx = Context(parse_ring(spec), 3)
    samples = 3 if spec.startswith("B") else 8
    results = list(sample_checks(rel_id, ctx, seed=1, samples=samples))
    assert len(results) == samples
    assert all(r.passed for r in results)
