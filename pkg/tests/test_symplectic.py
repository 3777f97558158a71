from random import Random

import pytest

import oracles as orc
from stsp.rings import RingValue, parse_ring
from stsp.symplectic import (
    IndexedVector,
    NotIsotropicPair,
    SympMatrix,
    TransvectionSpec,
    esd_matrix,
    indices,
    is_symplectic,
    pos,
    symp_form,
    transvection_matrix,
)
from stsp.relations import sampling as smp

Z = parse_ring("Z")


def e(i, n=3, c=1, R=Z):
    return IndexedVector.basis(R, n, i, c)


def as_rows(m: SympMatrix):
    return m.rows()


def test_index_layout():
    assert [pos(3, i) for i in indices(3)] == list(range(6))
    assert pos(3, -3) == 0 and pos(3, 1) == 3


def test_form_examples():
    assert symp_form(e(1), e(-1)) == Z(1)
    assert symp_form(e(-1), e(1)) == Z(-1)
    assert symp_form(e(1) + e(2), e(-2)) == Z(1)


def test_transvection_examples():
    n = 3
    assert as_rows(transvection_matrix(TransvectionSpec(1, 2, Z(7)), n)) == orc.transvection(n, 1, 2, 7)
    assert as_rows(transvection_matrix(TransvectionSpec(1, -1, Z(5)), n)) == orc.transvection(n, 1, -1, 5)
    assert transvection_matrix(TransvectionSpec(1, 2, Z(0)), n).is_identity()
    # T_{12}(a) = 1 + a e_12 - a e_{-2,-1}
    m = transvection_matrix(TransvectionSpec(1, 2, Z(3)), n)
    assert m.entry(1, 2) == Z(3) and m.entry(-2, -1) == Z(-3)


def test_transvections_match_formula_everywhere():
    for n in (3, 4):
        for i in indices(n):
            for j in indices(n):
                if i == j:
                    continue
                got = transvection_matrix(TransvectionSpec(i, j, Z(5)), n)
                assert as_rows(got) == orc.transvection(n, i, j, 5)
                assert is_symplectic(got)


def test_esd_examples():
    n = 3
    a = Z(4)
    assert esd_matrix(e(1), IndexedVector.zero(Z, n), a) == transvection_matrix(TransvectionSpec(1, -1, a), n)
    # X_ij(a) = [e_i, e_{-j} a sign(-j), 0]
    v = e(-2, c=-4)
    assert esd_matrix(e(1), v, 0) == transvection_matrix(TransvectionSpec(1, 2, a), n)
    zero = IndexedVector.zero(Z, n)
    assert esd_matrix(zero, zero, 0).is_identity()
    with pytest.raises(NotIsotropicPair):
        esd_matrix(e(1), e(-1), 0)


def test_esd_matches_column_oracle():
    rng = Random(7)
    n = 3
    for _ in range(100):
        u = smp.vector(Z, n, rng, size=3)
        v = smp.orth(u, rng, size=3)
        a = rng.randint(-5, 5)
        got = esd_matrix(u, v, a)
        assert as_rows(got) == orc.esd(n, list(u.entries), list(v.entries), a)


def test_is_symplectic_examples():
    assert is_symplectic(SympMatrix.identity(Z, 3))
    assert is_symplectic(transvection_matrix(TransvectionSpec(2, 3, Z(7)), 3))
    rows = orc.identity(3)
    rows[pos(3, 1)][pos(3, 1)] = 2
    assert not is_symplectic(SympMatrix.from_rows(Z, 3, rows))


@pytest.mark.parametrize("spec", ["Z", "Z/4", "Z/5", "Z/5[t]"])
@pytest.mark.parametrize("n", [3, 4])
def test_form_preservation(spec, n):
    R = parse_ring(spec)
    rng = Random(f"form:{spec}:{n}")
    for _ in range(100):
        i, j = smp.distinct_pair(n, rng)
        assert is_symplectic(transvection_matrix(TransvectionSpec(i, j, smp.scalar(R, rng)), n))
        u = smp.vector(R, n, rng)
        v = smp.orth(u, rng)
        assert is_symplectic(esd_matrix(u, v, smp.scalar(R, rng)))


@pytest.mark.parametrize("spec", ["Z", "Z/4", "Z/5[t]"])
def test_matrix_shadows(spec):
    R = parse_ring(spec)
    rng = Random(f"shadow:{spec}")
    n = 3
    for _ in range(60):
        u = smp.vector(R, n, rng)
        v = smp.orth(u, rng)
        a, b = smp.scalar(R, rng), smp.scalar(R, rng)
        zero = IndexedVector.zero(R, n)
        assert esd_matrix(u, v, a) == esd_matrix(u, v, 0) * esd_matrix(u, zero, a)
        i, j = smp.distinct_pair(n, rng)
        T = lambda c: transvection_matrix(TransvectionSpec(i, j, c), n)  # noqa: E731
        assert T(a) * T(b) == T(a + b)
        assert (T(a) * T(-a)).is_identity()


def test_json_roundtrip():
    R = parse_ring("Z/5[t]")
    m = transvection_matrix(TransvectionSpec(1, -2, R("2*t + 1")), 3)
    assert SympMatrix.from_json(R, 3, m.to_json()) == m
    v = IndexedVector.from_dict(R, 3, {1: R("t"), -3: R(2)})
    assert IndexedVector.from_json(R, 3, v.to_json()) == v


def test_n_at_least_three():
    with pytest.raises(ValueError):
        IndexedVector.zero(Z, 2)
