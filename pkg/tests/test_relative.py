from random import Random

import pytest

from stsp.elements import x_element
from stsp.relations import sampling as smp
from stsp.relative import (
    GuardViolated,
    SplittingIdealData,
    act_on_tulenbaev,
    iota,
    kappa,
    kl_act,
    kl_format,
    kl_inverse,
    kl_root,
    psi_check,
    psi_split,
    reduce_mod_ideal,
    tgen,
    theta,
)
from stsp.rings import parse_ring
from stsp.symplectic import IndexedVector
from stsp.words import OrbitVector, parse_word

Zt = parse_ring("Z[t]")


def e(i, R=Zt, n=3, c=1):
    return IndexedVector.basis(R, n, i, c)


def test_splitting_ideal_maps():
    data = SplittingIdealData.for_ring(Zt)
    x = Zt("3 + 2*t + t^2").payload
    assert data.quotient.spec == "Z"
    assert data.rho.fn(x) == 3
    assert data.sigma_rho(x) == Zt(3).payload
    assert data.contains(Zt("2*t + t^2").payload)
    assert not data.contains(x)
    rng = Random(0)
    for _ in range(30):
        y = data.random_element(rng)
        assert data.contains(y)
        q = data.quotient.random(rng, 3)
        assert data.rho.fn(data.sigma.fn(q)) == q  # ρσ = id


def test_fresh_variable_for_plain_ring():
    data = SplittingIdealData.for_ring(parse_ring("Z/5"))
    assert data.ring.spec == "Z/5[t]" and data.quotient.spec == "Z/5"


def test_psi_split_example():
    data = SplittingIdealData.for_ring(Zt)
    w = parse_word(Zt, 3, "X(1,2;1 + t)*X(2,3;t)*X(1,3;2)")
    rel, quot = psi_split(w, data)
    assert quot.format() == "X(1,2;1)*X(1,3;2)"
    assert kl_format(rel) == "Y(1,2;t)*[X(1,2;1)]Y(2,3;t)"
    assert psi_check(w, data)


def test_psi_split_random_words():
    rng = Random(1)
    data = SplittingIdealData.for_ring(Zt)
    for _ in range(30):
        w = smp.word(Zt, 3, rng, 5, size=2)
        assert psi_check(w, data)
        rel, quot = psi_split(w, data)
        if rel:
            assert reduce_mod_ideal(iota(rel), data).is_identity()
        assert reduce_mod_ideal(w, data) == quot.phi()


def test_iota_and_kl_operations():
    g = parse_word(Zt, 3, "X(2,1;1)")
    y = kl_root(Zt, 3, 1, 3, "t")
    assert iota(y).format() == "X(1,3;t)"
    acted = kl_act(g, y)
    assert iota(acted).phi() == g.phi() @ iota(y).phi() @ g.inverse().phi()
    assert iota(y + kl_inverse(y)).phi().is_identity()
    assert iota((), Zt, 3).format() == "1"


def test_kappa_examples():
    u = OrbitVector.e1(Zt, 3)
    t = Zt("t")
    assert kappa(tgen(u, None, 0, t)).format() == "X(1,-1;t)"
    assert kappa(tgen(u, e(-2), t, 0)).phi() == parse_word(Zt, 3, "X(1,2;-t)").phi()
    x = tgen(u, e(-2, c=3), t, t * t)
    assert kappa(x).phi() == x_element(u, e(-2, c=3).scale(t), t * t).phi()
    assert kappa([x, x.inverse()]).phi().is_identity()
    with pytest.raises(GuardViolated):
        tgen(u, e(-1), t, 0)


def test_theta_kappa_agrees_with_iota():
    rng = Random(2)
    data = SplittingIdealData.for_ring(Zt)
    for _ in range(30):
        i, j = smp.distinct_pair(3, rng)
        y = kl_root(Zt, 3, i, j, data.random_element(rng), rng.random() < 0.3)
        g = smp.word(Zt, 3, rng, 3, size=2)
        word = kl_act(g, y)
        assert kappa(theta(word)).phi() == iota(word).phi()


def test_action_is_conjugation():
    rng = Random(3)
    for _ in range(20):
        u = smp.orbit(Zt, 3, rng)
        v = smp.orth(u.vector, rng)
        x = tgen(u, v, Zt("t"), Zt("2*t"))
        g = smp.word(Zt, 3, rng, 3, size=2)
        lhs = kappa(act_on_tulenbaev(g, x)).phi()
        assert lhs == g.phi() @ kappa(x).phi() @ g.inverse().phi()
