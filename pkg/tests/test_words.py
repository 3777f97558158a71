from random import Random

import pytest
from hypothesis import given, settings, strategies as st

import oracles as orc
from stsp.elements import x_element, x_general, y_element
from stsp.relations import Context
from stsp.relations import sampling as smp
from stsp.rings import parse_ring
from stsp.symplectic import IndexedVector, NotIsotropicPair, esd_matrix
from stsp.trace import TraceStep, apply_relation
from stsp.words import (
    Letter,
    OrbitVector,
    PatternMismatch,
    SteinbergWord,
    WordParseError,
    free_reduce,
    parse_word,
    word,
)

Z = parse_ring("Z")
Z5 = parse_ring("Z/5")


def e(i, n=3, c=1, R=Z):
    return IndexedVector.basis(R, n, i, c)


def letters_of(w):
    return [(L.i, L.j, L.a, L.inv) for L in w.letters]


def test_parse_format_roundtrip():
    text = "X(1,2;3)*X(2,-1;-4)^-1*X(-3,3;1)"
    w = parse_word(Z, 3, text)
    assert len(w) == 3
    assert w.format() == text
    assert parse_word(Z, 3, w.format()) == w
    assert parse_word(Z, 3, "1") == SteinbergWord.empty(Z, 3)
    assert parse_word(Z, 3, "").format() == "1"


def test_parse_polynomial_params():
    R = parse_ring("Z[t]")
    w = parse_word(R, 3, "X(1,2;t^2 + 1)*X(2,3;(t+1)*(t-1))")
    assert w.format() == "X(1,2;t^2 + 1)*X(2,3;t^2 - 1)"


@pytest.mark.parametrize("bad", ["X(1,1;2)", "X(1,4;2)", "X(0,1;2)", "X(1,2;3", "Y(1,2;3)",
                                 "X(1,2;3)X(1,2;3)"])
def test_parse_rejects(bad):
    with pytest.raises(WordParseError):
        parse_word(Z, 3, bad)


def test_phi_of_generators_matches_oracle():
    n = 3
    w = parse_word(Z, n, "X(1,2;3)*X(2,-1;-4)^-1*X(-3,3;1)")
    assert w.phi().rows() == orc.word_matrix(n, [(1, 2, 3, False), (2, -1, -4, True), (-3, 3, 1, False)])
    assert SteinbergWord.empty(Z, n).phi().is_identity()


def test_phi_random_words_over_z_mod_5():
    rng = Random(3)
    n = 3
    for _ in range(50):
        w = smp.word(Z5, n, rng, 6, size=4)
        assert w.phi().rows() == orc.word_matrix(n, letters_of(w), mod=5)


def test_phi_is_a_homomorphism():
    rng = Random(4)
    for _ in range(30):
        g = smp.word(Z, 3, rng, 4, size=3)
        h = smp.word(Z, 3, rng, 4, size=3)
        assert (g * h).phi() == g.phi() @ h.phi()
        assert g.inverse().phi() == g.phi().inverse()
        assert (g * g.inverse()).phi().is_identity()


def test_apply_to_agrees_with_matrix():
    rng = Random(5)
    for _ in range(30):
        g = smp.word(Z, 3, rng, 5, size=3)
        v = smp.vector(Z, 3, rng, size=3)
        assert g.apply_to(v) == g.phi() * v


def test_free_reduce_examples():
    w = parse_word(Z, 3, "X(1,2;3)*X(1,2;3)^-1")
    assert free_reduce(w).format() == "1"
    assert free_reduce(parse_word(Z, 3, "X(1,2;3)*X(1,2;4)")).format() == "X(1,2;7)"
    w = parse_word(Z, 3, "X(1,2;3)*X(3,-1;4)")
    assert free_reduce(w) == w
    w = parse_word(Z, 3, "X(1,2;3)*X(1,2;4)")
    assert free_reduce(w, merge=False) == w


@settings(max_examples=60)
@given(st.integers(0, 10_000))
def test_free_reduce_preserves_phi(seed):
    rng = Random(seed)
    g = smp.word(Z5, 3, rng, 4, allowed=[1, 2, -1], size=2)
    w = g * g.inverse() * smp.word(Z5, 3, rng, 3, size=2)
    r = free_reduce(w)
    assert r.phi() == w.phi()
    assert len(r) <= len(w)
    assert free_reduce(g * g.inverse()).format() == "1"


def test_x_element_examples():
    n = 3
    u = OrbitVector.e1(Z, n)
    assert x_element(u, e(-2, c=-5), 0).format() == "X(1,2;5)"
    assert x_element(u, None, 5).format() == "X(1,-1;5)"
    assert x_element(u, None, 0).format() == "1"
    with pytest.raises(NotIsotropicPair):
        x_element(u, e(-1), 0)


def test_y_element_examples():
    w = y_element(1, e(2), None, 3)
    assert w.format() == "X(1,-2;1)*X(-1,1;3)*X(1,-2;1)^-1*X(-1,1;3)^-1*X(-1,-2;-3)"
    assert y_element(1, IndexedVector.zero(Z, 3), None, 0).format() == "1"
    assert w.phi() == esd_matrix(e(2), IndexedVector.zero(Z, 3), 3)


@pytest.mark.parametrize("spec", ["Z", "Z/5", "Z/4"])
def test_x_element_projects_to_esd(spec):
    R = parse_ring(spec)
    n = 3
    rng = Random(11)
    for _ in range(100):
        u = smp.orbit(R, n, rng, length=3, size=2)
        v = smp.orth(u.vector, rng, size=2)
        a = smp.scalar(R, rng, 3)
        assert x_element(u, v, a).phi() == esd_matrix(u.vector, v, a)


def test_x_general_projects_to_esd():
    rng = Random(12)
    for _ in range(50):
        u = smp.orbit(Z, 3, rng, length=3, size=2).vector
        v = smp.orth(u, rng, size=2)
        a = smp.scalar(Z, rng, 3)
        got = x_general(u, v, a).phi()
        assert got.rows() == orc.esd(3, list(u.entries), list(v.entries), a.payload)


def _step(word_, rel, pos=0):
    return apply_relation(word_, TraceStep(rel, pos))[0]


def test_apply_s2_swaps_commuting_letters():
    w = parse_word(Z, 5, "X(1,2;3)*X(4,5;7)")
    out = _step(w, "S2")
    assert out.format() == "X(4,5;7)*X(1,2;3)"
    assert out.phi() == w.phi()


def test_apply_s3_inserts_commutator_letter():
    w = parse_word(Z, 3, "X(1,2;3)*X(2,3;5)")
    out = _step(w, "S3")
    assert out.format() == "X(1,3;15)*X(2,3;5)*X(1,2;3)"
    assert out.phi() == w.phi()


def test_apply_s5_long_root():
    w = parse_word(Z, 3, "X(1,2;3)*X(2,-1;5)")
    out = _step(w, "S5")
    assert out.format() == "X(1,-1;30)*X(2,-1;5)*X(1,2;3)"
    assert out.phi() == w.phi()


def test_apply_relation_mismatch():
    w = parse_word(Z, 3, "X(1,2;3)*X(3,1;5)")
    with pytest.raises(PatternMismatch):
        _step(w, "S3")
    with pytest.raises(PatternMismatch):
        _step(w, "free-cancel")
    with pytest.raises(PatternMismatch):
        _step(w, "S1", 1)


def test_word_constructor_and_letters():
    w = word(Z, 3, (1, 2, 3), (2, -1, 4, True))
    assert w.letters[1] == Letter(2, -1, 4, True)
    assert w.letters[1].inverse() == Letter(2, -1, 4, False)
    assert w.inverse().format() == "X(2,-1;4)*X(1,2;3)^-1"
    assert w.conj(parse_word(Z, 3, "X(3,1;1)")).phi() == (
        parse_word(Z, 3, "X(3,1;1)") * w * parse_word(Z, 3, "X(3,1;1)").inverse()).phi()
