from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

import oracles as orc
from stsp.localglobal import (
    DirectSystemMap,
    HypothesisViolated,
    NotComaximal,
    PhiIMap,
    SCENARIOS,
    certify_dilation,
    comaximal_glue_check,
    dilate,
    dilation_search,
    evaluate_matrix,
    evaluate_word,
    lift_word,
    localization_of,
    localize_matrix,
    localize_word,
    phi_i_push,
    random_conjugates,
    random_generator,
    scenario,
    tulenbaev_T,
    tulenbaev_diagram,
)
from stsp.relations import sampling as smp
from stsp.rings import RingValue, parse_ring
from stsp.trace import derive
from stsp.words import parse_word

Zt = parse_ring("Z[t]")
L = parse_ring("Loc(Z[t],2)")
B = parse_ring("B(Z,2)")


# -- evaluation and dilation -------------------------------------------------------

def test_evaluate_word_is_functorial():
    rng = Random(0)
    for _ in range(20):
        g = smp.word(Zt, 3, rng, 4, size=2)
        x = RingValue(Zt, Zt.random(rng, 2))
        assert evaluate_word(g, x).phi() == evaluate_matrix(g.phi(), x)
        h = smp.word(Zt, 3, rng, 3, size=2)
        assert evaluate_word(g * h, x) == evaluate_word(g, x) * evaluate_word(h, x)


def test_evaluate_example():
    g = parse_word(Zt, 3, "X(1,2;t^2 + 1)")
    assert evaluate_word(g, Zt("2*t")).format() == "X(1,2;4*t^2 + 1)"
    assert evaluate_word(g, Zt(0)).format() == "X(1,2;1)"


def test_dilate_composes():
    g = parse_word(L, 3, "X(1,2;(3*t^2)/4)*X(2,3;(-5*t)/8)")
    assert dilate(dilate(g, 2, 1), 2, 2) == dilate(g, 2, 3)
    assert dilate(g, 2, 0) == g
    assert lift_word(dilate(g, 2, 3)).format() == "X(1,2;48*t^2)*X(2,3;-5*t)"
    assert lift_word(dilate(g, 2, 2)) is None


def test_localize_lift_roundtrip():
    g = parse_word(Zt, 3, "X(1,2;t + 3)*X(2,-1;t^2)^-1")
    gl = localize_word(g, 2)
    assert gl.ring.spec == "Loc(Z[t],2)"
    assert lift_word(gl) == g
    assert localize_word(gl, 2) is gl


# -- direct system and φ_i ------------------------------------------------------------

def test_direct_system_maps():
    p = Zt("1 + 3*t + t^2")
    psi = DirectSystemMap(Zt, 2, 0, 2)
    assert psi(p) == Zt("1 + 12*t + 16*t^2")
    assert DirectSystemMap(Zt, 2, 1, 1)(p) == p
    assert DirectSystemMap(Zt, 2, 0, 1).then(DirectSystemMap(Zt, 2, 1, 3))(p) == DirectSystemMap(Zt, 2, 0, 3)(p)
    with pytest.raises(ValueError):
        DirectSystemMap(Zt, 2, 2, 1)


def test_phi_i_examples():
    p = Zt("1 + 3*t")
    assert B.format(PhiIMap(B, 0)(p).payload) == "1 + 3*t"
    assert B.format(PhiIMap(B, 2)(p).payload) == "1 + (3*t)/4"
    assert PhiIMap(B, 1)(Zt(5)) == B(5)


@settings(max_examples=60)
@given(st.integers(0, 10_000), st.integers(0, 3), st.integers(0, 3))
def test_phi_i_compatible_with_direct_system(seed, i, d):
    rng = Random(seed)
    p = RingValue(Zt, Zt.random(rng, 4, degree=3))
    q = RingValue(Zt, Zt.random(rng, 4, degree=3))
    j = i + d
    phi_i, phi_j = PhiIMap(B, i), PhiIMap(B, j)
    assert phi_j(DirectSystemMap(Zt, 2, i, j)(p)) == phi_i(p)
    assert phi_i(p * q) == phi_i(p) * phi_i(q)
    assert phi_i(p + q) == phi_i(p) + phi_i(q)


def test_phi_i_push_on_words():
    g = parse_word(Zt, 3, "X(1,2;1 + t)*X(2,3;t^2)")
    pushed = phi_i_push(g, 1, B)
    assert pushed.ring == B
    assert pushed.phi() == g.phi().map_entries(PhiIMap(B, 1), B)
    with pytest.raises(ValueError):
        phi_i_push(pushed, 1, B)


# -- the Tulenbaev map ------------------------------------------------------------------

@pytest.mark.parametrize("spec", ["B(Z,2)", "B(Z[x],2)"])
def test_tulenbaev_diagram_commutes(spec):
    Ba = localization_of(parse_ring(spec))
    rng = Random(5)
    for _ in range(10):
        x = random_generator(Ba, 3, rng, length=2, size=2)
        d = tulenbaev_diagram(x)
        assert d["commutes"]
        assert localize_matrix(d["image"].word.phi(), Ba) == d["phi_kappa"]


def test_tulenbaev_inverse_generator():
    Ba = localization_of(B)
    rng = Random(6)
    x = random_generator(Ba, 3, rng, length=2)
    T, Ti = tulenbaev_T(x), tulenbaev_T(x.inverse())
    assert (T.word * Ti.word).phi().is_identity()
    assert T.to_json()["N"] == T.N


def test_tulenbaev_block_trivial_away_from_index():
    Ba = localization_of(B)
    rng = Random(8)
    for _ in range(10):
        x = random_generator(Ba, 3, rng, length=2, avoid=3)
        assert tulenbaev_T(x).word.phi().block_trivial(3)


# -- dilation search ------------------------------------------------------------------------

def _random_fraction_word(rng, letters=3):
    """A word h·h⁻¹ over Loc(Z[t],2) and the coefficient data of its letters."""
    parts, coeffs = [], []
    for _ in range(letters):
        i, j = smp.distinct_pair(3, rng)
        deg = rng.randint(1, 3)
        c = Fraction(rng.choice([-3, -1, 1, 5]), 2 ** rng.randint(0, 5))
        parts.append(f"X({i},{j};({c.numerator}*t^{deg})/{c.denominator})")
        coeffs.append({deg: c})
    h = parse_word(L, 3, "*".join(parts))
    return h * h.inverse(), coeffs


def test_dilation_matches_oracle_on_random_words():
    rng = Random(9)
    for _ in range(30):
        g, coeffs = _random_fraction_word(rng)
        res = dilation_search(g, 2)
        assert res.N == orc.minimal_dilation(coeffs)
        assert res.word.phi().is_identity()


def test_dilation_is_monotone():
    rng = Random(10)
    for _ in range(10):
        g, _ = _random_fraction_word(rng)
        N = dilation_search(g, 2).N
        for k in range(N, N + 3):
            assert lift_word(dilate(g, 2, k)) is not None
        for k in range(N):
            assert lift_word(dilate(g, 2, k)) is None


def test_dilation_scenario_against_oracle():
    sc = scenario("dilation-needed")
    coeffs = [{1: Fraction(1, 2)}, {1: Fraction(1, 4)}, {1: Fraction(1, 2)}, {1: Fraction(1, 4)},
              {2: Fraction(1, 8)}]
    res = dilation_search(sc.word, sc.a)
    assert res.N == orc.minimal_dilation(coeffs) == 2
    assert res.tried == [0, 1, 2]
    # every dilation is the identity over Q (sample values of t)
    letters = [(1, 2, {1: Fraction(1, 2)}, False), (2, 3, {1: Fraction(1, 4)}, False),
               (1, 2, {1: Fraction(1, 2)}, True), (2, 3, {1: Fraction(1, 4)}, True),
               (1, 3, {2: Fraction(1, 8)}, True)]
    for N in range(4):
        for t in (1, 3, Fraction(-5, 7)):
            assert orc.eval_fraction_word(3, letters, t * 2 ** N) == orc.identity(3)
    assert certify_dilation(sc.trace, res.word)


def test_dilation_hypothesis_gate():
    with pytest.raises(HypothesisViolated):
        dilation_search(scenario("nontrivial-phi").word, 2)


def test_dilation_budget_exhausted():
    g = parse_word(L, 3, "X(1,2;t/1024)*X(1,2;t/1024)^-1")
    assert dilation_search(g, 2, N_max=4).N is None
    assert dilation_search(g, 2, N_max=16).N == 10


def test_certify_rejects_wrong_trace():
    sc = scenario("dilation-needed")
    res = dilation_search(sc.word, 2)
    other = derive(sc.word, [("S3", 0)])
    assert not certify_dilation(other, res.word)


def test_trivial_scenario_needs_no_dilation():
    sc = scenario("trace-trivial")
    res = dilation_search(sc.word, sc.a)
    assert res.N == 0
    assert certify_dilation(sc.trace, res.word)
    assert set(SCENARIOS) == {"trace-trivial", "nontrivial-phi", "dilation-needed"}


# -- comaximal gluing ---------------------------------------------------------------------------

def test_glue_check():
    sc = scenario("trace-trivial")
    rng = Random(11)
    for h in random_conjugates(sc.word, rng, 5):
        out = comaximal_glue_check(h, 2, 3, -1, 1)
        assert out["applicable"] and out["conclusion"] and out["pass"]
    out = comaximal_glue_check(scenario("nontrivial-phi").word, 2, 3, -1, 1)
    assert not out["applicable"] and out["pass"]


def test_glue_rejects_non_comaximal():
    with pytest.raises(NotComaximal):
        comaximal_glue_check(scenario("trace-trivial").word, 2, 4, 1, 1)
