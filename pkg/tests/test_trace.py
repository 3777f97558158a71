from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from stsp.relations import Context, sample_bindings
from stsp.relations import sampling as smp
from stsp.relations.base import encode_bindings
from stsp.rings import parse_ring
from stsp.trace import (
    CURATED,
    FORWARD,
    REVERSE,
    DerivationTrace,
    ReplayError,
    TraceStep,
    apply_relation,
    curated_trace,
    derive,
)
from stsp.words import PatternMismatch, parse_word

Z = parse_ring("Z")
Z5 = parse_ring("Z/5")


def test_simple_trace_reaches_identity():
    src = parse_word(Z, 3, "X(1,2;2)*X(1,2;-2)")
    tr = derive(src, [("S1", 0), ("S1-zero", 0)])
    assert tr.target.format() == "1"
    assert len(tr.words()) == 3
    assert tr.steps[0].params  # inferred bindings are recorded


def test_reverse_returns_source():
    src = parse_word(Z, 3, "X(1,2;3)*X(2,3;5)*X(2,3;5)^-1")
    tr = derive(src, [("free-cancel", 1), ("S0", 0)])
    back = tr.reverse()
    assert back.source == tr.target
    assert back.replay() == src
    assert all(s.direction == REVERSE for s in back.steps)


def test_json_roundtrip():
    src = parse_word(Z, 3, "X(1,2;3)*X(2,3;5)")
    tr = derive(src, [("S3", 0)], name="demo")
    again = DerivationTrace.loads(tr.dumps())
    assert again.replay() == tr.target
    assert again.to_json() == tr.to_json()


def test_json_wrong_target_rejected():
    tr = derive(parse_word(Z, 3, "X(1,2;3)*X(2,3;5)"), [("S3", 0)])
    data = tr.to_json()
    data["target"] = "X(1,2;3)"
    with pytest.raises(ReplayError):
        DerivationTrace.from_json(data)


def test_bad_step_raises():
    src = parse_word(Z, 3, "X(1,2;3)*X(3,1;5)")
    with pytest.raises(ReplayError):
        derive(src, [("S3", 0)])
    with pytest.raises(PatternMismatch):
        apply_relation(src, TraceStep("S3", 0, {}, REVERSE))


def test_insert_cancel_needs_bindings():
    src = parse_word(Z, 3, "X(1,2;3)")
    with pytest.raises(PatternMismatch):
        apply_relation(src, TraceStep("insert-cancel-pair", 1))
    b = {"i": 2, "j": 3, "a": Z(4), "inv": False}
    out, _ = apply_relation(src, TraceStep("insert-cancel-pair", 1, encode_bindings(b)))
    assert out.format() == "X(1,2;3)*X(2,3;4)*X(2,3;4)^-1"


_PATTERNS = ("S0", "S1", "S2", "S3", "S4", "S5", "free-cancel", "S1-inv", "S1-zero")


def _random_trace(ring, rng, steps=8):
    ctx = Context(ring, 3)
    w = smp.word(ring, 3, rng, 5, size=2)
    src = w
    done = []
    for _ in range(steps):
        if rng.random() < 0.25:
            i, j = smp.distinct_pair(3, rng)
            b = {"i": i, "j": j, "a": smp.scalar(ring, rng, 2), "inv": rng.random() < 0.5}
            step = TraceStep("insert-cancel-pair", rng.randint(0, len(w)), encode_bindings(b))
        else:
            step = TraceStep(rng.choice(_PATTERNS), rng.randint(0, max(0, len(w) - 1)))
        try:
            w, full = apply_relation(w, step, ctx)
        except PatternMismatch:
            continue
        done.append(full)
    return DerivationTrace(src, done)


@settings(max_examples=40)
@given(st.integers(0, 100_000), st.sampled_from(["Z", "Z/5", "Z/4", "Z/5[t]"]))
def test_random_traces_preserve_phi(seed, spec):
    ring = parse_ring(spec)
    tr = _random_trace(ring, Random(seed))
    words = tr.words(check_phi=True)
    assert all(w.phi() == tr.source.phi() for w in words)
    assert tr.reverse().replay() == tr.source


def test_random_traces_are_not_all_trivial():
    rng = Random(1)
    lengths = [len(_random_trace(Z5, rng).steps) for _ in range(20)]
    assert sum(lengths) > 20


@pytest.mark.parametrize("spec", ["Z", "Z/5", "B(Z,2)"])
@pytest.mark.parametrize("name", CURATED)
def test_curated_traces(spec, name):
    ctx = Context(parse_ring(spec), 3)
    nontrivial = 0
    for seed in range(4):
        tr = curated_trace(name, ctx, seed)
        tr.replay(check_phi=True)
        assert tr.reverse().replay() == tr.source
        assert DerivationTrace.loads(tr.dumps()).replay() == tr.target
        nontrivial += len(tr.source) > 0
        if name == "Z3":
            assert tr.target.format() == "1"
    assert nontrivial > 0


def test_step_json():
    s = TraceStep("S1", 2, {"i": 1}, FORWARD)
    assert TraceStep.from_json(s.to_json()) == s
    assert s.reversed().reversed() == s
