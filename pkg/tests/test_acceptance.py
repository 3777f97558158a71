"""Acceptance criteria, each at its stated scale and tolerance (exact, zero failures).

Every test prints one line `criterion <k>: PASS|FAIL ...` with its runtime.
"""
import json
import time
from fractions import Fraction
from random import Random

import pytest

import oracles as orc
from stsp.cli import SuiteConfig, demo_local_global, dumps, run_suite
from stsp.localglobal import (
    DirectSystemMap,
    PhiIMap,
    localization_of,
    localize_matrix,
    random_generator,
    scenario,
    tulenbaev_T,
)
from stsp.relations import CATALOGUE
from stsp.relations import sampling as smp
from stsp.relative import kappa
from stsp.rings import RingValue, parse_ring
from stsp.symplectic import TransvectionSpec, esd_matrix, is_symplectic, transvection_matrix
from stsp.zcalc import suslin_decompose, z_upper_A


@pytest.fixture
def report(capsys):
    def emit(k, ok, seconds, detail=""):
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\ncriterion {k}: {status} ({seconds:.2f}s) {detail}".rstrip())
    return emit


FORM_RINGS = ["Z", "Z/4", "Z/5", "Z/5[t]"]


def test_criterion_1_form_preservation(report):
    t0 = time.perf_counter()
    bad = 0
    total = 0
    for spec in FORM_RINGS:
        R = parse_ring(spec)
        for n in (3, 4):
            rng = Random(f"c1:{spec}:{n}")
            for _ in range(500):
                i, j = smp.distinct_pair(n, rng)
                T = transvection_matrix(TransvectionSpec(i, j, smp.scalar(R, rng, 20)), n)
                u = smp.vector(R, n, rng, size=20)
                v = smp.orth(u, rng, size=20)
                E = esd_matrix(u, v, smp.scalar(R, rng, 20))
                bad += (not is_symplectic(T)) + (not is_symplectic(E))
                total += 2
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < 10
    report(1, ok, dt, f"{total} matrices, {bad} not symplectic")
    assert bad == 0
    assert dt < 10


def test_criterion_2_relation_catalogue(report):
    t0 = time.perf_counter()
    failures = {}
    for spec in FORM_RINGS:
        rep = run_suite(SuiteConfig(spec, n=3, seed=0, samples=200))
        assert {r["relation_id"] for r in rep["relations"]} == set(CATALOGUE)
        assert all(r["samples"] == 200 for r in rep["relations"])
        failures[spec] = rep["failures"]
    dt = time.perf_counter() - t0
    ok = not any(failures.values()) and dt < 120
    report(2, ok, dt, f"{len(CATALOGUE)} relations x 200 samples, failures per ring {failures}")
    assert not any(failures.values())
    assert dt < 120


def test_criterion_3_suslin_lemma(report):
    t0 = time.perf_counter()
    bad = 0
    for spec in FORM_RINGS:
        R = parse_ring(spec)
        for n in (3, 4):
            rng = Random(f"c3:{spec}:{n}")
            for _ in range(500):
                u = smp.orbit(R, n, rng, size=3).vector
                v = smp.orth(u, rng, size=3)
                w = smp.vector(R, n, rng, size=3)
                dec = suslin_decompose(u, v, w)
                A = w.form(u)
                parts = dec.parts
                sym = all(dec.part(i, j) == dec.part(j, i) for (i, j) in parts)
                orth = all(R.is_zero(u.form(p).payload) for p in parts.values())
                bad += not (sym and orth and dec.total() == v.scale(A))
    dt = time.perf_counter() - t0
    report(3, bad == 0, dt, f"{len(FORM_RINGS) * 2 * 500} decompositions, {bad} failures")
    assert bad == 0


def test_criterion_4_z_upper_a_projection(report):
    t0 = time.perf_counter()
    bad = 0
    Z = parse_ring("Z")
    rng = Random("c4")
    for _ in range(200):
        u = smp.orbit(Z, 3, rng, size=2)
        v = smp.orth(u.vector, rng, size=2)
        w = smp.vector(Z, 3, rng, size=2)
        A = w.form(u.vector).payload
        got = z_upper_A(u, v, w).phi().rows()
        # independent dense oracle for T(u, v A^2, 0)
        want = orc.esd(3, list(u.vector.entries), [x * A * A for x in v.entries], 0)
        bad += got != want
    dt = time.perf_counter() - t0
    report(4, bad == 0, dt, f"200 samples over Z, {bad} mismatches")
    assert bad == 0


def test_criterion_5_tulenbaev_diagram(report):
    t0 = time.perf_counter()
    bad = 0
    block_bad = 0
    for spec in ("B(Z,2)", "B(Z[x],2)"):
        Ba = localization_of(parse_ring(spec))
        rng = Random(f"c5:{spec}")
        for k in range(100):
            away = k % 2 == 1
            x = random_generator(Ba, 3, rng, length=2, size=2, avoid=3 if away else None)
            img = tulenbaev_T(x).word.phi()
            bad += localize_matrix(img, Ba) != kappa(x).phi()
            if away:
                block_bad += not img.block_trivial(3)
    dt = time.perf_counter() - t0
    ok = bad == 0 and block_bad == 0 and dt < 60
    report(5, ok, dt, f"200 generators, {bad} diagram failures, {block_bad} block failures")
    assert bad == 0 and block_bad == 0
    assert dt < 60


def test_criterion_6_direct_system(report):
    t0 = time.perf_counter()
    Zt = parse_ring("Z[t]")
    B = parse_ring("B(Z,2)")
    rng = Random("c6")
    polys = [RingValue(Zt, Zt.random(rng, 9, degree=4, terms=4)) for _ in range(200)]
    phis = [PhiIMap(B, i) for i in range(5)]
    bad = 0
    pairs = 0
    for i in range(5):
        for j in range(i, 5):
            psi = DirectSystemMap(Zt, 2, i, j)
            pairs += 1
            for p in polys:
                bad += phis[j](psi(p)) != phis[i](p)
    dt = time.perf_counter() - t0
    report(6, bad == 0, dt, f"200 polynomials x {pairs} pairs, {bad} failures")
    assert bad == 0


def test_criterion_7_dilation_demo(report):
    t0 = time.perf_counter()
    rep = demo_local_global("dilation-needed", 16, 0)
    sc = scenario("dilation-needed")
    coeffs = []
    for L in sc.word.letters:
        poly, k = L.a
        coeffs.append({e[0]: Fraction(c, 2 ** k) for e, c in poly})
    want = orc.minimal_dilation(coeffs)
    dt = time.perf_counter() - t0
    ok = rep["N_found"] == want and want <= 16 and rep["trace_replayed"] and rep["certified"]
    report(7, ok, dt, f"N_found={rep['N_found']} oracle={want}")
    assert rep["N_found"] == want
    assert rep["trace_replayed"] and rep["certified"]


def test_criterion_8_determinism(report, monkeypatch):
    t0 = time.perf_counter()
    cfg = dict(ring="Z/4", n=3, seed=11, samples=10)
    a = dumps(run_suite(SuiteConfig(**cfg)))
    b = dumps(run_suite(SuiteConfig(**cfg)))
    monkeypatch.setenv("STSP_WORKERS", "2")
    c = dumps(run_suite(SuiteConfig(**cfg)))
    d1 = dumps(demo_local_global("dilation-needed", 16, 3))
    d2 = dumps(demo_local_global("dilation-needed", 16, 3))
    dt = time.perf_counter() - t0
    ok = a == b == c and d1 == d2
    report(8, ok, dt, "suite (1 and 2 workers) and demo reports byte-identical")
    assert a == b == c
    assert d1 == d2
    assert json.loads(a)["passed"]
