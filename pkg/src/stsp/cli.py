"""Command-line harness.

    stsp verify --ring Z/5 --n 3 --seed 42 --samples 50 [--family S,K] [--out report.json]
    stsp demo --scenario dilation-needed [--out report.json]
    stsp decompose-suslin --ring Z --u 1,0,0,0,0,0 --v ... --w ...

Exit codes: 0 pass, 1 failure, 2 configuration / parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from random import Random

from . import kernels
from .localglobal import (
    DEFAULT_N_MAX,
    SCENARIOS,
    HypothesisViolated,
    certify_dilation,
    comaximal_glue_check,
    dilation_search,
    localize_word,
    random_conjugates,
    scenario,
)
from .relations import (
    CATALOGUE,
    FAMILIES,
    Context,
    check_relation,
    get_relation,
    relation_ids,
    sample_checks,
)
from .relative import GuardViolated
from .rings import RingError, RingValue, parse_ring
from .symplectic import IndexedVector, indices
from .zcalc import suslin_decompose

REPORT_VERSION = 1
EXIT_PASS, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

# Every relation the suite must cover, grouped as in the catalogue.
EXPECTED_IDS = (
    [f"S{k}" for k in range(6)]
    + [f"K{k}" for k in range(1, 8)]
    + [f"X{k}" for k in range(11)]
    + [f"Y{k}" for k in range(14)]
    + [f"KL{k}" for k in range(8)]
    + [f"T{k}" for k in range(7)]
    + [f"Z{k}" for k in range(8)]
    + ["comm", "perm", "forgotten", "orth", "x=z", "decomposition", "conj", "add",
       "symm", "double", "5+6", "onemore"]
)


class ConfigError(ValueError):
    pass


def check_coverage():
    """Fail loudly when the catalogue and the expected id list drift apart."""
    missing = [r for r in EXPECTED_IDS if r not in CATALOGUE]
    extra = [r for r in CATALOGUE if r not in EXPECTED_IDS]
    no_gen = [r for r, rel in CATALOGUE.items() if not callable(rel.sample)]
    if missing or extra or no_gen:
        raise AssertionError(f"catalogue coverage: missing={missing} extra={extra} "
                             f"without generator={no_gen}")


# -- suite -------------------------------------------------------------------

@dataclass
class SuiteConfig:
    ring: str
    n: int = 3
    seed: int = 0
    samples: int = 20
    families: list = field(default_factory=lambda: list(FAMILIES))
    n_max: int = DEFAULT_N_MAX
    out: str | None = None
    workers: int = 1

    def validate(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ConfigError("n must be an integer >= 3")
        if not isinstance(self.samples, int) or self.samples < 1:
            raise ConfigError("samples must be >= 1")
        if self.n_max < 0:
            raise ConfigError("N_max must be >= 0")
        bad = [f for f in self.families if f not in FAMILIES]
        if bad or not self.families:
            raise ConfigError(f"unknown families {bad}; choose from {','.join(FAMILIES)}")
        try:
            parse_ring(self.ring)
        except RingError as e:
            raise ConfigError(f"bad ring spec {self.ring!r}: {e}") from e
        return self

    def to_json(self):
        return {"ring": self.ring, "n": self.n, "seed": self.seed, "samples": self.samples,
                "families": list(self.families), "n_max": self.n_max}


def _shrink(rel_id: str, ctx: Context, bindings: dict) -> dict:
    """Move scalar parameters (and vector coordinates) towards 0, then 1,
    keeping the instance failing and admissible."""
    R = ctx.ring

    def still_fails(b):
        try:
            return not check_relation(rel_id, ctx, b).passed
        except (GuardViolated, ValueError, ArithmeticError):
            return False

    b = dict(bindings)
    for key in sorted(b):
        val = b[key]
        if isinstance(val, RingValue):
            for c in (R.zero(), R.one()):
                if val.payload == c:
                    break
                trial = dict(b, **{key: RingValue(R, c)})
                if still_fails(trial):
                    b = trial
                    break
        elif isinstance(val, IndexedVector):
            entries = list(val.entries)
            for k in range(len(entries)):
                if R.is_zero(entries[k]):
                    continue
                trial_e = entries[:k] + [R.zero()] + entries[k + 1:]
                trial = dict(b, **{key: IndexedVector(R, val.n, trial_e)})
                if still_fails(trial):
                    b, entries = trial, trial_e
    return b


def _run_relation(args):
    ring_spec, n, seed, samples, rel_id = args
    ctx = Context(parse_ring(ring_spec), n)
    failures = 0
    first = None
    try:
        for res in sample_checks(rel_id, ctx, seed, samples):
            if not res.passed:
                failures += 1
                if first is None:
                    small = _shrink(rel_id, ctx, res.bindings)
                    first = check_relation(rel_id, ctx, small, seed).to_json()
    except GuardViolated as e:
        return {"relation_id": rel_id, "family": get_relation(rel_id).family,
                "samples": 0, "failures": 1, "error": str(e)}
    rec = {"relation_id": rel_id, "family": get_relation(rel_id).family,
           "samples": samples, "failures": failures}
    if first is not None:
        rec["first_counterexample"] = first
    return rec


def _workers(cfg: SuiteConfig) -> int:
    env = os.environ.get("STSP_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigError(f"STSP_WORKERS must be an integer, got {env!r}") from None
    return max(1, cfg.workers)


def run_suite(cfg: SuiteConfig) -> dict:
    """Check every enabled relation on `samples` seeded instances.

    The report contains no timing, so the same configuration always gives the
    same bytes.
    """
    cfg.validate()
    check_coverage()
    ids = relation_ids(cfg.families)
    tasks = [(cfg.ring, cfg.n, cfg.seed, cfg.samples, rid) for rid in ids]
    workers = _workers(cfg)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_relation, tasks))
    else:
        records = [_run_relation(t) for t in tasks]
    total = sum(r["failures"] for r in records)
    return {
        "version": REPORT_VERSION,
        "kind": "suite",
        "config": cfg.to_json(),
        "environment": {"backend": kernels.BACKEND},
        "relations": records,
        "relation_count": len(records),
        "failures": total,
        "passed": total == 0,
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- demo ---------------------------------------------------------------------

def demo_local_global(name: str, n_max: int = DEFAULT_N_MAX, seed: int = 0,
                      conjugates: int = 4) -> dict:
    """Dilation search plus comaximal gluing on a curated word."""
    sc = scenario(name)
    g = sc.word
    report = {
        "version": REPORT_VERSION,
        "kind": "pipeline",
        "scenario": name,
        "word": g.format(),
        "ring": g.ring.spec,
        "a": sc.a,
        "N_found": None,
        "matrix_identity": localize_word(g, sc.a).phi().is_identity(),
        "trace_replayed": False,
        "hypothesis": "ok",
    }
    try:
        res = dilation_search(g, sc.a, n_max)
    except HypothesisViolated as e:
        report["hypothesis"] = f"violated: {e}"
        res = None
    base_word = g
    if res is not None:
        report["N_found"] = res.N
        if res.word is not None:
            report["dilated_word"] = res.word.format()
            base_word = res.word
            if sc.trace is not None:
                report["trace_replayed"] = certify_dilation(sc.trace, res.word)
    if sc.trace is not None:
        report["trace"] = sc.trace.to_json()
    # comaximal gluing needs a word over R[t]
    glue = {"a": sc.a, "b": sc.glue_b, "s": sc.glue_s, "r": sc.glue_r, "checks": []}
    if base_word.ring.spec.startswith("Loc("):
        glue["skipped"] = "no word over R[t]"
    else:
        rng = Random(f"{seed}:glue:{name}")
        words = [base_word] + list(random_conjugates(base_word, rng, conjugates))
        for w in words:
            glue["checks"].append(comaximal_glue_check(w, sc.a, sc.glue_b, sc.glue_s, sc.glue_r))
    glue["pass"] = all(c["pass"] for c in glue["checks"])
    glue["applicable"] = bool(glue["checks"]) and all(c["applicable"] for c in glue["checks"])
    report["glue"] = glue
    report["certified"] = (report["matrix_identity"] and report["N_found"] is not None
                           and report["trace_replayed"] and glue["pass"])
    return report


# -- Suslin decomposition ---------------------------------------------------------

def parse_vector(ring, text: str, n: int | None = None) -> IndexedVector:
    """Either a JSON object {"index": value} (needs n) or 2n comma-separated
    values in index order -n..-1, 1..n."""
    text = text.strip()
    if text.startswith("{"):
        if n is None:
            raise ConfigError("a JSON vector needs --n")
        return IndexedVector.from_json(ring, n, json.loads(text))
    parts = [p.strip() for p in text.split(",")]
    if len(parts) % 2 or len(parts) < 6:
        raise ConfigError("a vector needs 2n >= 6 comma-separated entries")
    if n is not None and len(parts) != 2 * n:
        raise ConfigError(f"expected {2 * n} entries, got {len(parts)}")
    return IndexedVector.from_values(ring, len(parts) // 2, [ring(p) for p in parts])


def decompose_report(ring_spec: str, u: str, v: str, w: str, n: int | None = None) -> dict:
    R = parse_ring(ring_spec)
    uu, vv, ww = (parse_vector(R, t, n) for t in (u, v, w))
    if not (uu.n == vv.n == ww.n):
        raise ConfigError("u, v, w must have the same length")
    dec = suslin_decompose(uu, vv, ww)
    symmetric = all(dec.part(i, j) == dec.part(j, i)
                    for i in indices(uu.n) for j in indices(uu.n) if i != j)
    orthogonal = all(R.is_zero(uu.form(p).payload) for p in dec.parts.values())
    total = dec.total() == vv.scale(dec.A)
    out = dec.to_json()
    out.update({"version": REPORT_VERSION, "kind": "suslin", "ring": R.spec,
                "symmetric": symmetric, "orthogonal": orthogonal, "sum_is_vA": total,
                "passed": symmetric and orthogonal and total})
    return out


# -- entry point ----------------------------------------------------------------------

def _emit(report: dict, out: str | None):
    text = dumps(report)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stsp", description="Symplectic Steinberg relation verifier")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check the relation catalogue on seeded samples")
    v.add_argument("--ring", required=True)
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=20)
    v.add_argument("--family", default=",".join(FAMILIES),
                   help="comma-separated families among " + ",".join(FAMILIES))
    v.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    v.add_argument("--out")

    d = sub.add_parser("demo", help="run a local-global pipeline scenario")
    d.add_argument("--scenario", required=True, choices=SCENARIOS)
    d.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--out")

    s = sub.add_parser("decompose-suslin", help="Suslin decomposition of v along u with A = <w,u>")
    s.add_argument("--ring", default="Z")
    s.add_argument("--n", type=int)
    s.add_argument("--u", required=True)
    s.add_argument("--v", required=True)
    s.add_argument("--w", required=True)
    s.add_argument("--out")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_PASS
    try:
        if args.command == "verify":
            fams = [f.strip() for f in args.family.split(",") if f.strip()]
            cfg = SuiteConfig(args.ring, args.n, args.seed, args.samples, fams, args.n_max, args.out)
            t0 = time.perf_counter()
            report = run_suite(cfg)
            _emit(report, args.out)
            print(f"{report['relation_count']} relations, {report['failures']} failures "
                  f"({time.perf_counter() - t0:.1f}s)", file=sys.stderr)
            return EXIT_PASS if report["passed"] else EXIT_FAIL
        if args.command == "demo":
            if args.n_max < 0:
                raise ConfigError("N_max must be >= 0")
            report = demo_local_global(args.scenario, args.n_max, args.seed)
            _emit(report, args.out)
            return EXIT_PASS if report["certified"] else EXIT_FAIL
        if args.command == "decompose-suslin":
            report = decompose_report(args.ring, args.u, args.v, args.w, args.n)
            _emit(report, args.out)
            return EXIT_PASS if report["passed"] else EXIT_FAIL
    except (ConfigError, RingError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
