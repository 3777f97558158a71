"""Compare the compiled and pure-Python column-operation kernels.

    python benchmarks/bench_phi.py [--words 200] [--length 40] [--n 4]

Projects random Steinberg words over Z and Z/5 with both backends, checks
the results agree and prints the timings.
"""
import argparse
import time
from random import Random

from stsp import kernels
from stsp.rings import parse_ring
from stsp.symplectic import identity_flat
from stsp.relations import sampling as smp


def bench(ring, n, words, impl):
    d = 2 * n
    out = []
    t0 = time.perf_counter()
    for w in words:
        flat = identity_flat(ring, d)
        ops = w.ops()
        if hasattr(ring, "m"):
            out.append(kernels.col_ops_mod(flat, d, ops, ring.m, impl))
        else:
            out.append(kernels.col_ops_int(flat, d, ops, impl))
    return time.perf_counter() - t0, out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--words", type=int, default=200)
    p.add_argument("--length", type=int, default=40)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    py = kernels.load_backend("python")
    try:
        cy = kernels.load_backend("cython")
    except ImportError as e:
        print(f"compiled kernels unavailable: {e}")
        cy = None
    for spec in ("Z", "Z/5"):
        R = parse_ring(spec)
        rng = Random(args.seed)
        words = [smp.word(R, args.n, rng, args.length, size=3) for _ in range(args.words)]
        t_py, r_py = bench(R, args.n, words, py)
        line = f"{spec:4s} n={args.n} words={args.words} len={args.length}  python {t_py:.3f}s"
        if cy is not None:
            t_cy, r_cy = bench(R, args.n, words, cy)
            assert r_py == r_cy, "backends disagree"
            line += f"  cython {t_cy:.3f}s  speedup {t_py / t_cy:.1f}x"
        print(line)


if __name__ == "__main__":
    main()
