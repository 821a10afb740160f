"""Benchmark the compiled kernels against the pure-Python fallback.

Two levels: the scalar kernels themselves (imported side by side), and an
end-to-end monomial-multiplication workload run in subprocesses so the
import-time backend selection picks each implementation once.

Run:  python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from rightlcm import _kernels_py  # noqa: E402

try:
    from rightlcm import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def timeit(fn, reps):
    t0 = time.perf_counter()
    fn(reps)
    return time.perf_counter() - t0


def bench_scalar(mod, reps, rng):
    pairs = [(rng.randrange(-(10**6), 10**6), rng.randrange(1, 10**6)) for _ in range(512)]
    gauss = [
        (rng.randrange(-500, 500), rng.randrange(-500, 500),
         rng.randrange(-500, 500), rng.randrange(1, 500))
        for _ in range(512)
    ]
    vecs = [
        (tuple(rng.randrange(0, 12) for _ in range(4)),
         tuple(rng.randrange(0, 12) for _ in range(4)))
        for _ in range(512)
    ]

    def run_xgcd(n):
        for i in range(n):
            a, b = pairs[i % 512]
            mod.xgcd(a, b)

    def run_ggcd(n):
        for i in range(n):
            mod.gauss_gcd(*gauss[i % 512])

    def run_gxgcd(n):
        for i in range(n):
            mod.gauss_xgcd(*gauss[i % 512])

    def run_vec(n):
        for i in range(n):
            t, u = vecs[i % 512]
            mod.vec_max(t, u)
            mod.vec_add(t, u)
            mod.vec_sub_if_leq(t, u)

    return {
        "xgcd": timeit(run_xgcd, reps),
        "gauss_gcd": timeit(run_ggcd, reps),
        "gauss_xgcd": timeit(run_gxgcd, reps),
        "vec_ops": timeit(run_vec, reps),
    }


END_TO_END = r"""
import random, time
from rightlcm import kernels
from rightlcm.systems import z_times, gauss_system
from rightlcm.monomials import monomial, mult

rng = random.Random(7)
out = []
for system in (z_times(2, 3), gauss_system()):
    ball = system.semigroup.enumerate_ball(3)
    gs = system.group.sample(12)
    pool = [
        monomial(system, rng.choice(gs), rng.choice(ball), rng.choice(ball), rng.choice(gs))
        for _ in range(64)
    ]
    t0 = time.perf_counter()
    for _ in range(REPS):
        mult(rng.choice(pool), rng.choice(pool))
    out.append((system.name, time.perf_counter() - t0))
print(kernels.IMPLEMENTATION, [(n, round(t, 4)) for n, t in out])
"""


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    reps = 20_000 if args.quick else 200_000

    rng = random.Random(0)
    py = bench_scalar(_kernels_py, reps, rng)
    print(f"scalar kernels, {reps} reps each:")
    if _kernels_c is None:
        print("  compiled extension not built; pure-Python timings only")
        for k, v in py.items():
            print(f"  {k:12s} python {v:8.4f}s")
    else:
        c = bench_scalar(_kernels_c, reps, rng)
        for k in py:
            speedup = py[k] / c[k] if c[k] else float("inf")
            print(f"  {k:12s} python {py[k]:8.4f}s   c {c[k]:8.4f}s   x{speedup:.2f}")

    e2e_reps = 2_000 if args.quick else 20_000
    code = END_TO_END.replace("REPS", str(e2e_reps))
    print(f"\nend-to-end monomial products, {e2e_reps} reps:")
    for env_extra in ({}, {"RIGHTLCM_PURE": "1"}):
        env = dict(os.environ, **env_extra)
        res = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        print(" ", res.stdout.strip() or res.stderr.strip())


if __name__ == "__main__":
    main()
