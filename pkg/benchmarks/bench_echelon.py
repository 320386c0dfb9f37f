"""Compare the compiled and pure-Python echelon kernels.

Two workloads: random sparse rows over GF(32003), and the full invariant
pipeline on bundled corpus rings with the backend switched underneath.

    python3 benchmarks/bench_echelon.py [--rows 1000] [--rings wang ext1]
"""

import argparse
import os
import random
import time

import cmlocal.linalg as linalg
from cmlocal.corpus import bundled_corpus
from cmlocal.report import analyze
from cmlocal.ringfile import read_ring_file

P = 32003


def random_rows(n, ncols, density, seed):
    rng = random.Random(seed)
    rows = []
    for _ in range(n):
        k = max(1, int(ncols * density))
        cols = rng.sample(range(ncols), k)
        rows.append({c: rng.randrange(1, P) for c in cols})
    return rows


def time_rows(backend, rows, ncols):
    t0 = time.perf_counter()
    ech = linalg.make_echelon(P, ncols, backend=backend)
    for r in rows:
        ech.add(r)
    return time.perf_counter() - t0, ech.rank


def time_ring(backend, name):
    pres = read_ring_file(os.path.join(bundled_corpus(), name + ".ring"))
    saved = linalg.BACKEND
    linalg.BACKEND = backend
    try:
        t0 = time.perf_counter()
        rep = analyze(pres)
        return time.perf_counter() - t0, rep.type
    finally:
        linalg.BACKEND = saved


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=1000)
    ap.add_argument("--cols", type=int, default=1000)
    ap.add_argument("--density", type=float, default=0.005)
    ap.add_argument("--rings", nargs="*", default=["wang", "ext1"])
    args = ap.parse_args()
    if linalg.CEchelon is None:
        print("compiled extension not available; only the Python kernel can run")
        return
    rows = random_rows(args.rows, args.cols, args.density, seed=1)
    print(f"{'workload':<28}{'compiled s':>12}{'python s':>12}{'speedup':>10}")
    tc, rc = time_rows("compiled", rows, args.cols)
    tp, rp = time_rows("python", rows, args.cols)
    assert rc == rp
    print(f"{f'random {args.rows}x{args.cols}':<28}{tc:>12.3f}{tp:>12.3f}{tp / tc:>10.1f}")
    for name in args.rings:
        tc, a = time_ring("compiled", name)
        tp, b = time_ring("python", name)
        assert a == b
        print(f"{'pipeline ' + name:<28}{tc:>12.3f}{tp:>12.3f}{tp / tc:>10.1f}")


if __name__ == "__main__":
    main()
