"""Benchmark the compiled Jacobi kernel against the pure-Python twin.

Times full eigendecompositions of random symmetric matrices at the sizes
the weight optimizer actually hits, plus one optimizer run end to end.

Usage: python3 benchmarks/bench_jacobi.py
"""

import time

import numpy as np

from chromabound import _jacobi_py
from chromabound.graphs import petersen
from chromabound.linalg import KERNEL, MAX_SWEEPS, OFF_NORM_RTOL

try:
    from chromabound import _jacobi

    KERNELS = [("cython", _jacobi), ("python", _jacobi_py)]
except ImportError:
    KERNELS = [("python", _jacobi_py)]


def random_symmetric(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    return (a + a.T) / 2.0


def bench_eigh(kernel, n, repeats):
    mats = [random_symmetric(n, seed) for seed in range(repeats)]
    start = time.perf_counter()
    for m in mats:
        a = np.array(m, order="C")
        v = np.zeros((1, 1))
        fro = np.linalg.norm(a)
        kernel.jacobi_cyclic(a, v, OFF_NORM_RTOL * fro, MAX_SWEEPS, False)
    return (time.perf_counter() - start) / repeats


def bench_optimizer():
    # optimize_weight goes through whichever kernel linalg selected at import
    from chromabound.bounds import optimize_weight

    g = petersen()
    start = time.perf_counter()
    _w, tau = optimize_weight(g, restarts=8, iterations=200, seed=0)
    return time.perf_counter() - start, tau


def main():
    print(f"active kernel for the package: {KERNEL}")
    print(f"{'n':>4} " + "".join(f"{name:>14}" for name, _ in KERNELS) + f"{'speedup':>10}")
    for n in (8, 16, 32, 64, 128):
        repeats = max(3, 2000 // (n * n // 16))
        times = [bench_eigh(k, n, repeats) for _name, k in KERNELS]
        cells = "".join(f"{t * 1e3:>12.3f}ms" for t in times)
        speedup = f"{times[-1] / times[0]:>9.1f}x" if len(times) == 2 else "       n/a"
        print(f"{n:>4} {cells}{speedup}")
    elapsed, tau = bench_optimizer()
    print(f"\noptimize_weight(petersen, 8 restarts x 200 evals): {elapsed:.2f}s, tau = {tau:.6f}")
    print("re-run with CHROMABOUND_PURE_PYTHON=1 to time the optimizer on the fallback kernel")


if __name__ == "__main__":
    main()
