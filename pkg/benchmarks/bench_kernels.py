"""Time the numba and numpy kernels on the pole-order workload.

Runs the dense modular product for a pair of diagrams (S_8 for the default
pair) with each backend and checks that both give identical residues.

    python benchmarks/bench_kernels.py --lambda 2,2 --mu 2,2 --repeat 3
"""

import argparse
import time

import numpy as np

from capelli.fusion import _PRIMES, _pair_offsets
from capelli.kernels import _numba, _numpy
from capelli.kernels.tables import perm_index
from capelli.young import as_diagram


def workload(lam, mu, degrees):
    lam, mu = as_diagram(lam), as_diagram(mu)
    K = lam.n + mu.n
    idx = perm_index(K)
    trip = _pair_offsets(lam, mu)
    tables = []
    for i, jn, a in trip:
        s = list(range(K))
        s[i - 1], s[jn - 1] = jn - 1, i - 1
        tables.append((a, idx.right_table(s)))
    rng = np.random.default_rng(0)
    p = _PRIMES[0]
    A0 = rng.integers(0, p, size=(idx.size, degrees), dtype=np.int64)
    conv = np.stack([idx.right_table(rng.permutation(K)) for _ in range(8)])
    w = rng.integers(0, p, size=8, dtype=np.int64)
    return A0, tables, conv, w, np.int64(p)


def run(impl, A0, tables, conv, w, p):
    A = A0
    for a, table in tables:
        A = impl.linear_factor_step(A, np.int64(a % p), table, p)
    return impl.convolve_right(A, w, conv, p)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lambda", dest="lam", default="2,2")
    ap.add_argument("--mu", default="2,2")
    ap.add_argument("--degrees", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    data = workload(args.lam, args.mu, args.degrees)
    run(_numba, *data)  # compile outside the timing
    results = {}
    for name, impl in (("numpy", _numpy), ("numba", _numba)):
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            out = run(impl, *data)
            best = min(best, time.perf_counter() - t0)
        results[name] = (best, out)
    same = np.array_equal(results["numpy"][1], results["numba"][1])
    size = data[0].shape[0]
    print(f"lambda=({args.lam}) mu=({args.mu}): {size} permutations x {args.degrees} degrees")
    for name, (best, _) in results.items():
        print(f"  {name:6s} {best * 1000:9.1f} ms")
    print(f"  speedup {results['numpy'][0] / results['numba'][0]:.2f}x, outputs identical: {same}")
    if not same:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
