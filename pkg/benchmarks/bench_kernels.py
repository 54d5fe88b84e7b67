"""Benchmark the compiled hypergeometric kernel against the pure-Python
fallback.

Usage:
    python3 benchmarks/bench_kernels.py [--repeat 5] [--number 2000]
"""

import argparse
import random
import timeit

from themex._kernels import BACKEND, pure

try:
    from themex._kernels import _chg as compiled
except ImportError:  # pragma: no cover - compiled extension unavailable
    compiled = None

WORKLOADS = {
    "small (n=8, N=102)": [(k, 8, K, 102) for k in range(9) for K in (2, 7, 20, 50)],
    "medium (n=80, N=280)": [(k, 80, 83, 280) for k in range(0, 81, 5)],
    "large (n=500, N=5000)": [
        (k, 500, K, 5000)
        for k in range(0, 501, 50)
        for K in (100, 1000, 2500)
    ],
}


def random_workload(count: int, seed: int = 42):
    rng = random.Random(seed)
    params = []
    for _ in range(count):
        N = rng.randint(1, 2000)
        n = rng.randint(0, N)
        K = rng.randint(0, N)
        k = rng.randint(max(0, n + K - N), min(n, K))
        params.append((k, n, K, N))
    return params


def run(module, params):
    f = module.hypergeom_tail
    for k, n, K, N in params:
        f(k, n, K, N)


def bench(name, params, repeat, number):
    rows = []
    for label, module in (("pure", pure), ("compiled", compiled)):
        if module is None:
            rows.append((label, None))
            continue
        best = min(
            timeit.repeat(lambda: run(module, params), repeat=repeat, number=number)
        )
        per_call = best / (number * len(params)) * 1e6
        rows.append((label, per_call))
    print(f"\n{name}  ({len(params)} parameter tuples)")
    baseline = dict(rows).get("pure")
    for label, per_call in rows:
        if per_call is None:
            print(f"  {label:>9}: unavailable")
        else:
            speedup = f"  ({baseline / per_call:.1f}x vs pure)" if label != "pure" else ""
            print(f"  {label:>9}: {per_call:8.3f} us/call{speedup}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=200)
    args = parser.parse_args()

    print(f"active backend at import time: {BACKEND}")
    if compiled is None:
        print("compiled extension not built; benchmarking pure backend only")

    for name, params in WORKLOADS.items():
        bench(name, params, args.repeat, args.number)
    bench("random mixed", random_workload(200), args.repeat, args.number)

    # Agreement spot-check between the two implementations.
    if compiled is not None:
        worst = max(
            abs(pure.hypergeom_tail(*p) - compiled.hypergeom_tail(*p))
            for p in random_workload(500, seed=7)
        )
        print(f"\nmax |pure - compiled| over 500 random tuples: {worst:.3e}")


if __name__ == "__main__":
    main()
