"""Benchmark the compiled kernels against the pure-numpy fallback.

Usage:
    python3 benchmarks/bench_kernels.py [--repeats 5]

Times each hot kernel on representative workloads with both backends and
prints a table of best-of-N wall times plus the speedup ratio.
"""

import argparse
import time

import numpy as np

from ecctensor import _kernels_py

try:
    from ecctensor import _kernels
except ImportError:
    _kernels = None


def best_time(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def workloads(rng):
    gram = rng.uniform(-1, 1, (400, 400))
    gram = np.ascontiguousarray((gram + gram.T) / 2)
    thetas = np.ascontiguousarray(rng.uniform(0, np.pi, (100_000, 6)))
    x = rng.standard_normal((200, 8))
    x = np.ascontiguousarray(x / np.linalg.norm(x, axis=1, keepdims=True))
    return [
        ("pairwise_pow_sum", "400x400 gram, 2k=6", (gram, 6)),
        ("circle_potentials", "100k configs, m=6, 2k=6", (thetas, 6)),
        ("potential_gradient", "m=200, n=8, k=3", (x, 3)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if _kernels is None:
        print("compiled extension not available; nothing to compare")
        return

    rng = np.random.default_rng(0)
    print(f"{'kernel':<20} {'workload':<28} {'numpy':>10} {'cython':>10} {'speedup':>8}")
    for name, desc, call_args in workloads(rng):
        t_py = best_time(getattr(_kernels_py, name), call_args, args.repeats)
        t_cy = best_time(getattr(_kernels, name), call_args, args.repeats)
        print(f"{name:<20} {desc:<28} {t_py * 1e3:>8.2f}ms {t_cy * 1e3:>8.2f}ms {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
