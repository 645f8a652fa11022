"""Benchmark the mixture-reconstruction backends against each other.

Times the compiled extension and the numpy fallback on certificate-shaped
workloads (the flattened Werner decompositions) plus a synthetic random
mixture, and checks that the two backends agree entrywise.

Usage: python3 benchmarks/bench_mixture.py [--repeats 5] [--terms 4096]
"""

import argparse
import time
from fractions import Fraction

import numpy as np

from wernercert.criteria import separability_threshold
from wernercert.decompose import decompose_werner
from wernercert.kernels import available_backends, reconstruct_mixture


def _werner_case(d, n):
    cert = decompose_werner(d, n, separability_threshold(d, n))
    return f"werner d={d} n={n} ({cert.term_count} terms, dim {d**n})", cert.weights(), cert.factors_tensor()


def _random_case(terms, n, d, seed=0):
    rng = np.random.default_rng(seed)
    weights = rng.uniform(0.1, 1.0, size=terms)
    weights /= weights.sum()
    factors = rng.normal(size=(terms, n, d)) + 1j * rng.normal(size=(terms, n, d))
    factors /= np.linalg.norm(factors, axis=2, keepdims=True)
    return f"random ({terms} terms, dim {d**n})", weights, factors


def _time(backend, weights, factors, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        out = reconstruct_mixture(weights, factors, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5, help="timing repeats, best-of")
    parser.add_argument("--terms", type=int, default=4096, help="terms in the synthetic case")
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    if len(backends) < 2:
        print("compiled extension not built; timing the numpy fallback only")

    cases = [
        _werner_case(2, 3),
        _werner_case(2, 4),
        _werner_case(3, 3),
        _random_case(args.terms, 3, 3),
    ]

    header = f"{'case':<42}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}{'agree':>12}"
    print(header)
    print("-" * len(header))
    for name, weights, factors in cases:
        times = {}
        outs = {}
        for b in backends:
            times[b], outs[b] = _time(b, weights, factors, args.repeats)
        row = f"{name:<42}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) == 2:
            diff = float(np.abs(outs["compiled"] - outs["numpy"]).max())
            row += f"{times['numpy'] / times['compiled']:>9.1f}x{diff:>12.1e}"
        print(row)


if __name__ == "__main__":
    main()
