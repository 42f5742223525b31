#!/usr/bin/env python3
"""Benchmark the clique-enumeration kernels against each other.

Runs the compiled and pure-Python backends on the same seeded graphs,
checks they return identical clique lists, and prints per-size timings
with the speedup. Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from cliquehit import SplitMix64, gen_random
from cliquehit._kernel import available_backends

CASES = [
    # (n, edge probability)
    (20, 0.5),
    (30, 0.5),
    (40, 0.5),
    (50, 0.5),
    (60, 0.4),
    (80, 0.3),
]


def bench(impl, graphs, budget, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        results = [
            impl.enumerate_max_cliques(g.n, list(g.masks), budget) for g in graphs
        ]
        best = min(best, time.perf_counter() - t0)
    return best, results


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=12648430)
    ap.add_argument("--budget", type=int, default=10**8)
    args = ap.parse_args()

    backends = available_backends()
    print("backends:", ", ".join(sorted(backends)))
    if "cython" not in backends:
        print("compiled kernel not built; timing the pure-Python backend only")

    rng = SplitMix64(args.seed)
    header = f"{'case':>12} {'cliques':>8}" + "".join(
        f" {name + ' (s)':>12}" for name in sorted(backends)
    )
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for n, p in CASES:
        graphs = [gen_random(n, p, rng.next_u64()) for _ in range(5)]
        times = {}
        outputs = {}
        for name in sorted(backends):
            times[name], outputs[name] = bench(
                backends[name], graphs, args.budget, args.repeat
            )
        if len(outputs) == 2 and outputs["python"] != outputs["cython"]:
            print(f"BACKEND MISMATCH at n={n} p={p}")
            return 1
        n_cliques = sum(len(res[0]) for res in next(iter(outputs.values())))
        row = f"{f'n={n} p={p}':>12} {n_cliques:>8}" + "".join(
            f" {times[name]:>12.4f}" for name in sorted(backends)
        )
        if len(backends) == 2:
            row += f" {times['python'] / times['cython']:>8.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
