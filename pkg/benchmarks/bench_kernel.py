#!/usr/bin/env python3
"""Compare the compiled and pure-Python search kernels.

Runs the same equitable-colorability decisions through both backends,
checks they return identical (status, witness, nodes) triples, and
reports wall time and speedup.

Usage: python benchmarks/bench_kernel.py [--heavy]
"""

from __future__ import annotations

import argparse
import time

from eqcolor import _search
from eqcolor.closedform import ProductSpec
from eqcolor.graphs import build_multipartite, build_product


def cases(heavy: bool):
    yield "K_{5,5,4} all k", build_multipartite((5, 5, 4)), None
    yield "K_{6,6,5,5} k=7", build_multipartite((6, 6, 5, 5)), 7
    yield "K_{8,8,8} k=9", build_multipartite((8, 8, 8)), 9
    yield "K_{1,1,2} x K_4 all k", build_product(ProductSpec((1, 1, 2), 4)), None
    yield "K_{1,1,1,1} x K_6 k=7", build_product(ProductSpec((1, 1, 1, 1), 6)), 7
    if heavy:
        yield "K_{7,7,7} k=8 (infeasible)", build_multipartite((7, 7, 7)), 8


def run_case(g, k, backend):
    ks = range(1, g.n + 1) if k is None else [k]
    t0 = time.perf_counter()
    results = [_search.search_equitable(g, kk, backend=backend) for kk in ks]
    return time.perf_counter() - t0, results


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true",
                        help="include a multi-million-node instance")
    args = parser.parse_args()

    backends = _search.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; nothing to compare")
        return 1

    header = f"{'instance':28s} {'nodes':>12s} {'python':>10s} {'cython':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, g, k in cases(args.heavy):
        t_py, res_py = run_case(g, k, "python")
        t_cy, res_cy = run_case(g, k, "cython")
        if res_py != res_cy:
            print(f"{name:28s} BACKEND MISMATCH")
            return 1
        nodes = sum(r[2] for r in res_py)
        speedup = t_py / t_cy if t_cy > 0 else float("inf")
        print(f"{name:28s} {nodes:>12d} {t_py:>9.4f}s {t_cy:>9.4f}s {speedup:>7.1f}x")
    print("all instances agree across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
