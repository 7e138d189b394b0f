"""Time the compiled and pure-Python kernels on family graphs.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from eccenergy import _kernels_py
from eccenergy.graph_core import FamilySpec, build_family

try:
    from eccenergy import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

SIZES = [(3, 2), (6, 5), (12, 8), (20, 10), (30, 12)]


def best(func, repeat: int) -> float:
    number = max(1, int(0.05 / max(timeit.timeit(func, number=1), 1e-7)))
    return min(timeit.repeat(func, number=number, repeat=repeat)) / number


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = {"python": _kernels_py}
    if _kernels_c is not None:
        impls["cython"] = _kernels_c
    else:
        print("compiled extension not built; timing the fallback only")

    print(f"{'n':>3} {'l':>3} {'N':>5} " + " ".join(f"{k + ' ms':>12}" for k in impls) + f" {'speedup':>8}")
    for n, l in SIZES:  # noqa: E741
        adj = np.ascontiguousarray(build_family(FamilySpec(n, l)).adjacency, dtype=np.uint8)
        times = {}
        for name, impl in impls.items():

            def run(impl=impl):
                d = impl.apsp_bfs(adj)
                impl.ecc_mask(d, np.ascontiguousarray(d.max(axis=1), dtype=np.int32))

            times[name] = best(run, args.repeat)
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        cols = " ".join(f"{t * 1e3:12.3f}" for t in times.values())
        print(f"{n:>3} {l:>3} {adj.shape[0]:>5} {cols} {speed:8.1f}x")


if __name__ == "__main__":
    main()
