"""Timing comparison of the numba kernels against their pure-numpy twins.

Run:  python benchmarks/bench_kernels.py
The same sizes the pipeline hits in practice: a 1205 x 1244 similarity
matrix for top-k selection, and ~1.5M pooled (score, label) pairs for AUC.
"""

import os
import time

import numpy as np


def timeit(fn, *args, repeats=5):
    fn(*args)  # warm-up (includes jit compile on the numba path)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def run(mode: str):
    os.environ["POIALIGN_PURE_NUMPY"] = "1" if mode == "numpy" else "0"
    import importlib

    from poialign import kernels

    importlib.reload(kernels)
    rng = np.random.default_rng(0)
    scores = rng.random((1205, 1244))
    tiebreak = rng.permutation(1244).astype(np.int64)
    flat = np.round(rng.random(1205 * 1244), 4)
    labels = rng.random(1205 * 1244) < 0.01
    labels[0], labels[1] = True, False
    topk = timeit(kernels.topk_rows, scores, tiebreak, 50)
    auc = timeit(kernels.rank_sum_auc, flat, labels)
    return topk, auc, kernels.using_numba()


def main():
    rows = []
    for mode in ("numpy", "numba"):
        topk, auc, active = run(mode)
        label = mode if (mode == "numpy" or active) else "numba (unavailable, numpy fallback)"
        rows.append((label, topk, auc))
    print(f"{'path':<40} {'topk 1205x1244 k=50':>22} {'auc 1.5M pairs':>18}")
    for label, topk, auc in rows:
        print(f"{label:<40} {topk*1e3:>19.1f} ms {auc*1e3:>15.1f} ms")
    if len(rows) == 2 and rows[1][0] == "numba":
        print(
            f"speedup: topk x{rows[0][1]/rows[1][1]:.1f}, auc x{rows[0][2]/rows[1][2]:.1f}"
        )


if __name__ == "__main__":
    main()
