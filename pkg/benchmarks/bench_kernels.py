"""Compiled vs pure-Python graded reduction over F_p.

    python3 benchmarks/bench_kernels.py [--sizes 20 40 80] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from weighthom.kernels import BACKEND, backend_module


def random_graded(rng, nr, nc, p, density=0.3):
    row_w = rng.integers(0, 12, nr)
    col_w = rng.integers(0, 6, nc)
    a = rng.integers(1, p, (nr, nc)) * (rng.random((nr, nc)) < density)
    a[row_w[:, None] < col_w[None, :]] = 0
    return np.ascontiguousarray(a.T.astype(np.int64)), row_w.astype(np.int64), col_w.astype(np.int64)


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80, 160])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--prime", type=int, default=32003)
    args = ap.parse_args(argv)
    if BACKEND != "compiled":
        print("compiled kernels unavailable; build with: pip install -e . --no-build-isolation")
        return 1
    py, cc = backend_module("python"), backend_module("compiled")
    rng = np.random.default_rng(0)
    print(f"{'size':>6} {'python s':>10} {'compiled s':>11} {'speedup':>8}  kernel")
    for n in args.sizes:
        ct, rw, cw = random_graded(rng, n, n, args.prime)
        pos = np.arange(n, dtype=np.int64)
        tp, (pp, tt_p) = timed(lambda: py.reduce_graded_modp(ct.copy(), rw, cw, pos, args.prime),
                               args.repeat)
        tc, (pc, tt_c) = timed(lambda: cc.reduce_graded_modp(ct.copy(), rw, cw, pos, args.prime),
                               args.repeat)
        assert [tuple(x) for x in pp] == [tuple(map(int, x)) for x in pc]
        assert np.array_equal(tt_p, np.asarray(tt_c))
        print(f"{n:>6} {tp:>10.4f} {tc:>11.5f} {tp / tc:>7.1f}x  reduce_graded_modp")
        a = ct.T.copy()
        tp, rp = timed(lambda: py.rank_modp(a, args.prime), args.repeat)
        tc, rc = timed(lambda: cc.rank_modp(a, args.prime), args.repeat)
        assert rp == rc
        print(f"{n:>6} {tp:>10.4f} {tc:>11.5f} {tp / tc:>7.1f}x  rank_modp")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
