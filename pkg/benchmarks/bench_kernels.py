"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from ringinv import _pykernels, make_ring
from ringinv.finite import RingTables

try:
    from ringinv import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases():
    yield "mat_tables mat:3:z2", lambda k: (lambda: k.mat_tables(3, 2))
    yield "mat_tables mat:2:z5", lambda k: (lambda: k.mat_tables(2, 5))
    for spec in ("mat:2:z3", "zmod:360"):
        t = RingTables(make_ring(spec), backend=_pykernels)
        yield f"along_table {spec}", lambda k, t=t: (lambda: k.along_table(t.mul, t.rp, t.lp))
        yield f"group_table {spec}", lambda k, t=t: (lambda: k.group_table(t.mul))
        yield f"along_search {spec}", lambda k, t=t: (lambda: [k.along_search(t.mul, t.rp, t.lp, a, 1) for a in range(t.n)])


def same(x, y):
    if isinstance(x, tuple):
        return all(same(a, b) for a, b in zip(x, y))
    if isinstance(x, list):
        return len(x) == len(y) and all(same(a, b) for a, b in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the python backend is available")
    print(f"{'kernel':<28} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, make in cases():
        tp, outp = best_of(make(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<28} {tp:>10.4f}")
            continue
        tc, outc = best_of(make(_ckernels), args.repeat)
        assert same(outp, outc), f"backends disagree on {name}"
        print(f"{name:<28} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
