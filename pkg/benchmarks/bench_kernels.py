"""Time the compiled kernels against the pure-Python reference.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--slice 20000]
"""
import argparse
import time
from itertools import combinations

from hypertrees import kernels
from hypertrees.generators import b_construction, tight_path


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def cases(slice_size):
    B = b_construction(tight_path(3, 3))
    bm = list(B.masks)
    uni5 = [sum(1 << v for v in c) for c in combinations(range(5), 3)]
    uni6 = [sum(1 << v for v in c) for c in combinations(range(6), 3)]
    opts = kernels.OPT_MINMAX | kernels.OPT_CYCLE_ALL
    return [
        ("semicycle search, doubled edge (n=11, m=29)", lambda m: m.semicycle(B.n, 3, bm, -1)),
        ("chain cover, doubled edge", lambda m: m.chain_cover(B.n, 3, bm, -1, True)),
        ("longest chain, doubled edge", lambda m: m.max_chain(B.n, 3, bm, -1)),
        ("scan all 1024 edge sets (5,3)", lambda m: m.scan_block(5, 3, uni5, 0, 1024, opts)),
        (f"scan {slice_size} edge sets (6,3)", lambda m: m.scan_block(6, 3, uni6, 0, slice_size, opts)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--slice", type=int, default=20000, help="(6,3) edge sets per scan")
    args = ap.parse_args()
    names = kernels.available_backends()
    if "cython" not in names:
        print("compiled kernels are not built; timing the Python backend only")
    print(f"{'case':48s} " + " ".join(f"{n:>10s}" for n in names) + ("    speedup" if len(names) > 1 else ""))
    for title, run in cases(args.slice):
        row, results = [], []
        for name in names:
            t, res = best_of(lambda: run(kernels.backend_module(name)), args.repeat)
            row.append(t)
            results.append(res)
        if len(set(map(repr, results))) != 1:
            raise SystemExit(f"backends disagree on: {title}")
        line = f"{title:48s} " + " ".join(f"{t:9.4f}s" for t in row)
        if len(row) > 1:
            line += f"  {row[0] / row[1]:8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
