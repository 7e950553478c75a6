"""Compare the pure-Python and compiled kernel backends on the hot paths.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

from topolab._kernels import pure

try:
    from topolab._kernels import _speedups as compiled
except ImportError:
    compiled = None


def spaces_upto(max_n):
    out = []
    for n in range(max_n + 1):
        for fm in pure.enumerate_masks(n):
            out.append((n, tuple(a for a in range(1 << n) if fm >> a & 1)))
    return out


def bench(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def workload_class_masks(mod, spaces4):
    def run():
        for n, opens in spaces4:
            mod.class_masks(n, opens)
    return run


def workload_map_masks(mod, pairs):
    def run():
        for nx, fx, ny, fy in pairs:
            mod.map_masks(nx, *fx, ny, *fy)
    return run


def workload_enumerate(mod):
    def run():
        mod.enumerate_masks(5)
    return run


def workload_composition(mod, jobs):
    def run():
        for nx, ny, nz, f_idx, g_idx, target in jobs:
            mod.composition_failures(nx, ny, nz, f_idx, g_idx, target, 0)
    return run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if compiled is None:
        print("compiled backend not available; build the extension first")
        return 1

    spaces4 = [s for s in spaces_upto(4) if s[0] == 4]
    spaces3 = [s for s in spaces_upto(3) if s[0] == 3]

    def sides(n, opens):
        cm = pure.class_masks(n, opens)
        return cm[0], cm[1], cm[13], cm[14]

    pairs = [(nx, sides(nx, ox), ny, sides(ny, oy))
             for nx, ox in spaces3 for ny, oy in spaces3]

    # composition workload: all-map sweeps over a band of 3-point triples
    all_ranks3 = list(range(27))
    target = (1 << 27) - 1
    comp_jobs = [(3, 3, 3, all_ranks3, all_ranks3, target)
                 for _ in range(len(spaces3))]

    rows = [
        ("class_masks, 355 spaces n=4",
         workload_class_masks(pure, spaces4),
         workload_class_masks(compiled, spaces4)),
        ("map_masks, 841 pairs n=3",
         workload_map_masks(pure, pairs),
         workload_map_masks(compiled, pairs)),
        ("enumerate_masks(5), 6942 topologies",
         workload_enumerate(pure),
         workload_enumerate(compiled)),
        ("composition_failures, 29 x 27^2 composites",
         workload_composition(pure, comp_jobs),
         workload_composition(compiled, comp_jobs)),
    ]

    print(f"{'workload':<44} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, fp, fc in rows:
        tp = bench(fp, args.repeat)
        tc = bench(fc, args.repeat)
        print(f"{name:<44} {tp * 1e3:>8.1f}ms {tc * 1e3:>8.1f}ms "
              f"{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
