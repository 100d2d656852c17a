"""Time lattice construction with each available kernel backend.

Run:  python3 benchmarks/bench_kernels.py [--repeat N] [EXPR ...]
"""
import argparse
import time

from kusub import _kernels
from kusub.io import build
from kusub.lattice import SubgroupLattice

DEFAULT = ["symmetric(4)", "alternating(5)", "symmetric(5)",
           "directProduct(symmetric(4), cyclic(5))",
           "directProduct(alternating(4), dihedral(6))"]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("exprs", nargs="*", default=DEFAULT)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = sorted(_kernels.BACKENDS)
    print(f"{'group':46} {'order':>6} {'subgroups':>9} " + " ".join(f"{b:>9}" for b in backends)
          + ("  speedup" if len(backends) > 1 else ""))
    for expr in args.exprs:
        G = build(expr)
        G.table  # enumerate once, outside the timing
        times, size = {}, None
        for b in backends:
            times[b] = best_of(lambda: SubgroupLattice(G, backend=b), args.repeat)
            size = len(SubgroupLattice(G, backend=b))
        row = f"{expr:46} {G.order:>6} {size:>9} " + " ".join(f"{times[b]:>8.3f}s" for b in backends)
        if len(backends) > 1:
            row += f"  {times['python'] / times['cython']:6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
