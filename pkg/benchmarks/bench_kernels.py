"""Compare the compiled kernels with their pure-Python twins.

Both modules are called directly on the same random structures, so the
numbers measure the kernels rather than the wrappers around them. Results
are checked for equality before timing.

    python3 benchmarks/bench_kernels.py [--n 4] [--pairs 2000] [--repeat 3]
"""

import argparse
import random
import timeit

from ptopo._fast import NBHD, _pyfast
from ptopo.randgen import random_pair

try:
    from ptopo._fast import _cfast
except ImportError:  # extension not built
    _cfast = None


def workloads(pairs):
    def p_topological(mod):
        for q, p in pairs:
            mod.is_p_topological(q.tables, q.maxes, p.unions, q.n)

    def p_regular(mod):
        for q, p in pairs:
            mod.is_p_regular(q.tables, q.maxes, p.unions, q.n)

    def interior_witness(mod):
        for q, p in pairs:
            mod.interior_witness(q.tables, p.unions, q.n)

    def lower_topological(mod):
        for q, p in pairs:
            mod.lower_tables(NBHD, q.maxes, p.unions, q.n)

    def nbhd_fixed_point(mod):
        for q, _ in pairs:
            for m in range(1, 1 << q.n):
                mod.iterate_mask(NBHD, q.unions, m, -1)

    return {f.__name__: f for f in (p_topological, p_regular, interior_witness, lower_topological, nbhd_fixed_point)}


def agree(pairs):
    for q, p in pairs:
        for name in ("is_p_topological", "is_p_regular"):
            a = getattr(_pyfast, name)(q.tables, q.maxes, p.unions, q.n)
            b = getattr(_cfast, name)(q.tables, q.maxes, p.unions, q.n)
            assert a == b, (name, q, p)
        assert _pyfast.lower_tables(NBHD, q.maxes, p.unions, q.n) == _cfast.lower_tables(NBHD, q.maxes, p.unions, q.n)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--pairs", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    pairs = [random_pair(rng, args.n) for _ in range(args.pairs)]
    if _cfast is None:
        print("compiled extension not built; timing the Python kernels only")
    else:
        agree(pairs)

    print(f"n={args.n}, {args.pairs} pairs, best of {args.repeat}")
    print(f"{'kernel':<20} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, work in workloads(pairs).items():
        py = min(timeit.repeat(lambda: work(_pyfast), number=1, repeat=args.repeat))
        if _cfast is None:
            print(f"{name:<20} {py:>10.4f} {'-':>10} {'-':>8}")
            continue
        cy = min(timeit.repeat(lambda: work(_cfast), number=1, repeat=args.repeat))
        print(f"{name:<20} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
