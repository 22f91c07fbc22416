"""Compare the compiled elimination kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--sizes 20 40 80] [--repeat 3]
"""

import argparse
import random
import timeit

from jumploci import _pykernels

try:
    from jumploci import _kernels
except ImportError:
    _kernels = None


def random_matrix(n, rng, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def bench(fn, M, repeat, *extra):
    return min(timeit.repeat(lambda: fn(M, *extra), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; only the Python kernels are timed")
    rng = random.Random(args.seed)
    print(f"{'kernel':<12}{'n':>5}{'python (s)':>14}{'compiled (s)':>14}{'speedup':>10}")
    for n in args.sizes:
        M = random_matrix(n, rng)
        for name, extra in (("rank_mod_p", (32003,)), ("bareiss", ())):
            py_fn = _pykernels.rank_mod_p if extra else _pykernels.bareiss_rank
            t_py = bench(py_fn, M, args.repeat, *extra)
            if _kernels is None:
                print(f"{name:<12}{n:>5}{t_py:>14.4f}{'-':>14}{'-':>10}")
                continue
            c_fn = _kernels.rank_mod_p if extra else _kernels.bareiss_rank
            assert c_fn(M, *extra) == py_fn(M, *extra)
            t_c = bench(c_fn, M, args.repeat, *extra)
            print(f"{name:<12}{n:>5}{t_py:>14.4f}{t_c:>14.4f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
