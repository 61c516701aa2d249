#!/usr/bin/env python3
"""Compare the compiled enumeration kernel against the pure-python twin.

Runs the full matroid walk (counts plus canonical-form rejection) at a few
ground-set sizes on both kernels, checks the outputs agree, and reports
the speedup.

    python bench/benchmark.py [--max-n 6]
"""

import argparse
import time

from smallmatroids import kernels


def run(kernel, n):
    start = time.perf_counter()
    res = kernels.available()[kernel].explore(n, canonicity=True)
    return time.perf_counter() - start, res


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()
    if kernels.available()["cy"] is None:
        raise SystemExit("compiled kernel is not built; run pip install -e .")
    print(f"{'n':>3} {'matroids':>10} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for n in range(3, args.max_n + 1):
        t_py, res_py = run("py", n)
        t_cy, res_cy = run("cy", n)
        assert res_py == res_cy, f"kernel outputs differ at n={n}"
        print(f"{n:>3} {res_cy['nodes']:>10} {t_py:>11.4f}s {t_cy:>11.4f}s "
              f"{t_py / t_cy:>8.1f}x")
    print("outputs identical on both kernels")


if __name__ == "__main__":
    main()
