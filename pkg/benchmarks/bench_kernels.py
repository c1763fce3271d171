"""Benchmark the hot kernels: pure-Python backend vs compiled extension.

Times the two operations that dominate a census run, on identical inputs:

* exact-cover enumeration of every pairing scheme of the dimension;
* identity classification of every scheme's structure tensor.

Usage: python benchmarks/bench_kernels.py [-n 7] [--repeat 3]
"""

import argparse
import time

from oddcross import build_tensor, enumerate_schemes, feasible_dimension
from oddcross import kernels
from oddcross.schemes import _axis_choice_masks


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", type=int, default=7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    dim = feasible_dimension(args.n)
    masks = _axis_choice_masks(dim.n)
    tables = [
        build_tensor(s).flat_arrays() for s in enumerate_schemes(dim)
    ]
    print(f"n={dim.n}: {len(tables)} schemes, {dim.pair_count} pairs")
    print(f"available backends: {', '.join(kernels.available_backends())}")
    print()

    results = {}
    header = f"{'backend':<14} {'enumerate':>12} {'classify':>12}"
    print(header)
    print("-" * len(header))
    for name in kernels.available_backends():
        backend = kernels.get_backend(name)
        t_enum, branches = best_of(
            args.repeat, lambda: backend.enumerate_covers(masks, (), None, 2**62)
        )
        t_cls, counts = best_of(
            args.repeat,
            lambda: [
                backend.classify_product_table(dim.n, target, sign)
                for target, sign in tables
            ],
        )
        results[name] = (t_enum, t_cls, branches, counts)
        print(f"{name:<14} {t_enum * 1e3:>10.2f}ms {t_cls * 1e3:>10.2f}ms")

    names = list(results)
    if len(names) == 2:
        (e1, c1, b1, k1), (e2, c2, b2, k2) = results[names[0]], results[names[1]]
        if b1 != b2 or k1 != k2:
            print("\nBACKEND MISMATCH: results differ between backends")
            return 1
        print(f"\nspeedup ({names[0]} / {names[1]}): "
              f"enumerate x{e1 / e2:.1f}, classify x{c1 / c2:.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
