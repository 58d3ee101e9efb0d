"""Compare the compiled and pure-Python census kernels.

    python benchmarks/bench_kernel.py [--orders 200] [--full]

Times ``failures_many`` on a block of move orders with each available
backend and extrapolates to the full 40,320-order census. ``--full`` also
times a complete census with the compiled kernel.
"""

import argparse
import time

from warnsdorff import kernel
from warnsdorff.permutations import N_ORDERS, unrank_indices


def bench(backend, orders, last, size, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = backend.failures_many(orders, last, size)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--orders", type=int, default=200, help="orders per timing block")
    parser.add_argument("--size", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--full", action="store_true", help="also time a full compiled census")
    args = parser.parse_args()

    step = max(1, N_ORDERS // args.orders)
    orders = [unrank_indices(r) for r in range(0, N_ORDERS, step)][: args.orders]
    tours = len(orders) * args.size * args.size
    results = {}
    timings = {}
    print(f"{len(orders)} orders x {args.size * args.size} starts = {tours} tours per block")
    print(f"{'backend':<8} {'block s':>9} {'us/tour':>9} {'full census s':>14}")
    for name in kernel.available():
        secs, res = bench(kernel.load(name), orders, False, args.size, args.repeat)
        timings[name] = secs
        results[name] = res
        print(f"{name:<8} {secs:>9.4f} {secs / tours * 1e6:>9.2f} {secs * N_ORDERS / len(orders):>14.1f}")
    if len(set(map(tuple, results.values()))) > 1:
        raise SystemExit("backends disagree")
    if "cython" in timings and "python" in timings:
        print(f"speedup: {timings['python'] / timings['cython']:.1f}x")
    if args.full and "cython" in timings:
        compiled = kernel.load("cython")
        t0 = time.perf_counter()
        total = sum(compiled.failures_many([unrank_indices(r) for r in range(N_ORDERS)], False, args.size))
        print(f"full compiled census: {time.perf_counter() - t0:.2f}s, {total} non-Hamiltonian tours")


if __name__ == "__main__":
    main()
