"""Compare the compiled and pure-Python bit kernels.

    python benchmarks/bench_kernels.py [--bits 4096 65536 1048576] [--repeat 5]
"""

import argparse
import random
import timeit

from hfskit import _pykernels

try:
    from hfskit import _kernels
except ImportError:
    _kernels = None


def bench(fn, arg, repeat):
    number = 1
    while timeit.timeit(lambda: fn(arg), number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(lambda: fn(arg), number=number, repeat=repeat)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bits", type=int, nargs="+", default=[256, 4096, 65536, 1 << 20])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = {"python": _pykernels}
    if _kernels is not None:
        backends["cython"] = _kernels
    else:
        print("compiled kernels not built; timing the pure-Python backend only")

    rng = random.Random(args.seed)
    header = f"{'kernel':<14}{'bits':>9}" + "".join(f"{name:>14}" for name in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for kernel in ("bit_positions", "spread_bits", "compact_bits"):
        for bits in args.bits:
            n = rng.getrandbits(bits) | 1 << (bits - 1)
            times = {name: bench(getattr(mod, kernel), n, args.repeat) for name, mod in backends.items()}
            row = f"{kernel:<14}{bits:>9}" + "".join(f"{t * 1e6:>12.1f}us" for t in times.values())
            if len(times) == 2:
                row += f"{times['python'] / times['cython']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
