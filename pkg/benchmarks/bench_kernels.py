"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints one line per kernel and size with the best time of each backend and
the speedup.  A compiled time of ``n/a`` means the case overflowed int64
and would be rerun by the Python fallback.
"""
import argparse
import random
import timeit

from qpart import _kernels
from qpart.qseries import Monomial, poch_inf


def cases(rng):
    for order in (100, 400, 1000):
        a = [rng.randint(-9, 9) for _ in range(order + 1)]
        b = [rng.randint(-9, 9) for _ in range(order + 1)]
        yield f"mul_trunc N={order}", "mul_trunc", (a, b, order)
    for order in (100, 300):
        # (q;q)_inf has coefficients in {-1, 0, 1}; its inverse is p(n)
        euler = list(poch_inf(Monomial(1, 1), 1, order).coeffs)
        yield f"invert_trunc N={order}", "invert_trunc", (euler, order)
    for n in (100, 300):
        yield f"run_dp_counts n={n}", "run_dp_counts", (n, 1, 2)
    yield "run_dp_refined m=12 n=60", "run_dp_refined", (12, 60, 1, 2)
    for n in (200, 400):
        plain = [v % 4 != 0 for v in range(n + 1)]
        yield f"overpartition_counts n={n}", "overpartition_counts", (n, plain, [True] * (n + 1))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = _kernels.backends()
    if "cython" not in backends:
        print("compiled kernels not available; only timing the Python fallback")
    rng = random.Random(0)
    print(f"{'kernel':32s} {'python (ms)':>12s} {'cython (ms)':>12s} {'speedup':>8s}")
    for label, name, call_args in cases(rng):
        times = {}
        for backend, module in backends.items():
            fn = getattr(module, name)
            if fn(*call_args) is None:
                times[backend] = None
                continue
            number = 3
            best = min(timeit.repeat(lambda: fn(*call_args), number=number,
                                     repeat=args.repeat)) / number
            times[backend] = best * 1000
        py = times.get("python")
        cy = times.get("cython")
        cy_text = "n/a" if cy is None else f"{cy:.3f}"
        speed = "" if not (py and cy) else f"{py / cy:.1f}x"
        print(f"{label:32s} {py:12.3f} {cy_text:>12s} {speed:>8s}")


if __name__ == "__main__":
    main()
