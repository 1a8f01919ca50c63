"""Compare the compiled digit/convergent kernels against the pure-Python ones.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py

The workload is fixed-seed so runs are comparable: rational expansions with
six-digit denominators, convergent-triple sweeps over random valid digit
pairs, and the gap-diagnostics series that dominates certified-interval
construction.  Both kernel implementations run the identical workload; the
table reports wall time per implementation and the speedup ratio.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from bcf import _kernels_py

try:
    from bcf import _speedups
except ImportError:  # pragma: no cover - compiled module is optional
    _speedups = None


def _random_pairs(rng, count, length):
    pairs = []
    for _ in range(count):
        a, b = [], []
        previous_equal = False
        for _ in range(length):
            a_i = rng.randint(1, 9)
            low = 1 if previous_equal else 0
            b_i = rng.randint(low, a_i)
            previous_equal = a_i == b_i
            a.append(a_i)
            b.append(b_i)
        pairs.append((a, b))
    return pairs


def _random_rationals(rng, count):
    values = []
    for _ in range(count):
        den = rng.randint(2, 10**6)
        alpha = Fraction(rng.randint(den + 1, 3 * den), den)
        beta = Fraction(rng.randint(den + 1, int(alpha * den)), den)
        values.append((alpha, beta))
    return values


def _bench(kernel, pairs, rationals):
    start = time.perf_counter()
    for alpha, beta in rationals:
        u, v, w = (
            alpha.numerator * beta.denominator,
            beta.numerator * alpha.denominator,
            alpha.denominator * beta.denominator,
        )
        kernel.rational_digits(u, v, w, -1)
    digits_time = time.perf_counter() - start

    start = time.perf_counter()
    for a, b in pairs:
        kernel.convergent_triples(a, b, len(a) - 1)
    triples_time = time.perf_counter() - start

    start = time.perf_counter()
    for a, b in pairs:
        kernel.gap_series(a, b, len(a) - 1)
    gaps_time = time.perf_counter() - start

    return digits_time, triples_time, gaps_time


def main():
    rng = random.Random(20260818)
    pairs = _random_pairs(rng, 1500, 80)
    rationals = _random_rationals(rng, 10000)

    rows = [("pure-python", _bench(_kernels_py, pairs, rationals))]
    if _speedups is not None:
        rows.append(("compiled", _bench(_speedups, pairs, rationals)))

    header = f"{'kernel':<14}{'rational digits':>16}{'triples':>12}{'gap series':>12}"
    print(header)
    print("-" * len(header))
    for name, (digits_time, triples_time, gaps_time) in rows:
        print(
            f"{name:<14}{digits_time:>14.3f}s{triples_time:>11.3f}s"
            f"{gaps_time:>11.3f}s"
        )
    if len(rows) == 2:
        (_, base), (_, fast) = rows
        print("-" * len(header))
        print(
            f"{'speedup':<14}"
            f"{base[0] / fast[0]:>15.2f}x{base[1] / fast[1]:>11.2f}x"
            f"{base[2] / fast[2]:>11.2f}x"
        )
    else:
        print("compiled kernels unavailable; built pure-python only")


if __name__ == "__main__":
    main()
