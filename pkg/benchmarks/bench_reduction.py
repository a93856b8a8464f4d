"""Benchmark: compiled handle-reduction kernel vs the pure-Python one.

Runs the same workloads through both kernels and reports timings:

* ``sign``: order-sign queries on random words (the certifier hot path);
* ``reduce``: full reduction to a handle-free word;
* ``floor``: the query mix a Dehornoy-floor computation issues — sign
  tests of ``b^-1 delta^(2k+2)`` and ``delta^(2k+2) b`` for a ladder of
  candidate floors k.

Usage: python benchmarks/bench_reduction.py [--letters N] [--words N]
"""

from __future__ import annotations

import argparse
import random
import time

from braidcert import _reduction_py
from braidcert.braid import delta

try:
    from braidcert import _reduction_c
except ImportError:
    _reduction_c = None

BUDGET = 10**7


def random_word(rng: random.Random, strands: int, length: int) -> tuple[int, ...]:
    return tuple(
        rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
    )


def floor_queries(word: tuple[int, ...], strands: int, k_max: int):
    """The comparison words a floor scan over k = 0..k_max would test."""
    half = delta(strands).letters
    inv = tuple(-x for x in reversed(word))
    for k in range(k_max + 1):
        pad = half * (2 * k + 2)
        yield inv + pad
        yield pad + word


def bench_kernel(kernel, words, strands: int, k_max: int) -> dict[str, float]:
    t0 = time.perf_counter()
    for w in words:
        kernel.sign_of(w, strands, BUDGET)
    t_sign = time.perf_counter() - t0

    t0 = time.perf_counter()
    for w in words:
        kernel.reduce_word(w, strands, BUDGET)
    t_reduce = time.perf_counter() - t0

    t0 = time.perf_counter()
    for w in words[: max(1, len(words) // 10)]:
        for query in floor_queries(w, strands, k_max):
            kernel.sign_of(query, strands, BUDGET)
    t_floor = time.perf_counter() - t0
    return {"sign": t_sign, "reduce": t_reduce, "floor": t_floor}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--letters", type=int, default=400,
                        help="letters per random word (default 400)")
    parser.add_argument("--words", type=int, default=200,
                        help="number of random words (default 200)")
    parser.add_argument("--strands", type=int, default=4)
    parser.add_argument("--kmax", type=int, default=4,
                        help="floor candidates per word (default 4)")
    parser.add_argument("--seed", type=int, default=20260819)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    words = [random_word(rng, args.strands, args.letters) for _ in range(args.words)]

    kernels = [("python", _reduction_py)]
    if _reduction_c is not None:
        kernels.append(("c", _reduction_c))
    else:
        print("compiled kernel not available; timing pure Python only")

    results = {}
    for name, kernel in kernels:
        stats = bench_kernel(kernel, words, args.strands, args.kmax)
        results[name] = stats
        print(f"{name:>7}: sign {stats['sign']:8.3f}s   reduce"
              f" {stats['reduce']:8.3f}s   floor {stats['floor']:8.3f}s")

    if "c" in results:
        for phase in ("sign", "reduce", "floor"):
            py, cc = results["python"][phase], results["c"][phase]
            if cc > 0:
                print(f"speedup {phase}: {py / cc:.1f}x")


if __name__ == "__main__":
    main()
