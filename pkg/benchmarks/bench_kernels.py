"""Benchmark the normal-form kernels: pure Python versus compiled.

Runs the same seeded workload through every available implementation and
prints a timing table with the speedup relative to the pure kernel.

Usage: python3 benchmarks/bench_kernels.py [--words N] [--length L] [--strands D]
"""

import argparse
import random
import time

from braidfact._kernel import implementations


def workload(seed, words, length, strands):
    rng = random.Random(seed)
    out = []
    for _ in range(words):
        d = rng.randint(2, strands)
        n = rng.randint(length // 2, length)
        out.append((d, tuple(rng.choice([1, -1]) * rng.randint(1, d - 1) for _ in range(n))))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=400)
    ap.add_argument("--length", type=int, default=600)
    ap.add_argument("--strands", type=int, default=8)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    cases = workload(args.seed, args.words, args.length, args.strands)
    impls = implementations()
    print(f"{args.words} words, length <= {args.length}, strands <= {args.strands}")

    results = []
    reference = None
    for impl in impls:
        best = float("inf")
        answers = []
        for _ in range(args.repeats):
            answers = []
            t0 = time.perf_counter()
            for d, letters in cases:
                answers.append(impl.normal_form(d, letters))
            best = min(best, time.perf_counter() - t0)
        if reference is None:
            reference = answers
        elif answers != reference:
            raise SystemExit(f"{impl.IMPL_NAME}: results differ from reference")
        results.append((impl.IMPL_NAME, best))

    base = results[0][1]
    print(f"{'kernel':<12} {'best of ' + str(args.repeats):>12} {'speedup':>9}")
    for name, secs in results:
        print(f"{name:<12} {secs:>11.4f}s {base / secs:>8.1f}x")


if __name__ == "__main__":
    main()
