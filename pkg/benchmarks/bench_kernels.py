"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--size 400]

Workloads: reducing sparse rational vectors against an echelon basis (the
inner loop of every quotient and homology computation) and least rotations
of words (cyclic-word canonicalization).  Both implementations must return
identical results; the script exits nonzero if they do not.
"""

import argparse
from fractions import Fraction
import random
import sys
import timeit

from ncalc import _kernels_py

try:
    from ncalc import _kernels
except ImportError:
    _kernels = None


def make_pivots(rng, ncols, nrows, density):
    """Echelon rows with pivot entry 1 and random later entries, fully reduced."""
    cols = sorted(rng.sample(range(ncols), nrows))
    pivots = {}
    for c in reversed(cols):
        row = {c: Fraction(1)}
        for j in range(c + 1, ncols):
            if j not in pivots and rng.random() < density:
                row[j] = Fraction(rng.randint(-4, 4), rng.randint(1, 3)) or Fraction(1)
        pivots[c] = row
    return pivots


def make_vectors(rng, ncols, count, density):
    return [{j: Fraction(rng.randint(-5, 5)) or Fraction(1) for j in range(ncols) if rng.random() < density}
            for _ in range(count)]


def make_words(rng, count, length, letters):
    return [tuple(rng.randrange(letters) for _ in range(length)) for _ in range(count)]


def bench(label, fn, repeat):
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    print(f"  {label:8} {best * 1000:9.2f} ms")
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--size", type=int, default=400, help="number of columns in the echelon workload")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)

    if _kernels is None:
        print("compiled kernels not built; only the Python fallback is available")
    impls = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])

    n = args.size
    pivots = make_pivots(rng, n, n // 2, 0.05)
    vecs = make_vectors(rng, n, 200, 0.08)
    words = make_words(rng, 20000, 12, 3)

    ok = True
    print(f"reduce_vector: {len(vecs)} vectors, {n} columns, {len(pivots)} pivots")
    times = {}
    results = {}
    for name, mod in impls:
        results[name] = [mod.reduce_vector(v, pivots) for v in vecs]
        times[name] = bench(name, lambda mod=mod: [mod.reduce_vector(v, pivots) for v in vecs], args.repeat)
    if len(results) == 2:
        ok &= results["python"] == results["cython"]
        print(f"  speedup  {times['python'] / times['cython']:9.2f}x   agree: {results['python'] == results['cython']}")

    print(f"least_rotation: {len(words)} words of length 12")
    times = {}
    results = {}
    for name, mod in impls:
        results[name] = [mod.least_rotation(w) for w in words]
        times[name] = bench(name, lambda mod=mod: [mod.least_rotation(w) for w in words], args.repeat)
    if len(results) == 2:
        ok &= results["python"] == results["cython"]
        print(f"  speedup  {times['python'] / times['cython']:9.2f}x   agree: {results['python'] == results['cython']}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
