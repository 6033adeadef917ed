"""Compare the compiled and pure-Python section kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Each case times ``max_section`` on precomputed hyperplane bitsets, so code
construction is excluded. Both backends must return the same maximum.
"""

import argparse
import time

from schubert_codes import _kernels
from schubert_codes.codes import build_schubert_code, full_mask, hyperplane_bitsets, pivot_blocks
from schubert_codes.field import make_field
from schubert_codes.tuples import IndexTuple

CASES = [
    # (alpha, m, q, r)
    ((3, 5), 5, 2, 3),
    ((4, 5), 5, 2, 2),
    ((4, 5), 5, 2, 3),
    ((2, 4), 4, 3, 3),
    ((3, 4), 4, 3, 2),
    ((4, 6), 6, 2, 2),
]


def bench(impl, z, full, blocks, repeat):
    best_t, value = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = impl.max_section(z, full, blocks)
        best_t = min(best_t, time.perf_counter() - t0)
    return value, best_t


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = _kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; timing the Python kernel only")
    names = sorted(backends)
    print(f"{'case':<24}{'n':>6}{'k':>4}{'r':>3}" + "".join(f"{n + ' (s)':>14}" for n in names) + f"{'speedup':>10}")
    for alpha, m, q, r in CASES:
        gen = build_schubert_code(IndexTuple(alpha, m), make_field(q))
        z = hyperplane_bitsets(gen)
        full = full_mask(gen.n)
        blocks = pivot_blocks(q, gen.k, r)
        results = {n: bench(backends[n], z, full, blocks, args.repeat) for n in names}
        values = {v for v, _ in results.values()}
        assert len(values) == 1, results
        times = [results[n][1] for n in names]
        speedup = f"{results['python'][1] / results['cython'][1]:.1f}x" if "cython" in results else "-"
        label = f"{IndexTuple(alpha, m)} q={q}"
        print(f"{label:<24}{gen.n:>6}{gen.k:>4}{r:>3}" + "".join(f"{t:>14.4f}" for t in times) + f"{speedup:>10}")


if __name__ == "__main__":
    main()
