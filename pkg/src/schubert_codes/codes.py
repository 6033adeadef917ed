"""Schubert codes as projective systems, and exhaustive weight computations.

A code is held as its ``k x n`` generator matrix whose columns are the
points of the projective system. Higher weights use

    d_r = n - max |X ∩ Π|   over codimension-r subspaces Π,

where ``Π`` is cut out by an r-dimensional space of linear functionals.
Each normalized functional ``h`` gets a bitset ``Z[h]`` of the points it
kills; the points on ``Π = span(h_1..h_r)^⊥`` are ``Z[h_1] & ... & Z[h_r]``.
The row-reduced bases of the functional spaces are enumerated here, the
AND/popcount search runs in :mod:`schubert_codes._kernels`.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
import json
import time

import numpy as np

from . import _kernels
from .combinatorics import gaussian_binomial
from .errors import EnumerationBudgetExceeded, NondegeneracyViolation, RangeError
from .field import matrix_rank
from .geometry import DEFAULT_POINT_BUDGET, enumerate_schubert_points, plucker_index
from .tuples import IndexTuple, delta, enumerate_downset, format_tuple

DEFAULT_SUBSPACE_BUDGET = 10**7
DEFAULT_CODEWORD_BUDGET = 2**20
# below this many subspaces a process pool costs more than it saves
_PARALLEL_THRESHOLD = 200_000


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    spec: object
    alpha: IndexTuple
    rows: tuple
    entries: np.ndarray = field(repr=False)

    @property
    def k(self):
        return self.entries.shape[0]

    @property
    def n(self):
        return self.entries.shape[1]

    @property
    def q(self):
        return self.spec.q

    def header(self):
        return f"q={self.q} l={self.alpha.ell} m={self.alpha.m} alpha={self.alpha} n={self.n} k={self.k}"

    def to_text(self):
        lines = [self.header()]
        lines.extend(" ".join(str(int(x)) for x in row) for row in self.entries)
        return "\n".join(lines) + "\n"


@dataclass
class WeightReport:
    n: int
    k: int
    d: list
    distribution: dict = None
    elapsed: float = 0.0

    def to_dict(self, timing=False):
        out = {"n": self.n, "k": self.k, "d": list(self.d)}
        if self.distribution is not None:
            out["distribution"] = {str(w): c for w, c in sorted(self.distribution.items())}
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    def to_json(self, timing=False):
        return json.dumps(self.to_dict(timing), sort_keys=False)


def from_points(points, spec, alpha=None, rows=None):
    """Generator matrix whose columns are the given projective points."""
    entries = np.ascontiguousarray(np.asarray(points, dtype=spec.dtype).T)
    if alpha is None:
        alpha = IndexTuple((1,), 1)
    return GeneratorMatrix(spec, alpha, tuple(rows or ()), entries)


def build_schubert_code(alpha, spec, budget_points=DEFAULT_POINT_BUDGET):
    """Generator matrix of ``C_α(ℓ,m)``: rows are the ``β <= α`` in lex order."""
    points = enumerate_schubert_points(alpha, spec, budget_points)
    _, position = plucker_index(alpha.ell, alpha.m)
    downset = enumerate_downset(alpha)
    keep = [position[tuple(x - 1 for x in beta.entries)] for beta in downset]
    outside = np.setdiff1d(np.arange(points.shape[1]), keep)
    if outside.size and points[:, outside].any():
        raise NondegeneracyViolation(f"a point of Omega{alpha} has a nonzero coordinate outside the downset")
    entries = np.ascontiguousarray(points[:, keep].T)
    if not entries.any(axis=0).all():
        raise NondegeneracyViolation("zero column in generator matrix")
    if matrix_rank(entries, spec) != len(downset):
        raise NondegeneracyViolation(f"generator matrix of {alpha} is rank deficient")
    return GeneratorMatrix(spec, alpha, tuple(downset), entries)


def build_grassmann_code(ell, m, spec, budget_points=DEFAULT_POINT_BUDGET):
    return build_schubert_code(IndexTuple.theta(ell, m), spec, budget_points)


# --- normalized functionals -------------------------------------------------

def hyperplane_count(q, k):
    return (q ** k - 1) // (q - 1)


def _offsets(q, k):
    """Index of the first normalized vector with leading position ``i``."""
    out = [0]
    for i in range(k - 1):
        out.append(out[-1] + q ** (k - 1 - i))
    return out


def normalized_functionals(q, k, start=0, stop=None):
    """Normalized vectors of ``GF(q)^k`` (first nonzero entry 1), rows
    ``start:stop`` of the canonical order.

    Vectors with leading position ``i`` form a contiguous block; inside it,
    the tail ``(c_{i+1}, ..., c_{k-1})`` counts up with ``c_{i+1}`` least
    significant.
    """
    total = hyperplane_count(q, k)
    stop = total if stop is None else min(stop, total)
    offsets = _offsets(q, k) + [total]
    out = np.zeros((max(stop - start, 0), k), dtype=np.int64)
    for i in range(k):
        lo, hi = max(offsets[i], start), min(offsets[i + 1], stop)
        if lo >= hi:
            continue
        tail = np.arange(lo - offsets[i], hi - offsets[i], dtype=np.int64)
        block = out[lo - start:hi - start]
        block[:, i] = 1
        for j in range(i + 1, k):
            block[:, j] = (tail // q ** (j - i - 1)) % q
    return out


def _evaluate(functionals, entries, spec):
    """``functionals @ entries`` over the field."""
    if spec.is_prime:
        return (functionals @ entries.astype(np.int64)) % spec.p
    add, mul = spec.add_table, spec.mul_table
    acc = np.zeros((functionals.shape[0], entries.shape[1]), dtype=spec.dtype)
    for i in range(functionals.shape[1]):
        acc = add[acc, mul[functionals[:, i, None], entries[i][None, :]]]
    return acc


def _words(n):
    return max(1, (n + 63) // 64)


def _pack(mask):
    """Boolean ``(H, n)`` array to little-endian ``uint64`` bitsets."""
    h, n = mask.shape
    packed = np.packbits(mask, axis=1, bitorder="little")
    buf = np.zeros((h, _words(n) * 8), dtype=np.uint8)
    buf[:, :packed.shape[1]] = packed
    return buf.view("<u8").astype(np.uint64, copy=False)


def full_mask(n):
    return _pack(np.ones((1, n), dtype=bool))[0]


def hyperplane_bitsets(gen, budget=DEFAULT_SUBSPACE_BUDGET, chunk=1 << 14):
    """``Z[h]``: bitset of the columns killed by normalized functional ``h``."""
    q, k, n = gen.q, gen.k, gen.n
    total = hyperplane_count(q, k)
    if total > budget:
        raise EnumerationBudgetExceeded("hyperplanes", total, budget)
    out = np.empty((total, _words(n)), dtype=np.uint64)
    for start in range(0, total, chunk):
        f = normalized_functionals(q, k, start, start + chunk)
        out[start:start + f.shape[0]] = _pack(_evaluate(f, gen.entries, gen.spec) == 0)
    return out


def codim_subspace_count(q, k, r):
    return gaussian_binomial(k, r, q)


def pivot_blocks(q, k, r):
    """For every pivot set of an ``r x k`` row-reduced basis, the list of
    allowed functional indices for each basis row."""
    offsets = _offsets(q, k)
    blocks = []
    for pivots in combinations(range(k), r):
        levels = []
        for c in pivots:
            free = [j for j in range(c + 1, k) if j not in pivots]
            idx = np.full(q ** len(free), offsets[c], dtype=np.int64)
            for pos, j in enumerate(free):
                # free entry j runs through all digits; later entries vary slowest
                step = q ** pos
                idx += ((np.arange(idx.size) // step) % q) * q ** (j - c - 1)
            levels.append(idx)
        blocks.append(levels)
    return blocks


def _max_section_worker(args):
    zsets, full, blocks = args
    return _kernels.max_section(zsets, full, blocks)


def max_section_size(gen, r, zsets=None, budget=DEFAULT_SUBSPACE_BUDGET, workers=1):
    """``max |X ∩ Π|`` over codimension-``r`` subspaces ``Π``."""
    q, k, n = gen.q, gen.k, gen.n
    if not 1 <= r <= k:
        raise RangeError(f"r must satisfy 1 <= r <= k={k}, got {r}")
    count = codim_subspace_count(q, k, r)
    if count > budget:
        raise EnumerationBudgetExceeded(f"codimension-{r} subspaces", count, budget)
    if zsets is None:
        zsets = hyperplane_bitsets(gen, budget)
    full = full_mask(n)
    blocks = pivot_blocks(q, k, r)
    if workers > 1 and len(blocks) > 1 and count >= _PARALLEL_THRESHOLD:
        shards = [blocks[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_max_section_worker, [(zsets, full, s) for s in shards if s]))
        return max(results)
    return _kernels.max_section(zsets, full, blocks)


def min_distance_bruteforce(gen, budget=DEFAULT_SUBSPACE_BUDGET, zsets=None):
    """``n`` minus the largest hyperplane section."""
    if zsets is None:
        zsets = hyperplane_bitsets(gen, budget)
    return gen.n - int(_kernels.popcounts(zsets).max())


def higher_weight_bruteforce(gen, r, budget=DEFAULT_SUBSPACE_BUDGET, zsets=None, workers=1):
    return gen.n - max_section_size(gen, r, zsets=zsets, budget=budget, workers=workers)


def weight_distribution(gen, budget=DEFAULT_SUBSPACE_BUDGET, zsets=None):
    """Codeword weight distribution from hyperplane section sizes."""
    if zsets is None:
        zsets = hyperplane_bitsets(gen, budget)
    sizes = _kernels.popcounts(zsets)
    weights, counts = np.unique(gen.n - sizes, return_counts=True)
    dist = {0: 1}
    for w, c in zip(weights.tolist(), counts.tolist()):
        dist[w] = dist.get(w, 0) + c * (gen.q - 1)
    return dict(sorted(dist.items()))


def codeword_weight_distribution(gen, budget=DEFAULT_CODEWORD_BUDGET, block_rows=None):
    """Weight distribution by listing all ``q**k`` codewords directly."""
    q, k, n = gen.q, gen.k, gen.n
    if q ** k > budget:
        raise EnumerationBudgetExceeded("codewords", q ** k, budget)
    spec = gen.spec
    add, mul = spec.add_table, spec.mul_table
    g = gen.entries
    if block_rows is None:
        block_rows = k
        while block_rows and q ** block_rows * n > 4_000_000:
            block_rows -= 1
    low = np.zeros((1, n), dtype=spec.dtype)
    for i in range(block_rows):
        low = np.concatenate([add[low, mul[a, g[i]][None, :]] for a in range(q)], axis=0)
    counts = np.zeros(n + 1, dtype=np.int64)
    for coeffs in product(range(q), repeat=k - block_rows):
        base = np.zeros(n, dtype=spec.dtype)
        for a, row in zip(coeffs, g[block_rows:]):
            base = add[base, mul[a, row]]
        counts += np.bincount(np.count_nonzero(add[low, base[None, :]], axis=1), minlength=n + 1)
    return {w: int(c) for w, c in enumerate(counts) if c}


def min_distance_codewords(gen, budget=DEFAULT_CODEWORD_BUDGET):
    return min(w for w in codeword_weight_distribution(gen, budget) if w > 0)


def weight_report(gen, r_max=1, distribution=False, budget=DEFAULT_SUBSPACE_BUDGET, workers=1):
    """Brute-force ``d_1..d_{r_max}`` (and optionally the distribution)."""
    t0 = time.perf_counter()
    if r_max < 1 or r_max > gen.k:
        raise RangeError(f"r_max must satisfy 1 <= r_max <= k={gen.k}, got {r_max}")
    for r in range(1, r_max + 1):
        count = codim_subspace_count(gen.q, gen.k, r)
        if count > budget:
            raise EnumerationBudgetExceeded(f"codimension-{r} subspaces", count, budget)
    zsets = hyperplane_bitsets(gen, budget)
    d = [min_distance_bruteforce(gen, zsets=zsets)]
    for r in range(2, r_max + 1):
        d.append(higher_weight_bruteforce(gen, r, budget=budget, zsets=zsets, workers=workers))
    dist = weight_distribution(gen, zsets=zsets) if distribution else None
    return WeightReport(gen.n, gen.k, d, dist, time.perf_counter() - t0)


# --- close families ---------------------------------------------------------

def close_family(ell, m, r, branch=None):
    """Tuples ``α^(1) = θ, α^(2) = η, ..., α^(r+1)`` pairwise differing in one entry.

    ``branch=1`` varies the first entry (needs ``r <= m-ℓ``); ``branch=2``
    deletes one element from ``(m-ℓ, ..., m)`` (needs ``r <= ℓ``). By
    default branch 1 is used whenever ``m-ℓ >= ℓ``.
    """
    if not 1 < ell < m:
        raise RangeError(f"close families need 1 < l < m, got l={ell}, m={m}")
    if not 1 <= r <= max(ell, m - ell):
        raise RangeError(f"r must satisfy 1 <= r <= {max(ell, m - ell)}, got {r}")
    if branch is None:
        branch = 1 if m - ell >= ell else 2
    if branch == 1:
        if r > m - ell:
            raise RangeError(f"branch 1 needs r <= m-l = {m - ell}")
        tail = tuple(range(m - ell + 2, m + 1))
        return [IndexTuple((m - ell + 2 - j,) + tail, m) for j in range(1, r + 2)]
    if branch == 2:
        if r > ell:
            raise RangeError(f"branch 2 needs r <= l = {ell}")
        full = range(m - ell, m + 1)
        return [IndexTuple(tuple(x for x in full if x != m - ell + j - 1), m) for j in range(1, r + 2)]
    raise RangeError(f"unknown branch {branch}")


def is_close_family(tuples):
    for a, b in combinations(tuples, 2):
        if len(set(a.entries) & set(b.entries)) != a.ell - 1:
            return False
    return True


def close_family_section_count(ell, m, spec, r, branch=None, budget=DEFAULT_POINT_BUDGET):
    """Points of the Schubert divisor on which the Plücker coordinates of
    ``α^(2), ..., α^(r+1)`` all vanish."""
    family = close_family(ell, m, r, branch)
    points = enumerate_schubert_points(IndexTuple.eta(ell, m), spec, budget)
    _, position = plucker_index(ell, m)
    cols = [position[tuple(x - 1 for x in a.entries)] for a in family[1:]]
    return int(np.count_nonzero(~points[:, cols].any(axis=1)))


def describe(gen):
    return f"C{format_tuple(gen.alpha.entries)}({gen.alpha.ell},{gen.alpha.m}) over GF({gen.q}): n={gen.n} k={gen.k} delta={delta(gen.alpha)}"
