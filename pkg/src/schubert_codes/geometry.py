"""Rational points of Schubert varieties and their Plücker coordinates.

Points of ``Ω_α`` are produced cell by cell: every ``β <= α`` contributes
the ``q**δ_β`` echelon matrices of its Schubert cell. Plücker vectors are
normalized so their first nonzero coordinate (in lex order of ``I(ℓ,m)``)
is 1, and stored as rows of a ``numpy`` array of canonical field codes.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .errors import EnumerationBudgetExceeded, RankDeficient
from .field import matrix_rank
from .tuples import IndexTuple, delta, enumerate_downset

DEFAULT_POINT_BUDGET = 10**7
# Leibniz expansion above this order gets too many terms
_LEIBNIZ_MAX_ORDER = 6


@dataclass(frozen=True, eq=False)
class EchelonRepresentative:
    cell: IndexTuple
    matrix: np.ndarray

    def __eq__(self, other):
        return self.cell == other.cell and np.array_equal(self.matrix, other.matrix)


def free_positions(beta):
    """0-based ``(row, col)`` entries left unconstrained in a cell-``β`` matrix."""
    pivots = [b - 1 for b in beta.entries]
    out = []
    for i, p in enumerate(pivots):
        taken = set(pivots[:i])
        out.extend((i, j) for j in range(p) if j not in taken)
    assert len(out) == delta(beta)
    return out


def _base_digits(count, width, q):
    """Rows ``0..count-1`` written in base ``q``, most significant first."""
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, width), dtype=np.int64)
    for j in range(width):
        out[:, j] = (idx // q ** (width - 1 - j)) % q
    return out


def cell_matrices(beta, spec, budget=DEFAULT_POINT_BUDGET):
    """All echelon matrices of the cell ``C_β`` as an ``(N, ℓ, m)`` array."""
    d = delta(beta)
    count = spec.q ** d
    if count > budget:
        raise EnumerationBudgetExceeded(f"cell {beta} points", count, budget)
    ell, m = beta.ell, beta.m
    mats = np.zeros((count, ell, m), dtype=spec.dtype)
    for i, b in enumerate(beta.entries):
        mats[:, i, b - 1] = 1
    free = free_positions(beta)
    if free:
        values = _base_digits(count, len(free), spec.q)
        rows, cols = zip(*free)
        mats[:, list(rows), list(cols)] = values
    return mats


def enumerate_cell(beta, spec, budget=DEFAULT_POINT_BUDGET):
    return [EchelonRepresentative(beta, mat) for mat in cell_matrices(beta, spec, budget)]


@lru_cache(maxsize=None)
def plucker_index(ell, m):
    """Column tuples of ``I(ℓ,m)`` in lex order (0-based), and their positions."""
    cols = list(combinations(range(m), ell))
    return cols, {c: i for i, c in enumerate(cols)}


@lru_cache(maxsize=None)
def _signed_permutations(ell):
    out = []
    for perm in permutations(range(ell)):
        inversions = sum(1 for i in range(ell) for j in range(i + 1, ell) if perm[i] > perm[j])
        out.append((perm, inversions & 1))
    return out


def _det_batch(sub, spec):
    """Determinants of a batch ``(N, ℓ, ℓ)`` of matrices over ``spec``."""
    n, ell, _ = sub.shape
    add, mul, neg = spec.add_table, spec.mul_table, spec.neg_table
    if ell <= _LEIBNIZ_MAX_ORDER:
        acc = np.zeros(n, dtype=spec.dtype)
        for perm, odd in _signed_permutations(ell):
            term = sub[:, 0, perm[0]]
            for i in range(1, ell):
                term = mul[term, sub[:, i, perm[i]]]
            acc = add[acc, neg[term] if odd else term]
        return acc
    return np.array([_det_single(s, spec) for s in sub], dtype=spec.dtype)


def _det_single(mat, spec):
    a = mat.astype(np.int64)
    ell = a.shape[0]
    add, mul, neg, inv = spec.add_table, spec.mul_table, spec.neg_table, spec.inv_table
    det = 1
    for c in range(ell):
        nz = np.flatnonzero(a[c:, c])
        if nz.size == 0:
            return 0
        i = c + nz[0]
        if i != c:
            a[[c, i]] = a[[i, c]]
            det = spec.neg(det)
        piv = int(a[c, c])
        det = spec.mul(det, piv)
        scale = inv[piv]
        for r in range(c + 1, ell):
            if a[r, c]:
                f = mul[a[r, c], scale]
                a[r] = add[a[r], neg[mul[f, a[c]]]]
    return det


def normalize_points(coords, spec):
    """Scale each row so its first nonzero entry is 1."""
    nonzero = coords != 0
    if not nonzero.any(axis=1).all():
        raise RankDeficient("matrix does not have full row rank")
    lead = coords[np.arange(coords.shape[0]), nonzero.argmax(axis=1)]
    return spec.mul_table[spec.inv_table[lead][:, None], coords]


def plucker_batch(mats, spec):
    """Normalized Plücker vectors of a batch of ``ℓ x m`` matrices."""
    mats = np.asarray(mats)
    n, ell, m = mats.shape
    cols, _ = plucker_index(ell, m)
    coords = np.empty((n, len(cols)), dtype=spec.dtype)
    for k, c in enumerate(cols):
        coords[:, k] = _det_batch(mats[:, :, list(c)], spec)
    return normalize_points(coords, spec)


def plucker_coordinates(rep, spec):
    """Normalized Plücker vector of one representative or rank-ℓ matrix."""
    mat = rep.matrix if isinstance(rep, EchelonRepresentative) else rep
    mat = np.asarray(mat, dtype=np.int64)
    if mat.ndim != 2 or mat.shape[0] > mat.shape[1]:
        raise RankDeficient(f"need an l x m matrix with l <= m, got shape {mat.shape}")
    if (mat < 0).any() or (mat >= spec.q).any():
        raise ValueError(f"entries must be GF({spec.q}) codes")
    return tuple(int(x) for x in plucker_batch(mat.astype(spec.dtype)[None], spec)[0])


@lru_cache(maxsize=4096)
def _cell_points(beta, spec, budget):
    pts = plucker_batch(cell_matrices(beta, spec, budget), spec)
    pts.flags.writeable = False
    return pts


def count_points(alpha, q):
    return sum(q ** delta(b) for b in enumerate_downset(alpha))


def enumerate_schubert_points(alpha, spec, budget=DEFAULT_POINT_BUDGET):
    """Points of ``Ω_α(F_q)``, one normalized Plücker vector per row.

    Rows come cell by cell (cells in lex order of ``β``), and within a cell
    in lex order of the free entries.
    """
    total = count_points(alpha, spec.q)
    if total > budget:
        raise EnumerationBudgetExceeded(f"points of Omega{alpha}", total, budget)
    parts = [_cell_points(beta, spec, budget) for beta in enumerate_downset(alpha)]
    return np.concatenate(parts, axis=0)


def intersection_dims(matrix, spec):
    """``r_j = dim(W ∩ A_j)`` for ``j = 1..m`` (row space ``W`` of ``matrix``)."""
    mat = np.asarray(matrix, dtype=np.int64)
    ell, m = mat.shape
    if matrix_rank(mat, spec) != ell:
        raise RankDeficient("matrix does not have full row rank")
    return tuple(ell - matrix_rank(mat[:, j:], spec) for j in range(1, m + 1))


def profile_and_cell(matrix, spec):
    """Return the flag profile ``(r_1..r_m)`` and the unique cell ``β`` containing the row space."""
    dims = intersection_dims(matrix, spec)
    m = len(dims)
    prev = 0
    jumps = []
    for j, r in enumerate(dims, start=1):
        assert 0 <= r - prev <= 1
        if r > prev:
            jumps.append(j)
        prev = r
    return dims, IndexTuple(tuple(jumps), m)


def in_schubert_variety(matrix, alpha, spec):
    """Direct test of ``dim(W ∩ A_{α_i}) >= i`` for all ``i``."""
    dims = intersection_dims(matrix, spec)
    return all(dims[a - 1] >= i for i, a in enumerate(alpha.entries, start=1))
