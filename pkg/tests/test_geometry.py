import numpy as np
import pytest

from schubert_codes.errors import EnumerationBudgetExceeded, RankDeficient
from schubert_codes.field import make_field
from schubert_codes.geometry import (
    cell_matrices,
    enumerate_cell,
    enumerate_schubert_points,
    free_positions,
    in_schubert_variety,
    plucker_coordinates,
    plucker_index,
    profile_and_cell,
)
from schubert_codes.tuples import IndexTuple, delta, enumerate_all, enumerate_downset, leq

from oracles import schubert_count

F2, F3 = make_field(2), make_field(3)


def T(*entries, m=4):
    return IndexTuple(entries, m)


def test_cell_examples():
    reps = enumerate_cell(T(1, 2), F3)
    assert len(reps) == 1
    assert np.array_equal(reps[0].matrix, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert len(enumerate_cell(T(2, 4), F2)) == 8
    assert len(enumerate_cell(T(1, 3), F3)) == 3


def test_cell_shape_constraints():
    for beta in enumerate_all(3, 6):
        mats = cell_matrices(beta, F2)
        assert len(mats) == 2 ** delta(beta) == 2 ** len(free_positions(beta))
        for i, b in enumerate(beta.entries):
            assert (mats[:, i, b - 1] == 1).all()
            assert not mats[:, i, b:].any()
            assert not mats[:, i + 1:, b - 1].any()
        # distinct row-reduced forms, hence distinct subspaces
        assert len({m.tobytes() for m in mats}) == len(mats)


def test_point_count_examples():
    assert len(enumerate_schubert_points(T(1, 2), F2)) == 1
    assert len(enumerate_schubert_points(T(2, 4), F2)) == 19
    assert len(enumerate_schubert_points(T(3, 4), F2)) == 35


@pytest.mark.parametrize("q", [2, 3])
def test_point_counts_match_cell_sum_and_are_distinct(q):
    f = make_field(q)
    for m in range(1, 7):
        for ell in range(1, min(3, m) + 1):
            for alpha in enumerate_all(ell, m):
                pts = enumerate_schubert_points(alpha, f)
                assert len(pts) == sum(q ** delta(b) for b in enumerate_downset(alpha))
                assert len(np.unique(pts, axis=0)) == len(pts)


@pytest.mark.parametrize("p,ell,m", [(2, 2, 4), (2, 2, 5), (2, 3, 5), (2, 3, 6), (3, 2, 4)])
def test_point_counts_against_flag_oracle(p, ell, m):
    f = make_field(p)
    for alpha in enumerate_all(ell, m):
        assert len(enumerate_schubert_points(alpha, f)) == schubert_count(p, ell, m, alpha.entries)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_points_supported_on_downset(q):
    f = make_field(q)
    for ell, m in [(2, 4), (2, 5), (3, 5)]:
        cols, _ = plucker_index(ell, m)
        for alpha in enumerate_all(ell, m):
            pts = enumerate_schubert_points(alpha, f)
            for k, c in enumerate(cols):
                gamma = IndexTuple(tuple(x + 1 for x in c), m)
                if not leq(gamma, alpha):
                    assert not pts[:, k].any()


def test_points_normalized():
    pts = enumerate_schubert_points(IndexTuple.theta(2, 5), make_field(4))
    lead = pts[np.arange(len(pts)), (pts != 0).argmax(axis=1)]
    assert (lead == 1).all()


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_klein_quadric(q):
    f = make_field(q)
    pts = enumerate_schubert_points(IndexTuple.theta(2, 4), f).astype(np.int64)
    p12, p13, p14, p23, p24, p34 = pts.T
    M, A, N = f.mul_table, f.add_table, f.neg_table
    value = A[A[M[p12, p34], N[M[p13, p24]]], M[p14, p23]]
    assert not value.any()


def test_plucker_examples():
    assert plucker_coordinates([[1, 0, 0, 0], [0, 1, 0, 0]], F3) == (1, 0, 0, 0, 0, 0)
    assert plucker_coordinates([[1, 0, 1, 0], [0, 1, 0, 1]], F2) == (1, 0, 1, 1, 0, 1)
    with pytest.raises(RankDeficient):
        plucker_coordinates([[1, 1, 0, 0], [1, 1, 0, 0]], F2)


def test_plucker_invariant_under_row_operations():
    rng = np.random.default_rng(0)
    f = make_field(5)
    for beta in enumerate_all(2, 5):
        for rep in enumerate_cell(beta, f)[:20]:
            g = rng.integers(0, 5, size=(2, 2))
            while (g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]) % 5 == 0:
                g = rng.integers(0, 5, size=(2, 2))
            mixed = (g @ rep.matrix.astype(np.int64)) % 5
            assert plucker_coordinates(mixed, f) == plucker_coordinates(rep, f)


def test_cell_coordinate_at_beta_is_nonzero():
    _, pos = plucker_index(3, 6)
    for beta in enumerate_all(3, 6):
        k = pos[tuple(b - 1 for b in beta.entries)]
        for rep in enumerate_cell(beta, F2):
            assert plucker_coordinates(rep, F2)[k] != 0


@pytest.mark.parametrize("q", [2, 3])
def test_profile_roundtrip(q):
    f = make_field(q)
    for m in range(1, 7):
        for ell in range(1, min(3, m) + 1):
            for beta in enumerate_all(ell, m):
                reps = enumerate_cell(beta, f)
                for rep in reps[:: max(1, len(reps) // 5)]:
                    dims, cell = profile_and_cell(rep.matrix, f)
                    assert cell == beta
                    assert dims[-1] == ell


def test_profile_examples_and_membership():
    dims, cell = profile_and_cell([[1, 0, 0, 0], [0, 1, 0, 0]], F2)
    assert cell == T(1, 2) and dims == (1, 2, 2, 2)
    for beta in enumerate_all(2, 4):
        rep = enumerate_cell(beta, F2)[-1]
        for alpha in enumerate_all(2, 4):
            assert in_schubert_variety(rep.matrix, alpha, F2) == leq(beta, alpha)


def test_budget_refusal():
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_schubert_points(IndexTuple.theta(2, 4), F2, budget=10)
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_cell(T(3, 4), F3, budget=5)
