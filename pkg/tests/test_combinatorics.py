import pytest
from hypothesis import given, settings, strategies as st

from schubert_codes.combinatorics import (
    QPolynomial,
    bareiss_determinant,
    binomial,
    gaussian_binomial,
    gaussian_binomial_poly,
    lambda_count,
    lambda_poly,
)
from schubert_codes.errors import InvalidInput

from oracles import cofactor_det, general_binomial, mobius_count, rref_count, subspaces


@pytest.mark.parametrize("n,k,expected", [(5, 3, 10), (4, 0, 1), (3, 5, 0), (3, -1, 0), (-2, 1, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_gaussian_binomial_examples():
    # 35 = number of planes in GF(2)^4, counted by the set oracle
    assert gaussian_binomial(4, 2, 2) == len(subspaces(2, 4, 2)) == 35
    assert gaussian_binomial(3, 5, 2) == 0
    for u in range(6):
        assert gaussian_binomial(u, 0, 7) == 1


def test_gaussian_binomial_rejects_small_q():
    with pytest.raises(InvalidInput):
        gaussian_binomial(3, 1, 1)
    with pytest.raises(InvalidInput):
        lambda_count(1, 2, 0, 1, 0)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_gaussian_binomial_counts_subspaces(q):
    for u in range(9):
        for v in range(u + 1):
            assert gaussian_binomial(u, v, q) == rref_count(q, u, v)


@pytest.mark.parametrize("p,u", [(2, 4), (2, 5), (3, 3), (3, 4)])
def test_gaussian_binomial_against_literal_subspaces(p, u):
    for v in range(u + 1):
        assert gaussian_binomial(u, v, p) == len(subspaces(p, u, v))


def test_gaussian_poly_examples():
    assert gaussian_binomial_poly(2, 1) == QPolynomial([1, 1])
    assert gaussian_binomial_poly(4, 2)(1) == 6
    assert gaussian_binomial_poly(3, 5).is_zero()


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_gaussian_poly_matches_integer_version(q):
    for u in range(9):
        for v in range(u + 1):
            poly = gaussian_binomial_poly(u, v)
            assert poly(q) == gaussian_binomial(u, v, q)
            assert poly(1) == binomial(u, v)


def test_gaussian_symmetry():
    for u in range(9):
        for v in range(u + 1):
            assert gaussian_binomial_poly(u, v) == gaussian_binomial_poly(u, u - v)
            assert gaussian_binomial(u, v, 3) == gaussian_binomial(u, u - v, 3)


def test_lambda_examples():
    for b in range(6):
        for t in range(b + 1):
            assert lambda_count(0, b, 0, t, 3) == gaussian_binomial(b, t, 3)
    assert lambda_count(2, 4, 1, 2, 2) == mobius_count(2, 2, 4, 1, 2) == 6
    assert lambda_count(3, 5, 2, 1, 2) == 0


@pytest.mark.parametrize("p", [2, 3])
def test_lambda_matches_mobius_oracle(p):
    for b in range(5):
        spaces = {t: subspaces(p, b, t) for t in range(b + 1)}
        for a in range(b + 1):
            for s in range(a + 1):
                for t in range(s, b + 1):
                    assert lambda_count(a, b, s, t, p) == mobius_count(p, a, b, s, t, spaces), (a, b, s, t)


def test_lambda_poly_examples():
    assert lambda_poly(0, 3, 0, 1) == QPolynomial([1, 1, 1])
    assert lambda_poly(2, 4, 1, 2)(1) == 2
    assert lambda_poly(2, 4, 1, 0).is_zero()


def test_lambda_poly_limit_identity():
    # value at q=1 is C(b-a, t-s), with C(-N-1, M) = (-1)^M C(N+M, M) when b < a
    for s in range(5):
        for t in range(s, 7):
            for a in range(s, 8):
                for b in range(t, 8):
                    assert lambda_poly(a, b, s, t)(1) == general_binomial(b - a, t - s), (a, b, s, t)


def test_lambda_poly_evaluates_to_lambda_count():
    for a, b, s, t in [(2, 5, 1, 3), (3, 6, 0, 2), (1, 4, 1, 4), (4, 6, 2, 5)]:
        for q in (2, 3, 4):
            assert lambda_poly(a, b, s, t)(q) == lambda_count(a, b, s, t, q)


def test_qpolynomial_basics():
    zero = QPolynomial()
    assert zero.degree == -1 and zero.is_zero()
    assert QPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    p = QPolynomial([1, 1])
    assert p * p == QPolynomial([1, 2, 1])
    assert (p ** 3)(2) == 27
    assert p - p == zero
    assert (p + 2) == QPolynomial([3, 1])
    assert str(QPolynomial([1, 1, 2, 1])) == "1 + q + 2*q^2 + q^3"
    assert QPolynomial([0, 0, 1]).is_monic()


def test_bareiss_examples():
    assert bareiss_determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert bareiss_determinant([[2, 1], [1, 3]]) == 5
    assert bareiss_determinant([[1, 2, 3], [4, 5, 6], [1, 2, 3]]) == 0
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1


def test_bareiss_rejects_non_square():
    with pytest.raises(InvalidInput):
        bareiss_determinant([[1, 2, 3], [4, 5, 6]])


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_cofactor(mat):
    assert bareiss_determinant(mat) == cofactor_det(mat)
