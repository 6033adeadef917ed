from fractions import Fraction
from math import comb

import pytest

from schubert_codes.combinatorics import gaussian_binomial
from schubert_codes.errors import NotApplicable, RangeError
from schubert_codes.formulas import (
    arithmetic_progression,
    chen_parameters,
    dimension_arith_progression,
    dimension_by_downset,
    dimension_matrix,
    dimension_via_determinant,
    dimension_via_limit_sums,
    divisor_higher_weight,
    grassmann_reference,
    gv_lower_bound,
    length_poly,
    length_via_cells,
    length_via_gv,
    length_via_nested_sums,
    parameter_bundle,
    schubert_divisor_length,
)
from schubert_codes.combinatorics import QPolynomial
from schubert_codes.tuples import IndexTuple, delta, enumerate_all

from oracles import cofactor_det


def T(*entries, m=8):
    return IndexTuple(entries, m)


def test_length_examples():
    a = IndexTuple((2, 4), 4)
    theta = IndexTuple.theta(2, 4)
    for f in (length_via_cells, length_via_nested_sums, length_via_gv):
        assert f(T(1, 2, 3), 5) == 1
        assert f(a, 2) == 19
        assert f(theta, 2) == 35
        assert f(theta, 3) == 130 == gaussian_binomial(4, 2, 3)


def test_nested_sum_consecutive_case():
    for d in range(1, 5):
        for ell in range(1, 4):
            a = T(*range(d, d + ell))
            assert length_via_nested_sums(a, 3) == gaussian_binomial(d + ell - 1, ell, 3)


def test_three_lengths_agree_on_1347():
    a = T(1, 3, 4, 7)
    assert length_via_nested_sums(a, 2) == length_via_gv(a, 2) == length_via_cells(a, 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_length_identity_sweep(q):
    for ell in range(1, 5):
        for a in enumerate_all(ell, 7):
            n = length_via_cells(a, q)
            assert length_via_nested_sums(a, q) == n
            assert length_via_gv(a, q) == n


def test_length_poly_examples():
    a = IndexTuple((2, 4), 4)
    assert length_poly(a) == QPolynomial([1, 1, 2, 1])
    assert length_poly(a)(1) == 5
    assert length_poly(T(1, 2, 3)) == QPolynomial([1])


def test_length_poly_limits():
    for ell in range(1, 5):
        for a in enumerate_all(ell, 7):
            poly = length_poly(a)
            assert poly.is_monic() and poly.degree == delta(a)
            assert poly(1) == dimension_via_determinant(a)
            assert poly(3) == length_via_cells(a, 3)


def test_dimension_examples():
    a = IndexTuple((2, 4), 4)
    assert dimension_matrix(a) == [[2, 1], [1, 3]]
    assert dimension_via_determinant(a) == cofactor_det([[2, 1], [1, 3]]) == 5
    assert dimension_via_limit_sums(a) == 5
    for m in range(2, 9):
        for a1 in range(1, m):
            a = IndexTuple((a1, m), m)
            assert dimension_via_determinant(a) == a1 * (2 * m - a1 - 1) // 2
    for ell, m in [(2, 4), (3, 6), (4, 8), (1, 5)]:
        assert dimension_via_determinant(IndexTuple.theta(ell, m)) == comb(m, ell)


def test_dimension_identity_sweep():
    for ell in range(1, 5):
        for a in enumerate_all(ell, 8):
            k = dimension_by_downset(a)
            assert dimension_via_determinant(a) == k
            assert dimension_via_limit_sums(a) == k
            if ell <= 3:
                assert cofactor_det(dimension_matrix(a)) == k


def test_consecutive_dimension():
    for d in range(1, 6):
        for ell in range(1, 5):
            a = T(*range(d, d + ell))
            assert dimension_via_limit_sums(a) == comb(d + ell - 1, ell)
            assert dimension_arith_progression(a) == comb(d + ell - 1, ell)


def test_arith_progression_examples():
    assert dimension_arith_progression(T(2, 3, 4)) == 4 == dimension_by_downset(T(2, 3, 4))
    for ell in range(1, 5):
        assert dimension_arith_progression(T(*range(1, ell + 1))) == 1
    assert arithmetic_progression(T(1, 3, 4, 7)) is None
    with pytest.raises(NotApplicable):
        dimension_arith_progression(T(1, 3, 4, 7))


def test_arith_progression_agrees_with_determinant():
    seen = 0
    for ell in range(1, 5):
        for a in enumerate_all(ell, 8):
            if arithmetic_progression(a) is not None:
                seen += 1
                assert dimension_arith_progression(a) == dimension_via_determinant(a)
    assert seen > 50


def test_two_row_examples():
    assert chen_parameters(4, 1, 2) == (19, 5, 8)
    n, k, _ = chen_parameters(4, 0, 3)
    assert n == gaussian_binomial(4, 2, 3) and k == 6
    assert chen_parameters(5, 1, 2)[1] == 9
    with pytest.raises(RangeError):
        chen_parameters(4, 2, 2)
    with pytest.raises(RangeError):
        chen_parameters(5, -1, 2)


@pytest.mark.parametrize("q", [2, 3])
def test_two_row_closed_form_matches_general_formulas(q):
    for m in range(3, 8):
        for h in range(0, m - 2):
            a = IndexTuple((m - h - 1, m), m)
            n, k, d = chen_parameters(m, h, q)
            assert n == length_via_cells(a, q)
            assert k == dimension_via_determinant(a)
            assert d == q ** delta(a)


def test_gv_lower_bound():
    assert gv_lower_bound(IndexTuple((2, 4), 4), 2) == 6
    assert gv_lower_bound(T(1, 2), 2) == Fraction(1, 2)
    assert gv_lower_bound(IndexTuple.theta(2, 4), 2) <= 16
    for q in (2, 3, 4, 5):
        for ell in range(1, 5):
            for a in enumerate_all(ell, 7):
                lower = gv_lower_bound(a, q)
                assert lower >= Fraction(q ** delta(a), q ** ell)
                assert lower <= q ** delta(a)


def test_divisor_higher_weight():
    assert divisor_higher_weight(2, 4, 2, 1) == 8
    assert divisor_higher_weight(2, 4, 2, 2) == 12
    assert divisor_higher_weight(2, 5, 2, 3) == 56
    with pytest.raises(RangeError):
        divisor_higher_weight(2, 4, 2, 3)
    with pytest.raises(RangeError):
        divisor_higher_weight(2, 4, 2, 0)
    with pytest.raises(RangeError):
        divisor_higher_weight(1, 4, 2, 1)


def test_grassmann_reference():
    assert grassmann_reference(2, 4, 2, 1) == (35, 6, 16, 16)
    assert grassmann_reference(2, 4, 2, 3)[3] == 28
    assert grassmann_reference(3, 3, 7, 1) == (1, 1, 1, 1)
    with pytest.raises(RangeError):
        grassmann_reference(2, 4, 2, 4)


def test_schubert_divisor_length():
    assert schubert_divisor_length(2, 4, 2) == 19
    assert schubert_divisor_length(2, 5, 2) == 91
    assert schubert_divisor_length(3, 6, 2) == gaussian_binomial(6, 3, 2) - 2 ** 9
    for ell, m in [(2, 4), (2, 5), (3, 6), (3, 7), (4, 7)]:
        for q in (2, 3, 4):
            assert schubert_divisor_length(ell, m, q) == length_via_cells(IndexTuple.eta(ell, m), q)
    with pytest.raises(RangeError):
        schubert_divisor_length(4, 4, 2)


def test_parameter_bundle():
    b = parameter_bundle(IndexTuple((2, 4), 4), 2)
    assert b.n == {"cells": 19, "nested": 19, "gv": 19}
    assert b.k["determinant"] == 5 and b.k["arith_progression"] == 5
    assert (b.gv_lower, b.mdc_upper) == (6, 8)
    assert b.n_agree and b.k_agree and b.bounds_ok
    assert parameter_bundle(T(1, 3, 4, 7), 2).k["arith_progression"] is None
