"""Closed-form parameters of Grassmann and Schubert codes.

Each quantity is computed by several independent routes (cell sum, nested
Möbius sums, a sum over chains ``k_1 <= ... <= k_ℓ``, a determinant, ...) so that they can
be checked against one another.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from .combinatorics import (
    QPolynomial,
    bareiss_determinant,
    binomial,
    gaussian_binomial,
    lambda_count,
)
from .errors import InvalidInput, NotApplicable, RangeError
from .tuples import IndexTuple, consecutive_blocks, delta, enumerate_downset


def _check_q(q):
    if q < 2:
        raise InvalidInput(f"q must be >= 2, got {q}")


def length_via_cells(alpha, q):
    """Sum of ``q**δ_β`` over the downset of ``α``."""
    _check_q(q)
    return sum(q ** delta(beta) for beta in enumerate_downset(alpha))


def _block_ends(alpha):
    """``(p_i, α_{p_i})`` for ``i = 0..u+1`` with ``p_0 = 0 = α_0``."""
    blocks = consecutive_blocks(alpha)
    ps = (0,) + blocks.boundaries + (alpha.ell,)
    return [(p, alpha.entries[p - 1] if p else 0) for p in ps]


def _nested_sum(alpha, factor):
    """``Σ_{s_1..s_u} Π_i factor(α_{p_i}, α_{p_{i+1}}, s_i, s_{i+1})`` with
    ``s_i`` running over ``p_i..α_{p_i}`` and ``s_0 = 0``, ``s_{u+1} = ℓ``."""
    ends = _block_ends(alpha)
    inner = ends[1:-1]
    total = 0
    for s in product(*(range(p, a + 1) for p, a in inner)):
        svals = (0,) + s + (alpha.ell,)
        term = 1
        for i in range(len(ends) - 1):
            term *= factor(ends[i][1], ends[i + 1][1], svals[i], svals[i + 1])
            if not term:
                break
        total += term
    return total


def length_via_nested_sums(alpha, q):
    _check_q(q)
    return _nested_sum(alpha, lambda a, b, s, t: lambda_count(a, b, s, t, q))


def length_via_gv(alpha, q):
    """Sum over chains ``k_1 <= ... <= k_{ℓ-1}`` with ``i <= k_i <= α_i``."""
    _check_q(q)
    ell = alpha.ell
    a = (0,) + alpha.entries

    total = 0

    def rec(i, ks):
        nonlocal total
        if i == ell:
            kk = ks + [ell]
            term = 1
            for j in range(ell):
                step = kk[j + 1] - kk[j]
                term *= gaussian_binomial(a[j + 1] - a[j], step, q) * q ** ((a[j] - kk[j]) * step)
                if not term:
                    return
            total += term
            return
        lo = max(i, ks[-1])
        for k in range(lo, min(a[i], ell) + 1):
            rec(i + 1, ks + [k])

    rec(1, [0])
    return total


def length_poly(alpha):
    coeffs = [0] * (delta(alpha) + 1)
    for beta in enumerate_downset(alpha):
        coeffs[delta(beta)] += 1
    return QPolynomial(coeffs)


def dimension_matrix(alpha):
    ell = alpha.ell
    return [[binomial(alpha.entries[j] - j, i - j + 1) for j in range(ell)] for i in range(ell)]


def dimension_via_determinant(alpha):
    return bareiss_determinant(dimension_matrix(alpha))


def dimension_via_limit_sums(alpha):
    return _nested_sum(alpha, lambda a, b, s, t: binomial(b - a, t - s))


def arithmetic_progression(alpha):
    """``(c, d)`` with ``α_i = c(i-1) + d``, or None."""
    e = alpha.entries
    if len(e) == 1:
        return 1, e[0]
    c = e[1] - e[0]
    if any(e[i + 1] - e[i] != c for i in range(len(e) - 1)):
        return None
    return c, e[0]


def dimension_arith_progression(alpha):
    ap = arithmetic_progression(alpha)
    if ap is None:
        raise NotApplicable(f"entries of {alpha} are not in arithmetic progression")
    c, d = ap
    ell = alpha.ell
    top = c * ell + d
    value = Fraction(alpha.entries[0], top) * comb(top, ell)
    if value.denominator != 1:
        raise AssertionError(f"non-integral closed form {value} for {alpha}")
    return int(value)


def dimension_by_downset(alpha):
    return len(enumerate_downset(alpha))


def chen_parameters(m, h, q):
    """Length, dimension and minimum distance of ``C_(m-h-1, m)(2, m)``."""
    _check_q(q)
    if m < 3 or not 0 <= h <= m - 3:
        raise RangeError(f"need m >= 3 and 0 <= h <= m-3, got m={m}, h={h}")
    num = (q ** m - 1) * (q ** (m - 1) - 1)
    den = (q ** 2 - 1) * (q - 1)
    head, rem = divmod(num, den)
    assert rem == 0
    n = head - sum(q ** (2 * m - j - 2 - i) for j in range(1, h + 1) for i in range(1, j + 1))
    k = m * (m - 1) // 2 - h * (h + 1) // 2
    return n, k, q ** (2 * m - h - 4)


def gv_lower_bound(alpha, q):
    """Product lower bound on ``d``, as an exact ``Fraction``."""
    _check_q(q)
    e = alpha.entries
    num = q ** e[0]
    for x, y in zip(e, e[1:]):
        num *= q ** y - q ** x
    ell = alpha.ell
    return Fraction(num, q ** (ell * (ell + 1) // 2))


def mdc_upper_bound(alpha, q):
    return q ** delta(alpha)


def _check_divisor_range(ell, m):
    if not 1 < ell < m:
        raise RangeError(f"need 1 < l < m, got l={ell}, m={m}")


def divisor_higher_weight(ell, m, q, r):
    """``d_r`` of the Schubert divisor code, ``1 <= r <= max(ℓ, m-ℓ)``."""
    _check_divisor_range(ell, m)
    if not 1 <= r <= max(ell, m - ell):
        raise RangeError(f"r must satisfy 1 <= r <= {max(ell, m - ell)}, got {r}")
    top = ell * (m - ell)
    return sum(q ** (top - i) for i in range(1, r + 1))


def grassmann_reference(ell, m, q, r=1):
    """``(n, k, d, d_r)`` of the Grassmann code ``C(ℓ, m)``."""
    _check_q(q)
    if not 1 <= ell <= m:
        raise RangeError(f"need 1 <= l <= m, got l={ell}, m={m}")
    if not 1 <= r <= max(ell, m - ell) + 1:
        raise RangeError(f"r must satisfy 1 <= r <= {max(ell, m - ell) + 1}, got {r}")
    top = ell * (m - ell)
    if r > comb(m, ell):
        raise RangeError(f"r={r} exceeds the code dimension {comb(m, ell)}")
    d_r = sum(q ** (top - i) for i in range(r))
    return gaussian_binomial(m, ell, q), comb(m, ell), q ** top, d_r


def schubert_divisor_length(ell, m, q):
    _check_divisor_range(ell, m)
    return gaussian_binomial(m, ell, q) - q ** (ell * (m - ell))


@dataclass
class ParameterBundle:
    alpha: IndexTuple
    q: int
    delta: int
    n: dict = field(default_factory=dict)
    k: dict = field(default_factory=dict)
    gv_lower: Fraction = None
    mdc_upper: int = None

    @property
    def n_agree(self):
        return len(set(self.n.values())) == 1

    @property
    def k_agree(self):
        return len({v for v in self.k.values() if v is not None}) == 1

    @property
    def bounds_ok(self):
        return self.gv_lower <= self.mdc_upper

    def to_dict(self):
        return {
            "alpha": str(self.alpha),
            "l": self.alpha.ell,
            "m": self.alpha.m,
            "q": self.q,
            "delta": self.delta,
            "n": {key: val for key, val in self.n.items()},
            "k": {key: val for key, val in self.k.items()},
            "bounds": {"gv_lower": fraction_str(self.gv_lower), "mdc_upper": self.mdc_upper},
            "agree": {"n": self.n_agree, "k": self.k_agree, "bounds": self.bounds_ok},
        }


def fraction_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parameter_bundle(alpha, q):
    bundle = ParameterBundle(alpha, q, delta(alpha))
    bundle.n = {
        "cells": length_via_cells(alpha, q),
        "nested": length_via_nested_sums(alpha, q),
        "gv": length_via_gv(alpha, q),
    }
    try:
        k_ap = dimension_arith_progression(alpha)
    except NotApplicable:
        k_ap = None
    bundle.k = {
        "determinant": dimension_via_determinant(alpha),
        "limit": dimension_via_limit_sums(alpha),
        "downset": dimension_by_downset(alpha),
        "arith_progression": k_ap,
    }
    bundle.gv_lower = gv_lower_bound(alpha, q)
    bundle.mdc_upper = mdc_upper_bound(alpha, q)
    return bundle
