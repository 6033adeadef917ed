"""Exact integer and q-polynomial combinatorics.

Everything here works on Python ints, so counts never overflow. The
q-polynomials are dense coefficient tuples indexed by the exponent of q.
"""

from functools import lru_cache
from math import comb

from .errors import InvalidInput


def binomial(n, k):
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _check_q(q):
    if q < 2:
        raise InvalidInput(f"q must be >= 2, got {q}")


def gaussian_binomial(u, v, q):
    """Number of ``v``-dimensional subspaces of ``GF(q)^u``.

    Uses the product formula; zero unless ``0 <= v <= u``.
    """
    _check_q(q)
    if v < 0 or v > u:
        return 0
    num = 1
    den = 1
    for i in range(v):
        num *= q ** (u - i) - 1
        den *= q ** (i + 1) - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


class QPolynomial:
    """Polynomial in ``q`` with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``. Trailing zeros are
    stripped, so the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, exponent, coeff=1):
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, q):
        # Horner; exact for int and Fraction arguments
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    evaluate = __call__

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = QPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                mono = str(c)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                if c == -1:
                    mono = "-" + mono
                elif c != 1:
                    mono = f"{c}*{mono}"
            terms.append(mono)
        return " + ".join(terms).replace("+ -", "- ")


def _as_poly(x):
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, int):
        return QPolynomial([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to QPolynomial")


@lru_cache(maxsize=None)
def gaussian_binomial_poly(u, v):
    """``[u v]_q`` as a polynomial, built with the q-Pascal recurrence."""
    if v < 0 or v > u:
        return QPolynomial()
    if v == 0 or v == u:
        return QPolynomial([1])
    # [u v] = [u-1 v-1] + q^v [u-1 v]
    return gaussian_binomial_poly(u - 1, v - 1) + QPolynomial.monomial(v) * gaussian_binomial_poly(u - 1, v)


def lambda_count(a, b, s, t, q):
    """Signed Möbius sum counting ``t``-spaces ``T`` of a ``b``-space with
    ``T ∩ A = S``, where ``dim A = a`` and ``dim S = s``.
    """
    _check_q(q)
    total = 0
    for r in range(s, t + 1):
        j = r - s
        term = q ** binomial(j, 2) * gaussian_binomial(a - s, j, q) * gaussian_binomial(b - r, t - r, q)
        total += -term if j & 1 else term
    return total


@lru_cache(maxsize=None)
def lambda_poly(a, b, s, t):
    total = QPolynomial()
    for r in range(s, t + 1):
        j = r - s
        term = (
            QPolynomial.monomial(binomial(j, 2), -1 if j & 1 else 1)
            * gaussian_binomial_poly(a - s, j)
            * gaussian_binomial_poly(b - r, t - r)
        )
        total = total + term
    return total


def bareiss_determinant(matrix):
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise InvalidInput("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]
