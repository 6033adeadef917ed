"""Finite fields GF(p^e) with table-driven arithmetic.

Elements are encoded as integers ``sum(c_i * p**i)`` for the coefficient
vector ``(c_0, ..., c_{e-1})`` of their polynomial representative. The
encoding doubles as the canonical enumeration order: 0, 1, ...
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import FieldTooLarge, InvalidInput, NotAPrimePower

DEFAULT_MAX_Q = 256


def _prime_power(q):
    """Return ``(p, e)`` with ``q == p**e``, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


def _poly_mod(a, mod, p):
    """Remainder of ``a`` by the monic ``mod`` over GF(p); lists, constant first."""
    a = list(a)
    d = len(mod) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * mod[j]) % p
    return [x % p for x in a[:d]] + [0] * max(0, d - len(a))


def _is_irreducible(mod, p):
    """Exhaustive check: no monic factor of degree 1..deg/2."""
    e = len(mod) - 1
    for d in range(1, e // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod(mod, divisor, p)):
                return False
    return True


def smallest_irreducible(p, e):
    """Lexicographically smallest monic irreducible of degree ``e``,
    comparing coefficients from the constant term upward."""
    if e == 1:
        return (0, 1)
    for low in product(range(p), repeat=e):
        # product() order is lexicographic on (c_0, c_1, ...)
        mod = list(low) + [1]
        if _is_irreducible(mod, p):
            return tuple(mod)
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


@dataclass(frozen=True, eq=False)
class FieldSpec:
    p: int
    e: int
    modulus: tuple
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)
    neg_table: np.ndarray = field(repr=False)
    inv_table: np.ndarray = field(repr=False)

    @property
    def q(self):
        return self.p ** self.e

    @property
    def is_prime(self):
        return self.e == 1

    @property
    def dtype(self):
        return self.add_table.dtype

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"FieldSpec(q={self.q}, modulus={self.modulus})"

    def element(self, value):
        return FieldElement(self, value)

    def coefficients(self, value):
        out = []
        for _ in range(self.e):
            value, c = divmod(value, self.p)
            out.append(c)
        return tuple(out)

    def encode(self, coeffs):
        return sum(int(c) % self.p * self.p ** i for i, c in enumerate(coeffs))

    # scalar helpers on encoded ints
    def add(self, a, b):
        return int(self.add_table[a, b])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.q)
        return int(self.inv_table[a])


@lru_cache(maxsize=None)
def _build(p, e):
    q = p ** e
    modulus = smallest_irreducible(p, e)
    dtype = np.uint8 if q <= 256 else np.uint16
    weights = p ** np.arange(e)
    digits = np.array([[(v // p ** i) % p for i in range(e)] for v in range(q)], dtype=np.int64)

    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    neg = ((-digits) % p) @ weights

    # x^i reduced modulo the modulus, for i < 2e - 1
    powers = []
    for i in range(2 * e - 1):
        mono = [0] * i + [1]
        powers.append(_poly_mod(mono, modulus, p) if i >= e else mono + [0] * (e - 1 - i))
    powers = np.array(powers, dtype=np.int64)
    # conv[a, b, k] = coefficient of x^k in the unreduced product
    conv = np.zeros((q, q, 2 * e - 1), dtype=np.int64)
    for i in range(e):
        for j in range(e):
            conv[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
    mul = ((conv @ powers) % p) @ weights

    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
    return FieldSpec(
        p,
        e,
        modulus,
        add.astype(dtype),
        mul.astype(dtype),
        neg.astype(dtype),
        inv.astype(dtype),
    )


def make_field(q, max_q=DEFAULT_MAX_Q):
    """Deterministic ``GF(q)``; raises NotAPrimePower / FieldTooLarge."""
    if not isinstance(q, int) or isinstance(q, bool):
        raise InvalidInput(f"q must be an integer, got {q!r}")
    pe = _prime_power(q)
    if pe is None:
        raise NotAPrimePower(f"q={q} is not a prime power")
    if q > max_q:
        raise FieldTooLarge(f"q={q} exceeds the field size bound {max_q}")
    return _build(*pe)


class FieldElement:
    __slots__ = ("spec", "value")

    def __init__(self, spec, value):
        if isinstance(value, FieldElement):
            value = value.value
        value = int(value)
        if not 0 <= value < spec.q:
            raise InvalidInput(f"{value} is not an element encoding of GF({spec.q})")
        self.spec = spec
        self.value = value

    @property
    def coefficients(self):
        return self.spec.coefficients(self.value)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise InvalidInput("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self * FieldElement(self.spec, self.spec.inv(b))

    def __pow__(self, n):
        result = FieldElement(self.spec, 1)
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.q, self.value))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.spec.q})({self.value})"


def add(x, y):
    return x + y


def mul(x, y):
    return x * y


def neg(x):
    return -x


def inv(x):
    return x.inverse()


def enumerate_elements(spec):
    return [FieldElement(spec, v) for v in range(spec.q)]


def row_reduce(matrix, spec):
    """Reduced row echelon form over ``spec``; returns ``(rref, pivot_columns)``."""
    a = np.array(matrix, dtype=np.int64)
    if a.ndim != 2:
        raise InvalidInput("expected a 2-D matrix")
    add, mul, neg, inv = spec.add_table, spec.mul_table, spec.neg_table, spec.inv_table
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = mul[inv[a[r, c]], a[r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = add[a[i], neg[mul[a[i, c], a[r]]]]
        pivots.append(c)
        r += 1
    return a, pivots


def matrix_rank(matrix, spec):
    return len(row_reduce(matrix, spec)[1])
