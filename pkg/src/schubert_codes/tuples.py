"""Index tuples ``α = (α_1 < ... < α_ℓ)`` in ``{1..m}`` and their Bruhat order."""

from dataclasses import dataclass
from itertools import combinations
import re

from .errors import InvalidInput


@dataclass(frozen=True, order=True)
class IndexTuple:
    entries: tuple
    m: int

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        ell = len(entries)
        if not 1 <= ell <= self.m:
            raise InvalidInput(f"need 1 <= l <= m, got l={ell}, m={self.m}")
        if entries[0] < 1 or entries[-1] > self.m:
            raise InvalidInput(f"entries of {format_tuple(entries)} must lie in 1..{self.m}")
        if any(x >= y for x, y in zip(entries, entries[1:])):
            raise InvalidInput(f"{format_tuple(entries)} is not strictly increasing")

    @property
    def ell(self):
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return format_tuple(self.entries)

    @classmethod
    def minimal(cls, ell, m):
        return cls(tuple(range(1, ell + 1)), m)

    @classmethod
    def theta(cls, ell, m):
        """The maximal tuple; its Schubert variety is the whole Grassmannian."""
        return cls(tuple(range(m - ell + 1, m + 1)), m)

    @classmethod
    def eta(cls, ell, m):
        """The unique submaximal tuple, indexing the Schubert divisor."""
        if not 1 < ell < m:
            raise InvalidInput(f"Schubert divisor needs 1 < l < m, got l={ell}, m={m}")
        return cls((m - ell,) + tuple(range(m - ell + 2, m + 1)), m)


@dataclass(frozen=True)
class BlockStructure:
    """Maximal decomposition of a tuple into runs of consecutive integers.

    ``boundaries`` holds ``p_1 < ... < p_u``: block ``i`` covers positions
    ``p_i + 1 .. p_{i+1}`` (1-based, with ``p_0 = 0`` and ``p_{u+1} = ℓ``).
    """

    boundaries: tuple
    ell: int

    @property
    def u(self):
        return len(self.boundaries)

    def spans(self):
        """0-based half-open position ranges of each block."""
        cuts = (0,) + self.boundaries + (self.ell,)
        return [(cuts[i], cuts[i + 1]) for i in range(len(cuts) - 1)]


def format_tuple(entries):
    return "(" + ",".join(str(x) for x in entries) + ")"


_TUPLE_RE = re.compile(r"^\s*\(?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)?\s*$")


def parse_tuple(text, m):
    """Parse ``"(2,4)"`` or ``"2,4"`` into an :class:`IndexTuple`."""
    match = _TUPLE_RE.match(text)
    if not match:
        raise InvalidInput(f"cannot parse index tuple {text!r}")
    return IndexTuple(tuple(int(x) for x in match.group(1).split(",")), m)


def delta(alpha):
    return sum(a - i for i, a in enumerate(alpha.entries, start=1))


def leq(beta, alpha):
    if beta.ell != alpha.ell or beta.m != alpha.m:
        raise InvalidInput(f"cannot compare {beta} in I({beta.ell},{beta.m}) with {alpha} in I({alpha.ell},{alpha.m})")
    return all(b <= a for b, a in zip(beta.entries, alpha.entries))


def enumerate_downset(alpha):
    """All ``β <= α`` in lexicographic order."""
    ell, bound = alpha.ell, alpha.entries
    out = []
    prefix = []

    def rec(i, low):
        if i == ell:
            out.append(IndexTuple(tuple(prefix), alpha.m))
            return
        for x in range(low, bound[i] + 1):
            prefix.append(x)
            rec(i + 1, x + 1)
            prefix.pop()

    rec(0, 1)
    return out


def enumerate_all(ell, m):
    if not 1 <= ell <= m:
        raise InvalidInput(f"need 1 <= l <= m, got l={ell}, m={m}")
    return [IndexTuple(c, m) for c in combinations(range(1, m + 1), ell)]


def consecutive_blocks(alpha):
    e = alpha.entries
    boundaries = tuple(i for i in range(1, len(e)) if e[i] != e[i - 1] + 1)
    return BlockStructure(boundaries, len(e))


def from_blocks(blocks, starts, m):
    """Rebuild a tuple from its block structure and each block's first value."""
    entries = []
    for (lo, hi), start in zip(blocks.spans(), starts):
        entries.extend(range(start, start + hi - lo))
    return IndexTuple(tuple(entries), m)
