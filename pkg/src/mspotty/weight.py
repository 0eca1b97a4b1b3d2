"""Byte-wise spotty weights, alpha vectors, and weight distributions.

A byte of Hamming weight h contributes ceil(h/t) to the weight of the word,
so a word's weight is determined by its alpha vector: alpha_j counts the
bytes having exactly j nonzero coordinates (0 <= j <= b).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .code import ByteLayout, LinearCode, Word
from .errors import ParameterError
from .polynomial import Polynomial
from .ring import RingElement


def hamming_weight(coords: Iterable[RingElement]) -> int:
    return sum(1 for x in coords if not x.is_zero())

def support(coords: Sequence[RingElement]) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(coords) if not x.is_zero())


def _ceil_div(a: int, t: int) -> int:
    return -(-a // t)


def m_spotty_weight(w: Word) -> int:
    t = w.layout.t
    return sum(_ceil_div(hamming_weight(byte), t) for byte in w.bytes())


def m_spotty_distance(x: Word, y: Word) -> int:
    # characteristic 2: x - y = x + y
    return m_spotty_weight(x + y)


def alpha_vector(w: Word) -> tuple[int, ...]:
    """(alpha_0, ..., alpha_b) with alpha_j = #bytes of Hamming weight j."""
    counts = [0] * (w.layout.b + 1)
    for byte in w.bytes():
        counts[hamming_weight(byte)] += 1
    return tuple(counts)


def weight_from_alpha(alpha: Sequence[int], t: int) -> int:
    return sum(a * _ceil_div(j, t) for j, a in enumerate(alpha))


class DistributionTable:
    """Count of codewords per alpha vector; rows iterate in lex order."""

    __slots__ = ("layout", "m", "_counts")

    def __init__(
        self,
        counts: Mapping[tuple[int, ...], int],
        layout: ByteLayout,
        m: int,
    ):
        n, width = layout.n, layout.b + 1
        for alpha, c in counts.items():
            if len(alpha) != width or sum(alpha) != n or min(alpha) < 0:
                raise ParameterError(f"not a valid alpha vector: {alpha}")
            if c < 1:
                raise ParameterError(f"count for {alpha} must be positive, got {c}")
        object.__setattr__(self, "_counts", dict(counts))
        object.__setattr__(self, "layout", layout)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("DistributionTable is immutable")

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(sorted(self._counts.items()))

    def count(self, alpha: Sequence[int]) -> int:
        return self._counts.get(tuple(alpha), 0)

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DistributionTable)
            and self.layout == other.layout
            and self.m == other.m
            and self._counts == other._counts
        )

    def __repr__(self) -> str:
        return (
            f"DistributionTable({len(self._counts)} alpha rows, "
            f"total={self.total}, layout={self.layout})"
        )


def distribution(C: LinearCode) -> DistributionTable:
    counts: dict[tuple[int, ...], int] = {}
    for w in C:
        a = alpha_vector(w)
        counts[a] = counts.get(a, 0) + 1
    return DistributionTable(counts, C.layout, C.m)


def enumerator(C: LinearCode) -> Polynomial:
    """W(z) = sum over codewords of z^weight, summed word by word."""
    counts: dict[int, int] = {}
    for w in C:
        e = m_spotty_weight(w)
        counts[e] = counts.get(e, 0) + 1
    return Polynomial(counts)


def minimum_distance(C: LinearCode) -> int:
    """Least weight among nonzero codewords (equals least pairwise
    distance, by linearity)."""
    best = None
    for w in C:
        if all(x.is_zero() for x in w):
            continue
        e = m_spotty_weight(w)
        if best is None or e < best:
            best = e
    if best is None:
        raise ParameterError("the zero code has no minimum distance")
    return best
