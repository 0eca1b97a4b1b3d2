"""Words over F2[u]/(u^m), byte layouts, generator matrices, codes and duals.

A word of length N = n*b splits into n bytes of b coordinates each; byte i
is coords[i*b : (i+1)*b].  Codes are materialized as explicit, canonically
sorted codeword tuples: every downstream statistic needs a full pass anyway
at the desk-scale parameters this package targets.

The dual is found by exhaustive scan of the ambient space R^N, never
algebraically.  The scan packs each candidate vector into an integer
(coordinate i occupies bits [m*i, m*(i+1))), checks orthogonality against
every generator row with vectorized table lookups, and may split the index
range into contiguous chunks handled by parallel workers; the merge is by
chunk order, so results are identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetError, MatrixParseError, ParameterError
from .ring import RingElement, mul_bits, parse_element, zero

#: Default cap on |R|^k coefficient tuples enumerated by span().
DEFAULT_SPAN_BUDGET = 1 << 24
#: Default cap on |R|^N ambient vectors scanned by dual().
DEFAULT_SPACE_BUDGET = 1 << 28

_SCAN_CHUNK = 1 << 20


@dataclass(frozen=True)
class ByteLayout:
    """b bits per byte, spotty parameter t (1 <= t <= b), n bytes."""

    b: int
    t: int
    n: int

    def __post_init__(self):
        if self.b < 1:
            raise ParameterError(f"byte size b must be >= 1, got {self.b}")
        if not 1 <= self.t <= self.b:
            raise ParameterError(
                f"spotty parameter t must satisfy 1 <= t <= b={self.b}, got {self.t}"
            )
        if self.n < 1:
            raise ParameterError(f"byte count n must be >= 1, got {self.n}")

    @property
    def N(self) -> int:
        return self.n * self.b


def _uniform_m(coords: Sequence[RingElement]) -> int:
    m = coords[0].m
    for x in coords:
        if x.m != m:
            raise ParameterError("coordinates mix different ring parameters")
    return m


class Word:
    """Immutable length-N vector over the ring, bound to a byte layout."""

    __slots__ = ("coords", "layout", "m")

    def __init__(self, coords: Iterable[RingElement], layout: ByteLayout):
        coords = tuple(coords)
        if len(coords) != layout.N:
            raise ParameterError(
                f"word length {len(coords)} != layout N = {layout.N}"
            )
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "layout", layout)
        object.__setattr__(self, "m", _uniform_m(coords))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def from_bits(cls, bits: Iterable[int], m: int, layout: ByteLayout) -> "Word":
        return cls((RingElement(m, x) for x in bits), layout)

    def bits(self) -> tuple[int, ...]:
        return tuple(x.bits for x in self.coords)

    def byte(self, i: int) -> tuple[RingElement, ...]:
        """Byte i (0-indexed) as a coordinate slice."""
        b = self.layout.b
        if not 0 <= i < self.layout.n:
            raise ParameterError(f"byte index {i} out of range")
        return self.coords[i * b : (i + 1) * b]

    def bytes(self) -> Iterator[tuple[RingElement, ...]]:
        for i in range(self.layout.n):
            yield self.byte(i)

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.layout != self.layout or other.m != self.m:
            raise ParameterError("word layouts or ring parameters differ")
        return Word((a + b for a, b in zip(self.coords, other.coords)), self.layout)

    def scale(self, r: RingElement) -> "Word":
        return Word((r * x for x in self.coords), self.layout)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self) -> Iterator[RingElement]:
        return iter(self.coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.layout == other.layout
            and self.coords == other.coords
        )

    def __lt__(self, other: "Word") -> bool:
        return self.bits() < other.bits()

    def __hash__(self) -> int:
        return hash((self.layout, self.coords))

    def __str__(self) -> str:
        b = self.layout.b
        return " | ".join(
            " ".join(str(x) for x in self.coords[i * b : (i + 1) * b])
            for i in range(self.layout.n)
        )

    def __repr__(self) -> str:
        return f"Word({self})"


class GeneratorMatrix:
    """k rows of length N over a common ring; k = 0 needs explicit m."""

    __slots__ = ("rows", "m", "layout")

    def __init__(
        self,
        rows: Iterable[Sequence[RingElement]],
        layout: ByteLayout,
        m: int | None = None,
    ):
        rows = tuple(tuple(row) for row in rows)
        for row in rows:
            if len(row) != layout.N:
                raise ParameterError(
                    f"row length {len(row)} != layout N = {layout.N}"
                )
        if rows:
            row_m = _uniform_m([x for row in rows for x in row])
            if m is not None and m != row_m:
                raise ParameterError(f"declared m={m} != row entries m={row_m}")
            m = row_m
        elif m is None:
            raise ParameterError("empty matrix requires an explicit m")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "layout", layout)

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorMatrix is immutable")

    @property
    def k(self) -> int:
        return len(self.rows)

    def row_words(self) -> tuple[Word, ...]:
        return tuple(Word(row, self.layout) for row in self.rows)


class LinearCode:
    """Deduplicated codeword set in canonical (coordinate-lex) order."""

    __slots__ = ("codewords", "m", "layout", "_index")

    def __init__(self, codewords: Iterable[Word], layout: ByteLayout, m: int):
        unique = sorted(set(codewords))
        if not unique:
            raise ParameterError("a linear code cannot be empty")
        for w in unique:
            if w.layout != layout or w.m != m:
                raise ParameterError("codeword layout or ring parameter mismatch")
        object.__setattr__(self, "codewords", tuple(unique))
        object.__setattr__(self, "layout", layout)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_index", frozenset(unique))

    def __setattr__(self, name, value):
        raise AttributeError("LinearCode is immutable")

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.codewords)

    def __contains__(self, w: Word) -> bool:
        return w in self._index

    def ambient_size(self) -> int:
        return 1 << (self.m * self.layout.N)

    def __repr__(self) -> str:
        return (
            f"LinearCode(|C|={len(self.codewords)}, m={self.m}, "
            f"layout={self.layout})"
        )


def inner_product(x: Sequence[RingElement], y: Sequence[RingElement]) -> RingElement:
    """Sum of coordinatewise products; byte grouping does not affect it."""
    if len(x) != len(y):
        raise ParameterError(f"length mismatch: {len(x)} vs {len(y)}")
    m = _uniform_m(tuple(x) + tuple(y))
    acc = 0
    for a, b in zip(x, y):
        acc ^= mul_bits(a.bits, b.bits, m)
    return RingElement(m, acc)


def span(G: GeneratorMatrix, budget: int = DEFAULT_SPAN_BUDGET) -> LinearCode:
    """All R-linear combinations of the rows of G, deduplicated.

    The contract is an enumeration of |R|^k coefficient tuples, so that count
    is what the budget guards; internally the span is closed row by row,
    which visits at most |C| * |R| partial words per row.
    """
    m, N = G.m, G.layout.N
    tuples = 1 << (m * G.k)
    if tuples > budget:
        raise BudgetError("span over R^k coefficient tuples", tuples, budget)
    words = {(0,) * N}
    scalars = range(1 << m)
    for row in G.rows:
        row_bits = tuple(x.bits for x in row)
        multiples = [
            tuple(mul_bits(a, rb, m) for rb in row_bits) for a in scalars
        ]
        words = {
            tuple(wb ^ mb for wb, mb in zip(w, mult))
            for w in words
            for mult in multiples
        }
    return LinearCode(
        (Word.from_bits(bits, m, G.layout) for bits in words), G.layout, m
    )


def code_size_from_profile(m: int, profile: Sequence[int]) -> int:
    """2^s with s = sum over i of (m - i + 1) * k_i, for a standard-form
    row profile (k_1, ..., k_m)."""
    if len(profile) != m:
        raise ParameterError(
            f"profile needs one count per power, expected {m} got {len(profile)}"
        )
    if any(k < 0 for k in profile):
        raise ParameterError("profile counts must be non-negative")
    s = sum((m - i) * k for i, k in enumerate(profile))  # i is 0-based here
    return 1 << s


def _scan_chunk(
    lo: int, hi: int, m: int, n_coords: int, rows_bits: tuple[tuple[int, ...], ...]
) -> np.ndarray:
    """Packed indices in [lo, hi) orthogonal to every generator row."""
    mask = (1 << m) - 1
    idx = np.arange(lo, hi, dtype=np.uint64)
    ok = np.ones(idx.shape, dtype=bool)
    digits = [
        ((idx >> np.uint64(m * i)) & np.uint64(mask)).astype(np.uint32)
        for i in range(n_coords)
    ]
    for row in rows_bits:
        acc = np.zeros(idx.shape, dtype=np.uint16)
        for i, c in enumerate(row):
            if c == 0:
                continue
            table = np.array(
                [mul_bits(c, x, m) for x in range(1 << m)], dtype=np.uint16
            )
            acc ^= table[digits[i]]
        ok &= acc == 0
    return idx[ok]


def dual(
    G: GeneratorMatrix,
    budget: int = DEFAULT_SPACE_BUDGET,
    workers: int = 1,
    chunk_size: int = _SCAN_CHUNK,
) -> LinearCode:
    """Exhaustive-scan dual: every v in R^N with <row, v> = 0 for all rows.

    Orthogonality to the generators implies orthogonality to the whole code
    by bilinearity.  An empty matrix dualizes to the full space.
    """
    if workers < 1:
        raise ParameterError(f"workers must be >= 1, got {workers}")
    m, N = G.m, G.layout.N
    if m * N > 62:
        raise ParameterError(
            f"scan index needs {m * N} bits, beyond 64-bit packing"
        )
    space = 1 << (m * N)
    if space > budget:
        raise BudgetError("dual scan over R^N", space, budget)
    rows_bits = tuple(tuple(x.bits for x in row) for row in G.rows)
    chunks = [(lo, min(lo + chunk_size, space)) for lo in range(0, space, chunk_size)]
    if workers == 1 or len(chunks) == 1:
        hits = [_scan_chunk(lo, hi, m, N, rows_bits) for lo, hi in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_scan_chunk, lo, hi, m, N, rows_bits)
                for lo, hi in chunks
            ]
            hits = [f.result() for f in futures]  # submission order: deterministic
    mask = (1 << m) - 1
    found = np.concatenate(hits) if len(hits) > 1 else hits[0]
    words = [
        Word.from_bits(((v >> (m * i)) & mask for i in range(N)), m, G.layout)
        for v in found.tolist()
    ]
    return LinearCode(words, G.layout, m)


def generating_rows(C: LinearCode) -> GeneratorMatrix:
    """A small generating subset of C, found greedily by closing the span.

    Useful for re-dualizing a code that is only known by its codeword set.
    """
    m, layout, N = C.m, C.layout, C.layout.N
    scalars = range(1 << m)
    spanned = {(0,) * N}
    gens: list[tuple[RingElement, ...]] = []
    for w in C.codewords:
        bits = w.bits()
        if bits in spanned:
            continue
        gens.append(w.coords)
        multiples = [tuple(mul_bits(a, x, m) for x in bits) for a in scalars]
        spanned = {
            tuple(sb ^ mb for sb, mb in zip(s, mult))
            for s in spanned
            for mult in multiples
        }
        if len(spanned) == len(C):
            break
    return GeneratorMatrix(gens, layout, m=m)


# --- matrix file format -------------------------------------------------
#
#   # comment lines start with '#'; blank lines are ignored
#   m=<int> b=<int> t=<int>
#   <row of whitespace-separated element tokens, length a multiple of b>
#   ...
#
# Every row must have the same length; n is inferred from it.


def _parse_header(line: str, lineno: int) -> tuple[int, int, int]:
    fields = line.split()
    keys = ("m", "b", "t")
    if len(fields) != 3 or any(
        not f.startswith(k + "=") for f, k in zip(fields, keys)
    ):
        raise MatrixParseError(
            f"expected header 'm=<int> b=<int> t=<int>', got {line!r}", lineno
        )
    values = []
    for field, key in zip(fields, keys):
        body = field[len(key) + 1 :]
        try:
            values.append(int(body))
        except ValueError:
            raise MatrixParseError(f"bad integer for {key}: {body!r}", lineno) from None
    return values[0], values[1], values[2]


def parse_matrix_text(text: str) -> GeneratorMatrix:
    header: tuple[int, int, int] | None = None
    header_line = 0
    rows: list[tuple[RingElement, ...]] = []
    row_len: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _parse_header(line, lineno)
            header_line = lineno
            continue
        m = header[0]
        try:
            row = tuple(parse_element(tok, m) for tok in line.split())
        except ParameterError as exc:
            raise MatrixParseError(str(exc), lineno) from exc
        if row_len is None:
            row_len = len(row)
            if row_len % header[1] != 0:
                raise MatrixParseError(
                    f"row length {row_len} is not a multiple of b={header[1]}",
                    lineno,
                )
        elif len(row) != row_len:
            raise MatrixParseError(
                f"row length {len(row)} differs from first row ({row_len})",
                lineno,
            )
        rows.append(row)
    if header is None:
        raise MatrixParseError("missing header line 'm=<int> b=<int> t=<int>'")
    if not rows:
        raise MatrixParseError("matrix file contains no rows")
    m, b, t = header
    try:
        layout = ByteLayout(b=b, t=t, n=row_len // b)
        return GeneratorMatrix(rows, layout, m=m)
    except ParameterError as exc:
        raise MatrixParseError(str(exc), header_line) from exc


def load_matrix(path) -> GeneratorMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix_text(fh.read())
