"""Brute-force ground truth for every character-sum identity we rely on.

Each operation here evaluates a sum by literal enumeration and nothing
else; the closed forms live in `macwilliams` and in the expected values of
the verification campaign.  Clarity beats speed throughout: the transform
is the fast path, these are the referee.

Check ids used in reports ("3.1" ... "3.7", "c3.1", "c3.2", "partition")
are stable wire identifiers, chosen once and kept short for JSON output.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb
from typing import Iterator, Mapping, Sequence

from .code import (
    DEFAULT_SPACE_BUDGET,
    ByteLayout,
    GeneratorMatrix,
    LinearCode,
    dual,
    generating_rows,
    inner_product,
    span,
)
from .errors import BudgetError, ParameterError
from .macwilliams import f_poly
from .polynomial import Polynomial
from .ring import (
    RingElement,
    chi,
    elements,
    ideal_elements,
    monomial,
    mul_bits,
    one,
    partition,
    satisfies_partition_axioms,
    zero,
)
from .weight import enumerator, hamming_weight, support

Byte = tuple[RingElement, ...]

#: Cap on |R|^b for per-byte scans (b*m <= 24 bits of search space).
DEFAULT_BYTE_BUDGET = 1 << 24
#: Cap on candidate subsets tried by the partition search.
PARTITION_SEARCH_BUDGET = 10_000

_EXHAUSTIVE_BITS = 8  # enumerate all bytes when m*b <= this
_DEFAULT_SAMPLES = 100


def _byte_params(c: Byte) -> tuple[int, int]:
    if not c:
        raise ParameterError("byte must have at least one coordinate")
    m = c[0].m
    for x in c:
        if x.m != m:
            raise ParameterError("byte coordinates mix ring parameters")
    return m, len(c)


def _nonzero(m: int) -> tuple[RingElement, ...]:
    return tuple(x for x in elements(m) if not x.is_zero())


def sum_chi_over_ideal(m: int, k: int) -> int:
    """chi summed over the whole ideal <u^k>; 0 whenever the ideal is not {0}."""
    if not 0 <= k < m:
        raise ParameterError(f"need 0 <= k < m={m} (a nonzero ideal), got k={k}")
    return sum(chi(a) for a in ideal_elements(m, k))


def sum_chi_multiples(m: int, a: RingElement) -> int:
    """chi(a*r) summed over every r in R; 2^m when a = 0, else 0."""
    if a.m != m:
        raise ParameterError(f"element has m={a.m}, expected {m}")
    return sum(chi(a * r) for r in elements(m))


def _check_subset(c: Byte, I: Sequence[int]) -> tuple[int, ...]:
    sup = set(support(c))
    I = tuple(sorted(set(I)))
    for i in I:
        if i not in sup:
            raise ParameterError(f"index {i} is outside the support of c")
    return I


def sum_chi_subspace(c: Byte, I: Sequence[int]) -> int:
    """chi(<c, v>) summed over all v supported inside I, zeros included.

    I must be a nonempty subset of supp(c).  The sum factors into one
    full-ring character sum per index, so it is 0 whenever I is nonempty.
    """
    m, b = _byte_params(c)
    I = _check_subset(c, I)
    if not I:
        raise ParameterError("index set must be nonempty")
    total = 0
    for values in itertools.product(elements(m), repeat=len(I)):
        v = [zero(m)] * b
        for i, x in zip(I, values):
            v[i] = x
        total += chi(inner_product(c, v))
    return total


def sum_chi_fixed_support(c: Byte, I: Sequence[int]) -> int:
    """chi(<c, v>) summed over v with support exactly I; equals (-1)^|I|.

    I must be a subset of supp(c); the empty set contributes the single
    term chi(0) = 1.
    """
    m, b = _byte_params(c)
    I = _check_subset(c, I)
    total = 0
    for values in itertools.product(_nonzero(m), repeat=len(I)):
        v = [zero(m)] * b
        for i, x in zip(I, values):
            v[i] = x
        total += chi(inner_product(c, v))
    return total


def sum_chi_Sk(c: Byte, k: int) -> int:
    """chi-sum over v of Hamming weight k supported inside supp(c);
    equals (-1)^k * C(j, k) for j = w(c)."""
    m, b = _byte_params(c)
    sup = support(c)
    if not 0 <= k <= len(sup):
        raise ParameterError(f"need 0 <= k <= w(c)={len(sup)}, got {k}")
    total = 0
    for I in itertools.combinations(sup, k):
        total += sum_chi_fixed_support(c, I)
    return total


def sum_chi_Sbar(c: Byte, k: int) -> int:
    """chi-sum over v of weight k supported outside supp(c);
    equals (2^m - 1)^k * C(b - j, k)."""
    m, b = _byte_params(c)
    outside = tuple(i for i in range(b) if c[i].is_zero())
    if not 0 <= k <= len(outside):
        raise ParameterError(f"need 0 <= k <= b-w(c)={len(outside)}, got {k}")
    total = 0
    for I in itertools.combinations(outside, k):
        for values in itertools.product(_nonzero(m), repeat=k):
            v = [zero(m)] * b
            for i, x in zip(I, values):
                v[i] = x
            total += chi(inner_product(c, v))
    return total


def sum_chi_Sj1j2(c: Byte, j1: int, j2: int) -> int:
    """chi-sum over v with j1 nonzero coordinates inside supp(c) and j2
    outside; equals (-1)^j1 * (2^m - 1)^j2 * C(j, j1) * C(b - j, j2)."""
    m, b = _byte_params(c)
    sup = support(c)
    outside = tuple(i for i in range(b) if c[i].is_zero())
    if not 0 <= j1 <= len(sup):
        raise ParameterError(f"need 0 <= j1 <= w(c)={len(sup)}, got {j1}")
    if not 0 <= j2 <= len(outside):
        raise ParameterError(f"need 0 <= j2 <= b-w(c)={len(outside)}, got {j2}")
    total = 0
    for I_in in itertools.combinations(sup, j1):
        for I_out in itertools.combinations(outside, j2):
            I = I_in + I_out
            for values in itertools.product(_nonzero(m), repeat=j1 + j2):
                v = [zero(m)] * b
                for i, x in zip(I, values):
                    v[i] = x
                total += chi(inner_product(c, v))
    return total


def byte_transform_bruteforce(
    c: Byte, t: int, budget: int = DEFAULT_BYTE_BUDGET
) -> Polynomial:
    """Sum over ALL v in R^b of chi(<c, v>) * z^ceil(w_H(v)/t).

    The closed form is f_poly(w(c), b, m, t); equality is checked
    term-for-term by the campaign and the tests.
    """
    m, b = _byte_params(c)
    if not 1 <= t <= b:
        raise ParameterError(f"need 1 <= t <= b={b}, got t={t}")
    space = 1 << (m * b)
    if space > budget:
        raise BudgetError("byte scan over R^b", space, budget)
    terms: dict[int, int] = {}
    for v in itertools.product(elements(m), repeat=b):
        w = hamming_weight(v)
        e = -(-w // t)
        terms[e] = terms.get(e, 0) + chi(inner_product(c, v))
    return Polynomial(terms)


def dual_enumerator_bruteforce(
    G: GeneratorMatrix, budget: int = DEFAULT_SPACE_BUDGET, workers: int = 1
) -> Polynomial:
    """Weight enumerator of the scanned dual; no transform involved."""
    return enumerator(dual(G, budget=budget, workers=workers))


# --- partition search ----------------------------------------------------


def find_valid_partitions(m: int) -> tuple[frozenset[RingElement], ...]:
    """All half-sized subsets A (0, 1 in A) satisfying the partition axioms.

    Exhausts the C(2^m - 2, 2^(m-1) - 2) candidates, so only small m are
    feasible; larger m are refused rather than subsampled.
    """
    if m < 2:
        raise ParameterError("partition axioms need m >= 2")
    candidates = comb((1 << m) - 2, (1 << (m - 1)) - 2)
    if candidates > PARTITION_SEARCH_BUDGET:
        raise BudgetError(
            "partition search over candidate subsets", candidates, PARTITION_SEARCH_BUDGET
        )
    rest = [x for x in elements(m) if x.bits > 1]
    fixed = (zero(m), one(m))
    found = []
    for combo in itertools.combinations(rest, (1 << (m - 1)) - 2):
        A = frozenset(fixed + combo)
        if satisfies_partition_axioms(m, A):
            found.append(A)
    return tuple(sorted(found, key=lambda A: sorted(x.bits for x in A)))


def partition_uniqueness_search(m: int) -> int:
    """Number of subsets passing every partition axiom (see
    find_valid_partitions for the candidate space)."""
    return len(find_valid_partitions(m))


# --- reports and the verification campaign -------------------------------


@dataclass(frozen=True)
class LemmaReport:
    """One verified identity (or aggregated cell of identities)."""

    lemma: str
    params: Mapping[str, object]
    expected: str
    actual: str
    passed: bool

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "params": dict(self.params),
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


class _Tally:
    """Aggregates many exact comparisons into one cell report."""

    def __init__(self):
        self.total = 0
        self.good = 0
        self.first_bad = ""

    def add(self, expected, actual, desc: str):
        self.total += 1
        if expected == actual:
            self.good += 1
        elif not self.first_bad:
            self.first_bad = f"{desc}: expected {expected}, got {actual}"

    def report(self, lemma: str, params: Mapping[str, object]) -> LemmaReport:
        ok = self.good == self.total
        actual = f"{self.good}/{self.total} exact"
        if not ok:
            actual += f"; first mismatch at {self.first_bad}"
        return LemmaReport(
            lemma=lemma,
            params=dict(params),
            expected=f"exact match on {self.total} instances",
            actual=actual,
            passed=ok,
        )


def _support_sums(c: Byte) -> dict[int, int]:
    """chi(<c, v>) totals, bucketed by the exact support mask of v.

    One full scan of R^b; every per-byte identity below is a regrouping of
    these buckets, so this is the single brute-force engine the campaign
    leans on.
    """
    m, b = _byte_params(c)
    rows = [[mul_bits(x.bits, r, m) for r in range(1 << m)] for x in c]
    digit_mask = (1 << m) - 1
    top = 1 << (m - 1)
    sums: dict[int, int] = {}
    for packed in range(1 << (m * b)):
        ip = 0
        smask = 0
        rest = packed
        for i in range(b):
            d = rest & digit_mask
            rest >>= m
            if d:
                smask |= 1 << i
                ip ^= rows[i][d]
        sums[smask] = sums.get(smask, 0) + (-1 if ip & top else 1)
    return sums


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _sample_bytes(
    m: int, b: int, samples: int, rng: random.Random
) -> list[Byte]:
    if m * b <= _EXHAUSTIVE_BITS:
        return [
            tuple(RingElement(m, d) for d in digits)
            for digits in itertools.product(range(1 << m), repeat=b)
        ]
    out: list[Byte] = [tuple(zero(m) for _ in range(b))]
    for _ in range(samples):
        out.append(tuple(RingElement(m, rng.randrange(1 << m)) for _ in range(b)))
    return out


def _poisson_code(m: int) -> LinearCode:
    layout = ByteLayout(b=2, t=1, n=1)
    row = (one(m), monomial(m, 1 if m >= 2 else 0))
    return span(GeneratorMatrix([row], layout))


def poisson_check(
    C: LinearCode, budget: int = DEFAULT_SPACE_BUDGET, workers: int = 1
) -> LemmaReport:
    """Summation identity: the dual's enumerator equals the average over C
    of the per-word transforms, each a product of per-byte scans."""
    t = C.layout.t
    scanned = enumerator(dual(generating_rows(C), budget=budget, workers=workers))
    cache: dict[tuple[int, ...], Polynomial] = {}
    acc = Polynomial.zero()
    for w in C:
        prod = Polynomial.one()
        for byte in w.bytes():
            key = tuple(x.bits for x in byte)
            poly = cache.get(key)
            if poly is None:
                poly = byte_transform_bruteforce(byte, t, budget=budget)
                cache[key] = poly
            prod = prod * poly
        acc = acc + prod
    averaged = acc.exact_div(len(C))
    return LemmaReport(
        lemma="3.7",
        params={
            "m": C.m,
            "n": C.layout.n,
            "b": C.layout.b,
            "t": t,
            "code_size": len(C),
        },
        expected=str(averaged),
        actual=str(scanned),
        passed=averaged == scanned,
    )


def _cell_reports(
    m: int, b: int, bytes_sample: list[Byte], exhaustive: bool
) -> list[LemmaReport]:
    """All per-byte identity checks for one (m, b) cell, plus the per-t
    byte-transform comparison."""
    q1 = (1 << m) - 1
    tallies = {lem: _Tally() for lem in ("3.3", "3.4", "c3.1", "3.5", "c3.2")}
    t_tallies = {t: _Tally() for t in range(1, b + 1)}
    for c in bytes_sample:
        sums = _support_sums(c)
        smask = 0
        for i in support(c):
            smask |= 1 << i
        omask = ((1 << b) - 1) ^ smask
        j = smask.bit_count()
        ctext = ",".join(str(x) for x in c)
        # all v supported inside a fixed nonempty subset of supp(c): sum 0
        for I in _submasks(smask):
            if I == 0:
                continue
            val = sum(sums.get(J, 0) for J in _submasks(I))
            tallies["3.3"].add(0, val, f"c=({ctext}) I=0b{I:0{b}b}")
        # exact support I inside supp(c): (-1)^|I|, for every subset
        for I in _submasks(smask):
            k = I.bit_count()
            val = sums.get(I, 0)
            tallies["3.4"].add((-1) ** k, val, f"c=({ctext}) I=0b{I:0{b}b}")
        # grouped by weight inside the support: (-1)^k * C(j, k)
        for k in range(j + 1):
            val = sum(
                sums.get(I, 0) for I in _submasks(smask) if I.bit_count() == k
            )
            tallies["c3.1"].add((-1) ** k * comb(j, k), val, f"c=({ctext}) k={k}")
        # weight k outside the support: (2^m - 1)^k * C(b - j, k)
        for k in range(b - j + 1):
            val = sum(
                sums.get(I, 0) for I in _submasks(omask) if I.bit_count() == k
            )
            tallies["3.5"].add(q1**k * comb(b - j, k), val, f"c=({ctext}) k={k}")
        # split weights (j1 inside, j2 outside): product of both factors
        for j1 in range(j + 1):
            for j2 in range(b - j + 1):
                val = sum(
                    v
                    for I, v in sums.items()
                    if (I & smask).bit_count() == j1
                    and (I & omask).bit_count() == j2
                )
                want = (-1) ** j1 * q1**j2 * comb(j, j1) * comb(b - j, j2)
                tallies["c3.2"].add(want, val, f"c=({ctext}) j1={j1} j2={j2}")
        # full byte transform per t, as polynomials
        for t in range(1, b + 1):
            terms: dict[int, int] = {}
            for I, v in sums.items():
                e = -(-I.bit_count() // t)
                terms[e] = terms.get(e, 0) + v
            t_tallies[t].add(
                f_poly(j, b, m, t), Polynomial(terms), f"c=({ctext})"
            )
    reports = []
    base = {"m": m, "b": b, "bytes": len(bytes_sample), "exhaustive": exhaustive}
    for lem in ("3.3", "3.4", "c3.1", "3.5", "c3.2"):
        reports.append(tallies[lem].report(lem, base))
    for t in range(1, b + 1):
        reports.append(t_tallies[t].report("3.6", {**base, "t": t}))
    return reports


def campaign(
    ms: Sequence[int] = (1, 2, 3, 4),
    bs: Sequence[int] = (1, 2, 3),
    samples: int = _DEFAULT_SAMPLES,
    seed: int = 0,
    inject_fault: bool = False,
) -> list[LemmaReport]:
    """Run every identity check over the parameter grid.

    Bytes are enumerated exhaustively when m*b <= 8 and sampled (seeded,
    zero byte always included) otherwise.  inject_fault flips one chi
    value in the first ideal sum as a negative control; exactly one
    report must then fail.
    """
    if samples < 1:
        raise ParameterError(f"samples must be >= 1, got {samples}")
    rng = random.Random(seed)
    reports: list[LemmaReport] = []
    fault_pending = inject_fault
    for m in ms:
        tally = _Tally()
        for k in range(m):
            val = sum_chi_over_ideal(m, k)
            if fault_pending:
                val += 2  # one chi value flipped from -1 to +1
                fault_pending = False
            tally.add(0, val, f"k={k}")
        reports.append(tally.report("3.1", {"m": m}))
        tally = _Tally()
        for a in elements(m):
            want = (1 << m) if a.is_zero() else 0
            tally.add(want, sum_chi_multiples(m, a), f"a={a}")
        reports.append(tally.report("3.2", {"m": m}))
        if m >= 2:
            tally = _Tally()
            A, _ = partition(m)
            tally.add(True, satisfies_partition_axioms(m, A), "axioms (i)-(v)")
            if m == 4:
                canonical = frozenset(RingElement(4, i) for i in range(8))
                tally.add(sorted(x.bits for x in canonical),
                          sorted(x.bits for x in A), "canonical A for m=4")
            reports.append(tally.report("partition", {"m": m}))
        for b in bs:
            exhaustive = m * b <= _EXHAUSTIVE_BITS
            sample = _sample_bytes(m, b, samples, rng)
            reports.extend(_cell_reports(m, b, sample, exhaustive))
        reports.append(poisson_check(_poisson_code(m)))
    return reports
