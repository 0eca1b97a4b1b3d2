"""Duality transform for byte-wise spotty weight enumerators.

The dual enumerator comes from the code's alpha-vector distribution alone:

    W_dual(z) = (1/|C|) * sum over alpha of A_alpha * prod_j F_j(z)^alpha_j

where F_j is a fixed per-byte kernel polynomial depending on (b, m, t).
Everything is exact integer arithmetic; the final division must leave no
remainder, and a remainder is reported as a corrupted-input error rather
than rounded away.
"""

from __future__ import annotations

from math import comb

from .errors import ParameterError
from .polynomial import Polynomial
from .weight import DistributionTable, weight_from_alpha


def f_poly(j: int, b: int, m: int, t: int) -> Polynomial:
    """Kernel polynomial for bytes of Hamming weight j.

    F_j(z) = sum over j1 <= j, j2 <= b - j of
             (-1)^j1 * (2^m - 1)^j2 * C(j, j1) * C(b - j, j2) * z^ceil((j1+j2)/t)
    """
    if m < 1:
        raise ParameterError(f"ring exponent m must be >= 1, got {m}")
    if not 0 <= j <= b:
        raise ParameterError(f"byte weight j must satisfy 0 <= j <= b={b}, got {j}")
    if not 1 <= t <= b:
        raise ParameterError(f"need 1 <= t <= b={b}, got t={t}")
    q1 = (1 << m) - 1
    terms: dict[int, int] = {}
    for j1 in range(j + 1):
        sign = -1 if j1 % 2 else 1
        cj1 = comb(j, j1)
        for j2 in range(b - j + 1):
            e = -(-(j1 + j2) // t)
            terms[e] = terms.get(e, 0) + sign * cj1 * comb(b - j, j2) * q1**j2
    return Polynomial(terms)


def enumerator_from_distribution(dist: DistributionTable) -> Polynomial:
    """W(z) rebuilt from alpha counts; must match the word-by-word sum."""
    t = dist.layout.t
    terms: dict[int, int] = {}
    for alpha, count in dist.items():
        e = weight_from_alpha(alpha, t)
        terms[e] = terms.get(e, 0) + count
    return Polynomial(terms)


def transform(
    dist: DistributionTable, code_size: int, m: int | None = None, t: int | None = None
) -> Polynomial:
    """Dual enumerator from a primal distribution table.

    m and t default to the table's own parameters; passing them explicitly
    is only for probing mismatched kernels.  code_size is the primal |C|
    and must divide the accumulated sum exactly.
    """
    if code_size < 1:
        raise ParameterError(f"code size must be >= 1, got {code_size}")
    b = dist.layout.b
    m = dist.m if m is None else m
    t = dist.layout.t if t is None else t
    kernels = [f_poly(j, b, m, t) for j in range(b + 1)]
    acc = Polynomial.zero()
    for alpha, count in dist.items():
        prod = Polynomial.one()
        for j, aj in enumerate(alpha):
            if aj:
                prod = prod * kernels[j] ** aj
        acc = acc + prod.scale(count)
    return acc.exact_div(code_size)
