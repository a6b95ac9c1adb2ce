"""Quantum determinant and the quantum Berezinian, in both forms.

The quantum determinant is the alternating sum over permutations of the even
block with argument shifts u, u-1, ..., u-m+1; it equals the ordered product
of the diagonal Gauss series d_1(u) d_2(u-1) ... d_m(u-m+1).  The Berezinian
multiplies it by the alternating sum over the odd block of inverse-matrix
entries t'_{m+s, m+sigma(s)}(u-m+s), and factors as

    d_1(u) ... d_m(u-m+1) * d_{m+1}(u-m+1)^-1 ... d_{m+n}(u-m+n)^-1.

Empty blocks contribute the constant series 1.
"""

from __future__ import annotations

import itertools

from .algebra import Shape, algebra
from .matrixops import gauss, t_prime
from .series import Series, t_series


def _signed_permutations(n: int):
    for perm in itertools.permutations(range(1, n + 1)):
        sgn = 1
        for a in range(n):
            for b in range(a + 1, n):
                if perm[a] > perm[b]:
                    sgn = -sgn
        yield perm, sgn


def quantum_determinant(shape: Shape, order: int) -> Series:
    """Alternating sum over the even block with shifts 0..m-1; the constant
    series 1 when m = 0."""
    alg = algebra(shape.m, shape.n)
    m = shape.m
    out = Series.scalar(alg, 0, order)
    if m == 0:
        return Series.one(alg, order)
    for perm, sgn in _signed_permutations(m):
        term = Series.one(alg, order)
        for col in range(1, m + 1):
            term = term * t_series(alg, perm[col - 1], col, order).shift(col - 1)
        out = out + (term if sgn > 0 else -term)
    return out


def berezinian_sum(shape: Shape, order: int, convention: str = "plain") -> Series:
    """Defining form: quantum determinant times the alternating odd-block sum
    of shifted inverse-matrix entries."""
    alg = algebra(shape.m, shape.n)
    m, n = shape.m, shape.n
    even = quantum_determinant(shape, order)
    if n == 0:
        return even
    tp = t_prime(shape, order, convention)
    odd = Series.scalar(alg, 0, order)
    for perm, sgn in _signed_permutations(n):
        term = Series.one(alg, order)
        for s in range(1, n + 1):
            term = term * tp.entry(m + s, m + perm[s - 1]).shift(m - s)
        odd = odd + (term if sgn > 0 else -term)
    return even * odd


def berezinian_factored(shape: Shape, order: int, convention: str = "plain") -> Series:
    """Alternative form: ordered product of shifted diagonal Gauss series and
    inverse odd-block factors."""
    alg = algebra(shape.m, shape.n)
    m, n = shape.m, shape.n
    _, D, _ = gauss(shape, order, convention)
    out = Series.one(alg, order)
    for i in range(1, m + 1):
        out = out * D.entry(i, i).shift(i - 1)
    for s in range(1, n + 1):
        out = out * D.entry(m + s, m + s).shift(m - s).inverse()
    return out
