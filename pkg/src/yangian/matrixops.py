"""Matrices over the series ring: inversion, quasideterminants, Gauss factors.

Two sign conventions are supported for the generating matrix.  Under
``"twisted"`` the (i, j) entry stores t_ij(u) * (-1)^(parity(j)*(parity(i)+1)),
so that ordinary row-column multiplication realizes the graded tensor
composition; under ``"plain"`` entries store t_ij(u) directly.  Which
convention the identity checks freeze is resolved empirically (see
:mod:`yangian.checks`), never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Shape, algebra
from .series import Series, t_series

CONVENTIONS = ("twisted", "plain")


class QuasideterminantError(ValueError):
    """The requested quasideterminant is undefined (non-invertible block)."""


@dataclass(frozen=True)
class SuperMatrix:
    shape: Shape
    order: int
    convention: str
    entries: tuple  # tuple of tuples of Series, square

    @property
    def size(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> Series:
        """1-based access."""
        return self.entries[i - 1][j - 1]

    def submatrix(self, rows, cols) -> "SuperMatrix":
        """Submatrix by 1-based row/column index lists (order preserved)."""
        grid = tuple(
            tuple(self.entries[i - 1][j - 1] for j in cols) for i in rows
        )
        return SuperMatrix(self.shape, self.order, self.convention, grid)


def twist_sign(shape: Shape, i: int, j: int, convention: str) -> int:
    if convention == "plain":
        return 1
    if convention == "twisted":
        return -1 if shape.parity(j) * (shape.parity(i) + 1) % 2 else 1
    raise ValueError(f"unknown convention {convention!r}")


def build_T(shape: Shape, order: int, convention: str = "twisted") -> SuperMatrix:
    """The generating matrix under the given sign convention."""
    alg = algebra(shape.m, shape.n)
    M = shape.size
    grid = []
    for i in range(1, M + 1):
        row = []
        for j in range(1, M + 1):
            s = t_series(alg, i, j, order)
            if twist_sign(shape, i, j, convention) < 0:
                s = -s
            row.append(s)
        grid.append(tuple(row))
    return SuperMatrix(shape, order, convention, tuple(grid))


def identity_matrix(shape: Shape, order: int, size: int, convention: str) -> SuperMatrix:
    alg = algebra(shape.m, shape.n)
    one = Series.one(alg, order)
    zero = Series.scalar(alg, 0, order)
    grid = tuple(
        tuple(one if i == j else zero for j in range(size)) for i in range(size)
    )
    return SuperMatrix(shape, order, convention, grid)


def matmul(A: SuperMatrix, B: SuperMatrix) -> SuperMatrix:
    if A.size != B.size or A.order != B.order:
        raise ValueError("matrix size/order mismatch")
    k = A.size
    grid = tuple(
        tuple(
            sum(
                (A.entries[i][s] * B.entries[s][j] for s in range(1, k)),
                A.entries[i][0] * B.entries[0][j],
            )
            for j in range(k)
        )
        for i in range(k)
    )
    return SuperMatrix(A.shape, A.order, A.convention, grid)


def _rational_inverse(rows):
    """Exact inverse of a small rational matrix (Gauss-Jordan)."""
    k = len(rows)
    aug = [list(map(Fraction, r)) + [Fraction(int(c == r_i)) for c in range(k)]
           for r_i, r in enumerate(rows)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            raise QuasideterminantError("singular constant-term matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def mat_inverse(M: SuperMatrix) -> SuperMatrix:
    """Exact inverse to the truncation order.

    Splits M = C + X with C the rational constant-term matrix, and sums the
    Neumann series of C^-1 X (nilpotent in the truncated ring).
    """
    alg = algebra(M.shape.m, M.shape.n)
    k = M.size
    const = []
    for i in range(k):
        row = []
        for j in range(k):
            c = M.entries[i][j].coeff(0).scalar_value()
            if c is None:
                raise QuasideterminantError(
                    f"non-scalar constant term at entry ({i + 1},{j + 1})"
                )
            row.append(c)
        const.append(row)
    cinv = _rational_inverse(const)

    zero = Series.scalar(alg, 0, M.order)

    def strip_const(s: Series) -> Series:
        coeffs = (alg.zero(),) + s.coeffs[1:]
        return Series(alg, M.order, coeffs)

    # Y = C^-1 X, entries of positive u^-1 order
    Y = [
        [
            sum(
                (strip_const(M.entries[s][j]) * cinv[i][s] for s in range(1, k)),
                strip_const(M.entries[0][j]) * cinv[i][0],
            )
            for j in range(k)
        ]
        for i in range(k)
    ]
    one = Series.one(alg, M.order)
    S = [[one if i == j else zero for j in range(k)] for i in range(k)]
    P = [[one if i == j else zero for j in range(k)] for i in range(k)]
    for _ in range(M.order):
        P = [
            [
                sum(
                    (-(Y[i][s]) * P[s][j] for s in range(1, k)),
                    -(Y[i][0]) * P[0][j],
                )
                for j in range(k)
            ]
            for i in range(k)
        ]
        S = [[S[i][j] + P[i][j] for j in range(k)] for i in range(k)]
    out = tuple(
        tuple(
            sum((S[i][s] * cinv[s][j] for s in range(1, k)), S[i][0] * cinv[0][j])
            for j in range(k)
        )
        for i in range(k)
    )
    return SuperMatrix(M.shape, M.order, M.convention, out)


def t_prime(shape: Shape, order: int, convention: str) -> SuperMatrix:
    """Entries of the inverse generating matrix, with the twist removed on
    read-out so that entry (i, j) is the series t'_ij(u)."""
    inv = mat_inverse(build_T(shape, order, convention))
    grid = tuple(
        tuple(
            -inv.entries[i - 1][j - 1]
            if twist_sign(shape, i, j, convention) < 0
            else inv.entries[i - 1][j - 1]
            for j in range(1, shape.size + 1)
        )
        for i in range(1, shape.size + 1)
    )
    return SuperMatrix(shape, order, convention, grid)


def quasideterminant(M: SuperMatrix, i: int, j: int) -> Series:
    """The (i, j) quasideterminant.

    Computed as m_ij - row_i . (M with row i, col j deleted)^-1 . col_j,
    which needs only the deleted submatrix to be invertible.  When M itself
    is invertible this equals ((M^-1)_ji)^-1.
    """
    k = M.size
    if not (1 <= i <= k and 1 <= j <= k):
        raise IndexError("quasideterminant position out of range")
    if k == 1:
        return M.entry(1, 1)
    rows = [r for r in range(1, k + 1) if r != i]
    cols = [c for c in range(1, k + 1) if c != j]
    try:
        Binv = mat_inverse(M.submatrix(rows, cols))
    except QuasideterminantError as exc:
        raise QuasideterminantError(
            f"quasideterminant ({i},{j}) undefined: {exc}"
        ) from exc
    res = M.entry(i, j)
    for cpos, jp in enumerate(cols):
        for rpos, ip in enumerate(rows):
            res = res - M.entry(i, jp) * Binv.entries[cpos][rpos] * M.entry(ip, j)
    return res


def quasidet_via_inverse(M: SuperMatrix, i: int, j: int) -> Series:
    """Direct form ((M^-1)_ji)^-1; needs M invertible and that entry to have
    a nonzero scalar constant term."""
    inv = mat_inverse(M)
    entry = inv.entry(j, i)
    c0 = entry.coeff(0).scalar_value()
    if c0 is None or c0 == 0:
        raise QuasideterminantError(
            f"entry ({j},{i}) of the inverse has no invertible constant term"
        )
    return entry.inverse()


def bordered_quasidet(M: SuperMatrix, rows, cols) -> Series:
    """Quasideterminant of the (rows x cols) submatrix boxed at its last
    row/column position."""
    sub = M.submatrix(rows, cols)
    return quasideterminant(sub, len(rows), len(cols))


_GAUSS_CACHE: dict = {}


def gauss(shape: Shape, order: int, convention: str = "twisted"):
    """Gauss factors (F, D, E) of the generating matrix.

    D is diagonal with d_i the boxed quasideterminant of the leading i x i
    block; E is upper unitriangular, F lower unitriangular, and
    F * D * E equals the generating matrix exactly to the truncation order.
    The printed sources for the e/f minors carry two typos in their border
    rows; the row sets used here are the ones validated by the F*D*E
    identity (see the gauss check).
    """
    key = (shape, order, convention)
    hit = _GAUSS_CACHE.get(key)
    if hit is not None:
        return hit
    alg = algebra(shape.m, shape.n)
    M = build_T(shape, order, convention)
    k = shape.size
    zero = Series.scalar(alg, 0, order)
    one = Series.one(alg, order)

    d = [bordered_quasidet(M, list(range(1, i + 1)), list(range(1, i + 1)))
         for i in range(1, k + 1)]
    D = tuple(
        tuple(d[i] if i == j else zero for j in range(k)) for i in range(k)
    )

    E = [[one if i == j else zero for j in range(k)] for i in range(k)]
    F = [[one if i == j else zero for j in range(k)] for i in range(k)]
    for i in range(1, k):
        for j in range(i + 1, k + 1):
            lead = list(range(1, i))
            minor_e = bordered_quasidet(M, lead + [i], lead + [j])
            E[i - 1][j - 1] = d[i - 1].inverse() * minor_e
            minor_f = bordered_quasidet(M, lead + [j], lead + [i])
            F[j - 1][i - 1] = minor_f * d[i - 1].inverse()

    factors = (
        SuperMatrix(shape, order, convention, tuple(map(tuple, F))),
        SuperMatrix(shape, order, convention, D),
        SuperMatrix(shape, order, convention, tuple(map(tuple, E))),
    )
    _GAUSS_CACHE[key] = factors
    return factors


def defe_series(shape: Shape, order: int, which: str, index: int,
                convention: str = "twisted") -> Series:
    """Named generating series from the Gauss factors: d_i, e_i = e_{i,i+1},
    or f_i = f_{i+1,i}."""
    F, D, E = gauss(shape, order, convention)
    k = shape.size
    if which == "d":
        if not 1 <= index <= k:
            raise IndexError(f"d index {index} out of range")
        return D.entry(index, index)
    if which == "e":
        if not 1 <= index <= k - 1:
            raise IndexError(f"e index {index} out of range")
        return E.entry(index, index + 1)
    if which == "f":
        if not 1 <= index <= k - 1:
            raise IndexError(f"f index {index} out of range")
        return F.entry(index + 1, index)
    raise ValueError(f"unknown series family {which!r}")


def mat_witnesses(A: SuperMatrix, B: SuperMatrix):
    """Entry/coefficient mismatches between two matrices, sorted."""
    if A.size != B.size or A.order != B.order:
        raise ValueError("matrix size/order mismatch")
    out = []
    for i in range(1, A.size + 1):
        for j in range(1, A.size + 1):
            diff = A.entry(i, j) - B.entry(i, j)
            for kk, c in enumerate(diff.coeffs):
                if not c.is_zero:
                    out.append(((i, j, kk), c))
    return out
