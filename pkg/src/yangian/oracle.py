"""Independent validation routes for the defining relations.

Three oracles live here, all deliberately decoupled from the rewriting
engine's closed-form bracket:

* :func:`coeff_extraction_oracle` re-derives each coefficient relation by
  clearing the (u - v) denominator of the series relation and solving the
  triangular recursion in total level, on free (unrewritten) words.
* :func:`find_eval_rep` searches sign families for an evaluation
  representation t[i,j,1] -> s_ij E_ij, t[i,j,r>=2] -> 0 on exact rational
  matrices, validating every bracket instance at construction.
* :func:`rtt_tensor_check` verifies the R-matrix form of the relations
  numerically on aux (x) aux (x) rep-space, realizing the graded tensor
  product through explicit Koszul slot signs on each operator factor.

The evaluation route kills all levels >= 2, so it is a necessary-condition
check only; it is kept because sign errors, the dominant failure mode,
survive evaluation.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, Shape, algebra

ZERO = Fraction(0)
ONE = Fraction(1)


# -- free-word coefficient extraction ---------------------------------------


def _free_acc(out: dict, word: tuple, coeff: Fraction):
    nc = out.get(word, ZERO) + coeff
    if nc:
        out[word] = nc
    elif word in out:
        del out[word]


def _free_pair(out: dict, ga, gb, coeff: Fraction):
    word = []
    for g in (ga, gb):
        if g[2] == 0:
            if g[0] != g[1]:
                return
        else:
            word.append(g)
    _free_acc(out, tuple(word), coeff)


def coeff_extraction_oracle(shape: Shape, i, j, k, l, r, s) -> dict:
    """[t[i,j,r], t[k,l,s]] as a free-word combination.

    Equates u^-p v^-q coefficients of the (u - v)-cleared series relation:
    with B(p, q) the unknown bracket, B(p+1, q) - B(p, q+1) equals the
    right-hand coefficient, and B(0, q) = B(p, 0) = 0, so B(r, s) telescopes
    down the anti-diagonal.  No rewriting is used anywhere.
    """
    if r < 1 or s < 1:
        raise ValueError("levels must be >= 1")
    pi, pj, pk = shape.parity(i), shape.parity(j), shape.parity(k)
    sign = -ONE if (pi * pj + pi * pk + pj * pk) % 2 else ONE
    out: dict = {}
    # B(r, s) = sum_{a=0}^{r-1} rhs(a, r+s-1-a)
    for a in range(r):
        b = r + s - 1 - a
        _free_pair(out, (k, j, a), (i, l, b), sign)
        _free_pair(out, (k, j, b), (i, l, a), -sign)
    return out


def free_words_equal(d1: dict, d2: dict) -> bool:
    return d1 == d2


def oracle_agreement_witnesses(shape: Shape, max_level: int):
    """All (i,j,k,l,r,s) where the closed-form bracket and the extraction
    oracle disagree as free-word combinations, for r + s <= max_level."""
    alg = algebra(shape.m, shape.n)
    M = shape.size
    bad = []
    for i, j, k, l in itertools.product(range(1, M + 1), repeat=4):
        for r in range(1, max_level):
            for s in range(1, max_level + 1 - r):
                closed = alg.bracket_raw((i, j, r), (k, l, s))
                free = coeff_extraction_oracle(shape, i, j, k, l, r, s)
                if not free_words_equal(closed, free):
                    bad.append((i, j, k, l, r, s))
    return bad


# -- evaluation representation ----------------------------------------------

# candidate sign families s_ij = (-1)^(a*pi + b*pj + c*pi*pj)
_SIGN_FAMILIES = {
    "one": (0, 0, 0),
    "i": (1, 0, 0),
    "j": (0, 1, 0),
    "ij": (0, 0, 1),
    "i+j": (1, 1, 0),
    "i+ij": (1, 0, 1),
    "j+ij": (0, 1, 1),
    "i+j+ij": (1, 1, 1),
}


@dataclass(frozen=True)
class EvalRep:
    """Evaluation specialization: t[i,j,1] -> s_ij E_ij, higher levels -> 0."""

    shape: Shape
    family: str
    signs: tuple  # signs[i-1][j-1] in {+1, -1}

    def gen_matrix(self, i: int, j: int, r: int):
        M = self.shape.size
        if r >= 2:
            return _zero_matrix(M)
        out = _zero_matrix(M)
        out[i - 1][j - 1] = Fraction(self.signs[i - 1][j - 1])
        return out


def _zero_matrix(M):
    return [[ZERO] * M for _ in range(M)]


def _eye(M):
    out = _zero_matrix(M)
    for i in range(M):
        out[i][i] = ONE
    return out


def _mat_mul(A, B):
    M = len(A)
    return [
        [sum((A[i][s] * B[s][j] for s in range(M)), ZERO) for j in range(M)]
        for i in range(M)
    ]


def _mat_add(A, B, fb=1):
    return [[a + fb * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def evaluate(x: Element, rep: EvalRep):
    """Multiplicative-linear extension of the generator images."""
    if x.alg.shape != rep.shape:
        raise ValueError("shape mismatch between element and representation")
    M = rep.shape.size
    acc = _zero_matrix(M)
    for word, coeff in x.terms.items():
        if any(g[2] >= 2 for g in word):
            continue
        mat = _eye(M)
        for g in word:
            mat = _mat_mul(mat, rep.gen_matrix(*g))
        acc = _mat_add(acc, [[coeff * v for v in row] for row in mat])
    return acc


def _rep_satisfies_relations(rep: EvalRep, max_level: int = 3) -> bool:
    shape = rep.shape
    alg = algebra(shape.m, shape.n)
    M = shape.size
    for i, j, k, l in itertools.product(range(1, M + 1), repeat=4):
        for r in range(1, max_level):
            for s in range(1, max_level + 1 - r):
                g1, g2 = (i, j, r), (k, l, s)
                a = rep.gen_matrix(*g1)
                b = rep.gen_matrix(*g2)
                pg = alg.gen_parity(g1) * alg.gen_parity(g2)
                lhs = _mat_add(_mat_mul(a, b), _mat_mul(b, a), -1 if not pg else 1)
                rhs = evaluate(alg.from_terms(alg.bracket_raw(g1, g2)), rep)
                if lhs != rhs:
                    return False
    return True


def find_eval_rep(shape: Shape) -> EvalRep:
    """First candidate sign family satisfying every bracket instance with
    r + s <= 3.  Failure signals a convention bug upstream."""
    if shape.size > 4:
        raise ValueError("evaluation-representation search capped at m+n <= 4")
    M = shape.size
    for name, (a, b, c) in _SIGN_FAMILIES.items():
        signs = tuple(
            tuple(
                -1
                if (a * shape.parity(i) + b * shape.parity(j)
                    + c * shape.parity(i) * shape.parity(j)) % 2
                else 1
                for j in range(1, M + 1)
            )
            for i in range(1, M + 1)
        )
        rep = EvalRep(shape, name, signs)
        if _rep_satisfies_relations(rep):
            return rep
    raise RuntimeError(
        f"no evaluation representation found for shape {shape}; "
        "the relation conventions are inconsistent"
    )


# -- numeric R-matrix check --------------------------------------------------


class BiPoly(dict):
    """Sparse bivariate polynomial {(deg_u, deg_v): Fraction}."""

    def __missing__(self, key):
        return ZERO

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls({(0, 0): c} if c else {})

    def __add__(self, other):
        out = BiPoly(self)
        for k, v in other.items():
            nv = out.get(k, ZERO) + v
            if nv:
                out[k] = nv
            elif k in out:
                del out[k]
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return BiPoly()
        return BiPoly({k: c * v for k, v in self.items()})

    def __mul__(self, other):
        out = BiPoly()
        for (a1, b1), v1 in self.items():
            for (a2, b2), v2 in other.items():
                k = (a1 + a2, b1 + b2)
                nv = out.get(k, ZERO) + v1 * v2
                if nv:
                    out[k] = nv
                elif k in out:
                    del out[k]
        return out


U = BiPoly({(1, 0): ONE})
V = BiPoly({(0, 1): ONE})


class PolyMatrix:
    """Sparse square matrix over BiPoly."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim, entries=None):
        self.dim = dim
        self.entries = {}
        if entries:
            for k, p in entries.items():
                if p:
                    self.entries[k] = p

    @classmethod
    def identity(cls, dim, scale=None):
        p = scale if scale is not None else BiPoly.const(1)
        return cls(dim, {(i, i): BiPoly(p) for i in range(dim)})

    def __add__(self, other):
        out = dict(self.entries)
        for k, p in other.entries.items():
            q = out.get(k)
            out[k] = p if q is None else q + p
        return PolyMatrix(self.dim, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return PolyMatrix(self.dim, {k: p.scale(c) for k, p in self.entries.items()})

    def __mul__(self, other):
        by_row: dict = {}
        for (r, c), p in self.entries.items():
            by_row.setdefault(r, []).append((c, p))
        by_col: dict = {}
        for (r, c), p in other.entries.items():
            by_col.setdefault(r, []).append((c, p))
        out: dict = {}
        for r, row in by_row.items():
            for c1, p in row:
                for c2, q in by_col.get(c1, ()):
                    k = (r, c2)
                    pq = p * q
                    acc = out.get(k)
                    out[k] = pq if acc is None else acc + pq
        return PolyMatrix(self.dim, out)

    def is_zero(self):
        return not any(self.entries.values())

    def first_witness(self):
        for k in sorted(self.entries):
            p = self.entries[k]
            if p:
                mono = sorted(p)[0]
                return {"position": list(k), "monomial_u_v": list(mono),
                        "value": str(p[mono])}
        return None


def _kron3_index(M, a, b, x):
    return (a * M + b) * M + x


def rtt_tensor_check(shape: Shape, convention: str = "plain",
                     rep: EvalRep | None = None):
    """Numeric RTT identity on aux1 (x) aux2 (x) rep-space.

    Builds u*T1(u), v*T2(v) and (u-v)*R(u-v) as exact polynomial matrices
    (all denominators cleared) on the graded triple tensor product: each
    homogeneous operator factor picks up the Koszul sign of the basis slots
    it passes, which is exactly the composition the generating-matrix twist
    encodes in ungraded form.  The permutation-matrix entries are the
    printed (-1)^parity(j) before the slot signs.  Products of the built
    matrices are then ordinary.  Returns (passed, witness_or_None, rep).
    """
    from .matrixops import twist_sign

    if rep is None:
        rep = find_eval_rep(shape)
    M = shape.size
    dim = M * M * M
    par = [shape.parity(i + 1) for i in range(M)]

    uT1 = {}
    vT2 = {}
    for a in range(M):
        for b in range(M):
            tw = twist_sign(shape, a + 1, b + 1, convention)
            rs = rep.signs[a][b]
            d = (par[a] + par[b]) % 2  # degree of E_ab and of the rep image
            for c in range(M):
                for x in range(M):
                    # T1: op E_ab on aux1, rep image on the last slot.
                    # Source basis column indices supply the Koszul signs.
                    row = _kron3_index(M, a, c, x)
                    if a == b:
                        col = _kron3_index(M, b, c, x)
                        p = uT1.get((row, col), BiPoly())
                        uT1[(row, col)] = p + U.scale(tw)
                    if x == b:
                        col = _kron3_index(M, b, c, a)
                        sgn = -1 if (d * (par[b] + par[c])) % 2 else 1
                        p = uT1.get((row, col), BiPoly())
                        uT1[(row, col)] = p + BiPoly.const(tw * rs * sgn)
                    # T2: op E_ab on aux2 (passes aux1), rep image last.
                    row = _kron3_index(M, c, a, x)
                    if a == b:
                        col = _kron3_index(M, c, b, x)
                        p = vT2.get((row, col), BiPoly())
                        vT2[(row, col)] = p + V.scale(tw)
                    if x == b:
                        col = _kron3_index(M, c, b, a)
                        sgn = -1 if (d * par[c] + d * (par[c] + par[b])) % 2 else 1
                        p = vT2.get((row, col), BiPoly())
                        vT2[(row, col)] = p + BiPoly.const(tw * rs * sgn)
    T1 = PolyMatrix(dim, uT1)
    T2 = PolyMatrix(dim, vT2)

    # (u - v) * R(u - v) = (u - v) - P12, P12 printed entries (-1)^parity(j);
    # the E_ji factor on aux2 passes the aux1 source slot.
    R = PolyMatrix.identity(dim, U - V)
    for i in range(M):
        for j in range(M):
            pij = (par[i] + par[j]) % 2
            sgn = (-1 if par[j] else 1) * (-1 if (pij * par[j]) % 2 else 1)
            for x in range(M):
                row = _kron3_index(M, i, j, x)
                col = _kron3_index(M, j, i, x)
                p = R.entries.get((row, col), BiPoly())
                R.entries[(row, col)] = p + BiPoly.const(sgn)
    R = PolyMatrix(dim, R.entries)

    lhs = R * T1 * T2
    rhs = T2 * T1 * R
    diff = lhs - rhs
    if diff.is_zero():
        return True, None, rep
    return False, diff.first_witness(), rep


def permutation_matrix_checks(shape: Shape):
    """P12^2 = 1 on the graded tensor square, and (u-v)R(u-v)(v-u)R(v-u)
    is a scalar polynomial times the identity.

    Graded encoding as in rtt_tensor_check: the printed entry (-1)^parity(j)
    times the Koszul slot sign, i.e. P(e_i (x) e_j) = (-1)^(p(i)p(j))
    e_j (x) e_i."""
    M = shape.size
    dim = M * M
    P = PolyMatrix(dim)
    for i in range(M):
        for j in range(M):
            sgn = -1 if shape.parity(i + 1) * shape.parity(j + 1) else 1
            P.entries[(i * M + j, j * M + i)] = BiPoly.const(sgn)
    P2 = P * P
    p_ok = (P2 - PolyMatrix.identity(dim)).is_zero()

    Ruv = PolyMatrix.identity(dim, U - V) - P
    Rvu = PolyMatrix.identity(dim, V - U) - P
    prod = Ruv * Rvu
    # must be scalar * identity
    scalar = prod.entries.get((0, 0), BiPoly())
    r_ok = (prod - PolyMatrix.identity(dim, scalar)).is_zero()
    return p_ok, r_ok
