"""Algebra (anti)homomorphisms realized as generator-image tables.

Covered maps: the inversion automorphism omega (T(u) -> T(-u)^-1), the
transposition anti-automorphism tau, the index-reversal isomorphism rho into
the flipped shape, the corner inclusion phi into a larger even block, and
the composite embedding psi_k = omega . phi . omega.

omega needs a matrix inversion, so tables are materialized up to a degree
bound and cached by the callers; applying a table to elements or series is
pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, Element, Shape, algebra
from .matrixops import build_T, mat_inverse, twist_sign
from .series import Series


class DegreeBoundExceeded(ValueError):
    """An image was requested beyond the table's materialized degree bound."""


@dataclass(frozen=True)
class ImageTable:
    """Finite association generator -> image element realizing a morphism
    up to a degree bound."""

    source: Shape
    target: Shape
    bound: int
    kind: str  # "hom" or "antihom"
    images: dict = field(compare=False)

    def image(self, g) -> Element:
        img = self.images.get(tuple(g))
        if img is None:
            if g[2] > self.bound:
                raise DegreeBoundExceeded(
                    f"generator level {g[2]} beyond table bound {self.bound}"
                )
            raise KeyError(f"no image for generator {g}")
        return img

    def apply(self, x):
        if isinstance(x, Series):
            return x.map_coeffs(self.apply, alg=algebra(self.target.m, self.target.n))
        return self._apply_element(x)

    def _apply_element(self, x: Element) -> Element:
        if x.alg.shape != self.source:
            raise ValueError("element shape does not match table source")
        tgt = algebra(self.target.m, self.target.n)
        out = tgt.zero()
        src = x.alg
        for word, coeff in x.terms.items():
            if self.kind == "antihom":
                # reversal with the Koszul product sign
                sign = 1
                pars = [src.gen_parity(g) for g in word]
                for a in range(len(word)):
                    for b in range(a + 1, len(word)):
                        sign *= (-1) ** (pars[a] * pars[b])
                factors = reversed(word)
                coeff = coeff * sign
            else:
                factors = word
            img = tgt.one()
            for g in factors:
                img = img * self.image(g)
            out = out + coeff * img
        return out


def _all_gens(shape: Shape, bound: int):
    M = shape.size
    for i in range(1, M + 1):
        for j in range(1, M + 1):
            for r in range(1, bound + 1):
                yield (i, j, r)


def identity_table(shape: Shape, bound: int) -> ImageTable:
    alg = algebra(shape.m, shape.n)
    return ImageTable(shape, shape, bound, "hom",
                      {g: alg.gen(*g) for g in _all_gens(shape, bound)})


def omega_table(shape: Shape, bound: int, convention: str = "plain") -> ImageTable:
    """Images of the inversion automorphism T(u) -> T(-u)^-1.

    The image of t[i,j,r] is the u^-r coefficient of entry (i, j) of the
    inverted sign-flipped matrix, with the convention twist removed on
    read-out.  Applying the table twice is the identity on generators up to
    the bound (checked in the test suite, not assumed).
    """
    T = build_T(shape, bound, convention)
    flipped = SuperMatrixFlip(T)
    inv = mat_inverse(flipped)
    images = {}
    for i in range(1, shape.size + 1):
        for j in range(1, shape.size + 1):
            entry = inv.entry(i, j)
            if twist_sign(shape, i, j, convention) < 0:
                entry = -entry
            for r in range(1, bound + 1):
                images[(i, j, r)] = entry.coeff(r)
    return ImageTable(shape, shape, bound, "hom", images)


def SuperMatrixFlip(M):
    """Entry-wise argument flip u -> -u."""
    from .matrixops import SuperMatrix

    grid = tuple(
        tuple(s.flip_argument() for s in row) for row in M.entries
    )
    return SuperMatrix(M.shape, M.order, M.convention, grid)


def tau_apply(x, koszul: bool = True):
    """The transposition anti-automorphism: t[i,j,r] -> sign * t[j,i,r] with
    sign (-1)^(parity(i)*(parity(j)+1)).

    Products reverse with the Koszul sign by default; ``koszul=False`` gives
    the plain reversal (kept for the empirical convention comparison).
    """
    if isinstance(x, Series):
        return x.map_coeffs(lambda c: tau_apply(c, koszul))
    alg = x.alg
    sh = alg.shape
    out = alg.zero()
    for word, coeff in x.terms.items():
        sign = 1
        if koszul:
            pars = [alg.gen_parity(g) for g in word]
            for a in range(len(word)):
                for b in range(a + 1, len(word)):
                    sign *= (-1) ** (pars[a] * pars[b])
        img = alg.one()
        for (i, j, r) in reversed(word):
            s = -1 if sh.parity(i) * (sh.parity(j) + 1) % 2 else 1
            img = img * (s * alg.gen(j, i, r))
        out = out + (coeff * sign) * img
    return out


def rho_table(shape: Shape, bound: int) -> ImageTable:
    """Index reversal into the flipped shape: t[i,j,r] -> (-1)^r
    t[M+1-i, M+1-j, r] in shape (n|m)."""
    target = Shape(shape.n, shape.m)
    tgt = algebra(target.m, target.n)
    M = shape.size
    images = {}
    for (i, j, r) in _all_gens(shape, bound):
        g = tgt.gen(M + 1 - i, M + 1 - j, r)
        images[(i, j, r)] = g if r % 2 == 0 else -g
    return ImageTable(shape, target, bound, "hom", images)


def phi_table(shape: Shape, k: int, bound: int) -> ImageTable:
    """Corner inclusion into shape (m+k|n): index shift by k."""
    if k < 0:
        raise ValueError("inclusion offset must be >= 0")
    target = Shape(shape.m + k, shape.n)
    tgt = algebra(target.m, target.n)
    images = {
        (i, j, r): tgt.gen(i + k, j + k, r) for (i, j, r) in _all_gens(shape, bound)
    }
    return ImageTable(shape, target, bound, "hom", images)


def phi_apply(x: Element, k: int) -> Element:
    """Direct corner inclusion of an element (no degree bound needed)."""
    if k < 0:
        raise ValueError("inclusion offset must be >= 0")
    sh = x.alg.shape
    tgt = algebra(sh.m + k, sh.n)
    return tgt.from_terms(
        {tuple((i + k, j + k, r) for i, j, r in w): c for w, c in x.terms.items()}
    )


def compose(outer: ImageTable, inner: ImageTable) -> ImageTable:
    """Table of outer . inner on inner's generator domain."""
    if inner.target != outer.source:
        raise ValueError("table composition shape mismatch")
    if outer.bound < inner.bound:
        raise ValueError("outer table bound too small for composition")
    kind = "hom" if inner.kind == outer.kind else "antihom"
    images = {g: outer.apply(e) for g, e in inner.images.items()}
    return ImageTable(inner.source, outer.target, inner.bound, kind, images)


_PSI_CACHE: dict = {}


def psi_table(shape: Shape, k: int, bound: int, convention: str = "plain") -> ImageTable:
    """The embedding into shape (m+k|n) given by inversion, corner inclusion,
    inversion.  Satisfies psi_k . psi_l = psi_{k+l} on generators."""
    key = (shape, k, bound, convention)
    hit = _PSI_CACHE.get(key)
    if hit is not None:
        return hit
    target = Shape(shape.m + k, shape.n)
    table = compose(
        omega_table(target, bound, convention),
        compose(phi_table(shape, k, bound), omega_table(shape, bound, convention)),
    )
    _PSI_CACHE[key] = table
    return table
