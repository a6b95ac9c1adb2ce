"""Exact graded algebra on generators t[i,j,r] with normal-form rewriting.

The algebra is the Z2-graded associative ring on generators ``t[i, j, r]``
(row ``i``, column ``j``, level ``r >= 1``) over exact rationals, modulo the
supercommutator relations

    [t[i,j,r], t[k,l,s]] = (-1)^(p(i)p(j) + p(i)p(k) + p(j)p(k)) *
        sum_{a=0}^{min(r,s)-1} ( t[k,j,a] t[i,l,r+s-1-a]
                               - t[k,j,r+s-1-a] t[i,l,a] )

where a level-0 symbol stands for the Kronecker scalar delta.  Elements are
kept in a canonical normal form: words are sorted under the lexicographic
generator order (i, j, r), with out-of-order adjacent pairs straightened by
the relation above and squares of odd generators eliminated eagerly.
Soundness of normal-form comparison rests on the PBW property of ordered
monomials, which this module assumes and spot-checks via confluence tests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

Gen = tuple  # (i, j, r)
Word = tuple  # tuple of Gen


class ResourceCapExceeded(RuntimeError):
    """An intermediate expansion exceeded the configured term cap."""


_max_terms = int(os.environ.get("YANGIAN_MAX_TERMS", "5000000"))


def set_max_terms(cap: int) -> None:
    global _max_terms
    if cap < 1:
        raise ValueError("term cap must be positive")
    _max_terms = cap


def get_max_terms() -> int:
    return _max_terms


@dataclass(frozen=True)
class Shape:
    """Block sizes of the index set: indices 1..m are even, m+1..m+n odd."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError(f"invalid shape ({self.m}|{self.n})")

    @property
    def size(self) -> int:
        return self.m + self.n

    def parity(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise IndexError(f"index {i} out of range for shape {self}")
        return 0 if i <= self.m else 1

    def gen_parity(self, i: int, j: int) -> int:
        return (self.parity(i) + self.parity(j)) % 2

    def __str__(self):
        return f"({self.m}|{self.n})"


def word_degree(w: Word) -> int:
    return sum(g[2] for g in w)


class Element:
    """Finite rational linear combination of normal-ordered words.

    Instances are immutable and always canonical: two equal elements have
    identical term dictionaries.  Construct via :meth:`Algebra.from_terms`,
    :meth:`Algebra.gen`, or arithmetic on existing elements.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "Algebra", terms: dict):
        self.alg = alg
        self.terms = terms

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((word_degree(w) for w in self.terms), default=0)

    def parity(self):
        """0/1 for homogeneous elements (0 includes zero), None if mixed."""
        seen = {self.alg.word_parity(w) for w in self.terms}
        if not seen:
            return 0
        if len(seen) == 1:
            return seen.pop()
        return None

    def parity_parts(self):
        """Split into (parity, homogeneous element) pairs, skipping zeros."""
        parts = {0: {}, 1: {}}
        for w, c in self.terms.items():
            parts[self.alg.word_parity(w)][w] = c
        return [(p, Element(self.alg, t)) for p, t in parts.items() if t]

    def scalar_value(self):
        """The rational value if this element is a scalar, else None."""
        if not self.terms:
            return ZERO
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Element):
            if other.alg is not self.alg:
                raise ValueError("shape mismatch between algebra elements")
            return other
        if isinstance(other, (int, Fraction)):
            return self.alg.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for w, c in other.terms.items():
            nc = terms.get(w, ZERO) + c
            if nc:
                terms[w] = nc
            elif w in terms:
                del terms[w]
        return Element(self.alg, terms)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.alg.zero()
            return Element(self.alg, {w: c * v for w, v in self.terms.items()})
        if isinstance(other, Element):
            return self.alg.mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("element powers must be nonnegative integers")
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.terms == self.alg.scalar(other).terms
        if not isinstance(other, Element):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    def __hash__(self):
        return hash((self.alg.shape, frozenset(self.terms.items())))

    def __str__(self):
        return element_str(self)

    def __repr__(self):
        return f"<Element {self.alg.shape} {element_str(self)}>"


class Algebra:
    """Rewriting context for one shape, owning the normal-form caches."""

    def __init__(self, shape: Shape):
        self.shape = shape
        self._nf: dict = {}
        self._bracket: dict = {}
        self._word_parity: dict = {(): 0}

    # -- constructors ------------------------------------------------------

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {(): ONE})

    def scalar(self, c) -> Element:
        c = Fraction(c)
        return Element(self, {(): c} if c else {})

    def gen(self, i: int, j: int, r: int) -> Element:
        self._validate_gen((i, j, r))
        return Element(self, {((i, j, r),): ONE})

    def from_terms(self, raw, cap: int | None = None) -> Element:
        """Normal form of a raw word -> coefficient association.

        ``raw`` is a dict or iterable of (word, coefficient) pairs; words are
        sequences of (i, j, r) triples in any order.  With ``cap`` set, words
        of degree above the cap are discarded (callers must certify the
        computation is order-limited for this to stay exact).
        """
        acc: dict = {}
        items = raw.items() if isinstance(raw, dict) else raw
        for w, c in items:
            c = Fraction(c)
            if not c:
                continue
            w = tuple(tuple(g) for g in w)
            self._validate_word(w)
            if cap is not None and word_degree(w) > cap:
                continue
            for w2, c2 in self.nf_word(w).items():
                if cap is not None and word_degree(w2) > cap:
                    continue
                nc = acc.get(w2, ZERO) + c * c2
                if nc:
                    acc[w2] = nc
                elif w2 in acc:
                    del acc[w2]
        if len(acc) > _max_terms:
            raise ResourceCapExceeded(f"{len(acc)} terms exceeds cap {_max_terms}")
        return Element(self, acc)

    def _validate_gen(self, g: Gen):
        i, j, r = g
        self.shape.parity(i)
        self.shape.parity(j)
        if r < 1:
            raise ValueError(f"generator level must be >= 1, got {g}")

    def _validate_word(self, w: Word):
        for g in w:
            self._validate_gen(g)

    def word_parity(self, w: Word) -> int:
        p = self._word_parity.get(w)
        if p is None:
            sh = self.shape
            p = sum(sh.gen_parity(g[0], g[1]) for g in w) % 2
            self._word_parity[w] = p
        return p

    def gen_parity(self, g: Gen) -> int:
        return self.shape.gen_parity(g[0], g[1])

    # -- defining relations ------------------------------------------------

    def bracket_raw(self, g1: Gen, g2: Gen) -> dict:
        """Closed-form supercommutator [g1, g2] as a raw word dict.

        Words in the result are not necessarily ordered; their degree is
        at most r + s - 1.
        """
        key = (g1, g2)
        cached = self._bracket.get(key)
        if cached is not None:
            return cached
        (i, j, r), (k, l, s) = g1, g2
        sh = self.shape
        pi, pj, pk = sh.parity(i), sh.parity(j), sh.parity(k)
        sign = -ONE if (pi * pj + pi * pk + pj * pk) % 2 else ONE
        out: dict = {}
        for a in range(min(r, s)):
            b = r + s - 1 - a
            _acc_pair(out, (k, j, a), (i, l, b), sign)
            _acc_pair(out, (k, j, b), (i, l, a), -sign)
        out = {w: c for w, c in out.items() if c}
        self._bracket[key] = out
        return out

    def coeff_relation(self, g1: Gen, g2: Gen) -> Element:
        """Normal form of the closed-form supercommutator [g1, g2]."""
        self._validate_gen(tuple(g1))
        self._validate_gen(tuple(g2))
        return self.from_terms(self.bracket_raw(tuple(g1), tuple(g2)))

    def _rewrite_pair(self, g1: Gen, g2: Gen) -> dict:
        """One rewriting step for the out-of-order (or odd-square) pair g1 g2."""
        if g1 == g2:
            # odd square: x*x = (1/2)[x, x]
            return {w: c * HALF for w, c in self.bracket_raw(g1, g2).items()}
        repl = dict(self.bracket_raw(g1, g2))
        sign = -ONE if self.gen_parity(g1) and self.gen_parity(g2) else ONE
        w = (g2, g1)
        nc = repl.get(w, ZERO) + sign
        if nc:
            repl[w] = nc
        elif w in repl:
            del repl[w]
        return repl

    def _first_bad(self, w: Word) -> int:
        for idx in range(len(w) - 1):
            g1, g2 = w[idx], w[idx + 1]
            if g1 > g2:
                return idx
            if g1 == g2 and self.gen_parity(g1):
                return idx
        return -1

    def nf_word(self, w: Word) -> dict:
        """Normal form of a single word, as an ordered-word dict (memoized).

        Terminates because each step either removes one inversion at fixed
        degree or produces words of strictly smaller total degree.
        """
        memo = self._nf
        hit = memo.get(w)
        if hit is not None:
            return hit
        stack = [w]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            idx = self._first_bad(cur)
            if idx < 0:
                memo[cur] = {cur: ONE}
                stack.pop()
                continue
            repl = self._rewrite_pair(cur[idx], cur[idx + 1])
            pre, post = cur[:idx], cur[idx + 2:]
            missing = [c for c in (pre + mid + post for mid in repl) if c not in memo]
            if missing:
                stack.extend(missing)
                continue
            out: dict = {}
            for mid, c in repl.items():
                for w2, c2 in memo[pre + mid + post].items():
                    nc = out.get(w2, ZERO) + c * c2
                    if nc:
                        out[w2] = nc
                    elif w2 in out:
                        del out[w2]
            if len(out) > _max_terms:
                raise ResourceCapExceeded(
                    f"{len(out)} terms exceeds cap {_max_terms}"
                )
            memo[cur] = out
            stack.pop()
        return memo[w]

    # -- products ----------------------------------------------------------

    def mul(self, a: Element, b: Element, cap: int | None = None) -> Element:
        if a.alg is not self or b.alg is not self:
            raise ValueError("shape mismatch in product")
        acc: dict = {}
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                c = ca * cb
                w = wa + wb
                if cap is not None and word_degree(w) > cap:
                    continue
                for w2, c2 in self.nf_word(w).items():
                    nc = acc.get(w2, ZERO) + c * c2
                    if nc:
                        acc[w2] = nc
                    elif w2 in acc:
                        del acc[w2]
            if len(acc) > _max_terms:
                raise ResourceCapExceeded(f"{len(acc)} terms exceeds cap {_max_terms}")
        return Element(self, acc)


def _acc_pair(out: dict, ga: Gen, gb: Gen, coeff: Fraction):
    # level-0 symbols resolve to Kronecker deltas at construction time
    word = []
    for g in (ga, gb):
        if g[2] == 0:
            if g[0] != g[1]:
                return
        else:
            word.append(g)
    w = tuple(word)
    nc = out.get(w, ZERO) + coeff
    if nc:
        out[w] = nc
    elif w in out:
        del out[w]


def supercommutator(a: Element, b: Element) -> Element:
    """[a, b] = ab - (-1)^(p(a)p(b)) ba, extended bilinearly from
    parity-homogeneous components."""
    if a.alg is not b.alg:
        raise ValueError("shape mismatch in supercommutator")
    alg = a.alg
    res = alg.zero()
    for pa, xa in a.parity_parts():
        for pb, xb in b.parity_parts():
            if pa and pb:
                res = res + xa * xb + xb * xa
            else:
                res = res + xa * xb - xb * xa
    return res


_ALGEBRAS: dict = {}


def algebra(m: int, n: int) -> Algebra:
    """Shared per-shape algebra instance (caches normal forms)."""
    key = (m, n)
    alg = _ALGEBRAS.get(key)
    if alg is None:
        alg = Algebra(Shape(m, n))
        _ALGEBRAS[key] = alg
    return alg


# -- rendering -------------------------------------------------------------


def _word_str(w: Word) -> str:
    return "*".join(f"t[{i},{j},{r}]" for i, j, r in w)


def element_str(e: Element) -> str:
    """Diffable text form: terms sorted by (degree, word), exact coefficients."""
    if not e.terms:
        return "0"
    items = sorted(e.terms.items(), key=lambda kv: (word_degree(kv[0]), kv[0]))
    parts = []
    for w, c in items:
        if w == ():
            body = str(abs(c))
        elif abs(c) == 1:
            body = _word_str(w)
        else:
            body = f"{abs(c)}*{_word_str(w)}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
