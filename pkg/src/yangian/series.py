"""Truncated formal power series in u^-1 over algebra elements.

A :class:`Series` of order N stores coefficients c_0..c_N for powers
u^0..u^-N.  All identity checking is order-by-order: the u^-r coefficient of
anything built from the generating series involves only generators of degree
<= r, so order-N verification is an exact statement about the full algebra.

:class:`BiSeries` hosts two-variable identities in u, v.  One positive power
per variable is permitted, enough to multiply through by a single (u - v)
factor; doing so consumes the top coefficient, so :meth:`BiSeries.times_u_minus_v`
returns a series of order N - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import Algebra, Element, supercommutator


@dataclass(frozen=True)
class Series:
    alg: Algebra
    order: int
    coeffs: tuple  # Element, length order + 1

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count does not match order")

    # -- constructors ------------------------------------------------------

    @classmethod
    def scalar(cls, alg: Algebra, value, order: int) -> "Series":
        coeffs = [alg.scalar(value)] + [alg.zero()] * order
        return cls(alg, order, tuple(coeffs))

    @classmethod
    def one(cls, alg: Algebra, order: int) -> "Series":
        return cls.scalar(alg, 1, order)

    @classmethod
    def from_coeffs(cls, alg: Algebra, coeffs) -> "Series":
        return cls(alg, len(coeffs) - 1, tuple(coeffs))

    def coeff(self, k: int) -> Element:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient u^-{k} beyond truncation order {self.order}")
        return self.coeffs[k]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def _check_compatible(self, other: "Series"):
        if self.alg is not other.alg:
            raise ValueError("shape mismatch between series")
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}; "
                "truncate explicitly before mixing orders"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check_compatible(other)
        return Series(
            self.alg,
            self.order,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        return Series(self.alg, self.order, tuple(-c for c in self.coeffs))

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

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.scalar(self.alg, other, self.order)
        if isinstance(other, Element):
            if other.alg is not self.alg:
                raise ValueError("shape mismatch between series and element")
            coeffs = [other] + [self.alg.zero()] * self.order
            return Series(self.alg, self.order, tuple(coeffs))
        return None

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check_compatible(other)
        zero = self.alg.zero()
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for k in range(i, self.order + 1):
                b = other.coeffs[k - i]
                if not b.is_zero:
                    out[k] = out[k] + a * b
        return Series(self.alg, self.order, tuple(out))

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__mul__(self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("series powers must be integers")
        base = self if k >= 0 else self.inverse()
        out = Series.one(self.alg, self.order)
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self) -> "Series":
        """Two-sided inverse up to the truncation order (Neumann recursion).

        Requires a nonzero rational scalar constant term.
        """
        c0 = self.coeffs[0].scalar_value()
        if c0 is None:
            raise ValueError("series inverse needs a scalar constant term")
        if c0 == 0:
            raise ValueError("series inverse needs a nonzero constant term")
        inv0 = Fraction(1) / c0
        out = [self.alg.scalar(inv0)]
        for k in range(1, self.order + 1):
            acc = self.alg.zero()
            for i in range(1, k + 1):
                a = self.coeffs[i]
                if not a.is_zero:
                    acc = acc + a * out[k - i]
            out.append(acc * (-inv0))
        return Series(self.alg, self.order, tuple(out))

    def shift(self, c) -> "Series":
        """The series at shifted argument u - c, for rational c.

        Uses (u-c)^-k = sum_a binom(k+a-1, a) c^a u^-(k+a), truncated.
        """
        c = Fraction(c)
        zero = self.alg.zero()
        out = [zero] * (self.order + 1)
        out[0] = self.coeffs[0]
        for k in range(1, self.order + 1):
            ck = self.coeffs[k]
            if ck.is_zero:
                continue
            pw = Fraction(1)
            for a in range(0, self.order - k + 1):
                out[k + a] = out[k + a] + (comb(k + a - 1, a) * pw) * ck
                pw *= c
        return Series(self.alg, self.order, tuple(out))

    def flip_argument(self) -> "Series":
        """The series at argument -u."""
        return Series(
            self.alg,
            self.order,
            tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)),
        )

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend truncation order")
        return Series(self.alg, order, self.coeffs[: order + 1])

    def map_coeffs(self, fn, alg: Algebra | None = None) -> "Series":
        return Series(alg or self.alg, self.order, tuple(fn(c) for c in self.coeffs))

    def respects_degree_bound(self) -> bool:
        return all(c.degree() <= k for k, c in enumerate(self.coeffs))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            body = str(c)
            if k == 0:
                parts.append(f"({body})")
            else:
                parts.append(f"({body})*u^-{k}")
        return " + ".join(parts) if parts else "0"


def t_series(alg: Algebra, i: int, j: int, order: int) -> Series:
    """The generating series: delta_ij + t[i,j,1]u^-1 + ... + t[i,j,N]u^-N."""
    coeffs = [alg.scalar(1 if i == j else 0)]
    coeffs += [alg.gen(i, j, r) for r in range(1, order + 1)]
    return Series(alg, order, tuple(coeffs))


def series_supercommutator(a: Series, b: Series) -> Series:
    """Coefficient-wise [a(u), b(u)] in one variable."""
    a._check_compatible(b)
    zero = a.alg.zero()
    out = [zero] * (a.order + 1)
    for i, ca in enumerate(a.coeffs):
        if ca.is_zero:
            continue
        for k in range(i, a.order + 1):
            cb = b.coeffs[k - i]
            if not cb.is_zero:
                out[k] = out[k] + supercommutator(ca, cb)
    return Series(a.alg, a.order, tuple(out))


class BiSeries:
    """Two-variable truncation: coefficients for u^-p v^-q, -1 <= p, q <= N."""

    __slots__ = ("alg", "order", "coeffs")

    def __init__(self, alg: Algebra, order: int, coeffs: dict | None = None):
        self.alg = alg
        self.order = order
        self.coeffs = {}
        if coeffs:
            for (p, q), c in coeffs.items():
                if not -1 <= p <= order or not -1 <= q <= order:
                    raise ValueError(f"power ({p},{q}) outside window for order {order}")
                if not c.is_zero:
                    self.coeffs[(p, q)] = c

    @classmethod
    def from_u(cls, s: Series) -> "BiSeries":
        return cls(s.alg, s.order, {(k, 0): c for k, c in enumerate(s.coeffs)})

    @classmethod
    def from_v(cls, s: Series) -> "BiSeries":
        return cls(s.alg, s.order, {(0, k): c for k, c in enumerate(s.coeffs)})

    @classmethod
    def zero(cls, alg: Algebra, order: int) -> "BiSeries":
        return cls(alg, order)

    def coeff(self, p: int, q: int) -> Element:
        return self.coeffs.get((p, q), self.alg.zero())

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_compatible(self, other: "BiSeries"):
        if self.alg is not other.alg:
            raise ValueError("shape mismatch between biseries")
        if self.order != other.order:
            raise ValueError("order mismatch between biseries")

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc = out.get(k)
            out[k] = c if acc is None else acc + c
        return BiSeries(self.alg, self.order, out)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.alg, self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        self._check_compatible(other)
        if any(p < 0 or q < 0 for p, q in self.coeffs) or any(
            p < 0 or q < 0 for p, q in other.coeffs
        ):
            # products with positive powers silently lose top-order terms
            raise ValueError(
                "multiply before introducing positive powers; "
                "use times_u_minus_v as the final step"
            )
        out: dict = {}
        N = self.order
        for (p1, q1), a in self.coeffs.items():
            for (p2, q2), b in other.coeffs.items():
                p, q = p1 + p2, q1 + q2
                if p > N or q > N:
                    continue
                c = a * b
                acc = out.get((p, q))
                out[(p, q)] = c if acc is None else acc + c
        return BiSeries(self.alg, N, out)

    def times_u_minus_v(self) -> "BiSeries":
        """Multiply by (u - v); the result is exact only to order N - 1."""
        if self.order < 1:
            raise ValueError("need order >= 1 to multiply by (u - v)")
        if any(p < 0 or q < 0 for p, q in self.coeffs):
            raise ValueError("input to times_u_minus_v must have no positive powers")
        out: dict = {}
        N = self.order - 1
        for (p, q), c in self.coeffs.items():
            for dp, dq, sg in ((-1, 0, 1), (0, -1, -1)):
                pp, qq = p + dp, q + dq
                if pp > N or qq > N:
                    continue
                val = c if sg > 0 else -c
                acc = out.get((pp, qq))
                out[(pp, qq)] = val if acc is None else acc + val
        return BiSeries(self.alg, N, out)

    def truncate(self, order: int) -> "BiSeries":
        if order > self.order:
            raise ValueError("cannot extend truncation order")
        return BiSeries(
            self.alg,
            order,
            {k: c for k, c in self.coeffs.items() if k[0] <= order and k[1] <= order},
        )

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (
            self.alg is other.alg
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.alg.shape, self.order, frozenset(self.coeffs.items())))


def bi_supercommutator(a: BiSeries, b: BiSeries) -> BiSeries:
    """[a(u,v), b(u,v)] coefficient-wise via the element supercommutator."""
    a._check_compatible(b)
    out: dict = {}
    N = a.order
    for (p1, q1), ca in a.coeffs.items():
        for (p2, q2), cb in b.coeffs.items():
            p, q = p1 + p2, q1 + q2
            if p > N or q > N or p < -1 or q < -1:
                continue
            c = supercommutator(ca, cb)
            acc = out.get((p, q))
            out[(p, q)] = c if acc is None else acc + c
    return BiSeries(a.alg, N, out)


def bi_check(lhs: BiSeries, rhs: BiSeries):
    """Compare two biseries; returns (passed, witnesses).

    Witnesses are ((p, q), residual) pairs for every differing coefficient,
    sorted by power.
    """
    lhs._check_compatible(rhs)
    diff = lhs - rhs
    witnesses = [(k, diff.coeffs[k]) for k in sorted(diff.coeffs)]
    return (not witnesses, witnesses)
