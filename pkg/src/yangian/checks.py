"""Registry of named identity checks producing machine-readable reports.

Each check compares normal forms of both sides coefficient by coefficient
under exact rational arithmetic; a report's verdict is "pass" iff its
witness list is empty.  Checks with an empty index range in the given shape
(e.g. case1 needs m >= 2) pass vacuously.

The frozen matrix convention is "plain": the inverse-entry series t'_ij and
the Gauss factors are taken from the untwisted generating matrix.  The
discriminating identity is the (u-v)[t_ij(u), t'_kl(v)] relation (and
centrality downstream of it); the F*D*E = T reconstruction is
self-consistent under either convention and does not discriminate.
resolve_convention re-derives the winner empirically rather than trusting
the constant.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .algebra import Shape, algebra, element_str, supercommutator
from .berezinian import berezinian_factored, berezinian_sum, quantum_determinant
from .matrixops import (
    build_T,
    gauss,
    matmul,
    quasideterminant,
    t_prime,
)
from .maps import psi_table, rho_table, omega_table, compose, tau_apply
from .series import BiSeries, Series, bi_supercommutator, t_series

FROZEN_CONVENTION = "plain"

DEFAULT_ORDERS = {(2, 2): 3}
DEFAULT_ORDER = 4


def default_order(shape: Shape) -> int:
    return DEFAULT_ORDERS.get((shape.m, shape.n), DEFAULT_ORDER)


@dataclass
class CheckReport:
    """Machine-readable verdict of one identity check."""

    check: str
    m: int
    n: int
    order: int
    convention: str
    verdict: str
    witnesses: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "m": self.m,
            "n": self.n,
            "order": self.order,
            "convention": self.convention,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _witness(powers, indices, residual) -> dict:
    return {
        "powers": list(powers),
        "indices": list(indices),
        "residual": element_str(residual),
    }


def _series_witnesses(lhs: Series, rhs: Series, indices) -> list:
    out = []
    for k in range(min(lhs.order, rhs.order) + 1):
        res = lhs.coeff(k) - rhs.coeff(k)
        if not res.is_zero:
            out.append(_witness([k], indices, res))
    return out


def _bi_witnesses(lhs: BiSeries, rhs: BiSeries, indices) -> list:
    diff = lhs - rhs
    out = []
    for (p, q) in sorted(diff.coeffs):
        res = diff.coeffs[(p, q)]
        if not res.is_zero:
            out.append(_witness([p, q], indices, res))
    return out


# --- individual checks -------------------------------------------------


def _check_rtt_coeff(shape: Shape, N: int, convention: str) -> list:
    """Equivalent-form defining relations: the rewritten supercommutator of
    two generators must match the closed-form right-hand side."""
    alg = algebra(shape.m, shape.n)
    M = shape.size
    out = []
    for r in range(1, N):
        for s in range(1, N + 1 - r):
            for i in range(1, M + 1):
                for j in range(1, M + 1):
                    for k in range(1, M + 1):
                        for l in range(1, M + 1):
                            lhs = supercommutator(alg.gen(i, j, r), alg.gen(k, l, s))
                            rhs = alg.coeff_relation((i, j, r), (k, l, s))
                            res = lhs - rhs
                            if not res.is_zero:
                                out.append(_witness([r, s], [i, j, k, l], res))
    return out


def _check_inverse_relation(shape: Shape, N: int, convention: str) -> list:
    """(u-v)[t_ij(u), t'_kl(v)] = sign * (delta_kj sum_s t_is(u) t'_sl(v)
    - delta_il sum_s t'_ks(v) t_sj(u))."""
    alg = algebra(shape.m, shape.n)
    M = shape.size
    tp = t_prime(shape, N, convention)
    tu = {(i, j): BiSeries.from_u(t_series(alg, i, j, N))
          for i in range(1, M + 1) for j in range(1, M + 1)}
    tpv = {(i, j): BiSeries.from_v(tp.entry(i, j))
           for i in range(1, M + 1) for j in range(1, M + 1)}
    out = []
    for i in range(1, M + 1):
        for j in range(1, M + 1):
            for k in range(1, M + 1):
                for l in range(1, M + 1):
                    pi, pj, pk = shape.parity(i), shape.parity(j), shape.parity(k)
                    sign = -1 if (pi * pj + pi * pk + pj * pk) % 2 else 1
                    lhs = bi_supercommutator(tu[(i, j)], tpv[(k, l)]).times_u_minus_v()
                    rhs = BiSeries.zero(alg, N)
                    if k == j:
                        for s in range(1, M + 1):
                            rhs = rhs + tu[(i, s)] * tpv[(s, l)]
                    if i == l:
                        for s in range(1, M + 1):
                            rhs = rhs - tpv[(k, s)] * tu[(s, j)]
                    if sign < 0:
                        rhs = -rhs
                    out.extend(_bi_witnesses(lhs, rhs.truncate(lhs.order),
                                             [i, j, k, l]))
    return out


def _check_gauss(shape: Shape, N: int, convention: str) -> list:
    F, D, E = gauss(shape, N, convention)
    T = build_T(shape, N, convention)
    prod = matmul(matmul(F, D), E)
    out = []
    for i in range(1, shape.size + 1):
        for j in range(1, shape.size + 1):
            out.extend(_series_witnesses(prod.entry(i, j), T.entry(i, j), [i, j]))
    return out


def _check_remark21(shape: Shape, N: int, convention: str) -> list:
    """psi_k images: d_1 -> d_{k+1}, e_1 -> e_{k+1}, f_1 -> f_{k+1} with
    k = m - 1 from the corner (1|n) algebra, and the explicit bordered
    quasideterminant for psi_k(t_ij(u)) on every source index pair."""
    k = shape.m - 1
    if k < 1 or shape.n < 1:
        return []
    src = Shape(1, shape.n)
    table = psi_table(src, k, N, convention)
    _, Ds, _ = gauss(src, N, convention)
    _, Dt, _ = gauss(shape, N, convention)
    out = []
    out.extend(_series_witnesses(table.apply(Ds.entry(1, 1)),
                                 Dt.entry(k + 1, k + 1), ["d", 1]))
    if src.size >= 2:
        from .matrixops import defe_series
        e1 = defe_series(src, N, "e", 1, convention)
        f1 = defe_series(src, N, "f", 1, convention)
        ek = defe_series(shape, N, "e", k + 1, convention)
        fk = defe_series(shape, N, "f", k + 1, convention)
        out.extend(_series_witnesses(table.apply(e1), ek, ["e", 1]))
        out.extend(_series_witnesses(table.apply(f1), fk, ["f", 1]))
    T = build_T(shape, N, convention)
    srcalg = algebra(src.m, src.n)
    for i in range(1, src.size + 1):
        for j in range(1, src.size + 1):
            rows = list(range(1, k + 1)) + [k + i]
            cols = list(range(1, k + 1)) + [k + j]
            qd = quasideterminant(T.submatrix(rows, cols), k + 1, k + 1)
            img = table.apply(t_series(srcalg, i, j, N))
            out.extend(_series_witnesses(img, qd, ["t", i, j]))
    return out


def _check_remark22(shape: Shape, N: int, convention: str) -> list:
    """All coefficients of the diagonal Gauss series d_i(u), d_j(v)
    supercommute."""
    _, D, _ = gauss(shape, N, convention)
    M = shape.size
    out = []
    for i in range(1, M + 1):
        for j in range(i, M + 1):
            di, dj = D.entry(i, i), D.entry(j, j)
            for p in range(1, N + 1):
                for q in range(1, N + 1):
                    res = supercommutator(di.coeff(p), dj.coeff(q))
                    if not res.is_zero:
                        out.append(_witness([p, q], [i, j], res))
    return out


def _check_thm1(shape: Shape, N: int, convention: str) -> list:
    lhs = berezinian_sum(shape, N, convention)
    rhs = berezinian_factored(shape, N, convention)
    return _series_witnesses(lhs, rhs, [])


def _check_thm2_centrality(shape: Shape, N: int, convention: str) -> list:
    """Every Berezinian coefficient b^(r) supercommutes with every t_ij^(s),
    r + s <= N."""
    alg = algebra(shape.m, shape.n)
    b = berezinian_sum(shape, N, convention)
    M = shape.size
    out = []
    for r in range(1, N):
        br = b.coeff(r)
        for s in range(1, N + 1 - r):
            for i in range(1, M + 1):
                for j in range(1, M + 1):
                    res = supercommutator(br, alg.gen(i, j, s))
                    if not res.is_zero:
                        out.append(_witness([r, s], [i, j], res))
    return out


def _check_case1(shape: Shape, N: int, convention: str) -> list:
    """tau(e_i(v)) = f_i(v) for 1 <= i <= m-1, and the quantum determinant
    coefficients supercommute with the e_i coefficients."""
    from .matrixops import defe_series

    out = []
    C = quantum_determinant(shape, N) if shape.m >= 1 else None
    for i in range(1, shape.m):
        e = defe_series(shape, N, "e", i, convention)
        f = defe_series(shape, N, "f", i, convention)
        out.extend(_series_witnesses(tau_apply(e), f, ["tau", i]))
        for p in range(1, N + 1):
            for q in range(1, N + 1):
                res = supercommutator(C.coeff(p), e.coeff(q))
                if not res.is_zero:
                    out.append(_witness([p, q], ["C", i], res))
    return out


def _check_case2(shape: Shape, N: int, convention: str) -> list:
    """The alternative f_i expression in inverse-matrix entries for
    m+1 <= i <= m+n-1, and the rho.omega transports from the flipped shape.

    The quasideterminant factors multiply in the order -|Y|^-1 |X|; the
    reversed order fails beyond leading order in the noncommutative setting.
    """
    from .matrixops import defe_series

    M = shape.size
    tp = t_prime(shape, N, convention)
    out = []
    for i in range(shape.m + 1, M):
        rowsX = list(range(i + 1, M + 1))
        colsX = [i] + list(range(i + 2, M + 1))
        X = quasideterminant(tp.submatrix(rowsX, colsX), 1, 1)
        Y = quasideterminant(tp.submatrix(rowsX, rowsX), 1, 1)
        fi = defe_series(shape, N, "f", i, convention)
        out.extend(_series_witnesses(fi, -(Y.inverse() * X), ["f", i]))
    # transports from the flipped shape (n|m)
    flipped = Shape(shape.n, shape.m)
    table = compose(rho_table(flipped, N), omega_table(flipped, N, convention))
    for i in range(shape.m + 1, M):
        fsrc = defe_series(flipped, N, "f", M - i, convention)
        esrc = defe_series(flipped, N, "e", M - i, convention)
        ei = defe_series(shape, N, "e", i, convention)
        fi = defe_series(shape, N, "f", i, convention)
        out.extend(_series_witnesses(table.apply(-fsrc), ei, ["rho.omega.f", i]))
        out.extend(_series_witnesses(table.apply(-esrc), fi, ["rho.omega.e", i]))
    return out


def _case3_core(shape: Shape, N: int, convention: str, lo: int) -> list:
    """The two (u-v)-commutator lemmas and the d e d exchange identity at
    diagonal position lo (lo = 1 gives the (1|1) statement)."""
    from .matrixops import defe_series

    _, D, _ = gauss(shape, N, convention)
    d1 = BiSeries.from_u(D.entry(lo, lo))
    d2 = BiSeries.from_u(D.entry(lo + 1, lo + 1))
    e = defe_series(shape, N, "e", lo, convention)
    ev, eu = BiSeries.from_v(e), BiSeries.from_u(e)
    out = []
    for tag, d in (("d1", d1), ("d2", d2)):
        lhs = bi_supercommutator(d, ev).times_u_minus_v()
        rhs = (d * (ev - eu)).truncate(lhs.order)
        out.extend(_bi_witnesses(lhs, rhs, ["lemma", tag, lo]))
    lhs = d1 * ev * d2
    rhs = d2 * ev * d1
    out.extend(_bi_witnesses(lhs, rhs, ["exchange", lo]))
    return out


def _check_case3(shape: Shape, N: int, convention: str) -> list:
    """In (1|1): both (u-v)-lemmas, the exchange identity (5), and the
    (u-v)[t_11(u), t'_12(v)] instance of the inverse relation.  In larger
    shapes the psi-transported exchange identity at position m."""
    out = []
    if shape.m >= 1 and shape.n >= 1:
        out.extend(_case3_core(shape, N, convention, shape.m))
    if (shape.m, shape.n) == (1, 1):
        alg = algebra(1, 1)
        tp = t_prime(shape, N, convention)
        t11 = BiSeries.from_u(t_series(alg, 1, 1, N))
        t12 = BiSeries.from_u(t_series(alg, 1, 2, N))
        tp12 = BiSeries.from_v(tp.entry(1, 2))
        tp22 = BiSeries.from_v(tp.entry(2, 2))
        lhs = bi_supercommutator(t11, tp12).times_u_minus_v()
        rhs = (t11 * tp12 + t12 * tp22).truncate(lhs.order)
        out.extend(_bi_witnesses(lhs, rhs, ["relation2-instance"]))
    return out


REGISTRY = {
    "rtt_coeff": _check_rtt_coeff,
    "inverse_relation": _check_inverse_relation,
    "gauss": _check_gauss,
    "remark21": _check_remark21,
    "remark22": _check_remark22,
    "thm1": _check_thm1,
    "thm2_centrality": _check_thm2_centrality,
    "case1": _check_case1,
    "case2": _check_case2,
    "case3": _check_case3,
}

# Aliases accepted by the CLI.
ALIASES = {"thm2": "thm2_centrality"}


def resolve_convention(shape: Shape | None = None, order: int = 3) -> str:
    """Determine empirically which matrix convention satisfies the
    (u-v)[t, t'] relation; exactly one must pass."""
    shape = shape or Shape(1, 1)
    winners = [c for c in ("twisted", "plain")
               if not _check_inverse_relation(shape, order, c)]
    if len(winners) != 1:
        raise RuntimeError(f"convention resolution ambiguous: {winners}")
    return winners[0]


def run_check(name: str, shape: Shape, N: int | None = None,
              convention: str = FROZEN_CONVENTION) -> CheckReport:
    name = ALIASES.get(name, name)
    fn = REGISTRY.get(name)
    if fn is None:
        raise KeyError(f"unknown check {name!r}")
    if N is None:
        N = default_order(shape)
    if convention == "auto":
        convention = resolve_convention()
    t0 = time.monotonic()
    witnesses = fn(shape, N, convention)
    elapsed = int((time.monotonic() - t0) * 1000)
    return CheckReport(
        check=name, m=shape.m, n=shape.n, order=N, convention=convention,
        verdict="pass" if not witnesses else "fail",
        witnesses=witnesses, elapsed_ms=elapsed,
    )


def run_all(shape: Shape, N: int | None = None,
            convention: str = FROZEN_CONVENTION, jobs: int = 1) -> list:
    """Run every registry check for one shape; reports sorted by name."""
    names = sorted(REGISTRY)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futs = {name: ex.submit(run_check, name, shape, N, convention)
                    for name in names}
            return [futs[name].result() for name in names]
    return [run_check(name, shape, N, convention) for name in names]
