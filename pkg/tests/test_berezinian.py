"""Quantum determinant and Berezinian tests, including the degenerate
shapes and the check registry plumbing."""

import json

import pytest

from yangian import Series, Shape, algebra, t_series
from yangian.berezinian import (
    berezinian_factored,
    berezinian_sum,
    quantum_determinant,
)
from yangian.checks import (
    REGISTRY,
    default_order,
    resolve_convention,
    run_all,
    run_check,
)
from yangian.matrixops import gauss, t_prime

CONV = "plain"


def test_qdet_m1():
    alg = algebra(1, 1)
    assert quantum_determinant(Shape(1, 1), 3) == t_series(alg, 1, 1, 3)


def test_qdet_m2_formula():
    alg = algebra(2, 0)
    t = lambda i, j: t_series(alg, i, j, 3)
    expected = t(1, 1) * t(2, 2).shift(1) - t(2, 1) * t(1, 2).shift(1)
    assert quantum_determinant(Shape(2, 0), 3) == expected


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 0)])
def test_qdet_equals_product_of_d(m, n):
    sh = Shape(m, n)
    _, D, _ = gauss(sh, 3, CONV)
    prod = Series.one(algebra(m, n), 3)
    for i in range(1, m + 1):
        prod = prod * D.entry(i, i).shift(i - 1)
    assert quantum_determinant(sh, 3) == prod


def test_berezinian_even_shape_degenerates_to_qdet():
    sh = Shape(2, 0)
    assert berezinian_sum(sh, 3, CONV) == quantum_determinant(sh, 3)


def test_berezinian_0_1():
    # empty even block, single odd factor: b(u) = t'_11(u + 1)
    sh = Shape(0, 1)
    tp = t_prime(sh, 3, CONV)
    assert berezinian_sum(sh, 3, CONV) == tp.entry(1, 1).shift(-1)


def test_berezinian_1_1_leading_coefficient():
    sh = Shape(1, 1)
    alg = algebra(1, 1)
    b = berezinian_sum(sh, 3, CONV)
    assert b.coeff(0) == alg.one()
    assert b.coeff(1) == alg.gen(1, 1, 1) - alg.gen(2, 2, 1)


def test_berezinian_constant_term_is_one():
    for m, n in [(1, 1), (2, 1), (1, 2)]:
        sh = Shape(m, n)
        assert berezinian_factored(sh, 2, CONV).coeff(0) == algebra(m, n).one()


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_theorem1_small(m, n):
    sh = Shape(m, n)
    assert berezinian_sum(sh, 3, CONV) == berezinian_factored(sh, 3, CONV)


# --- check registry ----------------------------------------------------

def test_run_check_unknown_name():
    with pytest.raises(KeyError):
        run_check("nonsense", Shape(1, 1), 3)


def test_report_schema_and_verdict():
    r = run_check("thm1", Shape(1, 1), 3)
    d = r.to_dict()
    assert sorted(d) == ["check", "convention", "elapsed_ms", "m", "n",
                         "order", "verdict", "witnesses"]
    assert d["verdict"] == "pass" and d["witnesses"] == []
    parsed = json.loads(r.to_json())
    assert parsed["check"] == "thm1"


def test_reports_are_idempotent():
    a = run_check("case3", Shape(1, 1), 3)
    b = run_check("case3", Shape(1, 1), 3)
    assert a.to_dict() | {"elapsed_ms": 0} == b.to_dict() | {"elapsed_ms": 0}


def test_run_all_sorted_and_passing():
    reports = run_all(Shape(1, 1), 3)
    assert [r.check for r in reports] == sorted(REGISTRY)
    assert all(r.passed for r in reports)


def test_resolve_convention_is_plain():
    assert resolve_convention() == "plain"


def test_twisted_convention_fails_inverse_relation():
    r = run_check("inverse_relation", Shape(1, 1), 3, convention="twisted")
    assert r.verdict == "fail" and r.witnesses


def test_default_orders():
    assert default_order(Shape(1, 1)) == 4
    assert default_order(Shape(2, 2)) == 3
