"""Tests for the (anti)homomorphism tables and their composites."""

import pytest

from yangian import Shape, algebra, supercommutator
from yangian.maps import (
    DegreeBoundExceeded,
    compose,
    identity_table,
    omega_table,
    phi_apply,
    phi_table,
    psi_table,
    rho_table,
    tau_apply,
)

CONV = "plain"


def test_omega_involution():
    sh = Shape(2, 1)
    om = omega_table(sh, 3, CONV)
    alg = algebra(2, 1)
    for i in range(1, 4):
        for j in range(1, 4):
            for r in range(1, 4):
                g = alg.gen(i, j, r)
                assert om.apply(om.apply(g)) == g, (i, j, r)


def test_omega_level_one():
    # T(-u)^-1 = 1 + t^(1) u^-1 + ..., so omega fixes every level-1 generator
    sh = Shape(1, 2)
    om = omega_table(sh, 3, CONV)
    alg = algebra(1, 2)
    for i in range(1, 4):
        for j in range(1, 4):
            assert om.apply(alg.gen(i, j, 1)) == alg.gen(i, j, 1)


def test_omega_preserves_relations():
    sh = Shape(1, 1)
    om = omega_table(sh, 4, CONV)
    alg = algebra(1, 1)
    for g1 in [(1, 2, 1), (2, 1, 1), (1, 1, 2), (2, 2, 1)]:
        for g2 in [(1, 2, 1), (2, 2, 2), (2, 1, 1)]:
            a, b = alg.gen(*g1), alg.gen(*g2)
            lhs = om.apply(supercommutator(a, b))
            rhs = supercommutator(om.apply(a), om.apply(b))
            assert lhs == rhs, (g1, g2)


def test_omega_degree_bound():
    om = omega_table(Shape(1, 1), 2, CONV)
    alg = algebra(1, 1)
    with pytest.raises(DegreeBoundExceeded):
        om.apply(alg.gen(1, 1, 3))


def test_tau_involution_and_antimultiplicativity():
    # tau^2 is the parity automorphism x -> (-1)^p(x) x, so it restricts to
    # the identity exactly on the even part
    alg = algebra(2, 1)
    sh = alg.shape
    gens = [(1, 2, 1), (2, 3, 1), (3, 1, 2), (1, 1, 1)]
    for g in gens:
        x = alg.gen(*g)
        sign = (-1) ** alg.gen_parity(g)
        assert tau_apply(tau_apply(x)) == sign * x
    # tau(ab) = (-1)^(p(a)p(b)) tau(b) tau(a)
    for g1 in gens:
        for g2 in gens:
            a, b = alg.gen(*g1), alg.gen(*g2)
            sign = (-1) ** (alg.gen_parity(g1) * alg.gen_parity(g2))
            assert tau_apply(a * b) == sign * (tau_apply(b) * tau_apply(a))


def test_tau_on_generators():
    alg = algebra(1, 1)
    sh = alg.shape
    # sign (-1)^(parity(i)(parity(j)+1))
    assert tau_apply(alg.gen(1, 2, 1)) == alg.gen(2, 1, 1)
    assert tau_apply(alg.gen(2, 1, 1)) == -alg.gen(1, 2, 1)
    assert tau_apply(alg.gen(2, 2, 3)) == alg.gen(2, 2, 3)


def test_rho_is_a_homomorphism_to_the_flipped_shape():
    sh = Shape(2, 1)
    rho = rho_table(sh, 3)
    assert rho.target == Shape(1, 2)
    alg = algebra(2, 1)
    tgt = algebra(1, 2)
    assert rho.apply(alg.gen(1, 2, 1)) == -tgt.gen(3, 2, 1)
    assert rho.apply(alg.gen(1, 2, 2)) == tgt.gen(3, 2, 2)
    # relation preservation on a sample
    for g1 in [(1, 3, 1), (3, 1, 1), (2, 2, 2)]:
        for g2 in [(3, 2, 1), (1, 1, 1)]:
            a, b = alg.gen(*g1), alg.gen(*g2)
            assert rho.apply(supercommutator(a, b)) == supercommutator(
                rho.apply(a), rho.apply(b))


def test_phi_inclusion():
    alg = algebra(1, 1)
    tgt = algebra(2, 1)
    assert phi_apply(alg.gen(1, 2, 1), 1) == tgt.gen(2, 3, 1)
    table = phi_table(Shape(1, 1), 1, 3)
    assert table.apply(alg.gen(2, 2, 2)) == tgt.gen(3, 3, 2)
    # phi is a homomorphism on the nose (index-shifted defining relations)
    a, b = alg.gen(1, 2, 1), alg.gen(2, 1, 2)
    assert phi_apply(supercommutator(a, b), 1) == supercommutator(
        phi_apply(a, 1), phi_apply(b, 1))


def test_psi_composition_law():
    # psi_k . psi_l = psi_{k+l} on generators (k + l <= 2)
    src = Shape(1, 1)
    mid = Shape(2, 1)
    N = 3
    psi1 = psi_table(src, 1, N, CONV)
    psi1_again = psi_table(mid, 1, N, CONV)
    psi2 = psi_table(src, 2, N, CONV)
    alg = algebra(1, 1)
    for i in (1, 2):
        for j in (1, 2):
            for r in (1, 2, 3):
                g = alg.gen(i, j, r)
                assert psi1_again.apply(psi1.apply(g)) == psi2.apply(g), (i, j, r)


def test_identity_and_compose():
    sh = Shape(1, 1)
    ident = identity_table(sh, 3)
    om = omega_table(sh, 3, CONV)
    alg = algebra(1, 1)
    comp = compose(om, ident)
    for i in (1, 2):
        for j in (1, 2):
            g = alg.gen(i, j, 2)
            assert comp.apply(g) == om.apply(g)
    assert compose(om, om).apply(alg.gen(1, 2, 3)) == alg.gen(1, 2, 3)
