import numpy as np
import pytest

from symmetria.hopf import (
    antipode_convention_solve,
    coassociativity_residual,
    coproduct_rep,
    counit_antipode_residuals,
    derivative_matrix,
    fd_weights,
    planck_commutator_residual,
    planck_coproduct_residual,
    planck_scale_ops,
    q_number,
    relations_residual,
    uq_su2_rep,
)
from symmetria.numerics import kron, sup_norm

SPINS = (0.5, 1.0, 1.5)
QS = (0.7, 1.3, 2.0)


def test_q_number_basics():
    assert q_number(1, 1.7) == 1.0
    q = 1.4
    assert abs(q_number(2, q) - (q ** 2 - q ** -2) / (q - 1 / q)) < 1e-15
    # q-numbers deform integers quadratically
    assert abs(q_number(3, 1.001) - 3.0) < 1e-4


def test_rep_validation():
    with pytest.raises(ValueError):
        uq_su2_rep(0.5, 1.0)
    with pytest.raises(ValueError):
        uq_su2_rep(0.3, 1.5)
    with pytest.raises(ValueError):
        uq_su2_rep(0.5, -2.0)


def test_spin_half_commutator_is_h():
    # X+ X- - X- X+ = diag(1, -1) = H exactly at j = 1/2, any q
    for q in QS:
        rep = uq_su2_rep(0.5, q)
        assert sup_norm((rep.Xp @ rep.Xm - rep.Xm @ rep.Xp) - rep.H) == 0.0


def test_ladder_relation_exact():
    for j in SPINS:
        rep = uq_su2_rep(j, 1.3)
        assert sup_norm(rep.H @ rep.Xp - rep.Xp @ rep.H - 2 * rep.Xp) < 1e-13
        assert sup_norm(rep.H @ rep.Xm - rep.Xm @ rep.H + 2 * rep.Xm) < 1e-13


@pytest.mark.parametrize("j", SPINS)
@pytest.mark.parametrize("q", QS)
def test_defining_relations(j, q):
    rep = uq_su2_rep(j, q)
    assert relations_residual(rep.H, rep.Xp, rep.Xm, q) < 1e-11


@pytest.mark.parametrize("j", SPINS)
@pytest.mark.parametrize("q", QS)
def test_coproduct_images_satisfy_relations(j, q):
    rep = uq_su2_rep(j, q)
    cp = coproduct_rep(rep)
    assert relations_residual(cp.H, cp.Xp, cp.Xm, q) < 1e-10


def test_coproduct_h_additive_exactly():
    rep = uq_su2_rep(1.0, 1.5)
    cp = coproduct_rep(rep)
    one = np.eye(3, dtype=complex)
    assert sup_norm(cp.H - (kron(rep.H, one) + kron(one, rep.H))) == 0.0


def test_coproduct_classical_limit_point():
    rep = uq_su2_rep(0.5, 1.0 + 1e-6)
    cp = coproduct_rep(rep)
    one = np.eye(2, dtype=complex)
    additive = kron(rep.Xp, one) + kron(one, rep.Xp)
    assert sup_norm(cp.Xp - additive) < 1e-5


def test_coproduct_classical_limit_slope():
    qs = [1 + 10.0 ** (-e) for e in (2, 3, 4, 5)]
    classical = uq_su2_rep(0.5, 1 + 1e-12)
    one = np.eye(2, dtype=complex)
    additive = kron(classical.Xp, one) + kron(one, classical.Xp)
    errs = [sup_norm(coproduct_rep(uq_su2_rep(0.5, q)).Xp - additive) for q in qs]
    slope = float(np.polyfit(np.log([q - 1 for q in qs]), np.log(errs), 1)[0])
    assert abs(slope - 1.0) < 0.2


@pytest.mark.parametrize("j", SPINS)
@pytest.mark.parametrize("q", QS)
def test_coassociativity(j, q):
    assert coassociativity_residual(uq_su2_rep(j, q)) < 1e-10


def test_coassociativity_continuity_near_one():
    assert coassociativity_residual(uq_su2_rep(0.5, 1 + 1e-8)) < 1e-7


def test_counit_antipode_axioms():
    for q in QS:
        for j in (0.5, 1.0):
            res = counit_antipode_residuals(uq_su2_rep(j, q))
            assert max(res.values()) < 1e-11, (j, q, res)


def test_antipode_convention_from_2x2_solve():
    for q in (0.7, 1.3, 2.0):
        cp, cm = antipode_convention_solve(q)
        assert abs(cp + q) < 1e-12
        assert abs(cm + 1.0 / q) < 1e-12


def test_fd_weights_order8_central():
    w = fd_weights(range(-4, 5))
    expected = np.array([1 / 280, -4 / 105, 1 / 5, -4 / 5, 0, 4 / 5, -1 / 5, 4 / 105, -1 / 280])
    assert sup_norm((w - expected)[None, :]) < 1e-12


def test_derivative_matrix_exact_on_degree8():
    N = 64
    x = np.linspace(-1, 1, N)
    D = derivative_matrix(N, x[1] - x[0])
    for deg in (1, 3, 8):
        err = np.max(np.abs(D @ x ** deg - deg * x ** (deg - 1)))
        assert err < 1e-8, deg


def test_planck_validation():
    with pytest.raises(ValueError):
        planck_scale_ops(32, 5.0, 1.0, 2.0)
    with pytest.raises(ValueError):
        planck_scale_ops(128, 5.0, 1.0, 0.001)


def test_planck_commutator_interior():
    ops = planck_scale_ops(256, 5.0, 1.0, 2.0)
    assert planck_commutator_residual(ops) < 1e-6


def test_planck_commutator_converges_with_resolution():
    res_small = planck_commutator_residual(planck_scale_ops(128, 5.0, 1.0, 2.0))
    res_large = planck_commutator_residual(planck_scale_ops(256, 5.0, 1.0, 2.0))
    # order-8 stencils: halving the spacing should gain far more than 2^4
    assert res_large < res_small / 16.0


def test_planck_flat_limit():
    # large l: the deformation diagonal collapses toward zero like x/l
    ops = planck_scale_ops(128, 5.0, 1.0, 1e6)
    assert np.max(np.abs(ops.deform)) < 1e-5


def test_planck_coproduct_homomorphism():
    ops = planck_scale_ops(256, 5.0, 1.0, 2.0)
    assert planck_coproduct_residual(ops) < 1e-5
