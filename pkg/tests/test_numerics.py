import math

import numpy as np
import pytest

from symmetria.numerics import (
    FDStencil,
    QuadratureRule,
    QuadratureEvaluationError,
    as_matrix,
    commutator,
    fd_jacobian,
    fd_laplacian,
    integrate_periodic,
    kron,
    sup_norm,
)

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)

# value of int_{-pi}^{pi} (1 + i cos t)^3 e^{-it} dt from a dense trapezoid
# oracle at 1e5 nodes (tests/oracles.trapezoid_integral); equals 9i pi/4
OSCILLATORY_INTEGRAL = 7.068583470577033j


def test_as_matrix_rejects_nonfinite():
    with pytest.raises(ValueError):
        as_matrix([[1.0, float("nan")], [0.0, 1.0]])
    with pytest.raises(ValueError):
        as_matrix([1.0, 2.0])


def test_kron_identity():
    assert sup_norm(kron(np.eye(2), np.eye(2)) - np.eye(4)) == 0.0


def test_kron_sigma1_antidiagonal():
    expected = np.zeros((4, 4))
    for i in range(4):
        expected[i, 3 - i] = 1.0
    assert sup_norm(kron(SIGMA1, SIGMA1) - expected) == 0.0


def test_kron_mixed_product_law():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(100):
        a, b, c, d = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(4))
        worst = max(worst, sup_norm(kron(a, b) @ kron(c, d) - kron(a @ c, b @ d)))
    assert worst < 1e-12


def test_kron_bilinear():
    rng = np.random.default_rng(12)
    a, b, c = (rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2)) for _ in range(3))
    alpha = 0.7 - 0.2j
    lhs = kron(alpha * a + b, c)
    rhs = alpha * kron(a, c) + kron(b, c)
    assert sup_norm(lhs - rhs) < 1e-12


def test_commutator_pauli():
    assert sup_norm(commutator(SIGMA1, SIGMA2) - 2j * SIGMA3) == 0.0
    assert sup_norm(commutator(SIGMA1, SIGMA1)) == 0.0
    assert sup_norm(commutator(SIGMA1, SIGMA2, "plus")) == 0.0


def test_commutator_shape_mismatch():
    with pytest.raises(ValueError):
        commutator(np.eye(2), np.eye(3))


def test_quadrature_rule_validation():
    with pytest.raises(ValueError):
        QuadratureRule(node_count=2)
    with pytest.raises(ValueError):
        QuadratureRule(node_count=10, kind="composite-simpson")
    with pytest.raises(ValueError):
        QuadratureRule(node_count=5, kind="monte-carlo")


def test_integrate_cos_squared():
    val = integrate_periodic(lambda t: math.cos(t) ** 2, -math.pi, math.pi,
                             QuadratureRule(node_count=65))
    assert abs(val - math.pi) < 1e-10


def test_integrate_full_period_oscillation():
    val = integrate_periodic(lambda t: complex(math.cos(t), math.sin(t)),
                             -math.pi, math.pi)
    assert abs(val) < 1e-12


def test_integrate_against_trapezoid_oracle():
    f = lambda t: (1 + 1j * math.cos(t)) ** 3 * complex(math.cos(-t), math.sin(-t))
    val = integrate_periodic(f, -math.pi, math.pi)
    assert abs(val - OSCILLATORY_INTEGRAL) < 1e-9


def test_integrate_gauss_legendre():
    val = integrate_periodic(lambda t: t * t, 0.0, 1.0,
                             QuadratureRule(node_count=16, kind="gauss-legendre"))
    assert abs(val - 1.0 / 3.0) < 1e-13


def test_integrate_convergence_order():
    f = lambda t: math.exp(math.sin(3 * t))
    ref = integrate_periodic(f, -math.pi, math.pi, QuadratureRule(node_count=2049))
    e1 = abs(integrate_periodic(f, -math.pi, math.pi, QuadratureRule(node_count=17)) - ref)
    e2 = abs(integrate_periodic(f, -math.pi, math.pi, QuadratureRule(node_count=33)) - ref)
    assert e2 < e1 / 8.0


def test_integrate_nonfinite_propagates_node():
    def f(t):
        return math.inf if t == 0.0 else 1.0 / t

    with pytest.raises(QuadratureEvaluationError) as err:
        integrate_periodic(f, -1.0, 1.0, QuadratureRule(node_count=5))
    assert err.value.node == 0.0


def test_fd_laplacian_quadratic_exact():
    u = lambda x: float(x[0] ** 2 + x[1] ** 2 + x[2] ** 2)
    val = fd_laplacian(u, [0.3, -0.7, 1.1], FDStencil(step=0.25, order=4))
    assert abs(val - 6.0) < 1e-12


@pytest.mark.parametrize("order,degree", [(2, 3), (4, 5)])
def test_fd_laplacian_polynomial_exactness(order, degree):
    # exact on polynomials of degree <= order + 1; larger step keeps the
    # cancellation noise below 1e-12
    rng = np.random.default_rng(5)
    coeffs = rng.normal(size=degree + 1)
    u = lambda x: float(sum(c * x[0] ** p for p, c in enumerate(coeffs)))
    expected = sum(p * (p - 1) * c * 0.4 ** (p - 2) for p, c in enumerate(coeffs) if p >= 2)
    val = fd_laplacian(u, [0.4, 0.0], FDStencil(step=0.5, order=order))
    assert abs(val - expected) < 1e-12


def test_fd_laplacian_inverse_radius():
    u = lambda x: 1.0 / math.sqrt(float(x @ x))
    val = fd_laplacian(u, [1.0, 1.0, 1.0], FDStencil(step=1e-3, order=4))
    assert abs(val) < 1e-6


def test_fd_laplacian_cubic_axis():
    u = lambda x: float(x[0] ** 3)
    val = fd_laplacian(u, [2.0, 0.0, 0.0], FDStencil(step=1e-3, order=2))
    assert abs(val - 12.0) < 1e-5


def test_fd_jacobian_identity_and_linear():
    ident = fd_jacobian(lambda x: x, [0.2, 0.4, -0.1])
    assert sup_norm(ident - np.eye(3)) < 1e-10
    M = np.array([[1.0, 2.0], [3.0, -1.0]])
    jac = fd_jacobian(lambda x: M @ x, [0.5, 0.7])
    assert sup_norm(jac - M) < 1e-9


def test_fd_jacobian_inversion_matches_symbolic_oracle():
    # d/dx [-x / eta(x,x)] at x = (2,0,0,0) is diag(-1/4, 1/4, 1/4, 1/4):
    # differentiate -x_a / s with s = -t^2 + |r|^2 by hand
    eta = np.diag([-1.0, 1.0, 1.0, 1.0])

    def inversion(x):
        s = float(x @ eta @ x)
        return -x / s

    jac = fd_jacobian(inversion, [2.0, 0.0, 0.0, 0.0])
    assert sup_norm(jac - np.diag([-0.25, 0.25, 0.25, 0.25])) < 1e-7
