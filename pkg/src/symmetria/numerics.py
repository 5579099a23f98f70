"""Shared numeric substrate: dense complex matrices, Kronecker products,
commutators, periodic quadrature, and finite-difference stencils.

Matrices are plain numpy arrays of complex128; ``as_matrix`` is the single
validation gate (shape and finiteness).  All residuals elsewhere in the
package are measured in the sup norm (max absolute entry).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np


class QuadratureEvaluationError(ValueError):
    """Integrand returned a non-finite value; carries the offending node."""

    def __init__(self, node: float, value: complex):
        self.node = node
        self.value = value
        super().__init__(f"integrand non-finite at t={node!r}: {value!r}")


def as_matrix(entries) -> np.ndarray:
    """Validate and return a 2-D complex matrix.

    Rejects non-2-D input and any non-finite entry.
    """
    m = np.asarray(entries, dtype=complex)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def sup_norm(m) -> float:
    """Max absolute entry; the residual norm used throughout."""
    return float(np.max(np.abs(np.asarray(m))))


def kron(a, b) -> np.ndarray:
    """Kronecker product with block (i,j) equal to a[i,j]*b."""
    return np.kron(as_matrix(a), as_matrix(b))


def commutator(a, b, sign: str = "minus") -> np.ndarray:
    """[A,B]_- = AB - BA or [A,B]_+ = AB + BA for square matrices."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ValueError(f"commutator needs equal square shapes, got {a.shape} and {b.shape}")
    if sign == "minus":
        return a @ b - b @ a
    if sign == "plus":
        return a @ b + b @ a
    raise ValueError(f"sign must be 'minus' or 'plus', got {sign!r}")


@dataclass(frozen=True)
class QuadratureRule:
    """1-D quadrature: composite Simpson (odd node count) or Gauss-Legendre."""

    node_count: int = 129
    kind: str = "composite-simpson"

    def __post_init__(self):
        if self.kind not in ("composite-simpson", "gauss-legendre"):
            raise ValueError(f"unknown quadrature kind {self.kind!r}")
        if self.node_count < 3:
            raise ValueError("node_count must be >= 3")
        if self.kind == "composite-simpson" and self.node_count % 2 == 0:
            raise ValueError("composite Simpson requires an odd node_count")


def integrate_periodic(f: Callable[[float], complex], a: float, b: float,
                       rule: QuadratureRule = QuadratureRule()) -> complex:
    """Quadrature of int_a^b f(t) dt.

    Composite Simpson converges geometrically for integrands that are
    smooth and periodic on [a, b]; Gauss-Legendre handles the rest.
    """
    if not b > a:
        raise ValueError("integration interval requires b > a")
    if rule.kind == "composite-simpson":
        nodes = np.linspace(a, b, rule.node_count)
        vals = np.empty(rule.node_count, dtype=complex)
        for i, t in enumerate(nodes):
            v = complex(f(float(t)))
            if not (np.isfinite(v.real) and np.isfinite(v.imag)):
                raise QuadratureEvaluationError(float(t), v)
            vals[i] = v
        h = (b - a) / (rule.node_count - 1)
        w = np.ones(rule.node_count)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        return complex(h / 3.0 * np.sum(w * vals))
    x, w = np.polynomial.legendre.leggauss(rule.node_count)
    t = 0.5 * (b - a) * x + 0.5 * (b + a)
    vals = np.empty(rule.node_count, dtype=complex)
    for i, ti in enumerate(t):
        v = complex(f(float(ti)))
        if not (np.isfinite(v.real) and np.isfinite(v.imag)):
            raise QuadratureEvaluationError(float(ti), v)
        vals[i] = v
    return complex(0.5 * (b - a) * np.sum(w * vals))


@dataclass(frozen=True)
class FDStencil:
    """Central finite-difference stencil of order 2 or 4."""

    step: float
    order: int = 4

    def __post_init__(self):
        if self.step <= 0:
            raise ValueError("step must be positive")
        if self.order not in (2, 4):
            raise ValueError("order must be 2 or 4")


# Defaults per the numeric tuning used across the verification suites.
LAPLACIAN_STENCIL = FDStencil(step=1e-3, order=4)
JACOBIAN_STENCIL = FDStencil(step=1e-5, order=2)


def fd_second_derivative(f: Callable[[float], float], x: float, stencil: FDStencil) -> float:
    h = stencil.step
    if stencil.order == 2:
        return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x)
            + 16.0 * f(x - h) - f(x - 2 * h)) / (12.0 * h * h)


def fd_derivative(f: Callable[[float], float], x: float, stencil: FDStencil) -> float:
    h = stencil.step
    if stencil.order == 2:
        return (f(x + h) - f(x - h)) / (2.0 * h)
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h)


def fd_laplacian(field: Callable[[np.ndarray], float], point: Sequence[float],
                 stencil: FDStencil = LAPLACIAN_STENCIL) -> float:
    """Sum of second partials of ``field`` at ``point`` by central differences.

    Exact (up to rounding) on polynomials of degree <= order + 1.
    """
    p = np.asarray(point, dtype=float)
    total = 0.0
    for axis in range(p.size):
        def along(s: float, axis=axis) -> float:
            q = p.copy()
            q[axis] = s
            return float(field(q))
        total += fd_second_derivative(along, float(p[axis]), stencil)
    return total


def fd_jacobian(mapping: Callable[[np.ndarray], Sequence[float]], point: Sequence[float],
                stencil: FDStencil = JACOBIAN_STENCIL) -> np.ndarray:
    """n x n matrix J[i,j] ~= d mapping_i / d x_j by central differences."""
    p = np.asarray(point, dtype=float)
    n = p.size
    j = np.zeros((n, n))
    h = stencil.step
    for col in range(n):
        def shifted(s: float, col=col) -> np.ndarray:
            q = p.copy()
            q[col] = s
            return np.asarray(mapping(q), dtype=float)
        x = float(p[col])
        if stencil.order == 2:
            j[:, col] = (shifted(x + h) - shifted(x - h)) / (2.0 * h)
        else:
            j[:, col] = (-shifted(x + 2 * h) + 8.0 * shifted(x + h)
                         - 8.0 * shifted(x - h) + shifted(x - 2 * h)) / (12.0 * h)
    return j
