"""Slow independent oracles used to fix expected values in the tests.

These deliberately avoid the code paths under test: elliptic values come
from quadrature of the defining integral plus root-finding (or mpmath's
theta-based routines), Legendre values from explicit closed forms, and
integrals from dense trapezoid sums.
"""

import math

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq


def elliptic_K(k: float) -> float:
    """Defining integral of the complete elliptic integral, by quadrature."""
    val, _ = quad(lambda th: 1.0 / math.sqrt(1.0 - (k * math.sin(th)) ** 2),
                  0.0, math.pi / 2.0, epsabs=1e-13, epsrel=1e-13)
    return val


def incomplete_F(phi: float, k: float) -> float:
    val, _ = quad(lambda th: 1.0 / math.sqrt(1.0 - (k * math.sin(th)) ** 2),
                  0.0, phi, epsabs=1e-13, epsrel=1e-13)
    return val


def sn_cn_dn_by_inversion(u: float, k: float):
    """Invert u = F(phi, k) by bisection for u in (0, K); sn = sin(phi)."""
    if not 0.0 < u < elliptic_K(k):
        raise ValueError("oracle restricted to the fundamental quarter period")
    phi = brentq(lambda p: incomplete_F(p, k) - u, 0.0, math.pi / 2.0, xtol=1e-15)
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(1.0 - (k * sn) ** 2)
    return sn, cn, dn


def trapezoid_integral(f, a: float, b: float, n: int = 100_001) -> complex:
    t = np.linspace(a, b, n)
    vals = np.array([f(float(ti)) for ti in t])
    return complex(np.trapezoid(vals, t))


def legendre_closed_form(n: int, h: int, x: float) -> float:
    """Explicit associated Legendre polynomials for the degrees under test
    (Condon-Shortley phase)."""
    s = math.sqrt(max(0.0, 1.0 - x * x))
    table = {
        (0, 0): 1.0,
        (1, 0): x,
        (1, 1): -s,
        (2, 0): 0.5 * (3 * x * x - 1),
        (2, 1): -3.0 * x * s,
        (2, 2): 3.0 * (1 - x * x),
        (3, 0): 0.5 * (5 * x ** 3 - 3 * x),
        (3, 2): 15.0 * x * (1 - x * x),
        (4, 3): -105.0 * x * s ** 3,
    }
    return table[(n, h)]
