"""Harmonic-function toolkit: fundamental solutions with their flux
normalization, Kelvin inversion, integral-representation solutions with
associated Legendre factors, polar-coordinate Laplacians, and the symbol
of the Laplace operator.

Fields are plain callables on n-vectors; all harmonicity statements are
checked by finite differences elsewhere (numerics.fd_laplacian).
"""

from __future__ import annotations

import cmath
import math
from typing import Callable, Sequence

import numpy as np

from .numerics import QuadratureRule, integrate_periodic


class SingularPointError(ValueError):
    pass


class CoordinateSingularityError(ValueError):
    pass


def unit_sphere_area(n: int) -> float:
    """Surface measure of the unit sphere bounding the unit ball in R^n
    (2 pi in the plane, 4 pi in space)."""
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)


def gamma_fundamental(n: int, r: float) -> float:
    """Radial profile of the fundamental solution with unit flux:
    r^(2-n)/((n-2) omega_n) for n > 2, log(1/r)/(2 pi) in the plane."""
    if n < 2:
        raise ValueError("dimension must be >= 2")
    if r <= 0:
        raise ValueError("radius must be positive")
    if n == 2:
        return math.log(1.0 / r) / (2.0 * math.pi)
    return r ** (2 - n) / ((n - 2) * unit_sphere_area(n))


def fundamental_solution(n: int, source: Sequence[float]) -> Callable[[np.ndarray], float]:
    """gamma(|x - source|) as a field on R^n."""
    xi = np.asarray(source, dtype=float)

    def field(xv: np.ndarray) -> float:
        r = float(np.linalg.norm(np.asarray(xv, dtype=float) - xi))
        if r == 0.0:
            raise SingularPointError("fundamental solution evaluated at its source")
        return gamma_fundamental(n, r)

    return field


def _sphere_area_by_quadrature(n: int, nodes: int) -> float:
    """omega_n from nested 1-D quadrature of the angular measure,
    independent of the Gamma-function closed form used by gamma_fundamental."""
    area = 2.0 * math.pi
    rule = QuadratureRule(node_count=nodes if nodes % 2 == 1 else nodes + 1)
    for j in range(1, n - 1):
        s = integrate_periodic(lambda th, j=j: math.sin(th) ** j, 0.0, math.pi, rule)
        area *= s.real
    return area


def flux_through_sphere(n: int, radius: float, nodes: int = 201) -> float:
    """-(d gamma/d r)(radius) times the numerically integrated sphere area.

    The derivative is an order-4 central difference and the area comes from
    quadrature, so a value of 1 confirms the 1/((n-2) omega_n) normalization
    rather than restating it.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    h = 1e-3 * radius
    d = (-gamma_fundamental(n, radius + 2 * h) + 8.0 * gamma_fundamental(n, radius + h)
         - 8.0 * gamma_fundamental(n, radius - h) + gamma_fundamental(n, radius - 2 * h)) / (12.0 * h)
    return -d * _sphere_area_by_quadrature(n, nodes) * radius ** (n - 1)


def kelvin_invert(u: Callable[[np.ndarray], float], n: int) -> Callable[[np.ndarray], float]:
    """Kelvin transform v(x) = |x|^-(n-2) u(x / |x|^2); harmonic inputs map
    to harmonic outputs on the inverted domain."""
    def v(xv: np.ndarray) -> float:
        xv = np.asarray(xv, dtype=float)
        r2 = float(xv @ xv)
        if r2 == 0.0:
            raise SingularPointError("Kelvin transform evaluated at the origin")
        return r2 ** (-(n - 2) / 2.0) * u(xv / r2)

    return v


def exterior_family(a: float, r: float) -> float:
    """u = 1 - a + a/r: boundary value 1 on the unit sphere for every a."""
    if r <= 0:
        raise ValueError("radius must be positive")
    return 1.0 - a + a / r


def exterior_family_regular_at_origin(a: float, probe: float = 1e-6) -> bool:
    """Whether the Kelvin transform (1-a)/r + a of the family stays bounded
    toward the origin; true only for a = 1."""
    v = lambda r: (1.0 - a) / r + a
    return abs(v(probe)) < 10.0 * (abs(a) + 1.0)


def legendre(n: int, h: int, xval: float) -> float:
    """Associated Legendre P_{n,h}(x) by the stable upward recurrence,
    Condon-Shortley phase included."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if abs(h) > n:
        raise ValueError(f"order |h| = {abs(h)} exceeds degree {n}")
    if not -1.0 <= xval <= 1.0:
        raise ValueError("argument must lie in [-1, 1]")
    m = abs(h)
    # seed: P_m^m, then P_{m+1}^m, then the three-term recurrence in degree
    pmm = 1.0
    if m > 0:
        s = math.sqrt(max(0.0, 1.0 - xval * xval))
        fact = 1.0
        for _ in range(m):
            pmm *= -fact * s
            fact += 2.0
    if n == m:
        out = pmm
    else:
        pm1 = xval * (2 * m + 1) * pmm
        if n == m + 1:
            out = pm1
        else:
            for ell in range(m + 2, n + 1):
                pmm, pm1 = pm1, (xval * (2 * ell - 1) * pm1 - (ell + m - 1) * pmm) / (ell - m)
            out = pm1
    if h < 0:
        out *= (-1) ** m * math.factorial(n - m) / math.factorial(n + m)
    return out


def integral_rep(n: int, h: int, point: Sequence[float],
                 rule: QuadratureRule = QuadratureRule()) -> complex:
    """int_{-pi}^{pi} (z + i x cos t + i y sin t)^n e^{i h t} dt.

    Real and imaginary parts are harmonic in (x, y, z); the value is
    proportional to r^n e^{i h phi} P_{n,h}(cos theta).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    xv, yv, zv = (float(c) for c in point)

    def integrand(t: float) -> complex:
        return (zv + 1j * xv * math.cos(t) + 1j * yv * math.sin(t)) ** n * cmath.exp(1j * h * t)

    return integrate_periodic(integrand, -math.pi, math.pi, rule)


def solid_harmonic(n: int, h: int, point: Sequence[float]) -> complex:
    """r^n e^{i h phi} P_{n,h}(cos theta) in Cartesian coordinates."""
    xv, yv, zv = (float(c) for c in point)
    r = math.sqrt(xv * xv + yv * yv + zv * zv)
    if r == 0.0:
        return complex(1.0 if n == 0 else 0.0)
    phi = math.atan2(yv, xv)
    return r ** n * cmath.exp(1j * h * phi) * legendre(n, h, zv / r)


def calibrate_proportionality(n: int, h: int, points: Sequence[Sequence[float]],
                              rule: QuadratureRule = QuadratureRule()) -> tuple[complex, float]:
    """Fit the constant c(n,h) relating integral_rep to solid_harmonic at the
    first point and return (c, max relative deviation over the rest)."""
    ref = None
    spread = 0.0
    for pt in points:
        num = integral_rep(n, h, pt, rule)
        den = solid_harmonic(n, h, pt)
        if abs(den) < 1e-9:
            raise ValueError(f"reference harmonic vanishes near {pt!r}; pick another sample")
        ratio = num / den
        if ref is None:
            ref = ratio
        else:
            spread = max(spread, abs(ratio - ref) / abs(ref))
    return ref, spread


def polar_laplacian(coords: str, u: Callable[..., float], point: Sequence[float],
                    h: float = 1e-3) -> float:
    """Laplacian through the polar (2-D) or spherical (3-D) formula with
    nested central differences.

    polar2d:      (1/r) [ d_r(r u_r) + d_phi(u_phi / r) ]
    spherical3d:  (1/(r^2 sin th)) [ d_r(r^2 u_r sin th)
                   + d_th(u_th sin th) + d_phi(u_phi / sin th) ]
    """
    if coords == "polar2d":
        r0, phi0 = (float(c) for c in point)
        if r0 <= 2 * h:
            raise CoordinateSingularityError("too close to the polar origin")
        u_r = lambda r, phi: (u(r + h, phi) - u(r - h, phi)) / (2 * h)
        u_phi = lambda r, phi: (u(r, phi + h) - u(r, phi - h)) / (2 * h)
        term_r = ((r0 + h) * u_r(r0 + h, phi0) - (r0 - h) * u_r(r0 - h, phi0)) / (2 * h)
        term_phi = (u_phi(r0, phi0 + h) / r0 - u_phi(r0, phi0 - h) / r0) / (2 * h)
        return (term_r + term_phi) / r0
    if coords == "spherical3d":
        r0, th0, phi0 = (float(c) for c in point)
        if r0 <= 2 * h or math.sin(th0) <= 0.05:
            raise CoordinateSingularityError("too close to a spherical coordinate singularity")
        u_r = lambda r, th, phi: (u(r + h, th, phi) - u(r - h, th, phi)) / (2 * h)
        u_th = lambda r, th, phi: (u(r, th + h, phi) - u(r, th - h, phi)) / (2 * h)
        u_phi = lambda r, th, phi: (u(r, th, phi + h) - u(r, th, phi - h)) / (2 * h)
        term_r = ((r0 + h) ** 2 * u_r(r0 + h, th0, phi0) * math.sin(th0)
                  - (r0 - h) ** 2 * u_r(r0 - h, th0, phi0) * math.sin(th0)) / (2 * h)
        term_th = (u_th(r0, th0 + h, phi0) * math.sin(th0 + h)
                   - u_th(r0, th0 - h, phi0) * math.sin(th0 - h)) / (2 * h)
        term_phi = (u_phi(r0, th0, phi0 + h) - u_phi(r0, th0, phi0 - h)) / (2 * h) / math.sin(th0)
        return (term_r + term_th + term_phi) / (r0 * r0 * math.sin(th0))
    raise ValueError(f"unknown coordinate system {coords!r}")


def symbol(kv) -> float:
    """Squared length of the frequency vector: the rotation-invariant symbol
    of the (positive) Laplace operator."""
    kv = np.asarray(kv, dtype=float)
    return float(kv @ kv)
