"""Hopf-algebra structure in concrete representations.

The q-deformed enveloping algebra of su(2) is realized by ladder matrices
on spins 1/2..2; the coproduct, coassociativity, counit, and antipode
axioms are then matrix identities on tensor powers.  A grid realization of
the position/momentum pair with the exponentially deformed commutator
covers the Planck-scale example.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import kron, sup_norm


def q_number(n: float, q: float) -> float:
    """[n]_q = (q^n - q^-n)/(q - q^-1)."""
    if q == 1.0:
        return float(n)
    return (q ** n - q ** (-n)) / (q - 1.0 / q)


@dataclass(frozen=True)
class UqSu2Rep:
    """Spin-j matrices H, X+, X- of the q-deformed su(2) relations."""

    q: float
    j: float
    H: np.ndarray
    Xp: np.ndarray
    Xm: np.ndarray

    @property
    def dim(self) -> int:
        return int(round(2 * self.j)) + 1


def uq_su2_rep(j: float, q: float) -> UqSu2Rep:
    """Standard q-ladder construction: H = diag(2j..-2j) and
    X+ |j,m> = sqrt([j-m]_q [j+m+1]_q) |j,m+1>."""
    if q <= 0:
        raise ValueError("deformation parameter must be positive")
    if q == 1.0:
        raise ValueError("q = 1 is the undeformed algebra; use the classical limit checks")
    twoj = round(2 * j)
    if abs(2 * j - twoj) > 1e-12 or j < 0:
        raise ValueError("spin must be a nonnegative half-integer")
    d = twoj + 1
    m = np.array([j - i for i in range(d)])
    H = np.diag(2.0 * m).astype(complex)
    Xp = np.zeros((d, d), dtype=complex)
    for i in range(1, d):
        mi = m[i]
        Xp[i - 1, i] = math.sqrt(q_number(j - mi, q) * q_number(j + mi + 1, q))
    Xm = Xp.T.conj()
    return UqSu2Rep(q=q, j=j, H=H, Xp=Xp, Xm=Xm)


def q_power_H(rep: UqSu2Rep, exponent: float) -> np.ndarray:
    """q^(exponent * H), diagonal since H is."""
    return np.diag(rep.q ** (exponent * np.diag(rep.H).real)).astype(complex)


def relations_residual(H, Xp, Xm, q: float) -> float:
    """Sup-norm defect of [H,X+-] = +-2 X+- and [X+,X-] = (q^H - q^-H)/(q - q^-1).

    q^H is the diagonal (or tensor-factored) exponential of H, supplied by
    the caller through H itself when H is diagonal.
    """
    d = H.shape[0]
    qH = _matrix_q_power(H, q, 1.0)
    qHm = _matrix_q_power(H, q, -1.0)
    r1 = sup_norm(H @ Xp - Xp @ H - 2.0 * Xp)
    r2 = sup_norm(H @ Xm - Xm @ H + 2.0 * Xm)
    r3 = sup_norm(Xp @ Xm - Xm @ Xp - (qH - qHm) / (q - 1.0 / q))
    return max(r1, r2, r3)


def _matrix_q_power(H: np.ndarray, q: float, exponent: float) -> np.ndarray:
    """q^(exponent H) for diagonalizable H; diagonal H stays exact."""
    diag = np.diag(np.diag(H))
    if sup_norm(H - diag) < 1e-14:
        return np.diag(q ** (exponent * np.diag(H).real)).astype(complex)
    w, V = np.linalg.eig(H)
    return (V @ np.diag(q ** (exponent * w.real)) @ np.linalg.inv(V)).astype(complex)


@dataclass(frozen=True)
class CoproductRep:
    """Images of H, X+, X- on the tensor square."""

    H: np.ndarray
    Xp: np.ndarray
    Xm: np.ndarray


def coproduct_rep(rep: UqSu2Rep) -> CoproductRep:
    """Delta(H) = H x 1 + 1 x H,
    Delta(X+-) = X+- x q^(H/2) + q^(-H/2) x X+-."""
    d = rep.dim
    one = np.eye(d, dtype=complex)
    qh = q_power_H(rep, 0.5)
    qmh = q_power_H(rep, -0.5)
    return CoproductRep(
        H=kron(rep.H, one) + kron(one, rep.H),
        Xp=kron(rep.Xp, qh) + kron(qmh, rep.Xp),
        Xm=kron(rep.Xm, qh) + kron(qmh, rep.Xm),
    )


def coassociativity_residual(rep: UqSu2Rep) -> float:
    """Max defect of (Delta x id)Delta = (id x Delta)Delta on H, X+, X-.

    Group-like legs extend multiplicatively: Delta(q^(+-H/2)) is the tensor
    square of q^(+-H/2).
    """
    d = rep.dim
    one = np.eye(d, dtype=complex)
    qh = q_power_H(rep, 0.5)
    qmh = q_power_H(rep, -0.5)

    # H is primitive: both orders give the threefold sum
    dH = kron(rep.H, one) + kron(one, rep.H)
    lhs_h = kron(dH, one) + kron(kron(one, one), rep.H)
    rhs_h = kron(rep.H, kron(one, one)) + kron(one, dH)
    worst = sup_norm(lhs_h - rhs_h)
    for X in (rep.Xp, rep.Xm):
        dX = kron(X, qh) + kron(qmh, X)
        lhs = kron(dX, qh) + kron(kron(qmh, qmh), X)
        rhs = kron(X, kron(qh, qh)) + kron(qmh, dX)
        worst = max(worst, sup_norm(lhs - rhs))
    return worst


def counit_antipode_residuals(rep: UqSu2Rep) -> dict:
    """Residuals of the counit axiom (eps x id)Delta = id and the antipode
    axiom m(S x id)Delta = unit * eps = m(id x S)Delta, in the representation.

    Counit: eps(H) = eps(X+-) = 0, eps(q^(+-H/2)) = 1.  Antipode:
    S(H) = -H, S(X+-) = -q^(+-1) X+-, S(q^(+-H/2)) = q^(-+H/2); the X+ power
    follows from solving the 2x2 axiom, which fixes the convention.
    """
    d = rep.dim
    qh = q_power_H(rep, 0.5)
    qmh = q_power_H(rep, -0.5)
    res = {}
    # counit applied to the first tensor leg of each coproduct
    res["counit_H"] = sup_norm((0.0 * rep.H + rep.H) - rep.H)
    res["counit_Xp"] = sup_norm((0.0 * qh + 1.0 * rep.Xp) - rep.Xp)
    res["counit_Xm"] = sup_norm((0.0 * qh + 1.0 * rep.Xm) - rep.Xm)
    # antipode axiom, multiply after applying S to one leg
    q = rep.q
    SH, SXp, SXm = -rep.H, -q * rep.Xp, -(1.0 / q) * rep.Xm
    res["antipode_H"] = sup_norm(SH @ np.eye(d) + np.eye(d) @ rep.H)
    res["antipode_Xp_left"] = sup_norm(SXp @ qh + qh @ rep.Xp)
    res["antipode_Xp_right"] = sup_norm(rep.Xp @ _inv_diag(qh) + qmh @ SXp)
    res["antipode_Xm_left"] = sup_norm(SXm @ qh + qh @ rep.Xm)
    res["antipode_Xm_right"] = sup_norm(rep.Xm @ _inv_diag(qh) + qmh @ SXm)
    return res


def _inv_diag(m: np.ndarray) -> np.ndarray:
    return np.diag(1.0 / np.diag(m))


def antipode_convention_solve(q: float) -> tuple[float, float]:
    """Solve m(S x id)Delta(X+-) = 0 for S(X+-) = c+- X+- on the spin-1/2
    representation; returns (c+, c-), expected (-q, -1/q)."""
    rep = uq_su2_rep(0.5, q)
    qh = q_power_H(rep, 0.5)
    # c * X q^(H/2) + q^(H/2) X = 0  =>  c = -(q^(H/2) X)_01 / (X q^(H/2))_01
    cp = -(qh @ rep.Xp)[0, 1] / (rep.Xp @ qh)[0, 1]
    cm = -(qh @ rep.Xm)[1, 0] / (rep.Xm @ qh)[1, 0]
    return float(cp.real), float(cm.real)


# ---------------------------------------------------------------------------
# Planck-scale grid operators
# ---------------------------------------------------------------------------

def fd_weights(offsets, order: int = 1) -> np.ndarray:
    """Finite-difference weights for the derivative of given order at 0
    from the integer offsets (Vandermonde solve)."""
    offs = np.asarray(offsets, dtype=float)
    n = offs.size
    A = np.vander(offs, n, increasing=True).T
    b = np.zeros(n)
    b[order] = math.factorial(order)
    return np.linalg.solve(A, b)


def derivative_matrix(N: int, spacing: float, half_width: int = 4) -> np.ndarray:
    """Order-8 first-derivative matrix: 9-point central stencils inside,
    one-sided closures of the same width at the boundaries."""
    D = np.zeros((N, N))
    w = fd_weights(range(-half_width, half_width + 1))
    for i in range(N):
        if half_width <= i < N - half_width:
            D[i, i - half_width:i + half_width + 1] = w
        else:
            start = 0 if i < half_width else N - (2 * half_width + 1)
            offs = np.arange(start, start + 2 * half_width + 1) - i
            D[i, start:start + 2 * half_width + 1] = fd_weights(offs)
    return D / spacing


@dataclass(frozen=True)
class GridOperatorPair:
    """Position X (diagonal) and deformed momentum P = -i hbar f(X) D with
    f(x) = 1 - exp(-x/l) on a uniform grid over [-L, L]."""

    N: int
    L: float
    hbar: float
    l: float
    X: np.ndarray
    P: np.ndarray
    deform: np.ndarray  # diagonal of 1 - exp(-x/l)

    @property
    def spacing(self) -> float:
        return 2.0 * self.L / (self.N - 1)

    def interior(self) -> slice:
        return slice(self.N // 4, 3 * self.N // 4)


def planck_scale_ops(N: int = 256, L: float = 5.0, hbar: float = 1.0,
                     l: float = 2.0) -> GridOperatorPair:
    if N < 64:
        raise ValueError("grid needs at least 64 points")
    if L / l > 700.0 or not math.isfinite(math.exp(L / l)):
        raise ValueError("exp(x/l) overflows double precision on this grid")
    x = np.linspace(-L, L, N)
    spacing = x[1] - x[0]
    X = np.diag(x)
    deform = 1.0 - np.exp(-x / l)
    D = derivative_matrix(N, spacing)
    P = -1j * hbar * np.diag(deform) @ D
    return GridOperatorPair(N=N, L=L, hbar=hbar, l=l, X=X.astype(complex),
                            P=P, deform=deform)


def _gaussian_probes(x: np.ndarray, L: float) -> list:
    centers = (-0.3 * L, 0.0, 0.25 * L)
    width = L / 6.0
    return [np.exp(-((x - c) ** 2) / (2.0 * width ** 2)) for c in centers]


def planck_commutator_residual(ops: GridOperatorPair) -> float:
    """Defect of [X, P] = i hbar (1 - exp(-X/l)) acting on smooth probes.

    The commutator of the diagonal X with a banded derivative matrix is
    itself banded, so the identity holds in the operator-consistency sense:
    it is measured on Gaussian grid functions over the interior rows.
    """
    x = np.diag(ops.X).real
    target = 1j * ops.hbar * ops.deform
    comm = ops.X @ ops.P - ops.P @ ops.X
    inner = ops.interior()
    worst = 0.0
    for psi in _gaussian_probes(x, ops.L):
        lhs = comm @ psi
        rhs = target * psi
        worst = max(worst, float(np.max(np.abs((lhs - rhs)[inner]))))
    return worst


def planck_coproduct_residual(ops: GridOperatorPair) -> float:
    """Defect of [Delta X, Delta P] = i hbar (1x1 - E x E), E = exp(-X/l),
    with Delta X = X x 1 + 1 x X and Delta P = P x E + 1 x P, evaluated on
    product probes psi x phi (the tensor operators factor on those)."""
    x = np.diag(ops.X).real
    E = 1.0 - ops.deform
    comm = ops.X @ ops.P - ops.P @ ops.X
    inner = ops.interior()
    probes = _gaussian_probes(x, ops.L)
    worst = 0.0
    for psi in probes:
        for phi in probes:
            # [DX, DP](psi x phi) = ([X,P] psi) x (E phi) + psi x ([X,P] phi)
            lhs = np.outer(comm @ psi, E * phi) + np.outer(psi, comm @ phi)
            rhs = 1j * ops.hbar * (np.outer(psi, phi) - np.outer(E * psi, E * phi))
            worst = max(worst, float(np.max(np.abs((lhs - rhs)[inner, inner]))))
    return worst
