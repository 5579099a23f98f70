"""Elliptic r/R-matrices, Yang-Baxter residuals, the RLL exchange relation,
Sklyanin-algebra representations, Poisson tensors from volume contraction,
and quantitative classical-limit probes.

Classical coefficients: w1 = rho/sn, w2 = rho dn/sn, w3 = rho cn/sn at
modulus k.  Quantum coefficients: W1 = sn(i eta)/sn(u+i eta) and the dn/cn
weighted analogues, so that R(u) = 1 + sum W_a sigma_a x sigma_a.  Index
triples (alpha, beta, gamma) in the quadratic relations run over cyclic
permutations of (1,2,3); the alternative free-sum reading collapses by
antisymmetry and is kept only as a reported control.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .elliptic import EllipticPoleError, quarter_period, sn_cn_dn_complex, sn_cn_dn_real
from .liealg import PhasePolynomial
from .numerics import commutator, kron, sup_norm

SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

CYCLIC = ((1, 2, 3), (2, 3, 1), (3, 1, 2))


@dataclass(frozen=True)
class ClassicalRParams:
    rho: float
    k: float

    def __post_init__(self):
        if self.rho <= 0:
            raise ValueError("rho must be positive")
        if not 0.0 <= self.k < 1.0:
            raise ValueError("modulus must lie in [0,1)")


@dataclass(frozen=True)
class QuantumRParams:
    eta: float
    k: float

    def __post_init__(self):
        if self.eta == 0:
            raise ValueError("eta must be nonzero")
        if not 0.0 <= self.k < 1.0:
            raise ValueError("modulus must lie in [0,1)")


def _require_off_zero_lattice(u: float, k: float, margin: float = 1e-6):
    K = quarter_period(k)
    d = abs(u - 2.0 * K * round(u / (2.0 * K)))
    if d < margin:
        raise EllipticPoleError(complex(u), complex(2.0 * K * round(u / (2.0 * K))))


def classical_w(u: float, p: ClassicalRParams) -> tuple[float, float, float]:
    """(w1, w2, w3) = rho (1, dn, cn)/sn at (u, k); poles at sn = 0."""
    _require_off_zero_lattice(u, p.k)
    s, c, d = sn_cn_dn_real(u, p.k)
    return p.rho / s, p.rho * d / s, p.rho * c / s


def classical_quadric(p: ClassicalRParams) -> dict:
    """The u-independent differences J_ab = w_a^2 - w_b^2."""
    return {
        (1, 2): p.rho ** 2 * p.k ** 2,
        (1, 3): p.rho ** 2,
        (2, 3): p.rho ** 2 * (1.0 - p.k ** 2),
    }


def classical_r(u: float, p: ClassicalRParams) -> np.ndarray:
    """r(u) = sum_a w_a(u) sigma_a x sigma_a, a 4x4 matrix."""
    w = classical_w(u, p)
    out = np.zeros((4, 4), dtype=complex)
    for a in (1, 2, 3):
        out += w[a - 1] * kron(SIGMA[a], SIGMA[a])
    return out


def _embed_pair(m4: np.ndarray, legs: tuple[int, int]) -> np.ndarray:
    """Embed a two-site operator sum c_ab A_a x B_b given as a 4x4 matrix on
    C^2 x C^2 into three tensor legs."""
    out = np.zeros((8, 8), dtype=complex)
    # expand the 4x4 matrix in the Pauli x Pauli basis and re-kron on legs
    for a in range(4):
        for b in range(4):
            coeff = np.trace(kron(SIGMA[a], SIGMA[b]).conj().T @ m4) / 4.0
            if abs(coeff) < 1e-300:
                continue
            ops = [np.eye(2, dtype=complex)] * 3
            ops[legs[0]] = SIGMA[a]
            ops[legs[1]] = SIGMA[b]
            out += coeff * kron(kron(ops[0], ops[1]), ops[2])
    return out


def cybe_residual(u: float, v: float, p: ClassicalRParams) -> float:
    """Sup norm of [r12(u-v), r13(u)] + [r12(u-v), r23(v)] + [r13(u), r23(v)]."""
    for arg in (u, v, u - v):
        _require_off_zero_lattice(arg, p.k)
    r12 = _embed_pair(classical_r(u - v, p), (0, 1))
    r13 = _embed_pair(classical_r(u, p), (0, 2))
    r23 = _embed_pair(classical_r(v, p), (1, 2))
    total = commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23)
    return sup_norm(total)


def quantum_W(u: float, p: QuantumRParams) -> tuple[complex, complex, complex]:
    """(W1, W2, W3) built from sn, cn, dn at u + i eta and at i eta."""
    z = complex(u, p.eta)
    ze = complex(0.0, p.eta)
    s, c, d = sn_cn_dn_complex(z, p.k)
    se, ce, de = sn_cn_dn_complex(ze, p.k)
    if abs(s) < 1e-12:
        raise EllipticPoleError(z, 0j)
    return se / s, (d / s) * (se / de), (c / s) * (se / ce)


def quantum_curve(p: QuantumRParams, u_ref: float = 0.7) -> dict:
    """J_ab = (W_a^2 - W_b^2)/(W_c^2 - 1) at a reference argument; the
    constancy in u is verified separately."""
    W = quantum_W(u_ref, p)
    out = {}
    for a, b, c in ((1, 2, 3), (1, 3, 2), (2, 3, 1)):
        out[(a, b)] = (W[a - 1] ** 2 - W[b - 1] ** 2) / (W[c - 1] ** 2 - 1.0)
    return out


def quantum_R(u: float, p: QuantumRParams) -> np.ndarray:
    """R(u) = 1 + sum_a W_a(u) sigma_a x sigma_a."""
    W = quantum_W(u, p)
    out = np.eye(4, dtype=complex)
    for a in (1, 2, 3):
        out += W[a - 1] * kron(SIGMA[a], SIGMA[a])
    return out


def qybe_residual(u: float, v: float, p: QuantumRParams) -> float:
    """Sup norm of R12(u-v) R13(u) R23(v) - R23(v) R13(u) R12(u-v)."""
    r12 = _embed_pair(quantum_R(u - v, p), (0, 1))
    r13 = _embed_pair(quantum_R(u, p), (0, 2))
    r23 = _embed_pair(quantum_R(v, p), (1, 2))
    return sup_norm(r12 @ r13 @ r23 - r23 @ r13 @ r12)


# ---------------------------------------------------------------------------
# Sklyanin algebra representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SklyaninRep:
    """Generators S0..S3 as d x d matrices and the defining triple J."""

    dim: int
    S: tuple
    J: tuple

    def J_pair(self, a: int, b: int) -> float:
        """J_ab = -(J_a - J_b)/J_c with c the remaining index."""
        c = ({1, 2, 3} - {a, b}).pop()
        return -(self.J[a - 1] - self.J[b - 1]) / self.J[c - 1]


def rep2() -> SklyaninRep:
    """Two-dimensional representation: S0 = 1, S_a = sigma_a.

    Both families of commutation relations degenerate to Pauli identities;
    the J triple is immaterial and fixed to (1,1,1)."""
    return SklyaninRep(dim=2, S=tuple(SIGMA), J=(1.0, 1.0, 1.0))


def rep3(J1: float, J2: float, J3: float) -> SklyaninRep:
    """Three-dimensional representation; self-adjoint only for positive J."""
    if min(J1, J2, J3) <= 0:
        raise ValueError("rep3 requires positive J1, J2, J3")
    S0 = np.array([[J3, 0, J1 - J2], [0, J1 + J2 - J3, 0], [J1 - J2, 0, J3]], dtype=complex)
    S1 = math.sqrt(2 * J2 * J3) * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex)
    S2 = math.sqrt(2 * J3 * J1) * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex)
    S3 = 2 * math.sqrt(J1 * J2) * np.array([[1, 0, 0], [0, 0, 0], [0, 0, -1]], dtype=complex)
    return SklyaninRep(dim=3, S=(S0, S1, S2, S3), J=(float(J1), float(J2), float(J3)))


def sklyanin_residual(rep: SklyaninRep, convention: str = "cyclic") -> float:
    """Max defect of [S_a,S_0] = -i J_bc [S_b,S_c]_+ and
    [S_a,S_b] = i [S_0,S_c]_+ over cyclic triples.

    convention='summed' replaces J_bc [S_b,S_c]_+ by the free double sum,
    which vanishes by antisymmetry; it is kept as the reported control for
    the index-convention ambiguity."""
    S = rep.S
    worst = 0.0
    for a, b, c in CYCLIC:
        if convention == "cyclic":
            rhs1 = -1j * rep.J_pair(b, c) * commutator(S[b], S[c], "plus")
        elif convention == "summed":
            rhs1 = np.zeros_like(S[0])
            for bb in (1, 2, 3):
                for cc in (1, 2, 3):
                    if bb != cc:
                        rhs1 += -1j * rep.J_pair(bb, cc) * commutator(S[bb], S[cc], "plus")
        else:
            raise ValueError(f"unknown convention {convention!r}")
        worst = max(worst, sup_norm(commutator(S[a], S[0]) - rhs1))
        worst = max(worst, sup_norm(commutator(S[a], S[b]) - 1j * commutator(S[0], S[c], "plus")))
    return worst


def L_operator(u: float, rep: SklyaninRep, p: QuantumRParams) -> np.ndarray:
    """L(u) = sigma_0 x S_0 + sum_a W_a(u) sigma_a x S_a on aux x quantum."""
    W = quantum_W(u, p)
    out = kron(SIGMA[0], rep.S[0])
    for a in (1, 2, 3):
        out += W[a - 1] * kron(SIGMA[a], rep.S[a])
    return out


def rll_residual(u: float, v: float, rep: SklyaninRep, p: QuantumRParams) -> float:
    """Sup norm of R(u-v) L'(u) L''(v) - L''(v) L'(u) R(u-v) on
    aux1 x aux2 x quantum (dimension 4 d)."""
    d = rep.dim
    one_d = np.eye(d, dtype=complex)
    one_2 = np.eye(2, dtype=complex)
    R = kron(quantum_R(u - v, p), one_d)

    def embed_L(w: float, first_leg: bool) -> np.ndarray:
        W = quantum_W(w, p)
        out = kron(kron(SIGMA[0], one_2) if first_leg else kron(one_2, SIGMA[0]), rep.S[0])
        for a in (1, 2, 3):
            aux = kron(SIGMA[a], one_2) if first_leg else kron(one_2, SIGMA[a])
            out += W[a - 1] * kron(aux, rep.S[a])
        return out

    Lp = embed_L(u, True)
    Lpp = embed_L(v, False)
    return sup_norm(R @ Lp @ Lpp - Lpp @ Lp @ R)


# ---------------------------------------------------------------------------
# Poisson tensors from volume contraction
# ---------------------------------------------------------------------------

EPS4 = {}
for _p in ((0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2), (1, 0, 3, 2), (1, 2, 0, 3),
           (1, 3, 2, 0), (2, 0, 1, 3), (2, 1, 3, 0), (2, 3, 0, 1), (3, 0, 2, 1),
           (3, 1, 0, 2), (3, 2, 1, 0)):
    EPS4[_p] = 1
for _p in ((0, 1, 3, 2), (0, 2, 1, 3), (0, 3, 2, 1), (1, 0, 2, 3), (1, 2, 3, 0),
           (1, 3, 0, 2), (2, 0, 3, 1), (2, 1, 0, 3), (2, 3, 1, 0), (3, 0, 1, 2),
           (3, 1, 2, 0), (3, 2, 0, 1)):
    EPS4[_p] = -1


def epsilon4(i: int, j: int, k: int, l: int) -> int:
    """Levi-Civita symbol on indices 0..3 with eps(0,1,2,3) = +1."""
    return EPS4.get((i, j, k, l), 0)


def _coord(i: int):
    # the Poisson-tensor checks reuse the phase-polynomial engine on the
    # first four variable slots
    return PhasePolynomial.variable(f"x{i}")


@dataclass(frozen=True)
class PoissonTensorSpec:
    a: tuple
    b: tuple

    def __post_init__(self):
        if len(self.a) != 4 or len(self.b) != 4:
            raise ValueError("specs are 4-vectors")


def poisson_tensor(spec: PoissonTensorSpec) -> dict:
    """Bracket table {x_k, x_l} = eps_klij (a_i b_j - b_i a_j) x_i x_j,
    one term per unordered pair {i, j} (the free double sum doubles it)."""
    table = {}
    for k in range(4):
        for l in range(4):
            poly = PhasePolynomial.zero()
            for i in range(4):
                for j in range(i + 1, 4):
                    s = epsilon4(k, l, i, j)
                    if s == 0:
                        continue
                    coeff = s * (spec.a[i] * spec.b[j] - spec.b[i] * spec.a[j])
                    if coeff != 0:
                        poly = poly + (_coord(i) * _coord(j)).scale(coeff)
            table[(k, l)] = poly
    return table


def tensor_bracket(table: dict, f: PhasePolynomial, g: PhasePolynomial) -> PhasePolynomial:
    """{f, g} = sum_{k<l} B_kl (d_k f d_l g - d_l f d_k g) for the quadratic
    bracket table B."""
    out = PhasePolynomial.zero()
    for k in range(4):
        for l in range(k + 1, 4):
            B = table[(k, l)]
            if not B:
                continue
            out = out + B * (f.derivative(k) * g.derivative(l) - f.derivative(l) * g.derivative(k))
    return out


def poisson_jacobi_defect(table: dict) -> PhasePolynomial:
    """Sum over coordinate triples of the cyclic bracket; exactly zero for
    any tensor coming from the volume-contraction construction."""
    total = PhasePolynomial.zero()
    for i in range(4):
        for j in range(i + 1, 4):
            for k in range(j + 1, 4):
                xi, xj, xk = _coord(i), _coord(j), _coord(k)
                cyc = tensor_bracket(table, xi, tensor_bracket(table, xj, xk))
                cyc = cyc + tensor_bracket(table, xj, tensor_bracket(table, xk, xi))
                cyc = cyc + tensor_bracket(table, xk, tensor_bracket(table, xi, xj))
                total = total + cyc * cyc
    return total


# ---------------------------------------------------------------------------
# Classical Sklyanin bracket check and classical limits
# ---------------------------------------------------------------------------

def _sklyanin_bracket_table(p: ClassicalRParams, convention: str = "cyclic") -> dict:
    """{S_a, S_0} = 2 J_bc S_b S_c (cyclic) and {S_a, S_b} = -2 S_0 S_c,
    encoded on polynomial variables x0..x3 standing for S0..S3."""
    J = classical_quadric(p)

    def jpair(a: int, b: int) -> float:
        if (a, b) in J:
            return J[(a, b)]
        return -J[(b, a)]

    table = {(k, l): PhasePolynomial.zero() for k in range(4) for l in range(4)}
    for a, b, c in CYCLIC:
        if convention == "cyclic":
            sa_s0 = (_coord(b) * _coord(c)).scale(2.0 * jpair(b, c))
        else:
            sa_s0 = PhasePolynomial.zero()
            for bb in (1, 2, 3):
                for cc in (1, 2, 3):
                    if bb != cc:
                        sa_s0 = sa_s0 + (_coord(bb) * _coord(cc)).scale(2.0 * jpair(bb, cc))
        table[(a, 0)] = sa_s0
        table[(0, a)] = sa_s0.scale(-1.0)
        sab = (_coord(0) * _coord(c)).scale(-2.0)
        table[(a, b)] = sab
        table[(b, a)] = sab.scale(-1.0)
    return table


def classical_L_poly(u: float, p: ClassicalRParams) -> list:
    """L(u) = S_0 + i sum_a w_a(u) S_a sigma_a as a 2x2 matrix of
    polynomials in the coordinates S0..S3."""
    w = classical_w(u, p)
    L = [[PhasePolynomial.zero() for _ in range(2)] for _ in range(2)]
    for i in range(2):
        for j in range(2):
            L[i][j] = L[i][j] + _coord(0).scale(complex(SIGMA[0][i, j]))
            for a in (1, 2, 3):
                coeff = 1j * w[a - 1] * SIGMA[a][i, j]
                if coeff != 0:
                    L[i][j] = L[i][j] + _coord(a).scale(complex(coeff))
    return L


def classical_sklyanin_bracket_residual(p: ClassicalRParams, u: float, v: float,
                                        convention: str = "cyclic") -> float:
    """Max coefficient mismatch of {L'(u), L''(v)} = [r(u-v), L'(u) L''(v)]
    expanded symbolically over the S variables."""
    table = _sklyanin_bracket_table(p, convention)
    Lu = classical_L_poly(u, p)
    Lv = classical_L_poly(v, p)
    r = classical_r(u - v, p)

    # L' x L'' entries and their matrix product on the 4-dim aux space
    def idx(i1, i2):
        return 2 * i1 + i2

    prod = [[PhasePolynomial.zero() for _ in range(4)] for _ in range(4)]
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    prod[idx(i1, i2)][idx(j1, j2)] = Lu[i1][j1] * Lv[i2][j2]

    worst = 0.0
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    lhs = tensor_bracket(table, Lu[i1][j1], Lv[i2][j2])
                    rhs = PhasePolynomial.zero()
                    row, col = idx(i1, i2), idx(j1, j2)
                    for m in range(4):
                        rhs = rhs + prod[m][col].scale(complex(r[row, m]))
                        rhs = rhs - prod[row][m].scale(complex(r[m, col]))
                    worst = max(worst, (lhs - rhs).max_abs_coeff())
    return worst


def classical_limit_probe(u: float, p_base: ClassicalRParams, h_sequence) -> dict:
    """Log-log slopes of the three classical-limit errors under eta = rho h:
    e1 = max_a |W_a - i h w_a|,  e2 = |R - 1 - i h r|,  e3 = max |J_q - h^2 J|."""
    w = classical_w(u, p_base)
    r = classical_r(u, p_base)
    Jcl = classical_quadric(p_base)
    e1, e2, e3 = [], [], []
    hs = list(h_sequence)
    for h in hs:
        qp = QuantumRParams(eta=p_base.rho * h, k=p_base.k)
        W = quantum_W(u, qp)
        e1.append(max(abs(W[a] - 1j * h * w[a]) for a in range(3)))
        e2.append(sup_norm(quantum_R(u, qp) - np.eye(4) - 1j * h * r))
        Jq = quantum_curve(qp, u_ref=u)
        e3.append(max(abs(Jq[(a, b)] - h * h * Jcl[(a, b)]) for (a, b) in Jcl))

    def slope(errs):
        return float(np.polyfit(np.log(hs), np.log(errs), 1)[0])

    return {
        "e1_slope": slope(e1), "e2_slope": slope(e2), "e3_slope": slope(e3),
        "e1": e1, "e2": e2, "e3": e3,
    }


def sweep_samples(rng: np.random.Generator, k: float, count: int,
                  margin: float = 0.05) -> list:
    """Seeded (u, v) pairs with u, v, u-v all at least `margin` away from
    the real zero lattice of sn (the pole set of the classical weights)."""
    K = quarter_period(k)
    out = []
    while len(out) < count:
        u = float(rng.uniform(margin, 2.0 * K - margin))
        v = float(rng.uniform(margin, 2.0 * K - margin))
        good = True
        for arg in (u, v, u - v):
            d = abs(arg - 2.0 * K * round(arg / (2.0 * K)))
            if d < margin:
                good = False
                break
        if good:
            out.append((u, v))
    return out
