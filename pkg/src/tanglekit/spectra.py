"""Hermitian spectra, trace norms, negativities, and negativity fonts.

A negativity font of the partial transpose with respect to qubit p is the
4x4 principal sub-matrix spanned by |i>, |j>, and the two vectors obtained
by flipping bit p in each label.  For a pure state its only possible
negative eigenvalue is -|det nu| where nu is the 2x2 amplitude matrix

    [[a_i,          a_{j, p-flipped}],
     [a_{i, p-flipped}, a_j        ]]

so fonts are enumerated here directly from amplitude determinants, while
the negativities proper go through the dense Hermitian eigensolver.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import BasisIndex, DensityOperator, PureState, density
from .transpose import global_pt, kway_pt

# eigenvalues this close to zero are floating-point noise around PSD spectra
NEG_EIG_TOL = 1e-12
FONT_ZERO_TOL = 1e-14
_HERMITIAN_CHECK_TOL = 1e-10

_SIGMA_YY = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=np.complex128
)


def hermitian_eigenvalues(m: np.ndarray | DensityOperator) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    if isinstance(m, DensityOperator):
        m = m.matrix
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    defect = np.abs(m - m.conj().T).max()
    if defect > _HERMITIAN_CHECK_TOL:
        raise ValueError(f"matrix is not Hermitian: max |m - m^dag| = {defect:.3e}")
    return np.linalg.eigvalsh(m)


def trace_norm(m: np.ndarray | DensityOperator) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.abs(hermitian_eigenvalues(m)).sum())


def global_negativity(state: PureState, p: int) -> float:
    """Trace norm of the global partial transpose minus one, clamped at zero."""
    value = trace_norm(global_pt(density(state), p)) - 1.0
    if -NEG_EIG_TOL < value < 0.0:
        return 0.0
    return value


def kway_negativity(state: PureState, p: int, K: int) -> float:
    """Twice the absolute sum of negative eigenvalues of the K-way transpose."""
    eigs = hermitian_eigenvalues(kway_pt(density(state), p, K))
    negative = eigs[eigs < -NEG_EIG_TOL]
    return float(2.0 * abs(negative.sum()))


@dataclass(frozen=True)
class Font:
    """One negativity font of the partial transpose with respect to qubit p.

    ``negligible`` flags fonts whose determinant is zero to within
    FONT_ZERO_TOL and therefore contribute no negativity.
    """

    i: BasisIndex
    j: BasisIndex
    p: int
    k: int
    det: complex
    lambda_minus: float
    negligible: bool


def _compose_label(n: int, p: int, p_bit: int, rest: int) -> BasisIndex:
    bits = []
    shift = n - 2
    for q in range(1, n + 1):
        if q == p:
            bits.append(p_bit)
        else:
            bits.append((rest >> shift) & 1)
            shift -= 1
    return BasisIndex(tuple(bits))


def enumerate_fonts(state: PureState, p: int) -> list[Font]:
    """All fonts of the partial transpose w.r.t. qubit p, deduplicated.

    Fonts related by flipping bit p in both labels carry the same |det|, so
    each is reported once, canonically with i_p = 0, j_p = 1 and the non-p
    bits of i below those of j.
    """
    n = state.n_qubits
    if not 1 <= p <= n:
        raise ValueError(f"qubit {p} out of range for {n} qubits")
    tensor = state.amplitudes.reshape((2,) * n)
    m = np.moveaxis(tensor, p - 1, 0).reshape(2, -1)
    rest_dim = m.shape[1]
    fonts = []
    for u in range(rest_dim):
        for v in range(u + 1, rest_dim):
            det = complex(m[0, u] * m[1, v] - m[0, v] * m[1, u])
            i = _compose_label(n, p, 0, u)
            j = _compose_label(n, p, 1, v)
            fonts.append(
                Font(
                    i=i,
                    j=j,
                    p=p,
                    k=1 + bin(u ^ v).count("1"),
                    det=det,
                    lambda_minus=-abs(det),
                    negligible=abs(det) <= FONT_ZERO_TOL,
                )
            )
    return fonts


def font_negativity_2q(state: PureState) -> float:
    """2 |a00 a11 - a01 a10|; agrees with the eigensolve negativity for 2 qubits."""
    if state.n_qubits != 2:
        raise ValueError(f"requires a 2-qubit state, got n = {state.n_qubits}")
    a = state.amplitudes
    return 2.0 * abs(a[0b00] * a[0b11] - a[0b01] * a[0b10])


def concurrence_2q(rho: DensityOperator) -> float:
    """Wootters concurrence max(0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3) - sqrt(mu4)).

    The mu_i are the descending eigenvalues of rho (sy x sy) rho* (sy x sy).
    Their square roots are computed as singular values of the symmetric
    matrix sqrt(p) V^dag (sy x sy) V* sqrt(p) built on rho's eigenbasis,
    which keeps rank-deficient inputs (every reduction of a pure state)
    exact instead of amplifying eigensolver noise through the square root.
    """
    if rho.n_qubits != 2:
        raise ValueError(f"requires a 4x4 density operator, got n = {rho.n_qubits}")
    probs, vecs = np.linalg.eigh(rho.matrix)
    if probs.min() < -1e-9:
        raise ValueError(f"density operator is not PSD: min eigenvalue {probs.min():.3e}")
    keep = probs > 1e-12
    probs = probs[keep]
    vecs = vecs[:, keep]
    root = np.sqrt(probs)
    a = (root[:, None] * (vecs.conj().T @ _SIGMA_YY @ vecs.conj())) * root[None, :]
    lams = np.sort(np.linalg.svd(a, compute_uv=False))[::-1]
    lams = np.concatenate([lams, np.zeros(4 - lams.size)])
    c = lams[0] - lams[1] - lams[2] - lams[3]
    return float(min(max(c, 0.0), 1.0))
