# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Covariance matrices of a two-mode Gaussian state in the normal and symmetric orderings.

The normally-ordered matrix A_N lives in the complex basis (β1, β1*, β2, β2*) and enters
the normal characteristic function as C_N(β) = exp(β^† A_N β / 2). The symmetrically-ordered
matrix A_S lives in the quadrature basis (x1, p1, x2, p2) with x = (a + a^†)/√2 and
p = (a - a^†)/(i√2), so that the vacuum has A_S = I/2.
"""
import numpy as np

from .moments import NormalMoments, make_moments
from ..common import NonFinite, EPS_NUM
from ..types import ComplexMatrix, RealMatrix


def to_cov_normal(moments: NormalMoments) -> ComplexMatrix:
    """
    Normally-ordered covariance matrix A_N.

    Parameters
    ----------
    moments
        The state moments.

    Returns
    -------
    a_n
        A 4x4 complex Hermitian matrix with diagonal (-B1, -B1, -B2, -B2), the anomalous
        moments C_j in the single-mode blocks and D12, D̄12 in the cross blocks.
    """
    b1, b2, c1, c2, d, dbar = moments.as_tuple()
    return np.array([
        [-b1, c1, np.conj(dbar), d],
        [np.conj(c1), -b1, np.conj(d), dbar],
        [dbar, d, -b2, c2],
        [np.conj(d), np.conj(dbar), np.conj(c2), -b2],
    ], dtype=np.complex128)


def _mode_block_symmetric(b: float, c: complex) -> RealMatrix:
    return np.array([
        [b + c.real + 0.5, c.imag],
        [c.imag, b - c.real + 0.5],
    ], dtype=np.float64)


def cross_block_symmetric(d: complex, dbar: complex) -> RealMatrix:
    """
    Quadrature cross-covariance block D_S between mode 1 (rows) and mode 2 (columns).

    Parameters
    ----------
    d
        The moment D12 = <Δa1 Δa2>.
    dbar
        The moment D̄12 = -<Δa1^† Δa2>.

    Returns
    -------
    d_s
        The 2x2 real matrix of symmetrized <Δq1 Δq2'> for q, q' in (x, p). Its
        determinant equals |D̄12|^2 - |D12|^2.
    """
    return np.array([
        [(d - dbar).real, (d - dbar).imag],
        [(d + dbar).imag, -(d + dbar).real],
    ], dtype=np.float64)


def to_cov_symmetric(moments: NormalMoments) -> RealMatrix:
    """
    Symmetrically-ordered covariance matrix A_S in the quadrature basis (x1, p1, x2, p2).

    Parameters
    ----------
    moments
        The state moments.

    Returns
    -------
    a_s
        A 4x4 real symmetric matrix [[B_S1, D_S], [D_S^T, B_S2]] where
        B_Sj = [[B_j + Re C_j + 1/2, Im C_j], [Im C_j, B_j - Re C_j + 1/2]].

    Notes
    -----
    The cross block places Im(D12 - D̄12) at (x1, p2) and Im(D12 + D̄12) at (p1, x2),
    which is what the quadrature definitions give. Both placements coincide whenever
    Im D̄12 = 0, which covers all the state families of the library.
    """
    b1, b2, c1, c2, d, dbar = moments.as_tuple()
    cross = cross_block_symmetric(d, dbar)
    return np.block([
        [_mode_block_symmetric(b1, c1), cross],
        [cross.T, _mode_block_symmetric(b2, c2)],
    ])


def _occupation(value: float) -> float:
    # rounding can push an empty mode slightly below zero
    return 0.0 if -EPS_NUM < value < 0.0 else float(value)


def from_cov_normal(a_n: ComplexMatrix) -> NormalMoments:
    """
    Read the moments back from a normally-ordered covariance matrix.

    Parameters
    ----------
    a_n
        A 4x4 complex matrix laid out as returned by `to_cov_normal`.

    Returns
    -------
    moments
        The moments found at the (0,0), (2,2), (0,1), (2,3), (0,3) and (2,0) positions.
    """
    a_n = np.asarray(a_n, dtype=np.complex128)
    if not np.all(np.isfinite(a_n)):
        raise NonFinite("The covariance matrix contains non finite entries")
    return make_moments(_occupation(-a_n[0, 0].real), _occupation(-a_n[2, 2].real),
                        a_n[0, 1], a_n[2, 3], a_n[0, 3], a_n[2, 0])


def from_cov_symmetric(a_s: RealMatrix) -> NormalMoments:
    """
    Inverse of `to_cov_symmetric`.

    Parameters
    ----------
    a_s
        A 4x4 real symmetric matrix in the quadrature basis (x1, p1, x2, p2).

    Returns
    -------
    moments
        B_j = (σxx + σpp)/2 - 1/2, C_j = (σxx - σpp)/2 + i σxp, and D12, D̄12 solved from the
        cross block.
    """
    a_s = np.asarray(a_s, dtype=np.float64)
    if not np.all(np.isfinite(a_s)):
        raise NonFinite("The covariance matrix contains non finite entries")
    a_s = 0.5 * (a_s + a_s.T)

    def local(block):
        b = 0.5 * (block[0, 0] + block[1, 1]) - 0.5
        c = 0.5 * (block[0, 0] - block[1, 1]) + 1j * block[0, 1]
        return _occupation(b), c

    b1, c1 = local(a_s[:2, :2])
    b2, c2 = local(a_s[2:, 2:])
    s = a_s[:2, 2:]
    d = 0.5 * (s[0, 0] - s[1, 1]) + 0.5j * (s[0, 1] + s[1, 0])
    dbar = -0.5 * (s[0, 0] + s[1, 1]) + 0.5j * (s[1, 0] - s[0, 1])

    return make_moments(b1, b2, c1, c2, d, dbar)
