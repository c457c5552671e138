# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
s-ordered characteristic functions and covariance matrices of Gaussian states.

The ordering parameter s runs from 1 (normal order, Glauber-Sudarshan P function) through
0 (symmetric order, Wigner function) to -1 (antinormal order, Husimi function). Lowering s
multiplies the characteristic function by exp(-(s1 - s2)/2 |β|^2), which for the
covariance amounts to adding (s1 - s2)/2 to its diagonal.
"""
import numpy as np
from scipy.linalg import block_diag

from ..core import NormalMoments, to_cov_normal, check_mode_index
from ..common import BadOrderingPair
from ..types import RealMatrix

# columns map (β, β*) onto the quadratures (x, p)
_MODE_BASIS = np.array([[-1j, 1.0], [1j, 1.0]], dtype=np.complex128) / np.sqrt(2.0)
_QUADRATURE_BASIS = block_diag(_MODE_BASIS, _MODE_BASIS)


def check_ordering(s: float) -> float:
    """
    Ensure an ordering parameter lies in [-1, 1]
    """
    if not -1.0 <= s <= 1.0:
        raise ValueError(f"The ordering parameter must lie in [-1, 1], got {s}")
    return float(s)


def char_fn(moments: NormalMoments, s: float, beta1: complex, beta2: complex) -> complex:
    """
    s-ordered characteristic function C^(s)(β1, β2).

    Parameters
    ----------
    moments
        The state moments.
    s
        Ordering parameter in [-1, 1].
    beta1, beta2
        Arguments of the displacement operators of modes 1 and 2.

    Returns
    -------
    value
        exp(β^† A_N β / 2) exp((s - 1)/2 (|β1|^2 + |β2|^2)) with β = (β1, β1*, β2, β2*). It
        equals 1 at the origin.
    """
    s = check_ordering(s)
    beta = np.array([beta1, np.conj(beta1), beta2, np.conj(beta2)], dtype=np.complex128)
    exponent = 0.5 * np.real(beta.conj() @ to_cov_normal(moments) @ beta)
    exponent += 0.5 * (s - 1.0) * (abs(beta1) ** 2 + abs(beta2) ** 2)
    return complex(np.exp(exponent))


def s_ordered_covariance(moments: NormalMoments, s: float) -> RealMatrix:
    """
    Covariance matrix σ_s of the s-ordered quasidistribution in the quadrature basis
    (x1, p1, x2, p2).

    Parameters
    ----------
    moments
        The state moments.
    s
        Ordering parameter in [-1, 1].

    Returns
    -------
    sigma
        A 4x4 real symmetric matrix. σ_0 is the symmetric covariance A_S and σ_1 the
        normally-ordered one, zero for the vacuum.
    """
    s = check_ordering(s)
    rotated = _QUADRATURE_BASIS.conj().T @ to_cov_normal(moments) @ _QUADRATURE_BASIS
    sigma = -np.real(rotated) + 0.5 * (1.0 - s) * np.eye(4)
    return 0.5 * (sigma + sigma.T)


def marginal_covariance(moments: NormalMoments, s: float, mode_index: int) -> RealMatrix:
    """
    2x2 covariance of the single-mode marginal of σ_s
    """
    rows = slice(0, 2) if check_mode_index(mode_index) == 1 else slice(2, 4)
    return s_ordered_covariance(moments, s)[rows, rows]


def noise_convolution(moments: NormalMoments, s1: float, s2: float) -> float:
    """
    Check that lowering the ordering from s1 to s2 adds isotropic Gaussian noise of variance
    (s1 - s2)/2 to the covariance.

    Parameters
    ----------
    moments
        The state moments.
    s1
        Starting ordering.
    s2
        Target ordering, strictly below s1.

    Returns
    -------
    deviation
        max |σ_s2 - σ_s1 - (s1 - s2)/2 I| over the entries.

    Raises
    ------
    BadOrderingPair
        If s2 >= s1.
    """
    if s2 >= s1:
        raise BadOrderingPair(f"Noise can only lower the ordering, got s1={s1} and s2={s2}")
    shifted = s_ordered_covariance(moments, s1) + 0.5 * (s1 - s2) * np.eye(4)
    return float(np.max(np.abs(s_ordered_covariance(moments, s2) - shifted)))
