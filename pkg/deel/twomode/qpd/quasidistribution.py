# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Closed-form Gaussian quasiprobability distributions.

Values are densities with respect to the measure d²α/π per mode, so that the two-mode
vacuum Wigner function equals 4 at the origin.
"""
from dataclasses import dataclass

import numpy as np

from .characteristic import s_ordered_covariance, marginal_covariance
from ..core import NormalMoments
from ..common import NonPositiveCovariance, EPS_PD
from ..types import RealMatrix, Union


@dataclass(frozen=True)
class DegenerateDistribution:
    """
    Marker for a positive semidefinite but singular covariance: the quasidistribution is
    concentrated on a lower-dimensional set (the vacuum P function is a delta function).

    Attributes
    ----------
    min_eigenvalue
        Smallest eigenvalue of the covariance, within tolerance of zero.
    """
    min_eigenvalue: float


def check_covariance(sigma: RealMatrix, tol: float) -> Union[float, DegenerateDistribution]:
    """
    Smallest eigenvalue of a covariance, or the degenerate marker
    """
    smallest = float(np.linalg.eigvalsh(sigma)[0])
    if smallest < -tol:
        raise NonPositiveCovariance(f"The quasidistribution covariance has the eigenvalue {smallest}; "
                                    "it is not a probability density")
    if smallest <= tol:
        return DegenerateDistribution(smallest)
    return smallest


def _gaussian_value(sigma: RealMatrix, xi: np.ndarray) -> float:
    return float(np.exp(-0.5 * xi @ np.linalg.solve(sigma, xi)) / np.sqrt(np.linalg.det(sigma)))


def quadratures(*alphas: complex) -> np.ndarray:
    """
    Quadrature coordinates sqrt(2) (Re α1, Im α1, Re α2, Im α2, ...)
    """
    return np.sqrt(2.0) * np.array([part for alpha in alphas for part in (np.real(alpha), np.imag(alpha))],
                                   dtype=np.float64)


def qpd_exists(moments: NormalMoments, s: float, tol: float = EPS_PD) -> bool:
    """
    Whether σ_s is positive definite, so that the s-ordered quasidistribution is a regular
    Gaussian probability density.
    """
    return bool(np.linalg.eigvalsh(s_ordered_covariance(moments, s))[0] > tol)


def qpd_value(moments: NormalMoments, s: float, alpha1: complex, alpha2: complex,
              tol: float = EPS_PD) -> Union[float, DegenerateDistribution]:
    """
    Value of the two-mode s-ordered quasidistribution at a phase-space point.

    Parameters
    ----------
    moments
        The state moments.
    s
        Ordering parameter in [-1, 1].
    alpha1, alpha2
        Phase-space point.
    tol
        Positive-definiteness tolerance.

    Returns
    -------
    value
        exp(-ξ^T σ_s^{-1} ξ / 2) / sqrt(det σ_s) with ξ = sqrt(2)(Re α1, Im α1, Re α2, Im α2),
        or a `DegenerateDistribution` marker for a singular covariance.

    Raises
    ------
    NonPositiveCovariance
        If σ_s has a negative eigenvalue beyond tol: the state is too nonclassical for
        this ordering.
    """
    sigma = s_ordered_covariance(moments, s)
    check = check_covariance(sigma, tol)
    if isinstance(check, DegenerateDistribution):
        return check
    return _gaussian_value(sigma, quadratures(alpha1, alpha2))


def marginal_qpd_value(moments: NormalMoments, s: float, mode_index: int, alpha: complex,
                       tol: float = EPS_PD) -> Union[float, DegenerateDistribution]:
    """
    Value of the single-mode marginal quasidistribution of one mode.

    Parameters
    ----------
    moments
        The state moments.
    s
        Ordering parameter.
    mode_index
        The kept mode, 1 or 2.
    alpha
        Phase-space point of the kept mode.
    tol
        Positive-definiteness tolerance.

    Returns
    -------
    value
        The marginal density with respect to d²α/π, or a `DegenerateDistribution` marker.
    """
    sigma = marginal_covariance(moments, s, mode_index)
    check = check_covariance(sigma, tol)
    if isinstance(check, DegenerateDistribution):
        return check
    return _gaussian_value(sigma, quadratures(alpha))


def nonclassicality_depth_from_qpd(moments: NormalMoments) -> float:
    """
    Smallest isotropic noise ν making σ_1 + ν I positive semidefinite. It coincides with the
    Lee nonclassicality depth computed from the eigenvalues of A_N.
    """
    return float(max(0.0, -np.linalg.eigvalsh(s_ordered_covariance(moments, 1.0))[0]))
