# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Batched evaluation of Gaussian quasidistributions on phase-space grids
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np
import tensorflow as tf
from scipy.integrate import trapezoid

from .characteristic import s_ordered_covariance, marginal_covariance
from .quasidistribution import (
    DegenerateDistribution,
    check_covariance,
    marginal_qpd_value,
)
from ..core import NormalMoments, check_mode_index
from ..common import EPS_PD
from ..types import Tuple, Union


class GridKind(Enum):
    """
    Shapes of grid: a 2D slice over mode 1 with mode 2 fixed, a 2D single-mode marginal or
    the full 4D grid
    """
    SLICE = "slice"
    MARGINAL = "marginal"
    FULL = "full"


@dataclass(frozen=True)
class QpdGrid:
    """
    Phase-space sampling of a quasidistribution. Every Re α and Im α axis spans
    [lower, upper] with the same number of points.

    Attributes
    ----------
    lower, upper
        Range of each axis.
    points
        Samples per axis, at least 2.
    kind
        The grid shape.
    slice_point
        Fixed value of α2 for a slice.
    marginal_mode
        Kept mode of a marginal.
    """
    lower: float = -5.0
    upper: float = 5.0
    points: int = 64
    kind: GridKind = GridKind.SLICE
    slice_point: complex = 0j
    marginal_mode: int = 1

    def __post_init__(self):
        if not (np.isfinite(self.lower) and np.isfinite(self.upper)) or self.lower >= self.upper:
            raise ValueError(f"The grid range must be finite and increasing, got [{self.lower}, {self.upper}]")
        if self.points < 2:
            raise ValueError(f"A grid needs at least 2 points per axis, got {self.points}")
        check_mode_index(self.marginal_mode)

    @property
    def axis(self) -> np.ndarray:
        return np.linspace(self.lower, self.upper, self.points)

    @property
    def dimension(self) -> int:
        return 4 if self.kind is GridKind.FULL else 2


@dataclass(frozen=True)
class QpdGridResult:
    """
    Quasidistribution samples with the trapezoidal normalization estimate.

    Attributes
    ----------
    axes
        One coordinate array per grid dimension, in the order (Re α1, Im α1, Re α2, Im α2)
        restricted to the sampled ones.
    values
        Samples, indexed like np.meshgrid(*axes, indexing="ij").
    normalization
        Trapezoidal estimate of the integral of the samples with the d²α/π measure.
    expected_normalization
        Its analytic value: 1 for marginals and full grids, the mode-2 marginal at the fixed
        point for slices.
    """
    axes: Tuple[np.ndarray, ...]
    values: np.ndarray
    normalization: float
    expected_normalization: float


def _evaluate(sigma: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """
    Gaussian densities at a batch of quadrature points xi of shape (..., k)
    """
    precision = tf.constant(np.linalg.inv(sigma), dtype=tf.float64)
    xi = tf.constant(xi, dtype=tf.float64)
    quadratic = tf.einsum('...i,ij,...j->...', xi, precision, xi)
    values = tf.exp(-0.5 * quadratic) / tf.sqrt(tf.constant(np.linalg.det(sigma), dtype=tf.float64))
    return values.numpy()


def qpd_grid(moments: NormalMoments, s: float, grid: QpdGrid,
             tol: float = EPS_PD) -> Union[QpdGridResult, DegenerateDistribution]:
    """
    Sample the s-ordered quasidistribution of a state on a grid.

    Parameters
    ----------
    moments
        The state moments.
    s
        Ordering parameter in [-1, 1].
    grid
        The sampling specification.
    tol
        Positive-definiteness tolerance.

    Returns
    -------
    result
        The samples and their normalization, or a `DegenerateDistribution` marker when the
        covariance is singular.

    Raises
    ------
    NonPositiveCovariance
        If the quasidistribution is not a probability density at this ordering.
    """
    axis = grid.axis
    if grid.kind is GridKind.MARGINAL:
        sigma = marginal_covariance(moments, s, grid.marginal_mode)
    else:
        sigma = s_ordered_covariance(moments, s)
    check = check_covariance(sigma, tol)
    if isinstance(check, DegenerateDistribution):
        return check

    axes = (axis,) * grid.dimension
    mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
    if grid.kind is GridKind.SLICE:
        fixed = np.array([np.real(grid.slice_point), np.imag(grid.slice_point)])
        mesh = np.concatenate([mesh, np.broadcast_to(fixed, mesh.shape)], axis=-1)
    values = _evaluate(sigma, np.sqrt(2.0) * mesh)

    integral = values
    for _ in range(grid.dimension):
        integral = trapezoid(integral, axis, axis=0)
    normalization = float(integral) / np.pi ** (grid.dimension // 2)

    expected = 1.0
    if grid.kind is GridKind.SLICE:
        expected = marginal_qpd_value(moments, s, 2, grid.slice_point, tol)
    return QpdGridResult(axes, values, normalization, float(expected))
